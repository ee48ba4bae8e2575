#ifndef F2COH_HOMOTOPY_HPP
#define F2COH_HOMOTOPY_HPP

#include <algorithm>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "f2coh/chain.hpp"
#include "f2coh/error.hpp"
#include "f2coh/transversal.hpp"

namespace f2coh {

// Solves h_i h_{i+1} ... h_{n+1} = pi(g_i g_{i+1} ... g_{n+1}) for the list
// (g_1,...,g_{n+1}): one right-to-left pass over suffix products gives
// h_i = pi(g_i...g_{n+1}) pi(g_{i+1}...g_{n+1})^{-1} and h_{n+1} = pi(g_{n+1}).
inline std::vector<Element> h_chain(const Transversal& T, std::span<const Element> gs) {
    const FiniteGroup& G = T.group();
    const std::size_t m = gs.size();
    std::vector<Element> hs(m);
    Element suffix = 0; // g_{i}...g_{n+1}, built right to left
    Element prev_pi = 0;
    for (std::size_t i = m; i-- > 0;) {
        suffix = G.mul(gs[i], suffix);
        Element pi = T.project_pi(suffix);
        hs[i] = (i + 1 == m) ? pi : G.mul(pi, G.inverse(prev_pi));
        prev_pi = pi;
    }
    return hs;
}

// r_i = rho(g_i g_{i+1} ... g_{n+1}).
inline std::vector<Element> r_chain(const Transversal& T, std::span<const Element> gs) {
    const FiniteGroup& G = T.group();
    const std::size_t m = gs.size();
    std::vector<Element> rs(m);
    Element suffix = 0;
    for (std::size_t i = m; i-- > 0;) {
        suffix = G.mul(gs[i], suffix);
        rs[i] = T.rho(suffix);
    }
    return rs;
}

// f_n: (g_1,...,g_n) g_{n+1} |-> (h_1,...,h_n) h_{n+1}, extended Z-linearly.
// The image lies in the subcomplex S of chains with all entries in H.
inline FormalChain chain_map_f(const FormalChain& c, const Transversal& T) {
    FormalChain out(c.group(), c.dim());
    for (const auto& [k, coeff] : c.terms()) {
        std::vector<Element> gs = k.tuple;
        gs.push_back(k.trailing);
        std::vector<Element> hs = h_chain(T, gs);
        ChainKey nk{{hs.begin(), hs.end() - 1}, hs.back()};
        out.add(std::move(nk), coeff);
    }
    return out;
}

// f': the identical embedding S -> F. Validates membership and returns the
// chain unchanged.
inline FormalChain inclusion_fprime(const FormalChain& c, const Subgroup& H) {
    for (const auto& [k, coeff] : c.terms()) {
        for (Element g : k.tuple)
            if (!H.contains(g))
                throw EntryNotInH("chain entry outside H");
        if (!H.contains(k.trailing))
            throw EntryNotInH("chain trailing element outside H");
    }
    return c;
}

// eta'_n: (h_1,...,h_n) |->
//   sum_{i=0}^{n} (-1)^{n-i} (h_1^{y0},...,h_i^{y0}, y0^{-1}, h_{i+1},...,h_n),
// extended H-linearly over the trailing element. y0 is the representative in
// Y cap H; with y0 = 1 every term vanishes by normalization.
inline FormalChain homotopy_eta_prime(const FormalChain& c, const Transversal& T) {
    const FiniteGroup& G = c.group();
    const int n = c.dim();
    const Element y0 = T.y0();
    const Element y0inv = G.inverse(y0);
    const auto& hm = T.subgroup_members();
    auto in_h = [&hm](Element g) {
        return std::binary_search(hm.begin(), hm.end(), g);
    };
    FormalChain out(G, n + 1);
    for (const auto& [k, coeff] : c.terms()) {
        for (Element g : k.tuple)
            if (!in_h(g))
                throw EntryNotInH("eta': chain entry outside H");
        if (!in_h(k.trailing))
            throw EntryNotInH("eta': chain trailing element outside H");
        for (int i = 0; i <= n; ++i) {
            ChainKey nk;
            nk.tuple.reserve(n + 1);
            for (int j = 0; j < i; ++j)
                nk.tuple.push_back(G.conjugate(k.tuple[j], y0));
            nk.tuple.push_back(y0inv);
            for (int j = i; j < n; ++j)
                nk.tuple.push_back(k.tuple[j]);
            nk.trailing = k.trailing;
            std::int64_t s = ((n - i) % 2 == 0) ? 1 : -1;
            out.add(std::move(nk), s * coeff);
        }
    }
    return out;
}

// eta_n: (g_1,...,g_n) g_{n+1} |->
//   sum_{i=1}^{n+1} (-1)^{n+1-i} (h_1,...,h_{i-1}, r_i, g_i,...,g_n) g_{n+1},
// with h from h_chain and r_i = rho(g_i...g_{n+1}). H-linear but not G-linear.
inline FormalChain homotopy_eta(const FormalChain& c, const Transversal& T) {
    const FiniteGroup& G = c.group();
    const int n = c.dim();
    FormalChain out(G, n + 1);
    for (const auto& [k, coeff] : c.terms()) {
        std::vector<Element> gs = k.tuple;
        gs.push_back(k.trailing);
        std::vector<Element> hs = h_chain(T, gs);
        std::vector<Element> rs = r_chain(T, gs);
        for (int i = 1; i <= n + 1; ++i) {
            ChainKey nk;
            nk.tuple.reserve(n + 1);
            for (int j = 0; j < i - 1; ++j)
                nk.tuple.push_back(hs[j]);
            nk.tuple.push_back(rs[i - 1]);
            for (int j = i - 1; j < n; ++j)
                nk.tuple.push_back(k.tuple[j]);
            nk.trailing = k.trailing;
            std::int64_t s = ((n + 1 - i) % 2 == 0) ? 1 : -1;
            out.add(std::move(nk), s * coeff);
        }
    }
    return out;
}

enum class HomotopyIdentity { Eta, EtaPrime };

struct HomotopyReport {
    std::string identity;
    int dim = 0;
    std::size_t tested = 0;
    std::vector<ChainKey> failures;
    bool ok() const { return failures.empty(); }
};

constexpr int kMaxHomotopyDim = 3;

// Checks psi = eta d_{+} + d eta_{-} on each sampled generator, where
// psi = ff' - id on F-generators and psi' = f'f - id on S-generators
// (d_0 = epsilon and eta_{-1} = 0, so the second term drops at n = 0).
// Both sides are compared exactly as formal chains.
inline HomotopyReport verify_homotopy_identity(HomotopyIdentity which, const Transversal& T,
                                               const Subgroup& H, int n,
                                               std::span<const ChainKey> sample) {
    if (n < 0 || n > kMaxHomotopyDim)
        throw DimensionError("homotopy identities verified for dimensions 0..3 only");
    const FiniteGroup& G = T.group();
    HomotopyReport rep;
    rep.identity = which == HomotopyIdentity::Eta ? "eta" : "eta_prime";
    rep.dim = n;
    for (const ChainKey& key : sample) {
        FormalChain x = FormalChain::generator(G, key);
        FormalChain lhs(G, n), rhs(G, n);
        if (which == HomotopyIdentity::Eta) {
            lhs = chain_map_f(x, T) - x;
            rhs = boundary(homotopy_eta(x, T));
            if (n > 0)
                rhs += homotopy_eta(boundary(x), T);
        } else {
            lhs = chain_map_f(inclusion_fprime(x, H), T) - x;
            rhs = boundary(homotopy_eta_prime(x, T));
            if (n > 0)
                rhs += homotopy_eta_prime(boundary(x), T);
        }
        ++rep.tested;
        if (!(lhs == rhs))
            rep.failures.push_back(key);
    }
    return rep;
}

// Every basis key (g_1,...,g_n) g_{n+1} over the full cube G^n x G. Keys with
// identity entries denote the zero chain; they are included so exhaustive
// sweeps cover the degenerate cases too.
inline std::vector<ChainKey> all_keys(const FiniteGroup& G, int n) {
    std::vector<ChainKey> keys;
    ChainKey k;
    k.tuple.assign(n, 0);
    std::size_t total = 1;
    for (int i = 0; i < n + 1; ++i)
        total *= G.order();
    keys.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = 0; i < n; ++i) {
            k.tuple[i] = static_cast<Element>(c % G.order());
            c /= G.order();
        }
        k.trailing = static_cast<Element>(c);
        keys.push_back(k);
    }
    return keys;
}

inline std::vector<ChainKey> all_subgroup_keys(const Subgroup& H, int n) {
    const auto& mem = H.members();
    std::vector<ChainKey> keys;
    ChainKey k;
    k.tuple.assign(n, 0);
    std::size_t total = 1;
    for (int i = 0; i < n + 1; ++i)
        total *= mem.size();
    keys.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = 0; i < n; ++i) {
            k.tuple[i] = mem[c % mem.size()];
            c /= mem.size();
        }
        k.trailing = mem[c];
        keys.push_back(k);
    }
    return keys;
}

inline std::vector<ChainKey> random_keys(const FiniteGroup& G, int n, std::size_t count,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ChainKey> keys;
    keys.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ChainKey k;
        k.tuple.reserve(n);
        for (int j = 0; j < n; ++j)
            k.tuple.push_back(static_cast<Element>(rng() % G.order()));
        k.trailing = static_cast<Element>(rng() % G.order());
        keys.push_back(std::move(k));
    }
    return keys;
}

} // namespace f2coh

#endif
