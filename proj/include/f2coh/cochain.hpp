#ifndef F2COH_COCHAIN_HPP
#define F2COH_COCHAIN_HPP

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/f2linear.hpp"
#include "f2coh/gmodule.hpp"
#include "f2coh/parallel.hpp"

namespace f2coh {

using Tuple = std::vector<Element>;

// Normalized inhomogeneous n-cochain with values in a GF(2) module. The
// domain is either a whole group or a subgroup of it (tuples draw entries
// from the domain members). Values at tuples containing the identity are
// zero by normalization and cannot be set; absent tuples are zero.
class Cochain {
public:
    Cochain(const Subgroup& domain, const GModule& module, int degree)
        : group_(&domain.group()), module_(&module), degree_(degree),
          domain_(domain.members()) {
        if (degree < 0)
            throw DimensionError("cochain degree must be >= 0");
    }

    int degree() const { return degree_; }
    const FiniteGroup& group() const { return *group_; }
    const GModule& module() const { return *module_; }
    const std::vector<Element>& domain() const { return domain_; }

    void set(const Tuple& t, F2Vector v) {
        check_tuple(t, /*allow_identity=*/false);
        if (v.dim() != module_->dim())
            throw DimensionMismatch("cochain value of wrong dimension");
        if (v.is_zero())
            values_.erase(t);
        else
            values_[t] = std::move(v);
    }

    void add(const Tuple& t, const F2Vector& v) {
        check_tuple(t, /*allow_identity=*/true);
        for (Element g : t)
            if (g == 0)
                return; // normalized away
        auto it = values_.find(t);
        if (it == values_.end()) {
            if (!v.is_zero())
                values_.emplace(t, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero())
            values_.erase(it);
    }

    // Zero for absent tuples and for tuples containing the identity.
    F2Vector value(const Tuple& t) const {
        check_tuple(t, /*allow_identity=*/true);
        auto it = values_.find(t);
        return it == values_.end() ? F2Vector(module_->dim()) : it->second;
    }

    bool is_zero() const { return values_.empty(); }
    const std::map<Tuple, F2Vector>& entries() const { return values_; }

    bool operator==(const Cochain& o) const {
        return degree_ == o.degree_ && values_ == o.values_;
    }

    Cochain operator+(const Cochain& o) const {
        if (o.degree_ != degree_ || o.module_ != module_)
            throw DimensionMismatch("cochain addition: degree or module mismatch");
        Cochain out = *this;
        for (const auto& [t, v] : o.values_)
            out.add(t, v);
        return out;
    }

private:
    void check_tuple(const Tuple& t, bool allow_identity) const {
        if (static_cast<int>(t.size()) != degree_)
            throw DimensionError("tuple arity does not match cochain degree");
        for (Element g : t) {
            if (g >= group_->order())
                throw Error("tuple entry out of range");
            if (!allow_identity && g == 0)
                throw NormalizationError("normalized cochains vanish on tuples containing 1");
        }
    }

    const FiniteGroup* group_;
    const GModule* module_;
    int degree_;
    std::vector<Element> domain_;
    std::map<Tuple, F2Vector> values_;
};

// (lambda d)(g_1,...,g_n) = (-1)^n lambda(g_2,...,g_n)
//   + sum_{i=1}^{n-1} (-1)^{n-i} lambda(g_1,...,g_i g_{i+1},...,g_n)
//   + lambda(g_1,...,g_{n-1}) g_n.
// Over GF(2) the signs reduce mod 2, so every term is XORed in.
inline F2Vector differential_at(const Cochain& lam, const Tuple& t) {
    const FiniteGroup& G = lam.group();
    const int n = static_cast<int>(t.size());
    if (n != lam.degree() + 1)
        throw DimensionError("differential_at: tuple arity must be degree + 1");
    F2Vector acc = lam.value(Tuple{t.begin() + 1, t.end()});
    for (int i = 1; i <= n - 1; ++i) {
        Tuple m;
        m.reserve(n - 1);
        m.assign(t.begin(), t.begin() + (i - 1));
        m.push_back(G.mul(t[i - 1], t[i]));
        m.insert(m.end(), t.begin() + i + 1, t.end());
        acc += lam.value(m);
    }
    acc += lam.module().act(lam.value(Tuple{t.begin(), t.end() - 1}), t[n - 1]);
    return acc;
}

// Materialized differential over all legal tuples of the domain.
inline Cochain differential(const Cochain& lam, const Subgroup& domain) {
    Cochain out(domain, lam.module(), lam.degree() + 1);
    const auto& mem = domain.members();
    const int n = lam.degree() + 1;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= mem.size() - 1;
    Tuple t(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = 0; i < n; ++i) {
            t[i] = mem[1 + c % (mem.size() - 1)];
            c /= mem.size() - 1;
        }
        F2Vector v = differential_at(lam, t);
        if (!v.is_zero())
            out.set(t, std::move(v));
    }
    return out;
}

struct CocycleCert {
    bool ok = true;
    std::optional<Tuple> counterexample;
    std::size_t checked = 0;
};

namespace detail {

inline Tuple decode_tuple(const std::vector<Element>& mem, int arity, std::size_t code) {
    Tuple t(arity);
    for (int i = 0; i < arity; ++i) {
        t[i] = mem[1 + code % (mem.size() - 1)];
        code /= mem.size() - 1;
    }
    return t;
}

} // namespace detail

// Exhaustive check that the differential vanishes on every legal tuple of
// degree n+1. Shards the tuple range across threads; the reported
// counterexample is the first in lexicographic code order.
inline CocycleCert is_cocycle(const Cochain& lam, const Subgroup& domain, int threads = 1) {
    const auto& mem = domain.members();
    const int arity = lam.degree() + 1;
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i)
        total *= mem.size() - 1;
    CocycleCert cert;
    cert.checked = total;
    std::vector<std::size_t> hit(static_cast<std::size_t>(threads) + 1, total);
    parallel_shards(total, threads, [&](std::size_t shard, std::size_t begin, std::size_t end) {
        for (std::size_t code = begin; code < end; ++code) {
            Tuple t = detail::decode_tuple(mem, arity, code);
            if (!differential_at(lam, t).is_zero()) {
                hit[shard] = code;
                return;
            }
        }
    });
    std::size_t first = total;
    for (std::size_t h : hit)
        first = std::min(first, h);
    if (first < total) {
        cert.ok = false;
        cert.counterexample = detail::decode_tuple(mem, arity, first);
        cert.checked = first + 1;
    }
    return cert;
}

// Seeded sampled variant; the sample list depends only on the seed, so the
// verdict is independent of the thread count.
inline CocycleCert is_cocycle_sampled(const Cochain& lam, const Subgroup& domain, std::size_t k,
                                      std::uint64_t seed, int threads = 1) {
    const auto& mem = domain.members();
    const int arity = lam.degree() + 1;
    std::mt19937_64 rng(seed);
    std::vector<Tuple> sample;
    sample.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Tuple t(arity);
        for (int j = 0; j < arity; ++j)
            t[j] = mem[1 + rng() % (mem.size() - 1)];
        sample.push_back(std::move(t));
    }
    CocycleCert cert;
    cert.checked = k;
    std::vector<std::size_t> hit(static_cast<std::size_t>(threads) + 1, k);
    parallel_shards(k, threads, [&](std::size_t shard, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (!differential_at(lam, sample[i]).is_zero()) {
                hit[shard] = i;
                return;
            }
        }
    });
    std::size_t first = k;
    for (std::size_t h : hit)
        first = std::min(first, h);
    if (first < k) {
        cert.ok = false;
        cert.counterexample = sample[first];
        cert.checked = first + 1;
    }
    return cert;
}

constexpr std::size_t kDefaultCoboundaryCapacity = 1024;

// Solves d mu = lam for a degree-1 cochain mu over GF(2). Restricted to
// degree 2 by policy (the only degree the application needs); the unknown
// count (|domain|-1) * dim must stay within the capacity.
inline std::optional<Cochain> coboundary_witness(const Cochain& lam, const Subgroup& domain,
                                                 std::size_t capacity = kDefaultCoboundaryCapacity) {
    if (lam.degree() != 2)
        throw CapacityExceeded("coboundary witness solver is restricted to degree 2");
    const FiniteGroup& G = lam.group();
    const GModule& M = lam.module();
    const auto& mem = domain.members();
    const std::size_t m = mem.size() - 1; // non-identity elements
    const std::size_t dim = M.dim();
    const std::size_t unknowns = m * dim;
    if (unknowns > capacity)
        throw CapacityExceeded("coboundary solve needs " + std::to_string(unknowns) +
                               " unknowns, capacity " + std::to_string(capacity));
    std::vector<std::size_t> col_of(G.order(), 0);
    for (std::size_t i = 0; i < m; ++i)
        col_of[mem[i + 1]] = i;

    // Equations: mu(g2) + mu(g1 g2) + mu(g1) g2 = lam(g1, g2) per legal pair.
    F2Matrix A(m * m * dim, unknowns);
    F2Vector b(m * m * dim);
    std::size_t row0 = 0;
    for (std::size_t j = 0; j < m; ++j) {
        Element g2 = mem[j + 1];
        F2Matrix act2 = M.action_matrix(g2);
        for (std::size_t i = 0; i < m; ++i) {
            Element g1 = mem[i + 1];
            for (std::size_t r = 0; r < dim; ++r) {
                A.flip(row0 + r, col_of[g2] * dim + r);
                Element prod = G.mul(g1, g2);
                if (prod != 0)
                    A.flip(row0 + r, col_of[prod] * dim + r);
                for (std::size_t c = 0; c < dim; ++c)
                    if (act2.get(r, c))
                        A.flip(row0 + r, col_of[g1] * dim + c);
            }
            F2Vector rhs = lam.value({g1, g2});
            for (std::size_t r = 0; r < dim; ++r)
                if (rhs.get(r))
                    b.set(row0 + r, true);
            row0 += dim;
        }
    }
    std::optional<F2Vector> x = solve(std::move(A), std::move(b));
    if (!x)
        return std::nullopt;
    Cochain mu(domain, M, 1);
    for (std::size_t i = 0; i < m; ++i) {
        F2Vector v(dim);
        for (std::size_t r = 0; r < dim; ++r)
            if (x->get(i * dim + r))
                v.set(r, true);
        mu.set({mem[i + 1]}, std::move(v));
    }
    return mu;
}

} // namespace f2coh

#endif
