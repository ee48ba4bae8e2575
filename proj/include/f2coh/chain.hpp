#ifndef F2COH_CHAIN_HPP
#define F2COH_CHAIN_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/group.hpp"

namespace f2coh {

// Basis key (g_1,...,g_n) g_{n+1} of the free resolution term F_n: a tuple of
// n non-identity entries plus the trailing group element.
struct ChainKey {
    std::vector<Element> tuple;
    Element trailing = 0;

    auto operator<=>(const ChainKey&) const = default;
};

inline std::string to_string(const FiniteGroup& G, const ChainKey& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.tuple.size(); ++i) {
        if (i)
            s += ",";
        s += to_cycle_string(G.perm(k.tuple[i]));
    }
    s += ")*" + to_cycle_string(G.perm(k.trailing));
    return s;
}

// Integer formal sum of basis keys of fixed dimension n. Keys with an
// identity entry in the tuple are zero by normalization and are never stored;
// zero coefficients are erased on the fly.
class FormalChain {
public:
    FormalChain(const FiniteGroup& g, int n) : group_(&g), n_(n) {
        if (n < 0)
            throw DimensionError("chain dimension must be >= 0");
    }

    static FormalChain generator(const FiniteGroup& g, ChainKey key) {
        FormalChain c(g, static_cast<int>(key.tuple.size()));
        c.add(std::move(key), 1);
        return c;
    }

    int dim() const { return n_; }
    const FiniteGroup& group() const { return *group_; }
    const std::map<ChainKey, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(ChainKey key, std::int64_t coeff) {
        if (coeff == 0)
            return;
        if (static_cast<int>(key.tuple.size()) != n_)
            throw DimensionError("chain term of wrong dimension");
        for (Element g : key.tuple)
            if (g == 0)
                return; // normalized away
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
            return;
        }
        it->second += coeff;
        constexpr std::int64_t kCoeffBound = std::int64_t{1} << 40;
        if (it->second > kCoeffBound || it->second < -kCoeffBound)
            throw Error("formal chain coefficient overflow");
        if (it->second == 0)
            terms_.erase(it);
    }

    FormalChain& operator+=(const FormalChain& o) {
        if (o.n_ != n_)
            throw DimensionError("chain addition: dimension mismatch");
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }

    FormalChain& operator-=(const FormalChain& o) {
        if (o.n_ != n_)
            throw DimensionError("chain subtraction: dimension mismatch");
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }

    friend FormalChain operator+(FormalChain a, const FormalChain& b) { return a += b; }
    friend FormalChain operator-(FormalChain a, const FormalChain& b) { return a -= b; }

    bool operator==(const FormalChain& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // Right action of the group on the trailing element.
    FormalChain acted(Element g) const {
        FormalChain out(*group_, n_);
        for (const auto& [k, c] : terms_) {
            ChainKey nk = k;
            nk.trailing = group_->mul(k.trailing, g);
            out.add(std::move(nk), c);
        }
        return out;
    }

private:
    const FiniteGroup* group_;
    int n_;
    std::map<ChainKey, std::int64_t> terms_;
};

// d_n: (g_1,...,g_n) g_{n+1} |->
//   (-1)^n (g_2,...,g_n) g_{n+1}
//   + sum_{i=1}^{n-1} (-1)^{n-i} (g_1,...,g_i g_{i+1},...,g_n) g_{n+1}
//   + (g_1,...,g_{n-1}) (g_n g_{n+1})
inline FormalChain boundary(const FormalChain& c) {
    const FiniteGroup& G = c.group();
    const int n = c.dim();
    if (n == 0)
        throw DimensionError("boundary undefined in dimension 0 (use augmentation)");
    FormalChain out(G, n - 1);
    const std::int64_t sign_n = (n % 2 == 0) ? 1 : -1;
    for (const auto& [k, coeff] : c.terms()) {
        out.add(ChainKey{{k.tuple.begin() + 1, k.tuple.end()}, k.trailing}, sign_n * coeff);
        for (int i = 1; i <= n - 1; ++i) {
            ChainKey merged;
            merged.tuple.reserve(n - 1);
            merged.tuple.assign(k.tuple.begin(), k.tuple.begin() + (i - 1));
            merged.tuple.push_back(G.mul(k.tuple[i - 1], k.tuple[i]));
            merged.tuple.insert(merged.tuple.end(), k.tuple.begin() + i + 1, k.tuple.end());
            merged.trailing = k.trailing;
            std::int64_t s = ((n - i) % 2 == 0) ? 1 : -1;
            out.add(std::move(merged), s * coeff);
        }
        out.add(ChainKey{{k.tuple.begin(), k.tuple.end() - 1},
                         G.mul(k.tuple[n - 1], k.trailing)},
                coeff);
    }
    return out;
}

// epsilon: () g |-> 1, extended Z-linearly.
inline std::int64_t augmentation(const FormalChain& c) {
    if (c.dim() != 0)
        throw DimensionError("augmentation defined on 0-chains only");
    std::int64_t s = 0;
    for (const auto& [k, coeff] : c.terms())
        s += coeff;
    return s;
}

} // namespace f2coh

#endif
