#ifndef F2COH_SHAPIRO_HPP
#define F2COH_SHAPIRO_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "f2coh/cochain.hpp"
#include "f2coh/error.hpp"
#include "f2coh/gmodule.hpp"
#include "f2coh/homotopy.hpp"
#include "f2coh/transversal.hpp"

namespace f2coh {

constexpr int kMaxShapiroDegree = 3;

// Forward Shapiro map on cocycles: restrict a W-valued cochain to H-tuples
// and evaluate each value at the identity,
//   alpha |-> [(h_1,...,h_n) |-> alpha(h_1,...,h_n)(1)].
inline Cochain theta(const Cochain& alpha, const Subgroup& H) {
    const GModule& W = alpha.module();
    const GModule& U = W.base();
    Cochain out(H, U, alpha.degree());
    const auto& mem = H.members();
    const int n = alpha.degree();
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
        F2Vector v = W.evaluate(alpha.value(t), 0);
        if (!v.is_zero())
            out.set(t, std::move(v));
    }
    return out;
}

namespace detail {

// Evaluator for the W-values of Theta^{-1}(beta). Flattens beta into a dense
// table over H-tuples so the per-coset loop runs without map lookups or
// allocations; the value at the G-tuple (g_1,...,g_n) is assembled one
// U-block per coset from
//   block(y) = beta(h_1,...,h_n) h_{n+1},  h-relations solved for (g..., y).
class ThetaInverseEval {
public:
    ThetaInverseEval(const Cochain& beta, const Transversal& T, const GModule& W)
        : G_(&T.group()), T_(&T), W_(&W), U_(&beta.module()), degree_(beta.degree()),
          udim_(U_->dim()), trivial_u_(U_->kind() == GModule::Kind::Trivial) {
        if (degree_ > kMaxShapiroDegree)
            throw DegreeUnsupported("theta_inverse supports degrees 0..3 only");
        const auto& mem = T.subgroup_members();
        hsize_ = mem.size();
        hpos_.assign(G_->order(), -1);
        for (std::size_t i = 0; i < hsize_; ++i)
            hpos_[mem[i]] = static_cast<std::int32_t>(i);
        std::size_t cells = 1;
        for (int i = 0; i < degree_; ++i)
            cells *= hsize_;
        table_.assign(cells, F2Vector(udim_));
        Tuple t(degree_);
        for (std::size_t code = 0; code < cells; ++code) {
            std::size_t c = code;
            bool legal = true;
            for (int i = 0; i < degree_; ++i) {
                t[i] = mem[c % hsize_];
                legal = legal && t[i] != 0;
                c /= hsize_;
            }
            if (legal)
                table_[code] = beta.value(t);
        }
    }

    int degree() const { return degree_; }
    const GModule& module() const { return *W_; }

    F2Vector value(const Element* t) const {
        F2Vector w(W_->dim());
        std::array<Element, kMaxShapiroDegree + 1> pis{};
        const int n = degree_;
        for (std::size_t c = 0; c < T_->index(); ++c) {
            Element suffix = T_->rep(c);
            pis[n] = T_->project_pi(suffix);
            for (int i = n; i-- > 0;) {
                suffix = G_->mul(t[i], suffix);
                pis[i] = T_->project_pi(suffix);
            }
            std::size_t code = 0, weight = 1;
            bool zero = false;
            for (int i = 0; i < n; ++i) {
                Element h = G_->mul(pis[i], G_->inverse(pis[i + 1]));
                if (h == 0) { // normalized: beta vanishes on tuples with 1
                    zero = true;
                    break;
                }
                code += weight * static_cast<std::size_t>(hpos_[h]);
                weight *= hsize_;
            }
            if (zero)
                continue;
            const F2Vector& u = table_[code];
            if (u.is_zero())
                continue;
            if (trivial_u_ && udim_ == 1)
                w.set(c, true);
            else
                GModule::write_block(w, c, udim_, U_->act(u, pis[n]));
        }
        return w;
    }

    F2Vector value(const Tuple& t) const { return value(t.data()); }

private:
    const FiniteGroup* G_;
    const Transversal* T_;
    const GModule* W_;
    const GModule* U_;
    int degree_;
    std::size_t udim_;
    bool trivial_u_;
    std::size_t hsize_ = 0;
    std::vector<std::int32_t> hpos_;
    std::vector<F2Vector> table_; // beta on H-tuples, mixed-radix by H position
};

} // namespace detail

// Explicit inverse Shapiro map on cocycles:
//   beta |-> [(g_1,...,g_n) |-> [g_{n+1} |-> beta(h_1,...,h_n) h_{n+1}]],
// materialized over all legal G-tuples as a W-valued cochain. The output is
// normalized automatically: g_i = 1 forces h_i = 1, so the stored value
// vanishes by beta's normalization (the tests assert this instead of
// assuming it).
inline Cochain theta_inverse(const Cochain& beta, const Transversal& T, const GModule& W) {
    detail::ThetaInverseEval eval(beta, T, W);
    const FiniteGroup& G = T.group();
    Subgroup all = Subgroup::whole(G);
    Cochain out(all, W, beta.degree());
    const int n = beta.degree();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= G.order() - 1;
    Tuple t(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = 0; i < n; ++i) {
            t[i] = static_cast<Element>(1 + c % (G.order() - 1));
            c /= G.order() - 1;
        }
        F2Vector w = eval.value(t);
        if (!w.is_zero())
            out.set(t, std::move(w));
    }
    return out;
}

// Pointwise evaluation of Theta^{-1}(beta)(g1, g2) at an arbitrary g, without
// going through coset blocks: beta(h_1, h_2) h_3 for the h-relations of
// (g1, g2, g). For trivial U this is the closed form
// beta(pi(g1 g2 g) pi(g2 g)^{-1}, pi(g2 g) pi(g)^{-1}).
inline F2Vector alpha_explicit(const Cochain& beta, const Transversal& T, Element g1, Element g2,
                               Element g) {
    const std::vector<Element> gs{g1, g2, g};
    std::vector<Element> hs = h_chain(T, gs);
    return beta.module().act(beta.value({hs[0], hs[1]}), hs[2]);
}

using AlphaFn = std::function<F2Vector(Element, Element)>;

// Degree-2 access to Theta^{-1}(beta) with a materialize-or-lazy policy:
// groups of order <= cutoff get the full cochain table, larger groups compute
// each W-value on demand.
class AlphaView {
public:
    static constexpr std::size_t kDefaultMaterializeCutoff = 1000;

    AlphaView(const Cochain& beta, const Transversal& T, const GModule& W,
              std::size_t cutoff = kDefaultMaterializeCutoff)
        : eval_(beta, T, W) {
        if (beta.degree() != 2)
            throw DegreeUnsupported("AlphaView is a degree-2 view");
        if (T.group().order() <= cutoff)
            table_.emplace(theta_inverse(beta, T, W));
    }

    bool materialized() const { return table_.has_value(); }
    const GModule& module() const { return eval_.module(); }
    const Cochain& table() const { return *table_; }

    F2Vector operator()(Element g1, Element g2) const {
        if (g1 == 0 || g2 == 0)
            return F2Vector(module().dim());
        if (table_)
            return table_->value({g1, g2});
        const Element t[2] = {g1, g2};
        return eval_.value(t);
    }

    AlphaFn fn() const {
        return [this](Element a, Element b) { return (*this)(a, b); };
    }

private:
    detail::ThetaInverseEval eval_;
    std::optional<Cochain> table_;
};

// Cocycle check for a (possibly lazily evaluated) 2-cochain: verifies
// alpha(g2,g3) + alpha(g1 g2, g3) + alpha(g1, g2 g3) + alpha(g1,g2) g3 = 0
// on a seeded sample of triples.
inline CocycleCert alpha_is_cocycle_sampled(const AlphaFn& alpha, const GModule& W, std::size_t k,
                                            std::uint64_t seed, int threads = 1) {
    const FiniteGroup& G = W.group();
    std::mt19937_64 rng(seed);
    std::vector<Tuple> sample;
    sample.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        sample.push_back({static_cast<Element>(1 + rng() % (G.order() - 1)),
                          static_cast<Element>(1 + rng() % (G.order() - 1)),
                          static_cast<Element>(1 + rng() % (G.order() - 1))});
    CocycleCert cert;
    cert.checked = k;
    std::vector<std::size_t> hit(static_cast<std::size_t>(threads) + 1, k);
    parallel_shards(k, threads, [&](std::size_t shard, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Tuple& t = sample[i];
            F2Vector acc = alpha(t[1], t[2]);
            acc += alpha(G.mul(t[0], t[1]), t[2]);
            acc += alpha(t[0], G.mul(t[1], t[2]));
            acc += W.act(alpha(t[0], t[1]), t[2]);
            if (!acc.is_zero()) {
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

} // namespace f2coh

#endif
