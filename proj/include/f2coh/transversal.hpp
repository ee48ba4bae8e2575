#ifndef F2COH_TRANSVERSAL_HPP
#define F2COH_TRANSVERSAL_HPP

#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/group.hpp"

namespace f2coh {

// A left transversal Y of H in G together with the factorization g = y * h.
// project_pi(g) returns the h-part (the projection pi along Y) and rho(g)
// returns pi(g) * g^{-1}, an inverse of a representative. The default
// construction picks the first-encountered element of each coset in
// enumeration order, so rep(0) is the identity and pi(1) = 1.
class Transversal {
public:
    static Transversal left_transversal(const FiniteGroup& G, const Subgroup& H) {
        return build(G, H, {}, FiniteGroup::npos);
    }

    // Same cosets, but the coset H is represented by y0 = the first
    // non-identity member of H. Used to exercise the Y-cap-H != {1}
    // branch of the homotopy machinery.
    static Transversal nontrivial_y0(const FiniteGroup& G, const Subgroup& H) {
        if (H.order() < 2)
            throw BadSubgroupOrder("nontrivial_y0 needs |H| >= 2");
        return build(G, H, {}, H.members()[1]);
    }

    // Explicit representatives, one per coset, in the given order.
    static Transversal from_reps(const FiniteGroup& G, const Subgroup& H,
                                 const std::vector<Element>& reps) {
        return build(G, H, reps, FiniteGroup::npos);
    }

    const FiniteGroup& group() const { return *group_; }
    const std::vector<Element>& subgroup_members() const { return h_members_; }

    std::size_t index() const { return reps_.size(); } // [G:H]
    Element rep(std::size_t coset) const { return reps_[coset]; }
    std::size_t coset_of(Element g) const { return coset_of_[g]; }

    Element project_pi(Element g) const { return h_part_[g]; }
    Element rho(Element g) const { return group_->mul(h_part_[g], group_->inverse(g)); }

    // The unique representative lying in H (the paper's y0).
    Element y0() const { return reps_[coset_of_[0]]; }

private:
    static Transversal build(const FiniteGroup& G, const Subgroup& H,
                             const std::vector<Element>& forced_reps, Element y0_override) {
        Transversal T;
        T.group_ = &G;
        T.h_members_ = H.members();
        T.coset_of_.assign(G.order(), FiniteGroup::npos);
        T.h_part_.assign(G.order(), FiniteGroup::npos);

        auto place = [&](Element y) {
            std::size_t pos = T.reps_.size();
            T.reps_.push_back(y);
            for (Element h : H.members()) {
                Element x = G.mul(y, h);
                if (T.coset_of_[x] != FiniteGroup::npos)
                    throw Error("transversal representatives do not give disjoint cosets");
                T.coset_of_[x] = pos;
                T.h_part_[x] = h;
            }
        };

        if (!forced_reps.empty()) {
            for (Element y : forced_reps)
                place(y);
        } else {
            for (Element g = 0; g < G.order(); ++g)
                if (T.coset_of_[g] == FiniteGroup::npos)
                    place(g == 0 && y0_override != FiniteGroup::npos ? y0_override : g);
        }
        for (Element g = 0; g < G.order(); ++g)
            if (T.coset_of_[g] == FiniteGroup::npos)
                throw Error("transversal does not cover the group");
        return T;
    }

    const FiniteGroup* group_ = nullptr;
    std::vector<Element> h_members_;
    std::vector<Element> reps_;
    std::vector<std::size_t> coset_of_;
    std::vector<Element> h_part_;
};

} // namespace f2coh

#endif
