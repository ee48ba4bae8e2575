#ifndef F2COH_GMODULE_HPP
#define F2COH_GMODULE_HPP

#include <utility>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/f2linear.hpp"
#include "f2coh/group.hpp"
#include "f2coh/transversal.hpp"

namespace f2coh {

// A finite-dimensional GF(2) module with a right action of (a subgroup of) a
// finite group. Three realizations:
//   Trivial    - every element acts as the identity.
//   Coinduced  - functions f: G -> U with f(gh) = f(g)h, stored by their
//                values on the transversal representatives, one U-block per
//                coset; the action is (f a)(g) = f(ag).
//   Generic    - one explicit matrix per group element (cross-check path).
class GModule {
public:
    enum class Kind { Trivial, Coinduced, Generic };

    static GModule trivial(const FiniteGroup& g, std::size_t dim = 1) {
        GModule m;
        m.kind_ = Kind::Trivial;
        m.group_ = &g;
        m.dim_ = dim;
        return m;
    }

    // W = coind_H^G(U). dim W = [G:H] * dim U.
    static GModule coinduce(const FiniteGroup& G, const Subgroup& H, const GModule& U,
                            const Transversal& T) {
        if (&U.group() != &G || &T.group() != &G)
            throw Error("coinduce: group mismatch");
        if (T.subgroup_members() != H.members())
            throw Error("coinduce: transversal built for a different subgroup");
        GModule m;
        m.kind_ = Kind::Coinduced;
        m.group_ = &G;
        m.base_ = &U;
        m.transversal_ = &T;
        m.dim_ = T.index() * U.dim();
        return m;
    }

    static GModule generic(const FiniteGroup& g, std::size_t dim, std::vector<F2Matrix> action) {
        if (action.size() != g.order())
            throw Error("generic module: need one matrix per element");
        GModule m;
        m.kind_ = Kind::Generic;
        m.group_ = &g;
        m.dim_ = dim;
        m.matrices_ = std::move(action);
        return m;
    }

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const FiniteGroup& group() const { return *group_; }

    const GModule& base() const {
        if (kind_ != Kind::Coinduced)
            throw Error("base(): not a coinduced module");
        return *base_;
    }

    const Transversal& transversal() const {
        if (kind_ != Kind::Coinduced)
            throw Error("transversal(): not a coinduced module");
        return *transversal_;
    }

    F2Vector act(const F2Vector& v, Element a) const {
        if (v.dim() != dim_)
            throw DimensionMismatch("act: vector dimension mismatch");
        switch (kind_) {
        case Kind::Trivial:
            return v;
        case Kind::Generic:
            return matrices_[a].apply(v);
        case Kind::Coinduced: {
            const Transversal& T = *transversal_;
            const std::size_t ud = base_->dim();
            F2Vector out(dim_);
            for (std::size_t c = 0; c < T.index(); ++c) {
                Element g = group_->mul(a, T.rep(c));
                std::size_t src = T.coset_of(g);
                Element h = T.project_pi(g);
                write_block(out, c, ud, base_->act(read_block(v, src, ud), h));
            }
            return out;
        }
        }
        throw Error("act: bad module kind");
    }

    // f(g) for a coinduced element: the block of the coset of g, acted on by
    // the h-part of g.
    F2Vector evaluate(const F2Vector& f, Element g) const {
        if (kind_ != Kind::Coinduced)
            throw Error("evaluate(): not a coinduced module");
        const Transversal& T = *transversal_;
        const std::size_t ud = base_->dim();
        return base_->act(read_block(f, T.coset_of(g), ud), T.project_pi(g));
    }

    F2Matrix action_matrix(Element a) const {
        if (kind_ == Kind::Generic)
            return matrices_[a];
        F2Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            F2Vector col = act(F2Vector::unit(dim_, j), a);
            for (std::size_t i = 0; i < dim_; ++i)
                if (col.get(i))
                    m.set(i, j, true);
        }
        return m;
    }

    // Materializes every action matrix; used as the independent matrix-path
    // oracle against the permutation-style coinduced action.
    GModule to_generic() const {
        std::vector<F2Matrix> mats;
        mats.reserve(group_->order());
        for (Element a = 0; a < group_->order(); ++a)
            mats.push_back(action_matrix(a));
        return generic(*group_, dim_, std::move(mats));
    }

    static F2Vector read_block(const F2Vector& v, std::size_t block, std::size_t len) {
        F2Vector out(len);
        for (std::size_t i = 0; i < len; ++i)
            if (v.get(block * len + i))
                out.set(i, true);
        return out;
    }

    static void write_block(F2Vector& v, std::size_t block, std::size_t len, const F2Vector& b) {
        for (std::size_t i = 0; i < len; ++i)
            v.set(block * len + i, b.get(i));
    }

private:
    Kind kind_ = Kind::Trivial;
    const FiniteGroup* group_ = nullptr;
    std::size_t dim_ = 0;
    const GModule* base_ = nullptr;
    const Transversal* transversal_ = nullptr;
    std::vector<F2Matrix> matrices_;
};

} // namespace f2coh

#endif
