#ifndef F2COH_GROUP_HPP
#define F2COH_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "f2coh/error.hpp"
#include "f2coh/permutation.hpp"

namespace f2coh {

using Element = std::uint32_t; // index into a group's element enumeration

namespace detail {

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (Point x : p) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace detail

// An enumerated finite permutation group. Element 0 is the identity and the
// enumeration order is the breadth-first closure order of the generators, so
// it is deterministic for a fixed generator list. Multiplication uses a full
// table for small groups and composition plus a hash lookup beyond that.
class FiniteGroup {
public:
    static constexpr Element npos = std::numeric_limits<Element>::max();

    // Largest order for which the |G|^2 multiplication table is materialized.
    static constexpr std::size_t kMulTableCap = 4096;

    static FiniteGroup close_generators(const std::vector<Perm>& generators,
                                        std::size_t cap = 200000) {
        for (const Perm& g : generators)
            if (!is_permutation(g))
                throw InvalidPermutation("generator is not a bijection");
        std::size_t degree = 0;
        for (const Perm& g : generators)
            degree = std::max(degree, g.size());
        std::vector<Perm> gens;
        for (const Perm& g : generators)
            gens.push_back(perm_pad(g, degree));

        FiniteGroup G;
        G.degree_ = degree;
        G.elements_.push_back(perm_identity(degree));
        G.index_.emplace(G.elements_[0], 0);
        for (std::size_t head = 0; head < G.elements_.size(); ++head) {
            for (const Perm& s : gens) {
                Perm prod = perm_compose(G.elements_[head], s);
                auto [it, fresh] = G.index_.emplace(prod, static_cast<Element>(G.elements_.size()));
                if (fresh) {
                    G.elements_.push_back(std::move(prod));
                    if (G.elements_.size() > cap)
                        throw CapExceeded("group closure exceeded cap " + std::to_string(cap));
                }
            }
        }
        for (const Perm& s : gens)
            G.gens_.push_back(G.index_.at(s));
        G.inv_.resize(G.order());
        for (Element i = 0; i < G.order(); ++i)
            G.inv_[i] = G.index_.at(perm_inverse(G.elements_[i]));
        if (G.order() <= kMulTableCap) {
            G.table_.resize(G.order() * G.order());
            for (Element a = 0; a < G.order(); ++a)
                for (Element b = 0; b < G.order(); ++b)
                    G.table_[a * G.order() + b] =
                        G.index_.at(perm_compose(G.elements_[a], G.elements_[b]));
        }
        return G;
    }

    Element order() const { return static_cast<Element>(elements_.size()); }
    std::size_t degree() const { return degree_; }

    Element mul(Element a, Element b) const {
        if (!table_.empty())
            return table_[a * order() + b];
        return index_.at(perm_compose(elements_[a], elements_[b]));
    }

    Element inverse(Element a) const { return inv_[a]; }

    Element index_of(const Perm& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? npos : it->second;
    }

    const Perm& perm(Element i) const { return elements_[i]; }

    const std::vector<Element>& generators() const { return gens_; }

    bool is_involution(Element g) const { return g != 0 && mul(g, g) == 0; }

    Element conjugate(Element x, Element a) const { // x^a = a^{-1} x a
        return mul(mul(inverse(a), x), a);
    }

private:
    std::size_t degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Element> inv_;
    std::vector<Element> gens_;
    std::vector<Element> table_;
    std::unordered_map<Perm, Element, detail::PermHash> index_;
};

// A subgroup given by its (sorted) member indices in the parent enumeration.
class Subgroup {
public:
    Subgroup(const FiniteGroup& g, std::vector<Element> members)
        : group_(&g), members_(std::move(members)), mask_(g.order(), false) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        for (Element m : members_) {
            if (m >= g.order())
                throw Error("subgroup member out of range");
            mask_[m] = true;
        }
        if (members_.empty() || members_[0] != 0)
            throw Error("subgroup must contain the identity");
        for (Element a : members_) {
            if (!mask_[g.inverse(a)])
                throw Error("subgroup not closed under inversion");
            for (Element b : members_)
                if (!mask_[g.mul(a, b)])
                    throw Error("subgroup not closed under multiplication");
        }
    }

    static Subgroup whole(const FiniteGroup& g) {
        std::vector<Element> all(g.order());
        for (Element i = 0; i < g.order(); ++i)
            all[i] = i;
        return Subgroup(g, std::move(all), Unchecked{});
    }

    // Closure under right multiplication; a finite closed subset is a
    // subgroup, so no revalidation is needed.
    static Subgroup generated(const FiniteGroup& g, const std::vector<Element>& gens) {
        std::vector<Element> members{0};
        std::vector<bool> seen(g.order(), false);
        seen[0] = true;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Element s : gens) {
                Element p = g.mul(members[head], s);
                if (!seen[p]) {
                    seen[p] = true;
                    members.push_back(p);
                }
            }
        return Subgroup(g, std::move(members), Unchecked{});
    }

    static Subgroup order_two(const FiniteGroup& g, Element involution) {
        if (!g.is_involution(involution))
            throw BadSubgroupOrder("element " + std::to_string(involution) + " is not an involution");
        return Subgroup(g, {0, involution});
    }

    const FiniteGroup& group() const { return *group_; }
    const std::vector<Element>& members() const { return members_; }
    Element order() const { return static_cast<Element>(members_.size()); }
    bool contains(Element g) const { return mask_[g]; }

private:
    struct Unchecked {};

    Subgroup(const FiniteGroup& g, std::vector<Element> members, Unchecked)
        : group_(&g), members_(std::move(members)), mask_(g.order(), false) {
        std::sort(members_.begin(), members_.end());
        for (Element m : members_)
            mask_[m] = true;
    }

    const FiniteGroup* group_;
    std::vector<Element> members_;
    std::vector<bool> mask_;
};

// Conjugacy classes of involutions, each sorted, ordered by smallest member.
// Orbits are taken under conjugation by the stored generators, which suffices
// since they generate the group.
inline std::vector<std::vector<Element>> involution_classes(const FiniteGroup& G) {
    std::vector<Element> invs;
    for (Element g = 1; g < G.order(); ++g)
        if (G.is_involution(g))
            invs.push_back(g);
    std::vector<bool> assigned(G.order(), false);
    std::vector<std::vector<Element>> classes;
    for (Element x : invs) {
        if (assigned[x])
            continue;
        std::vector<Element> orbit{x};
        assigned[x] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (Element s : G.generators()) {
                Element c = G.conjugate(orbit[head], s);
                if (!assigned[c]) {
                    assigned[c] = true;
                    orbit.push_back(c);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

} // namespace f2coh

#endif
