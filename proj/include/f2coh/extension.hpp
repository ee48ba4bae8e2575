#ifndef F2COH_EXTENSION_HPP
#define F2COH_EXTENSION_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f2coh/cochain.hpp"
#include "f2coh/error.hpp"
#include "f2coh/shapiro.hpp"

namespace f2coh {

namespace detail {

// Nonnegative decimal big integer; enough arithmetic for the report counts
// |T| = 2^[G:H] and friends, which overflow any machine word already for
// PSL(2,7).
class Decimal {
public:
    explicit Decimal(std::uint64_t v = 0) {
        while (v) {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    static Decimal pow2(std::size_t e) {
        Decimal d(1);
        for (std::size_t i = 0; i < e; ++i)
            d.mul_small(2);
        return d;
    }

    void mul_small(std::uint64_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t v = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(v % kBase);
            carry = v / kBase;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }

    void add(const Decimal& o) {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < std::max(limbs_.size(), o.limbs_.size()) || carry; ++i) {
            if (i == limbs_.size())
                limbs_.push_back(0);
            std::uint64_t v = limbs_[i] + carry + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(v % kBase);
            carry = v / kBase;
        }
    }

    void sub_one() { // requires *this >= 1
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            if (limbs_[i] > 0) {
                --limbs_[i];
                break;
            }
            limbs_[i] = kBase - 1;
        }
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
    }

    std::string str() const {
        if (limbs_.empty())
            return "0";
        std::string s = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr std::uint32_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs_; // little-endian, base 1e9
};

} // namespace detail

inline std::string pow2_decimal(std::size_t e) { return detail::Decimal::pow2(e).str(); }

inline std::string pow2_times_decimal(std::size_t e, std::uint64_t k) {
    detail::Decimal d = detail::Decimal::pow2(e);
    d.mul_small(k);
    return d.str();
}

inline std::string pow2_minus_one_decimal(std::size_t e) {
    detail::Decimal d = detail::Decimal::pow2(e);
    d.sub_one();
    return d.str();
}

// The paper's seed cocycle on H = {1, h} with values in the principal module
// U = {0, u}: beta(h1, h2) = u exactly when h1 = h2 = h. It is a non-
// coboundary 2-cocycle and defines the extension Z4 of U by H.
inline Cochain beta_z4(const Subgroup& H, const GModule& U) {
    if (H.order() != 2)
        throw BadSubgroupOrder("beta_z4 needs |H| = 2, got " + std::to_string(H.order()));
    if (U.kind() != GModule::Kind::Trivial || U.dim() != 1)
        throw Error("beta_z4 needs the principal (trivial, 1-dimensional) module");
    Cochain beta(H, U, 2);
    Element h = H.members()[1];
    beta.set({h, h}, F2Vector::unit(1, 0));
    return beta;
}

// Element (g, f) of the cover E = G x T with multiplication twisted by the
// 2-cocycle alpha.
struct ExtElement {
    Element g = 0;
    F2Vector f;

    bool operator==(const ExtElement&) const = default;
};

inline ExtElement ext_identity(const GModule& W) { return {0, F2Vector(W.dim())}; }

// (g1, f1) (g2, f2) = (g1 g2, f1 g2 + f2 + alpha(g1, g2))
inline ExtElement ext_multiply(const FiniteGroup& G, const GModule& W, const AlphaFn& alpha,
                               const ExtElement& a, const ExtElement& b) {
    return {G.mul(a.g, b.g), W.act(a.f, b.g) + b.f + alpha(a.g, b.g)};
}

// (g, f)^2 = (g^2, f g + f + alpha(g, g))
inline ExtElement ext_square(const FiniteGroup& G, const GModule& W, const AlphaFn& alpha,
                             const ExtElement& a) {
    return {G.mul(a.g, a.g), W.act(a.f, a.g) + a.f + alpha(a.g, a.g)};
}

enum class CertMethod { Enumerate, Solver, Orbit };

inline const char* to_string(CertMethod m) {
    switch (m) {
    case CertMethod::Enumerate:
        return "enumerate";
    case CertMethod::Solver:
        return "solver";
    case CertMethod::Orbit:
        return "orbit";
    }
    return "?";
}

// Certificate for one involution class: an involution of E above the class
// representative g exists iff f g + f = alpha(g, g) is solvable for f in T.
struct ClassCertificate {
    Element rep = 0;
    std::size_t size = 0;
    std::string method;
    bool solvable = false;
    std::optional<F2Vector> lift;     // witness f when solvable
    std::string blocker;              // human-readable obstruction when not
    std::size_t solution_log2 = 0;    // log2 of the number of lifts per element
    std::vector<std::string> cross_checked;
};

constexpr std::size_t kEnumerateCapacity = 16;   // t_dim cap for the enumerate method
constexpr std::size_t kSolverCapacity = 4096;    // t_dim cap for the generic solver

// Structural criterion: an involution g permutes the cosets G/H with orbits
// of size 1 or 2, and on the permutation module the image of (action(g) + 1)
// is spanned by the sums over 2-orbits. Solvability of f g + f = alpha(g, g)
// therefore holds iff alpha(g,g) vanishes on every g-fixed coset and has
// equal coordinates on each 2-orbit. Linear in [G:H].
inline ClassCertificate certify_class_orbit(const FiniteGroup& G, const Transversal& T,
                                            const GModule& W, const AlphaFn& alpha, Element g) {
    if (W.kind() != GModule::Kind::Coinduced || W.base().kind() != GModule::Kind::Trivial ||
        W.base().dim() != 1)
        throw Error("orbit criterion needs the coinduced module of the principal module");
    ClassCertificate cert;
    cert.rep = g;
    cert.method = "orbit";
    const std::size_t m = T.index();
    std::vector<std::size_t> sigma(m);
    for (std::size_t c = 0; c < m; ++c)
        sigma[c] = T.coset_of(G.mul(g, T.rep(c)));
    for (std::size_t c = 0; c < m; ++c)
        if (sigma[sigma[c]] != c)
            throw Error("orbit criterion: coset action of g is not an involution");
    F2Vector a = alpha(g, g);
    F2Vector lift(m);
    std::size_t orbits2 = 0;
    cert.solvable = true;
    for (std::size_t c = 0; c < m && cert.solvable; ++c) {
        if (sigma[c] == c) {
            if (a.get(c)) {
                cert.solvable = false;
                cert.blocker = "alpha(g,g) nonzero on g-fixed coset " + std::to_string(c) +
                               " (rep " + to_cycle_string(G.perm(T.rep(c))) + ")";
            }
        } else if (c < sigma[c]) {
            ++orbits2;
            if (a.get(c) != a.get(sigma[c])) {
                cert.solvable = false;
                cert.blocker = "alpha(g,g) differs on g-paired cosets (" + std::to_string(c) +
                               ", " + std::to_string(sigma[c]) + ")";
            } else if (a.get(c)) {
                lift.set(sigma[c], true); // f[c] = 0, f[sigma c] = a[c]
            }
        }
    }
    if (cert.solvable) {
        cert.lift = std::move(lift);
        cert.solution_log2 = m - orbits2; // nullity of action(g) + 1
    }
    return cert;
}

inline ClassCertificate certify_class_solver(const FiniteGroup& G, const GModule& W,
                                             const AlphaFn& alpha, Element g,
                                             std::size_t capacity = kSolverCapacity) {
    if (W.dim() > capacity)
        throw CapacityExceeded("solver method at dim " + std::to_string(W.dim()) + ", capacity " +
                               std::to_string(capacity));
    ClassCertificate cert;
    cert.rep = g;
    cert.method = "solver";
    F2Matrix A = W.action_matrix(g) + F2Matrix::identity(W.dim());
    std::optional<F2Vector> f = solve(A, alpha(g, g));
    cert.solvable = f.has_value();
    if (f) {
        cert.lift = std::move(*f);
        cert.solution_log2 = W.dim() - rank(A);
    } else {
        cert.blocker = "no solution of (action(g) + 1) f = alpha(g,g)";
    }
    (void)G;
    return cert;
}

inline ClassCertificate certify_class_enumerate(const FiniteGroup& G, const GModule& W,
                                                const AlphaFn& alpha, Element g,
                                                std::size_t capacity = kEnumerateCapacity) {
    if (W.dim() > capacity)
        throw CapacityExceeded("enumerate method at dim " + std::to_string(W.dim()) +
                               ", capacity " + std::to_string(capacity));
    ClassCertificate cert;
    cert.rep = g;
    cert.method = "enumerate";
    F2Vector a = alpha(g, g);
    std::size_t found = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << W.dim()); ++code) {
        F2Vector f(W.dim());
        for (std::size_t i = 0; i < W.dim(); ++i)
            if ((code >> i) & 1)
                f.set(i, true);
        if (W.act(f, g) + f == a) {
            if (!cert.lift)
                cert.lift = f;
            ++found;
        }
    }
    cert.solvable = found > 0;
    if (cert.solvable) {
        std::size_t lg = 0;
        while ((std::size_t{1} << lg) < found)
            ++lg;
        cert.solution_log2 = lg;
    } else {
        cert.blocker = "exhaustive search over 2^" + std::to_string(W.dim()) + " lifts found none";
    }
    (void)G;
    return cert;
}

inline ClassCertificate certify_class(const FiniteGroup& G, const Transversal& T,
                                      const GModule& W, const AlphaFn& alpha, Element g,
                                      CertMethod method) {
    switch (method) {
    case CertMethod::Orbit:
        return certify_class_orbit(G, T, W, alpha, g);
    case CertMethod::Solver:
        return certify_class_solver(G, W, alpha, g);
    case CertMethod::Enumerate:
        return certify_class_enumerate(G, W, alpha, g);
    }
    throw Error("bad certificate method");
}

// One certificate per involution class of G, in class order.
inline std::vector<ClassCertificate> involutions_outside_T(const FiniteGroup& G, const Subgroup& H,
                                                           const Transversal& T, const GModule& W,
                                                           const AlphaFn& alpha,
                                                           CertMethod method) {
    (void)H;
    std::vector<ClassCertificate> certs;
    for (const auto& cls : involution_classes(G)) {
        ClassCertificate c = certify_class(G, T, W, alpha, cls.front(), method);
        c.size = cls.size();
        certs.push_back(std::move(c));
    }
    return certs;
}

struct EnumerationCounts {
    std::size_t e_order = 0;
    std::size_t involutions = 0;
    std::size_t in_t = 0;
    std::size_t outside_t = 0;
};

// Full enumeration of E = G x T; counts involutions by squaring every element.
inline EnumerationCounts enumerate_cover(const FiniteGroup& G, const GModule& W,
                                         const AlphaFn& alpha) {
    if (W.dim() >= 40)
        throw CapacityExceeded("full enumeration at t_dim " + std::to_string(W.dim()));
    EnumerationCounts counts;
    const std::uint64_t tsize = std::uint64_t{1} << W.dim();
    counts.e_order = G.order() * tsize;
    ExtElement e = {0, F2Vector(W.dim())};
    for (Element g = 0; g < G.order(); ++g) {
        for (std::uint64_t code = 0; code < tsize; ++code) {
            ExtElement x{g, F2Vector(W.dim())};
            for (std::size_t i = 0; i < W.dim(); ++i)
                if ((code >> i) & 1)
                    x.f.set(i, true);
            if (x == e)
                continue;
            if (ext_square(G, W, alpha, x) == e) {
                ++counts.involutions;
                if (g == 0)
                    ++counts.in_t;
                else
                    ++counts.outside_t;
            }
        }
    }
    return counts;
}

struct CoverConfig {
    std::uint64_t seed = 0;
    int threads = 1;
    std::size_t cocycle_samples = 100000;
    std::size_t exhaustive_cocycle_limit = 2000000; // max #triples checked exhaustively
    std::size_t materialize_cutoff = AlphaView::kDefaultMaterializeCutoff;
    std::size_t coboundary_capacity = kDefaultCoboundaryCapacity;
    std::size_t enumerate_capacity = kEnumerateCapacity;
    std::size_t solver_capacity = kSolverCapacity;
    std::size_t full_enum_limit = std::size_t{1} << 20; // max |E| for full enumeration
    bool cross_check = true;
};

struct CoverReport {
    std::string group;
    std::size_t order = 0;
    std::size_t index = 0;
    std::size_t t_dim = 0;
    std::string e_order;
    std::string involutions_in_t;
    std::string involutions_outside_t;
    std::vector<ClassCertificate> classes;
    std::string method; // enumeration | orbit-criterion | solver
    bool unique_involution_class = false;
    std::optional<bool> nonsplit;
    std::string nonsplit_basis; // coboundary_witness | involution_certificate | none
    bool alpha_cocycle_ok = false;
    std::string alpha_cocycle_mode;
    std::size_t alpha_cocycle_checked = 0;
    std::uint64_t seed = 0;
    std::map<std::string, double> timings_ms;

    bool certified() const {
        if (!alpha_cocycle_ok)
            return false;
        for (const auto& c : classes)
            if (c.solvable)
                return false;
        return true;
    }
};

// Builds Y (1 in Y), T = coind(U), beta, alpha = Theta^{-1}(beta), then
// certifies Prop.2-style: verifies alpha is a cocycle, certifies every
// involution class, counts involutions (by full enumeration when E is small
// enough), and settles nonsplitness by coboundary witness when the solver is
// in capacity, otherwise by inference from the involution certificates.
inline CoverReport certify_cover(const FiniteGroup& G, const Subgroup& H,
                                 const CoverConfig& config = {}, const std::string& name = "") {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };
    auto classes = involution_classes(G);
    if (classes.empty())
        throw Error("certify_cover: the group has no involutions");

    CoverReport rep;
    rep.group = name.empty() ? ("degree-" + std::to_string(G.degree()) + " group") : name;
    rep.order = G.order();
    rep.seed = config.seed;
    rep.unique_involution_class = classes.size() == 1;

    auto t0 = clock::now();
    Transversal T = Transversal::left_transversal(G, H);
    GModule U = GModule::trivial(G);
    GModule W = GModule::coinduce(G, H, U, T);
    Cochain beta = beta_z4(H, U);
    AlphaView alpha(beta, T, W, config.materialize_cutoff);
    rep.index = T.index();
    rep.t_dim = W.dim();
    rep.e_order = pow2_times_decimal(W.dim(), G.order());
    rep.timings_ms["alpha_construction"] = ms_since(t0);

    t0 = clock::now();
    std::size_t triples = (G.order() - 1);
    triples = triples * triples * triples;
    if (alpha.materialized() && triples <= config.exhaustive_cocycle_limit) {
        Subgroup all = Subgroup::whole(G);
        CocycleCert cc = is_cocycle(alpha.table(), all, config.threads);
        rep.alpha_cocycle_ok = cc.ok;
        rep.alpha_cocycle_mode = "exhaustive";
        rep.alpha_cocycle_checked = cc.checked;
    } else {
        CocycleCert cc =
            alpha_is_cocycle_sampled(alpha.fn(), W, config.cocycle_samples, config.seed,
                                     config.threads);
        rep.alpha_cocycle_ok = cc.ok;
        rep.alpha_cocycle_mode = "sampled";
        rep.alpha_cocycle_checked = cc.checked;
    }
    rep.timings_ms["alpha_cocycle_check"] = ms_since(t0);

    t0 = clock::now();
    for (const auto& cls : classes) {
        ClassCertificate cert = certify_class_orbit(G, T, W, alpha.fn(), cls.front());
        cert.size = cls.size();
        if (config.cross_check && W.dim() <= config.solver_capacity) {
            ClassCertificate s = certify_class_solver(G, W, alpha.fn(), cls.front(),
                                                      config.solver_capacity);
            if (s.solvable != cert.solvable)
                throw Error("solver and orbit certificates disagree on class of element " +
                            std::to_string(cls.front()));
            cert.cross_checked.push_back("solver");
        }
        if (config.cross_check && W.dim() <= config.enumerate_capacity) {
            ClassCertificate e = certify_class_enumerate(G, W, alpha.fn(), cls.front(),
                                                         config.enumerate_capacity);
            if (e.solvable != cert.solvable)
                throw Error("enumerate and orbit certificates disagree on class of element " +
                            std::to_string(cls.front()));
            cert.cross_checked.push_back("enumerate");
        }
        rep.classes.push_back(std::move(cert));
    }
    rep.timings_ms["class_certificates"] = ms_since(t0);

    t0 = clock::now();
    bool any_solvable = false;
    {
        detail::Decimal outside(0);
        for (const auto& c : rep.classes)
            if (c.solvable) {
                any_solvable = true;
                detail::Decimal lifts = detail::Decimal::pow2(c.solution_log2);
                lifts.mul_small(c.size);
                outside.add(lifts);
            }
        rep.involutions_in_t = pow2_minus_one_decimal(W.dim());
        rep.involutions_outside_t = outside.str();
    }
    if (W.dim() < 40 &&
        G.order() * (std::uint64_t{1} << W.dim()) <= config.full_enum_limit) {
        EnumerationCounts counts = enumerate_cover(G, W, alpha.fn());
        rep.method = "enumeration";
        if (std::to_string(counts.in_t) != rep.involutions_in_t ||
            std::to_string(counts.outside_t) != rep.involutions_outside_t)
            throw Error("full enumeration contradicts the class certificates");
    } else {
        rep.method = "orbit-criterion";
    }
    rep.timings_ms["involution_counts"] = ms_since(t0);

    t0 = clock::now();
    std::size_t witness_unknowns = (G.order() - 1) * W.dim();
    if (alpha.materialized() && witness_unknowns <= config.coboundary_capacity) {
        Subgroup all = Subgroup::whole(G);
        std::optional<Cochain> mu =
            coboundary_witness(alpha.table(), all, config.coboundary_capacity);
        rep.nonsplit = !mu.has_value();
        rep.nonsplit_basis = "coboundary_witness";
    } else if (!any_solvable) {
        // A splitting would lift every involution of G to an involution
        // outside T, and no class admits a lift.
        rep.nonsplit = true;
        rep.nonsplit_basis = "involution_certificate";
    } else {
        rep.nonsplit = std::nullopt;
        rep.nonsplit_basis = "none";
    }
    rep.timings_ms["nonsplit_check"] = ms_since(t0);
    return rep;
}

} // namespace f2coh

#endif
