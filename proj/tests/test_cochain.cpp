#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "f2coh/builtin.hpp"
#include "f2coh/cochain.hpp"
#include "f2coh/extension.hpp"

using namespace f2coh;

namespace {

struct WFixture {
    FiniteGroup G = make_builtin("s3");
    Element h = involution_classes(G)[0][0];
    Subgroup H = Subgroup::order_two(G, h);
    Subgroup whole = Subgroup::whole(G);
    Transversal T = Transversal::left_transversal(G, H);
    GModule U = GModule::trivial(G);
    GModule W = GModule::coinduce(G, H, U, T);
};

Cochain random_cochain(const Subgroup& domain, const GModule& M, int degree,
                       std::mt19937_64& rng) {
    Cochain lam(domain, M, degree);
    const auto& mem = domain.members();
    std::size_t total = 1;
    for (int i = 0; i < degree; ++i)
        total *= mem.size() - 1;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        Tuple t(degree);
        for (int i = 0; i < degree; ++i) {
            t[i] = mem[1 + c % (mem.size() - 1)];
            c /= mem.size() - 1;
        }
        F2Vector v(M.dim());
        for (std::size_t i = 0; i < M.dim(); ++i)
            v.set(i, rng() & 1);
        lam.set(t, std::move(v));
    }
    return lam;
}

// Signed-integer reference for the differential: accumulate each term with
// its (-1)^k coefficient over Z, then reduce coordinates mod 2.
F2Vector differential_at_signed(const Cochain& lam, const Tuple& t) {
    const FiniteGroup& G = lam.group();
    const int n = static_cast<int>(t.size());
    std::vector<long> acc(lam.module().dim(), 0);
    auto add = [&](const F2Vector& v, long sign) {
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (v.get(i))
                acc[i] += sign;
    };
    add(lam.value(Tuple{t.begin() + 1, t.end()}), (n % 2 == 0) ? 1 : -1);
    for (int i = 1; i <= n - 1; ++i) {
        Tuple m(t.begin(), t.begin() + (i - 1));
        m.push_back(G.mul(t[i - 1], t[i]));
        m.insert(m.end(), t.begin() + i + 1, t.end());
        add(lam.value(m), ((n - i) % 2 == 0) ? 1 : -1);
    }
    add(lam.module().act(lam.value(Tuple{t.begin(), t.end() - 1}), t[n - 1]), 1);
    F2Vector out(lam.module().dim());
    for (std::size_t i = 0; i < out.dim(); ++i)
        out.set(i, ((acc[i] % 2) + 2) % 2 == 1);
    return out;
}

} // namespace

TEST_CASE("differential formulas", "[cochain]") {
    WFixture f;

    SECTION("degree 0 -> 1: (d v)(g) = v g - v, zero for trivial modules") {
        Cochain v(f.whole, f.U, 0);
        v.set({}, F2Vector::unit(1, 0));
        Cochain dv = differential(v, f.whole);
        CHECK(dv.is_zero());
        // over W the action moves cosets, so d of a degree-0 value need not vanish
        Cochain w(f.whole, f.W, 0);
        w.set({}, F2Vector::unit(3, f.T.coset_of(0)));
        Cochain dw = differential(w, f.whole);
        for (Element g = 1; g < f.G.order(); ++g)
            CHECK(dw.value({g}) == f.W.act(w.value({}), g) + w.value({}));
    }

    SECTION("degree 1 -> 2 matches the displayed formula") {
        std::mt19937_64 rng(5);
        Cochain lam = random_cochain(f.whole, f.W, 1, rng);
        for (Element g1 = 1; g1 < f.G.order(); ++g1)
            for (Element g2 = 1; g2 < f.G.order(); ++g2) {
                F2Vector expect =
                    lam.value({g2}) + lam.value({f.G.mul(g1, g2)}) +
                    f.W.act(lam.value({g1}), g2);
                CHECK(differential_at(lam, {g1, g2}) == expect);
            }
    }

    SECTION("d d = 0 exhaustively over W, degrees 1 -> 3") {
        std::mt19937_64 rng(6);
        for (int deg : {1, 2}) {
            Cochain lam = random_cochain(f.whole, f.W, deg, rng);
            Cochain dd = differential(differential(lam, f.whole), f.whole);
            CHECK(dd.is_zero());
        }
    }

    SECTION("signs agree with the signed-integer reference") {
        std::mt19937_64 rng(7);
        for (int deg : {1, 2}) {
            Cochain lam = random_cochain(f.whole, f.W, deg, rng);
            for (int trial = 0; trial < 300; ++trial) {
                Tuple t(deg + 1);
                for (auto& g : t)
                    g = static_cast<Element>(1 + rng() % (f.G.order() - 1));
                REQUIRE(differential_at(lam, t) == differential_at_signed(lam, t));
            }
        }
    }
}

TEST_CASE("normalization is enforced at construction", "[cochain]") {
    FiniteGroup c2 = make_builtin("c2");
    Subgroup H = Subgroup::whole(c2);
    GModule U = GModule::trivial(c2);
    Cochain lam(H, U, 2);
    CHECK_THROWS_AS(lam.set({1, 0}, F2Vector::unit(1, 0)), NormalizationError);
    CHECK_THROWS_AS(lam.set({0, 1}, F2Vector::unit(1, 0)), NormalizationError);
    // values at such tuples read back as zero
    CHECK(lam.value({1, 0}).is_zero());
    // arity mismatches are dimension errors
    CHECK_THROWS_AS(lam.set({1}, F2Vector::unit(1, 0)), DimensionError);
}

TEST_CASE("is_cocycle", "[cochain]") {
    WFixture f;

    SECTION("zero cochain is a cocycle") {
        Cochain zero(f.whole, f.W, 2);
        CHECK(is_cocycle(zero, f.whole).ok);
    }

    SECTION("beta satisfies the 2-cocycle identity over all of H^3") {
        FiniteGroup c2 = make_builtin("c2");
        Subgroup H2 = Subgroup::whole(c2);
        GModule U2 = GModule::trivial(c2);
        Cochain beta = beta_z4(H2, U2);
        CocycleCert cert = is_cocycle(beta, H2);
        CHECK(cert.ok);
        CHECK(cert.checked == 1); // single legal triple (h,h,h)
    }

    SECTION("a violated identity is caught with a certificate") {
        std::mt19937_64 rng(8);
        Cochain lam = random_cochain(f.whole, f.W, 1, rng);
        Cochain d = differential(lam, f.whole);
        // corrupt one value
        Tuple bad{1, 1};
        F2Vector v = d.value(bad);
        v.flip(0);
        d.set(bad, v);
        CocycleCert cert = is_cocycle(d, f.whole);
        CHECK_FALSE(cert.ok);
        REQUIRE(cert.counterexample);
        CHECK_FALSE(differential_at(d, *cert.counterexample).is_zero());
    }

    SECTION("sampled mode is deterministic in the seed and thread count") {
        std::mt19937_64 rng(9);
        Cochain lam = random_cochain(f.whole, f.W, 1, rng);
        Cochain d = differential(lam, f.whole);
        CocycleCert a = is_cocycle_sampled(d, f.whole, 500, 42, 1);
        CocycleCert b = is_cocycle_sampled(d, f.whole, 500, 42, 4);
        CHECK(a.ok == b.ok);
        CHECK(a.checked == b.checked);
        CHECK(a.ok);
    }
}

TEST_CASE("coboundary witness", "[cochain]") {
    WFixture f;

    SECTION("differentials always have witnesses that reproduce them") {
        std::mt19937_64 rng(10);
        for (int trial = 0; trial < 10; ++trial) {
            Cochain mu = random_cochain(f.whole, f.W, 1, rng);
            Cochain lam = differential(mu, f.whole);
            auto witness = coboundary_witness(lam, f.whole);
            REQUIRE(witness);
            CHECK(differential(*witness, f.whole) == lam);
        }
    }

    SECTION("beta on C2 is not a coboundary") {
        FiniteGroup c2 = make_builtin("c2");
        Subgroup H2 = Subgroup::whole(c2);
        GModule U2 = GModule::trivial(c2);
        Cochain beta = beta_z4(H2, U2);
        CHECK_FALSE(coboundary_witness(beta, H2));
    }

    SECTION("degree and capacity policy") {
        Cochain deg3(f.whole, f.W, 3);
        CHECK_THROWS_AS(coboundary_witness(deg3, f.whole), CapacityExceeded);
        std::mt19937_64 rng(11);
        Cochain lam = differential(random_cochain(f.whole, f.W, 1, rng), f.whole);
        CHECK_THROWS_AS(coboundary_witness(lam, f.whole, 4), CapacityExceeded);
    }
}
