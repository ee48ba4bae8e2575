#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "f2coh/builtin.hpp"
#include "f2coh/group.hpp"
#include "f2coh/transversal.hpp"

using namespace f2coh;

namespace {

Element elem(const FiniteGroup& G, const std::string& cycles) {
    Perm p = perm_pad(parse_generators_text(cycles).front(), G.degree());
    Element e = G.index_of(p);
    REQUIRE(e != FiniteGroup::npos);
    return e;
}

// Independent closure oracle: multiply all pairs until the set is stable.
std::set<Perm> closure_by_pair_products(const std::vector<Perm>& gens) {
    std::size_t degree = 0;
    for (const Perm& g : gens)
        degree = std::max(degree, g.size());
    std::set<Perm> s;
    s.insert(perm_identity(degree));
    for (const Perm& g : gens)
        s.insert(perm_pad(g, degree));
    for (;;) {
        std::set<Perm> next = s;
        for (const Perm& a : s)
            for (const Perm& b : s)
                next.insert(perm_compose(a, b));
        if (next.size() == s.size())
            return s;
        s.swap(next);
    }
}

} // namespace

TEST_CASE("closure of the empty generating set is trivial", "[group]") {
    FiniteGroup G = FiniteGroup::close_generators({});
    CHECK(G.order() == 1);
    CHECK(G.mul(0, 0) == 0);
}

TEST_CASE("closure matches the pair-product oracle", "[group]") {
    auto gens_s3 = parse_generators_text("(1 2)\n(1 2 3)\n");
    FiniteGroup s3 = FiniteGroup::close_generators(gens_s3);
    CHECK(s3.order() == closure_by_pair_products(gens_s3).size()); // 6
    CHECK(s3.order() == 6);

    auto gens_a5 = parse_generators_text("(1 2 3 4 5)\n(1 2 3)\n");
    FiniteGroup a5 = FiniteGroup::close_generators(gens_a5);
    CHECK(a5.order() == closure_by_pair_products(gens_a5).size()); // 60
    CHECK(a5.order() == 60);
}

TEST_CASE("cap and invalid input errors", "[group]") {
    auto gens = parse_generators_text("(1 2 3 4 5)\n(1 2 3)\n");
    CHECK_THROWS_AS(FiniteGroup::close_generators(gens, 30), CapExceeded);
    CHECK_THROWS_AS(FiniteGroup::close_generators({Perm{1, 1, 0}}), InvalidPermutation);
}

TEST_CASE("group axioms on the enumeration", "[group]") {
    for (const char* name : {"s3", "a4"}) {
        FiniteGroup G = make_builtin(name);
        for (Element i = 0; i < G.order(); ++i) {
            CHECK(G.mul(0, i) == i);
            CHECK(G.mul(i, 0) == i);
            CHECK(G.mul(i, G.inverse(i)) == 0);
        }
        // exhaustive associativity (|G| <= 200)
        bool assoc = true;
        for (Element a = 0; a < G.order() && assoc; ++a)
            for (Element b = 0; b < G.order() && assoc; ++b)
                for (Element c = 0; c < G.order() && assoc; ++c)
                    assoc = G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
        CHECK(assoc);
    }
}

TEST_CASE("involution classes match the full conjugation oracle", "[group]") {
    auto oracle = [](const FiniteGroup& G) {
        std::set<std::set<Element>> classes;
        for (Element g = 1; g < G.order(); ++g) {
            if (G.mul(g, g) != 0)
                continue;
            std::set<Element> cls;
            for (Element a = 0; a < G.order(); ++a)
                cls.insert(G.conjugate(g, a));
            classes.insert(cls);
        }
        return classes;
    };
    FiniteGroup trivial = FiniteGroup::close_generators({});
    CHECK(involution_classes(trivial).empty());

    FiniteGroup s3 = make_builtin("s3");
    auto cls_s3 = involution_classes(s3);
    REQUIRE(cls_s3.size() == 1);
    CHECK(cls_s3[0].size() == 3);
    CHECK(oracle(s3).size() == 1);

    FiniteGroup a4 = make_builtin("a4");
    auto cls_a4 = involution_classes(a4);
    REQUIRE(cls_a4.size() == 1);
    CHECK(cls_a4[0].size() == 3);
    CHECK(*oracle(a4).begin() ==
          std::set<Element>(cls_a4[0].begin(), cls_a4[0].end()));

    // partition property: classes cover exactly the involutions, disjointly
    FiniteGroup a5 = make_builtin("a5");
    auto cls_a5 = involution_classes(a5);
    std::set<Element> seen;
    std::size_t total = 0;
    for (const auto& cls : cls_a5) {
        total += cls.size();
        seen.insert(cls.begin(), cls.end());
    }
    CHECK(total == seen.size());
    std::size_t invs = 0;
    for (Element g = 1; g < a5.order(); ++g)
        if (a5.is_involution(g)) {
            ++invs;
            CHECK(seen.count(g) == 1);
        }
    CHECK(invs == total);
    CHECK(invs == 15);
}

TEST_CASE("left transversal of H in G", "[group]") {
    FiniteGroup s3 = make_builtin("s3");
    Element t12 = elem(s3, "(1 2)");
    Subgroup H = Subgroup::order_two(s3, t12);

    SECTION("index 1: G = H") {
        Subgroup whole = Subgroup::whole(s3);
        Transversal T = Transversal::left_transversal(s3, whole);
        CHECK(T.index() == 1);
        CHECK(T.rep(0) == 0);
        for (Element g = 0; g < s3.order(); ++g)
            CHECK(T.project_pi(g) == g); // pi is the identity on H = G
    }

    SECTION("coset enumeration oracle") {
        Transversal T = Transversal::left_transversal(s3, H);
        REQUIRE(T.index() == 3);
        CHECK(T.rep(0) == 0);
        // cosets are {y, y*(1 2)} exactly
        for (std::size_t c = 0; c < 3; ++c) {
            Element y = T.rep(c);
            CHECK(T.coset_of(y) == c);
            CHECK(T.coset_of(s3.mul(y, t12)) == c);
        }
    }

    SECTION("factorization and equivariance, exhaustive") {
        Transversal T = Transversal::left_transversal(s3, H);
        for (Element g = 0; g < s3.order(); ++g) {
            CHECK(s3.mul(T.rep(T.coset_of(g)), T.project_pi(g)) == g);
            for (Element h : H.members()) {
                CHECK(T.project_pi(s3.mul(g, h)) == s3.mul(T.project_pi(g), h));
                CHECK(T.rho(s3.mul(g, h)) == T.rho(g)); // rho(gh) = rho(g)
            }
        }
        CHECK(T.project_pi(0) == 0); // pi(1) = 1
        for (std::size_t c = 0; c < T.index(); ++c) {
            CHECK(T.project_pi(T.rep(c)) == 0); // pi(y) = 1
            CHECK(T.rho(T.rep(c)) == s3.inverse(T.rep(c)));
        }
        CHECK(T.rho(0) == 0);
        CHECK(T.rho(t12) == 0); // rho(h) = 1 for h in H when 1 in Y
    }

    SECTION("pi((1 3)) = (1 2) for the transversal {e, (1 2 3), (1 3 2)}") {
        Transversal T =
            Transversal::from_reps(s3, H, {0, elem(s3, "(1 2 3)"), elem(s3, "(1 3 2)")});
        CHECK(T.project_pi(elem(s3, "(1 3)")) == t12);
    }

    SECTION("nontrivial y0 mode") {
        Transversal T = Transversal::nontrivial_y0(s3, H);
        CHECK(T.y0() == t12);
        CHECK(T.project_pi(0) == t12); // pi(1) = y0^{-1}
        for (Element g = 0; g < s3.order(); ++g)
            for (Element h : H.members())
                CHECK(T.project_pi(s3.mul(g, h)) == s3.mul(T.project_pi(g), h));
    }
}

TEST_CASE("transversal properties exhaustive on larger built-ins", "[group]") {
    for (const char* name : {"a4", "a5", "psl27"}) {
        FiniteGroup G = make_builtin(name);
        Element inv = involution_classes(G)[0][0];
        Subgroup H = Subgroup::order_two(G, inv);
        Transversal T = Transversal::left_transversal(G, H);
        CHECK(T.index() == G.order() / 2);
        for (Element g = 0; g < G.order(); ++g) {
            REQUIRE(G.mul(T.rep(T.coset_of(g)), T.project_pi(g)) == g);
            REQUIRE(T.project_pi(G.mul(g, inv)) == G.mul(T.project_pi(g), inv));
            REQUIRE(T.rho(G.mul(g, inv)) == T.rho(g));
        }
    }
}

TEST_CASE("built-in group table", "[group]") {
    CHECK(make_builtin("c2").order() == 2);
    CHECK(make_builtin("s3").order() == 6);
    CHECK(make_builtin("a4").order() == 12);
    CHECK(make_builtin("a5").order() == 60);
    CHECK(make_builtin("psl27").order() == 168);
    CHECK(make_builtin("PSL(2,7)").order() == 168);
    CHECK(make_builtin("psl28").order() == 504);
    CHECK_THROWS_AS(make_builtin("sz8"), Error);

    // degree and unique involution class as documented
    CHECK(make_builtin("psl27").degree() == 7);
    CHECK(make_builtin("psl28").degree() == 9);
    CHECK(involution_classes(make_builtin("psl27")).size() == 1);
    CHECK(involution_classes(make_builtin("psl27"))[0].size() == 21);
    CHECK(involution_classes(make_builtin("psl28")).size() == 1);
    CHECK(involution_classes(make_builtin("psl28"))[0].size() == 63);
}
