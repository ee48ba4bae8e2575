#include <catch2/catch_amalgamated.hpp>

#include "f2coh/permutation.hpp"

using namespace f2coh;

TEST_CASE("composition is right-action order", "[permutation]") {
    // (1 2) then (1 2 3): 1->2->3, 2->1->2, 3->3->1
    Perm a = parse_generators_text("(1 2)").front();
    Perm b = parse_generators_text("(1 2 3)").front();
    a = perm_pad(a, 3);
    Perm ab = perm_compose(a, b);
    CHECK(to_cycle_string(ab) == "(1 3)");
    Perm ba = perm_compose(b, a);
    CHECK(to_cycle_string(ba) == "(2 3)");
}

TEST_CASE("inverse and identity", "[permutation]") {
    Perm p = parse_generators_text("(1 4 2)(3 5)").front();
    CHECK(perm_is_identity(perm_compose(p, perm_inverse(p))));
    CHECK(perm_is_identity(perm_identity(7)));
}

TEST_CASE("generator file parsing", "[permutation]") {
    auto gens = parse_generators_text(
        "# a comment\n"
        "\n"
        "(1 2 3)(4 5)\n"
        "2 3 1 5 4\n");
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == gens[1]); // same permutation written both ways
    CHECK(gens[0].size() == 5);

    // degrees are padded to the file maximum
    auto mixed = parse_generators_text("(1 2)\n(6 7)\n");
    CHECK(mixed[0].size() == 7);
    CHECK(mixed[1].size() == 7);
}

TEST_CASE("bad input is rejected", "[permutation]") {
    CHECK_THROWS_AS(parse_generators_text("1 1 2\n"), InvalidPermutation);
    CHECK_THROWS_AS(parse_generators_text("(1 2\n"), InvalidPermutation);
    CHECK_THROWS_AS(parse_generators_text("(0 1)\n"), InvalidPermutation);
    CHECK_THROWS_AS(parse_generators_text("(1 2 1)\n"), InvalidPermutation);
    CHECK_THROWS_AS(parse_generators_text("2 3 4\n"), InvalidPermutation);
}
