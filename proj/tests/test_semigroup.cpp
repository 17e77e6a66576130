#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semieq/semigroup.hpp"

using namespace semieq;

TEST_CASE("validation reports associativity witnesses") {
    // (0*1)*1 = 0 but 0*(1*1) = 1
    std::vector<std::vector<int>> bad = {{1, 0}, {0, 0}};
    bool threw = false;
    try {
        Semigroup::validate(bad);
    } catch (const SemigroupError& e) {
        threw = true;
        CHECK(!e.witnesses.empty());
        for (auto [x, y, z] : e.witnesses) {
            // re-check each witness directly against the raw table
            int xy = bad[(size_t)x][(size_t)y], yz = bad[(size_t)y][(size_t)z];
            CHECK(bad[(size_t)xy][(size_t)z] != bad[(size_t)x][(size_t)yz]);
        }
    }
    CHECK(threw);
    CHECK_THROWS_AS(Semigroup::validate({{0, 2}, {0, 0}}), SemigroupError); // range
    CHECK_THROWS_AS(Semigroup::validate({{0, 0}}), SemigroupError);        // not square
    CHECK_THROWS_AS(Semigroup::validate({}), SemigroupError);              // order 0
}

TEST_CASE("exhaustive generation counts") {
    CHECK(all_semigroups(1).size() == 1);
    CHECK(all_semigroups(2).size() == 8);    // of the 16 order-2 tables
    CHECK(all_semigroups(3).size() == 113);  // of the 19683 order-3 tables
}

TEST_CASE("catalog tables and their involutive automorphisms") {
    for (const auto& name : catalog_names()) CHECK_NOTHROW(catalog(name));
    CHECK_THROWS_AS(catalog("nope"), SemigroupError);

    auto count = [](const std::string& n) { return involutive_automorphisms(catalog(n)).size(); };
    CHECK(count("trivial") == 1);
    CHECK(count("z2") == 1);
    CHECK(count("z3") == 2);      // identity and inversion
    CHECK(count("z4") == 2);
    CHECK(count("klein4") == 4);  // identity and the three transposition pairs
    CHECK(count("null2") == 1);
    CHECK(count("null3") == 2);   // identity and swapping the two non-absorbing elements
    CHECK(count("leftzero2") == 2);
    CHECK(count("leftzero3") == 4);
    CHECK(count("rightzero3") == 4);

    // identity always listed first
    for (const auto& name : catalog_names())
        CHECK(involutive_automorphisms(catalog(name)).front().is_identity());

    // every listed permutation really is an involutive automorphism
    for (const auto& name : catalog_names()) {
        Semigroup s = catalog(name);
        for (const auto& sigma : involutive_automorphisms(s)) {
            CHECK(is_involutive_automorphism(s, sigma.perm));
            for (int x = 0; x < s.order(); ++x) CHECK(sigma(sigma(x)) == x);
        }
    }
}

TEST_CASE("square sets") {
    CHECK(square_set(catalog("null3")) == std::vector<int>{0});
    CHECK(square_set(catalog("z4")) == std::vector<int>{0, 1, 2, 3});
    CHECK(square_set(catalog("leftzero2")) == std::vector<int>{0, 1});
}

TEST_CASE("involution validation") {
    Semigroup z3 = catalog("z3");
    CHECK_NOTHROW(validate_involution(z3, {0, 2, 1}));
    CHECK_THROWS_AS(validate_involution(z3, {1, 2, 0}), SemigroupError); // order 3, not 2
    CHECK_THROWS_AS(validate_involution(z3, {0, 1}), SemigroupError);    // wrong length
    Semigroup lz2 = catalog("leftzero2");
    CHECK_NOTHROW(validate_involution(lz2, {1, 0}));
}
