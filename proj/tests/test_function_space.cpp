#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semieq/equation.hpp"

using namespace semieq;

TEST_CASE("multiplicative enumeration on cyclic groups") {
    Field f5 = Field::gf(5);
    auto ms = enumerate_multiplicative(catalog("z2"), f5);
    // zero, all-ones, and the sign character x -> (-1)^x
    REQUIRE(ms.size() == 3);
    for (const auto& m : ms) CHECK(is_multiplicative(catalog("z2"), m));
    bool has_zero = false, has_one = false, has_sign = false;
    for (const auto& m : ms) {
        if (m.is_zero()) has_zero = true;
        if (m == Func::from_ints(f5, {1, 1})) has_one = true;
        if (m == Func::from_ints(f5, {1, 4})) has_sign = true;
    }
    CHECK(has_zero);
    CHECK(has_one);
    CHECK(has_sign);

    // characters of Z/3 over GF(7): values at the generator are cube roots of
    // unity mod 7, i.e. 1, 2, 4; plus the zero function
    Field f7 = Field::gf(7);
    CHECK(enumerate_multiplicative(catalog("z3"), f7).size() == 4);
    // over GF(5) only the trivial cube root exists
    CHECK(enumerate_multiplicative(catalog("z3"), f5).size() == 2);
}

TEST_CASE("multiplicative enumeration on non-group tables") {
    Field f5 = Field::gf(5);
    // soundness against is_multiplicative, completeness against a direct scan
    for (const auto& name : {"null2", "null3", "leftzero2", "rightzero3"}) {
        Semigroup s = catalog(name);
        auto ms = enumerate_multiplicative(s, f5);
        for (const auto& m : ms) CHECK(is_multiplicative(s, m));
        // completeness: brute scan over all q^n functions
        size_t expected = 0;
        size_t total = 1;
        for (int i = 0; i < s.order(); ++i) total *= f5.size();
        for (size_t code = 0; code < total; ++code) {
            Func cand = Func::zero(f5, s.order());
            size_t c = code;
            for (int i = 0; i < s.order(); ++i) {
                cand[i] = f5.element(c % f5.size());
                c /= f5.size();
            }
            if (is_multiplicative(s, cand)) ++expected;
        }
        CHECK(ms.size() == expected);
    }
}

TEST_CASE("complex characters") {
    Field c = Field::complex_field(1e-9);
    auto chars = complex_characters(catalog("z2"), c);
    REQUIRE(chars.size() == 3); // zero, trivial, sign
    for (const auto& m : chars) CHECK(is_multiplicative(catalog("z2"), m));
    CHECK(complex_characters(catalog("z3"), c).size() == 4);   // zero + 3 cube roots
    CHECK(complex_characters(catalog("klein4"), c).size() == 5);
}

TEST_CASE("even/odd decomposition") {
    Field f5 = Field::gf(5);
    Semigroup z3 = catalog("z3");
    Involution sigma = validate_involution(z3, {0, 2, 1});
    Func f = Func::from_ints(f5, {1, 2, 3});
    auto [even, odd] = even_odd_decompose(f, sigma);
    CHECK(is_even(even, sigma));
    CHECK(is_odd(odd, sigma));
    CHECK(even + odd == f);
}

TEST_CASE("chi-additive bases") {
    Field f5 = Field::gf(5);
    // on Z/2 with chi = 1: phi(x+y) = phi(x) + phi(y) forces 2 phi(1) = phi(0) = 0
    Semigroup z2 = catalog("z2");
    Func one2 = Func::from_ints(f5, {1, 1});
    CHECK(chi_additive_basis(z2, one2).empty());
    // on Z/5 additive maps x -> cx form a 1-dimensional space
    std::vector<std::vector<int>> t5(5, std::vector<int>(5));
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) t5[(size_t)x][(size_t)y] = (x + y) % 5;
    Semigroup z5 = Semigroup::validate(t5);
    Func one5 = Func::from_ints(f5, {1, 1, 1, 1, 1});
    auto basis = chi_additive_basis(z5, one5);
    REQUIRE(basis.size() == 1);
    CHECK(is_chi_additive(z5, basis[0], one5));
    // null2 with chi = 0: 0-additive means vanishing on S^2 = {0}
    Semigroup n2 = catalog("null2");
    auto b0 = chi_additive_basis(n2, Func::zero(f5, 2));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0][0].is_zero());
    CHECK(!b0[0][1].is_zero());
}

TEST_CASE("symmetry-constrained spaces") {
    Field f5 = Field::gf(5);
    Semigroup n3 = catalog("null3");
    Involution swap = validate_involution(n3, {0, 2, 1});
    auto even = vanishing_basis(n3, f5, square_set(n3), swap, Symmetry::Even);
    auto odd = vanishing_basis(n3, f5, square_set(n3), swap, Symmetry::Odd);
    REQUIRE(even.size() == 1);
    REQUIRE(odd.size() == 1);
    CHECK(is_even(even[0], swap));
    CHECK(is_odd(odd[0], swap));
    CHECK(even[0].zero_on({0}));
    CHECK(odd[0].zero_on({0}));
}

TEST_CASE("cosine-sine type solution sets") {
    Field f5 = Field::gf(5);
    std::vector<std::vector<int>> t5(5, std::vector<int>(5));
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) t5[(size_t)x][(size_t)y] = (x + y) % 5;
    Semigroup z5 = Semigroup::validate(t5);
    Involution id = identity_involution(z5);
    Func one = Func::from_ints(f5, {1, 1, 1, 1, 1});
    Func lin = Func::from_ints(f5, {0, 1, 2, 3, 4});
    auto sols = cosine_sine_type_solutions(z5, id, one, lin);
    REQUIRE(sols.consistent);
    CHECK(residual_cs_type(z5, id, sols.particular, one, lin).zero);
    // every basis direction keeps the residual zero
    for (const auto& b : sols.basis)
        CHECK(residual_cs_type(z5, id, sols.particular + b, one, lin).zero);
    // psi(x) = 3 x^2 is one member of the set
    Func quad = Func::zero(f5, 5);
    for (int x = 0; x < 5; ++x) quad[x] = f5.from_int(3 * x * x);
    CHECK(residual_cs_type(z5, id, quad, one, lin).zero);

    // on the null semigroup a nonzero phi is chi-additive for chi = 0 but the
    // set is empty: psi(0) cannot equal both phi(1)^2 and phi(0)phi(1) = 0
    Semigroup n3 = catalog("null3");
    Func phi = Func::from_ints(f5, {0, 1, 2});
    CHECK(!cosine_sine_type_solutions(n3, identity_involution(n3), Func::zero(f5, 3), phi)
               .consistent);
    // phi must be chi-additive or the call is rejected
    Func bad = Func::from_ints(f5, {1, 0, 0}); // nonzero at the absorbing element
    CHECK_THROWS_AS(
        cosine_sine_type_solutions(n3, identity_involution(n3), Func::zero(f5, 3), bad),
        FieldError);
}

TEST_CASE("centrality and rank") {
    Field f5 = Field::gf(5);
    Semigroup lz2 = catalog("leftzero2");
    Func f = Func::from_ints(f5, {1, 2});
    auto c = is_central(f, lz2); // f(xy) = f(x) depends on the order
    CHECK(!c.central);
    CHECK(f[lz2.op(c.wx, c.wy)] != f[lz2.op(c.wy, c.wx)]);
    CHECK(func_rank({f, Func::from_ints(f5, {2, 4})}).rank == 1);
    CHECK(func_rank({f, Func::from_ints(f5, {0, 1})}).rank == 2);
}
