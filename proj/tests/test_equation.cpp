#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semieq/lemmas.hpp"

using namespace semieq;

namespace {

// hand-checked solution on the 2-element null semigroup over GF(5):
// f = (0,1) vanishes on S^2 = {0}, g = -(lambda^2/2) f, h = lambda f with
// lambda = 2, i.e. g = (0,3), h = (0,2)
SolutionTriple null2_example(const Field& f5) {
    return {Func::from_ints(f5, {0, 1}), Func::from_ints(f5, {0, 3}),
            Func::from_ints(f5, {0, 2})};
}

} // namespace

TEST_CASE("residual of the main equation") {
    Field f5 = Field::gf(5);
    Semigroup n2 = catalog("null2");
    Involution id = identity_involution(n2);
    SolutionTriple t = null2_example(f5);
    CHECK(residual_main(n2, id, t).zero);

    SolutionTriple bad = t;
    bad.f[0] = f5.one();
    auto r = residual_main(n2, id, bad);
    CHECK(!r.zero);
    CHECK(r.wx >= 0);
    // the reported worst pair really violates the equation
    CHECK(bad.f[n2.op(r.wx, id(r.wy))] !=
          bad.f[r.wx] * bad.g[r.wy] + bad.g[r.wx] * bad.f[r.wy] + bad.h[r.wx] * bad.h[r.wy]);

    Func short_f = Func::from_ints(f5, {0});
    CHECK_THROWS_AS(residual_main(n2, id, short_f, t.g, t.h), FieldError);
}

TEST_CASE("residuals of the auxiliary equations") {
    Field f5 = Field::gf(5);
    std::vector<std::vector<int>> t5(5, std::vector<int>(5));
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) t5[(size_t)x][(size_t)y] = (x + y) % 5;
    Semigroup z5 = Semigroup::validate(t5);
    Func one = Func::from_ints(f5, {1, 1, 1, 1, 1});
    Func lin = Func::from_ints(f5, {0, 1, 2, 3, 4}); // additive relative to chi = 1
    CHECK(residual_sine(z5, lin, one).zero);
    CHECK(!residual_sine(z5, one, one).zero);

    // f(x+y) = f(x) + f(y) + x*y matches f(x) = x^2/2... over GF(5): f = 3x^2
    Func quad = Func::zero(f5, 5);
    for (int x = 0; x < 5; ++x) quad[x] = f5.from_int(3 * x * x);
    CHECK(residual_special_cs(z5, quad, one, lin).zero);
    Involution id = identity_involution(z5);
    CHECK(residual_cs_type(z5, id, quad, one, lin).zero);
}

TEST_CASE("unconditional structure checks accept every verified solution") {
    Field f5 = Field::gf(5);
    Semigroup n2 = catalog("null2");
    Involution id = identity_involution(n2);
    auto rep = check_solution_structure(n2, id, null2_example(f5));
    CHECK(rep.all_conclusions_hold());
    REQUIRE(rep.entries.size() == 4);
    for (const auto& e : rep.entries) CHECK(e.hypotheses_held);

    SolutionTriple non_solution = null2_example(f5);
    non_solution.g[0] = f5.one();
    CHECK_THROWS_AS(check_solution_structure(n2, id, non_solution), FieldError);
}

TEST_CASE("odd collapse") {
    Field f5 = Field::gf(5);
    Semigroup n3 = catalog("null3");
    Involution swap = validate_involution(n3, {0, 2, 1});
    // f = (0,1,-1) is odd and vanishes on S^2 = {0}; lambda = 2
    SolutionTriple t{Func::from_ints(f5, {0, 1, 4}), Func::from_ints(f5, {0, 3, 2}),
                     Func::from_ints(f5, {0, 2, 3})};
    REQUIRE(residual_main(n3, swap, t).zero);
    auto e = check_odd_collapse(n3, swap, t);
    CHECK(e.hypotheses_held);
    CHECK(e.conclusion_held);

    // hypothesis not met when f is even
    SolutionTriple even_t{Func::from_ints(f5, {0, 1, 1}), Func::from_ints(f5, {0, 3, 3}),
                          Func::from_ints(f5, {0, 2, 2})};
    REQUIRE(residual_main(n3, swap, even_t).zero);
    CHECK(!check_odd_collapse(n3, swap, even_t).hypotheses_held);
}

TEST_CASE("dependent dichotomy and trichotomy on group solutions") {
    Field f5 = Field::gf(5);
    Semigroup z2 = catalog("z2");
    Involution id = identity_involution(z2);
    // dependent example: f = (1,1), g = (3,3) = (1/2, 1/2), h = 0 solves
    // f(xy) = f(x)g(y) + g(x)f(y)
    SolutionTriple dep{Func::from_ints(f5, {1, 1}), Func::from_ints(f5, {3, 3}),
                       Func::zero(f5, 2)};
    REQUIRE(residual_main(z2, id, dep).zero);
    auto e = check_dependent_dichotomy(z2, id, dep);
    CHECK(e.hypotheses_held);
    CHECK(e.conclusion_held);

    // independent example with a zero third character: f = (1,0), g = (3,0),
    // h = (0,1) over GF(5)
    SolutionTriple indep{Func::from_ints(f5, {1, 0}), Func::from_ints(f5, {3, 0}),
                         Func::from_ints(f5, {0, 1})};
    REQUIRE(residual_main(z2, id, indep).zero);
    auto e3 = check_independent_trichotomy(z2, id, indep);
    CHECK(e3.hypotheses_held);
    CHECK(e3.conclusion_held);
}

TEST_CASE("zero-square collapse") {
    Field f5 = Field::gf(5);
    Semigroup n2 = catalog("null2");
    Involution id = identity_involution(n2);
    auto e = check_zero_square_collapse(n2, id, null2_example(f5));
    CHECK(e.hypotheses_held);
    CHECK(e.conclusion_held);
}

TEST_CASE("character span certificates are empty on the catalog") {
    for (const auto& name : catalog_names()) {
        Semigroup s = catalog(name);
        CHECK(character_span_certificates(s, Field::gf(5)).empty());
    }
}

TEST_CASE("pair structure fit") {
    Field f5 = Field::gf(5);
    Semigroup z2 = catalog("z2");
    // g = chi multiplicative: shape 1
    SolutionTriple t{Func::from_ints(f5, {1, 0}), Func::from_ints(f5, {3, 0}),
                     Func::from_ints(f5, {0, 1})};
    auto mult = enumerate_multiplicative(z2, f5);
    // g = (3,0) is not multiplicative (3*3 = 4 != 3), so expect shape 2 or 3
    auto fit = pair_structure_fit(z2, t, mult);
    CHECK(fit.fitted_case != 0);

    // degenerate input rejected: f and h dependent
    SolutionTriple dep{Func::from_ints(f5, {0, 1}), Func::zero(f5, 2),
                       Func::zero(f5, 2)};
    Semigroup n2 = catalog("null2");
    CHECK_THROWS_AS(pair_structure_fit(n2, dep, mult), FieldError);
}
