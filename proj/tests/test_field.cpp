#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semieq/field.hpp"

using namespace semieq;

TEST_CASE("field spec parsing round-trips") {
    CHECK(Field::parse("gf:5").spec_string() == "gf:5");
    CHECK(Field::parse("gf:7^2").spec_string() == "gf:7^2");
    CHECK(Field::parse("complex:1e-09").kind == FieldKind::ComplexFloat);
    CHECK_THROWS_AS(Field::parse("gf:4"), FieldError);     // not prime
    CHECK_THROWS_AS(Field::parse("gf:2"), FieldError);     // char 2 unsupported
    CHECK_THROWS_AS(Field::parse("gf:5^3"), FieldError);   // only quadratic
    CHECK_THROWS_AS(Field::parse("nonsense"), FieldError);
    CHECK_THROWS_AS(Field::parse("complex:0"), FieldError);
}

TEST_CASE("prime field arithmetic satisfies the field axioms exhaustively") {
    Field f = Field::gf(7);
    REQUIRE(f.size() == 7);
    for (size_t i = 0; i < 7; ++i) {
        Scalar a = f.element(i);
        CHECK(a + (-a) == f.zero());
        CHECK(a.index() == i);
        if (!a.is_zero()) CHECK(a * a.inv() == f.one());
        for (size_t j = 0; j < 7; ++j) {
            Scalar b = f.element(j);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (size_t k = 0; k < 7; ++k) {
                Scalar c = f.element(k);
                CHECK((a + b) * c == a * c + b * c);
                CHECK((a * b) * c == a * (b * c));
            }
        }
    }
}

TEST_CASE("quadratic extension uses the smallest non-residue and is a field") {
    Field f = Field::gf2(5);
    CHECK(f.nonresidue == 2); // squares mod 5 are {0,1,4}
    CHECK(f.size() == 25);
    for (size_t i = 0; i < 25; ++i) {
        Scalar a = f.element(i);
        CHECK(a.index() == i);
        CHECK(a + (-a) == f.zero());
        if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    }
    // associativity and distributivity on a sample grid
    for (size_t i = 0; i < 25; i += 3)
        for (size_t j = 0; j < 25; j += 4)
            for (size_t k = 0; k < 25; k += 5) {
                Scalar a = f.element(i), b = f.element(j), c = f.element(k);
                CHECK((a * b) * c == a * (b * c));
                CHECK((a + b) * c == a * c + b * c);
            }
}

TEST_CASE("square roots") {
    Field f5 = Field::gf(5);
    auto r = sqrt_all(-f5.one()); // -1 = 4 has roots 2 and 3
    REQUIRE(r.size() == 2);
    CHECK(r[0] * r[0] == -f5.one());
    CHECK(r[1] * r[1] == -f5.one());
    CHECK(sqrt_all(f5.from_int(2)).empty()); // 2 is a non-residue mod 5

    // every element of GF(p^2) coming from a GF(p) non-residue has a root
    Field f25 = Field::gf2(5);
    CHECK(sqrt_all(f25.from_int(2)).size() == 2);
    CHECK(sqrt_all(-f25.one()).size() == 2);

    Field c = Field::complex_field(1e-9);
    auto cr = sqrt_all(c.from_int(-4));
    REQUIRE(cr.size() == 2);
    CHECK(cr[0] * cr[0] == c.from_int(-4));
}

TEST_CASE("complex comparison uses the hybrid tolerance") {
    Field c = Field::complex_field(1e-9);
    Scalar big = c.from_int(1000000);
    Scalar big2 = big + Scalar::complex_value(c, {1e-5, 0}); // relative diff 1e-11
    CHECK(big == big2);
    Scalar small = c.from_int(0);
    Scalar small2 = Scalar::complex_value(c, {1e-8, 0});
    CHECK(small != small2); // absolute scale: 1e-8 > tol
    CHECK(Scalar::complex_value(c, {1e-10, 0}).is_zero());
}

TEST_CASE("mixed-field operations are rejected") {
    Field a = Field::gf(5), b = Field::gf(7);
    CHECK_THROWS_AS((void)(a.one() + b.one()), FieldError);
    CHECK_THROWS_AS((void)a.zero().inv(), FieldError);
}

TEST_CASE("scalar printing") {
    Field f25 = Field::gf2(5);
    CHECK(Scalar::finite(f25, 3, 2).str() == "3+2w");
    CHECK(Scalar::finite(f25, 0, 1).str() == "1w");
    CHECK(Field::gf(5).from_int(-1).str() == "4");
}
