#include <doctest.h>

#include "hermite/field.hpp"
#include "hermite/rng.hpp"

using namespace hermite;

namespace {
FieldElement fe(const FieldSpec& s, std::int64_t n) { return FieldElement::from_integer(s, n); }
} // namespace

TEST_CASE("prime field arithmetic is canonical") {
    FieldSpec f2 = FieldSpec::prime_field(2);
    FieldSpec f3 = FieldSpec::prime_field(3);
    CHECK(fe(f2, 1) + fe(f2, 1) == fe(f2, 0));
    CHECK(fe(f3, 2) * fe(f3, 2) == fe(f3, 1));
    CHECK((-fe(f3, 1)).residue() == 2);
}

TEST_CASE("rational arithmetic is exact and reduced") {
    FieldElement half = FieldElement::rational(1, 2);
    FieldElement third = FieldElement::rational(1, 3);
    CHECK(half + third == FieldElement::rational(5, 6));
    CHECK((half + third).to_string() == "5/6");
    CHECK(FieldElement::rational(2, 4) == half);
    CHECK(FieldElement::rational(1, -2).to_string() == "-1/2");
}

TEST_CASE("inverses") {
    FieldSpec f3 = FieldSpec::prime_field(3);
    CHECK(fe(f3, 2).inverse() == fe(f3, 2));
    CHECK(FieldElement::rational(5, 6).inverse() == FieldElement::rational(6, 5));
    FieldSpec f2 = FieldSpec::prime_field(2);
    CHECK_THROWS_AS(fe(f2, 0).inverse(), DivisionByZeroError);
}

TEST_CASE("from_integer reduces canonically") {
    CHECK(fe(FieldSpec::prime_field(2), -1).residue() == 1);
    CHECK(fe(FieldSpec::prime_field(3), 6).is_zero());
    CHECK(fe(FieldSpec::rationals(), 6).to_string() == "6/1");
    mpz_class big("-100000000000000000003");
    mpz_class reduced = ((big % 7) + 7) % 7;
    std::int64_t want = reduced.get_si();
    CHECK(FieldElement::from_integer(FieldSpec::prime_field(7), big).residue() == want);
}

TEST_CASE("spec guards") {
    CHECK_THROWS_AS(FieldSpec::prime_field(4), NotPrimeError);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), NotPrimeError);
    FieldElement a = fe(FieldSpec::prime_field(2), 1);
    FieldElement b = fe(FieldSpec::prime_field(3), 1);
    CHECK_THROWS_AS(a + b, SpecMismatchError);
    CHECK_THROWS_AS(a * FieldElement::rational(1, 2), SpecMismatchError);
}

TEST_CASE("textual forms round-trip") {
    for (const char* text : {"Q", "Fp:2", "Fp:3", "Fp:101"})
        CHECK(FieldSpec::parse(text).to_string() == text);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:4"), NotPrimeError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
    FieldSpec q = FieldSpec::rationals();
    CHECK(FieldElement::parse(q, "-7/3") == FieldElement::rational(-7, 3));
    CHECK(FieldElement::parse(q, "5") == fe(q, 5));
    CHECK(FieldElement::parse(FieldSpec::prime_field(5), "13") == fe(FieldSpec::prime_field(5), 3));
}

TEST_CASE("sampled field axioms") {
    Rng rng(7);
    for (std::int64_t p : {2, 3, 5}) {
        FieldSpec spec = FieldSpec::prime_field(p);
        for (int i = 0; i < 300; ++i) {
            FieldElement a = fe(spec, static_cast<std::int64_t>(rng.below(100)));
            FieldElement b = fe(spec, static_cast<std::int64_t>(rng.below(100)));
            FieldElement c = fe(spec, static_cast<std::int64_t>(rng.below(100)));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!b.is_zero()) CHECK(a / b * b == a);
        }
    }
}
