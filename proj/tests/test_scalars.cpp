#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/errors.hpp"
#include "util.hpp"

using namespace hopfkit;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::parse("-4/3").str() == "-4/3");
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::binomial(5, 2) == Rational(10));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("laurent addition cancels exactly") {
    const int Z = 4;
    // (z^-1 - 2) + 2 = z^-1
    Laurent a = Laurent::term(Rational(1), -1, Z) + Laurent::constant(Rational(-2), Z);
    Laurent b = Laurent::constant(Rational(2), Z);
    CHECK((a + b).str() == "z^-1");
    // 0 + s = s
    Laurent s = Laurent::term(Rational(3, 2), 2, Z);
    CHECK(Laurent::zero(Z) + s == s);
    // (1 + z) + (1 - z) = 2
    Laurent one_plus = Laurent::one(Z) + Laurent::term(Rational(1), 1, Z);
    Laurent one_minus = Laurent::one(Z) + Laurent::term(Rational(-1), 1, Z);
    CHECK((one_plus + one_minus).str() == "2");
}

TEST_CASE("laurent multiplication truncates above the window") {
    // z^-1 * (2z - 2z^2) = 2 - 2z
    Laurent a = Laurent::term(Rational(1), -1, 4);
    Laurent b = Laurent::term(Rational(2), 1, 4) + Laurent::term(Rational(-2), 2, 4);
    CHECK((a * b).str() == "2 - 2*z");
    // 1 * s = s
    CHECK((Laurent::one(4) * b) == b);
    // (1+z)^2 at Z=1 drops z^2
    Laurent c = Laurent::one(1) + Laurent::term(Rational(1), 1, 1);
    CHECK((c * c).str() == "1 + 2*z");
    // mismatched windows are an error
    CHECK_THROWS_AS(Laurent::one(2) + Laurent::one(3), Error);
    CHECK_THROWS_AS(Laurent::one(2) * Laurent::one(3), Error);
    // a pole below the window is an error, not a truncation
    CHECK_THROWS_AS(Laurent::term(Rational(1), -2, 4) * Laurent::term(Rational(1), -3, 4), Error);
}

TEST_CASE("laurent inverse against the geometric-series oracle") {
    const int Z = 2;
    // oracle: (1 - 2z)^-1 = sum (2z)^k
    Laurent expected = Laurent::zero(Z);
    for (int k = 0; k <= Z; ++k) expected += Laurent::term(Rational(2).pow(k), k, Z);
    Laurent a = Laurent::one(Z) + Laurent::term(Rational(-2), 1, Z);
    CHECK(a.inverse() == expected);
    CHECK(a.inverse().str() == "1 + 2*z + 4*z^2");
    CHECK((a * a.inverse()).str() == "1");

    CHECK(Laurent::term(Rational(1), 1, 4).inverse().str() == "z^-1");
    CHECK(Laurent::constant(Rational(3), 4).inverse().str() == "1/3");
    CHECK_THROWS_AS(Laurent::zero(4).inverse(), Error);
}

TEST_CASE("substitute evaluates the term list") {
    const int Z = 4;
    Laurent a = Laurent::constant(Rational(2), Z) + Laurent::term(Rational(-2), 1, Z);
    CHECK(a.substitute(Rational(0)) == Rational(2));
    CHECK_THROWS_AS(Laurent::term(Rational(1), -1, Z).substitute(Rational(0)), Error);
    // 1 + 2z + 4z^2 at z = 1/2 -> 3 (direct evaluation oracle)
    Laurent b = Laurent::one(Z) + Laurent::term(Rational(2), 1, Z) + Laurent::term(Rational(4), 2, Z);
    CHECK(b.substitute(Rational(1, 2)) == Rational(3));
    // negative exponents evaluate away from 0
    CHECK(Laurent::term(Rational(1), -2, Z).substitute(Rational(1, 2)) == Rational(4));
}

TEST_CASE("ring axioms on sampled scalars") {
    testutil::Rng rng(testutil::default_seed());
    const int Z = 12;
    for (int i = 0; i < 100; ++i) {
        // windows chosen so that triple products stay inside [-Z, Z]
        Laurent a = rng.laurent(Z, -2, 2);
        Laurent b = rng.laurent(Z, -2, 2);
        Laurent c = rng.laurent(Z, -2, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("inverse and substitution are compatible with multiplication") {
    testutil::Rng rng(testutil::default_seed() + 1);
    const int Z = 6;
    for (int i = 0; i < 100; ++i) {
        Laurent a = rng.nonzero_laurent(Z, 0, 2);
        CHECK((a * a.inverse()).str() == "1");
    }
    for (int i = 0; i < 100; ++i) {
        // With a pole the product is 1 up to the window edge: the inverse
        // cannot store the z^{Z+|v|} tail the pole would need.
        Laurent a = rng.nonzero_laurent(Z, -1, 2);
        Laurent residual = a * a.inverse() - Laurent::one(Z);
        if (!residual.is_zero()) CHECK(residual.valuation() > Z + std::min(0, a.valuation()));
    }
    const Rational at(1, 3);
    for (int i = 0; i < 100; ++i) {
        // pole-free, degree bounded so no product term leaves the window
        Laurent a = rng.laurent(Z, 0, 3);
        Laurent b = rng.laurent(Z, 0, 3);
        CHECK((a * b).substitute(at) == a.substitute(at) * b.substitute(at));
        CHECK((a + b).substitute(at) == a.substitute(at) + b.substitute(at));
    }
}

TEST_CASE("canonical rendering") {
    const int Z = 4;
    CHECK(Laurent::zero(Z).str() == "0");
    CHECK(Laurent::term(Rational(-4, 3), 2, Z).str() == "-4/3*z^2");
    CHECK((Laurent::term(Rational(1), -1, Z) + Laurent::constant(Rational(2), Z)).str() ==
          "z^-1 + 2");
    CHECK(Laurent::term(Rational(1), 1, Z).str("w") == "w");
    CHECK(Laurent::term(Rational(-1), 1, Z).str() == "-z");
    CHECK((Laurent::one(Z) + Laurent::term(Rational(-1), 1, Z)).str() == "1 - z");
}
