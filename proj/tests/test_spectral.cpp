#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torrec/errors.hpp"
#include "torrec/int_matrix.hpp"
#include "torrec/spectral.hpp"
#include "torrec/surd.hpp"

using namespace torrec;

namespace {
const IntMatrix kCat{{2, 1}, {1, 1}};
}

TEST_CASE("surd arithmetic is exact") {
    QuadraticSurd phi(mpq_class(1, 2), mpq_class(1, 2), 5);  // (1+sqrt5)/2
    CHECK(phi * phi == phi + QuadraticSurd::integer(1));     // phi^2 = phi+1
    CHECK(phi.pow(10) == phi.pow(9) + phi.pow(8));
    CHECK(phi.inverse() == phi - QuadraticSurd::integer(1));
    CHECK(phi.sign() == 1);
    CHECK(phi.conjugate().sign() == -1);
    CHECK(phi.floor() == 1);
    CHECK(phi.ceil() == 2);
    CHECK(phi.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
}

TEST_CASE("surd collapses perfect-square radicands") {
    QuadraticSurd x(mpq_class(1), mpq_class(2), 9);  // 1 + 2*sqrt(9) = 7
    CHECK(x.is_rational());
    CHECK(x.rational_part() == 7);
}

TEST_CASE("surd log_abs survives huge magnitudes") {
    QuadraticSurd phi(mpq_class(1, 2), mpq_class(1, 2), 5);
    double l = phi.pow(5000).log_abs();
    CHECK(l == doctest::Approx(5000 * std::log(1.6180339887498949)).epsilon(1e-12));
}

TEST_CASE("cat map is accepted with the documented spectrum") {
    Validation v = validate_hyperbolic(kCat);
    REQUIRE(v.accepted);
    REQUIRE(v.spectral.has_value());
    const SpectralData& s = *v.spectral;
    CHECK(s.lambda2.to_double() ==
          doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-15));
    CHECK(s.lambda1.to_double() ==
          doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-15));
    // gamma = (sqrt5 - 1)/2, beta = -(1+sqrt5)/2
    CHECK(s.gamma.to_double() ==
          doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-15));
    CHECK(s.beta.to_double() ==
          doctest::Approx(-(1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
    // Symmetric matrix: orthogonal eigenvectors, c1 = 1 exactly.
    CHECK(s.c1_squared == QuadraticSurd::integer(1));
    CHECK(s.c1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.log_abs_lambda2 == doctest::Approx(0.9624236501192069).epsilon(1e-13));
    // Eigenvalue equation A(1,gamma) = lambda2(1,gamma), first row exactly.
    CHECK(QuadraticSurd::integer(2) + s.gamma == s.lambda2);
    CHECK(s.lambda1 * s.lambda2 == QuadraticSurd::integer(1));
}

TEST_CASE("rejections carry reasons") {
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{1, 0}, {0, 1}}).accepted);
    CHECK(validate_hyperbolic(IntMatrix{{1, 0}, {0, 1}}).reason ==
          "eigenvalue 1 on unit circle");
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{0, 1}, {-1, 0}}).accepted);  // rotation
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{1, 1}, {0, 1}}).accepted);   // shear
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{1, 1}, {-1, 0}}).accepted);  // det 1, |tr|<2
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{2, 0}, {0, 3}}).accepted);   // no contracting eigenvalue
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{0, 0}, {0, 0}}).accepted);
}

TEST_CASE("integer-spectrum endomorphisms") {
    // [[2,1],[1,0]]: det -1, eigenvalues 1 +- sqrt(2), hyperbolic.
    Validation v = validate_hyperbolic(IntMatrix{{2, 1}, {1, 0}});
    CHECK(v.accepted);
    CHECK(v.spectral->lambda1.sign() < 0);  // 1 - sqrt(2) < 0
    // [[3,1],[1,1]] and [[4,1],[1,1]] accepted too.
    CHECK(validate_hyperbolic(IntMatrix{{3, 1}, {1, 1}}).accepted);
    CHECK(validate_hyperbolic(IntMatrix{{4, 1}, {1, 1}}).accepted);
}

TEST_CASE("H_n matches tr(A^n) - 2 for the cat map") {
    const long expected[] = {1, 5, 16, 45, 121, 320, 841, 2205};
    for (unsigned long n = 1; n <= 8; ++n) {
        CHECK(count_H_n(kCat, n) == expected[n - 1]);
        CHECK(count_H_n(kCat, n) ==
              matrix_power(kCat, n).trace() - 2);
    }
    CHECK(count_H_n(kCat, 10) == 15125);
    CHECK(count_H_n(kCat, 12) == 103680);
}

TEST_CASE("growth exponents converge to the eigenvalue logs") {
    auto [l1, l2] = growth_exponents(kCat, 40);
    CHECK(l2 == doctest::Approx(0.9624236501192069).epsilon(1e-10));
    CHECK(l1 == doctest::Approx(0.0).epsilon(1e-10));  // log|lambda1^n - 1| -> 0
}

TEST_CASE("3x3 block family validation") {
    IntMatrix a{{3, 0, 0}, {0, 2, 1}, {0, 1, 1}};
    Validation v = validate_hyperbolic(a);
    REQUIRE(v.accepted);
    REQUIRE(v.spectral3.has_value());
    CHECK(v.spectral3->m == 3);
    CHECK(v.spectral3->block.lambda2.to_double() ==
          doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-15));
    // Non-block shape rejected.
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{3, 1, 0}, {0, 2, 1}, {0, 1, 1}}).accepted);
    // m = 1 on the unit... m must exceed 1.
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{1, 0, 0}, {0, 2, 1}, {0, 1, 1}}).accepted);
    // Block determinant must be 1.
    CHECK_FALSE(validate_hyperbolic(IntMatrix{{3, 0, 0}, {0, 2, 1}, {0, 1, 0}}).accepted);
}

TEST_CASE("eigen_data throws on rejected input") {
    CHECK_THROWS_AS(eigen_data(IntMatrix{{1, 0}, {0, 1}}), HypothesisError);
    CHECK_THROWS_AS(eigen_data(IntMatrix{{3, 0, 0}, {0, 2, 1}, {0, 1, 1}}),
                    HypothesisError);
}

TEST_CASE("matrix parsing accepts both literal forms") {
    CHECK(IntMatrix::parse("2,1;1,1") == kCat);
    CHECK(IntMatrix::parse_json("[[2,1],[1,1]]") == kCat);
    CHECK(IntMatrix::parse("3,0,0;0,2,1;0,1,1").dim() == 3);
    CHECK_THROWS_AS(IntMatrix::parse("2,1;1"), ParseError);
    CHECK_THROWS_AS(IntMatrix::parse("2,1"), ParseError);
    CHECK_THROWS_AS(IntMatrix::parse_json("[[2,1],[1]]"), ParseError);
}
