#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torrec/dimension.hpp"
#include "torrec/errors.hpp"
#include "torrec/estimators.hpp"
#include "torrec/rng.hpp"
#include "torrec/spectral.hpp"

using namespace torrec;

namespace {
const IntMatrix kCat{{2, 1}, {1, 1}};
const double kL = 0.9624236501192069;
}

TEST_CASE("dim_2d closed form") {
    DimensionValue tie = dim_2d(kL, kL);
    CHECK(tie.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tie.branch == "tie (Case-3 crossover)");
    DimensionValue steep = dim_2d(kL, 2 * kL);
    CHECK(steep.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(steep.branch == "log|lambda2|/tau");
    DimensionValue shallow = dim_2d(kL, kL / 2);
    CHECK(shallow.value == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(shallow.branch == "2log|lambda2|/(tau+log|lambda2|)");
    CHECK(dim_2d(kL, kL).candidates.size() == 2);
}

TEST_CASE("dim_2d monotone in tau with the right limits") {
    double prev = 2.1;
    for (double tau = 0.01; tau < 10; tau += 0.07) {
        double v = dim_2d(kL, tau).value;
        CHECK(v < prev);
        CHECK(v > 0);
        CHECK(v <= 2);
        prev = v;
    }
    CHECK(dim_2d(kL, 1e-9).value > 1.999);
    CHECK(dim_2d(kL, 1e9).value < 1e-8);
}

TEST_CASE("branch switch at tau = L") {
    CHECK(dim_2d(kL, 0.99 * kL).branch == "2log|lambda2|/(tau+log|lambda2|)");
    CHECK(dim_2d(kL, 1.01 * kL).branch == "log|lambda2|/tau");
}

TEST_CASE("generic bound reproduces dim_2d at d = 2") {
    CounterRng rng(99);
    std::uint64_t c = 0;
    for (int i = 0; i < 1000; ++i) {
        double l = 0.05 + 3 * rng.uniform(c++);
        double tau = 0.05 + 4 * rng.uniform(c++);
        DimensionValue a = dim_2d(l, tau);
        DimensionValue b = generic_upper_bound({0.0, l}, tau);
        CHECK(a.value == b.value);  // identical double arithmetic
    }
}

TEST_CASE("generic bound properties") {
    // All logs equal to L at tau = L: every candidate is d/2.
    DimensionValue v = generic_upper_bound({kL, kL, kL}, kL);
    CHECK(v.value == doctest::Approx(1.5).epsilon(1e-14));
    // 3D block family values at the documented point.
    DimensionValue w = generic_upper_bound({0.0, kL, std::log(3.0)}, 1.0);
    CHECK(w.value == doctest::Approx(1.5407).epsilon(1e-3));
    // The clamp matters: raw logs at d = 2 break the Theorem 1.1 match.
    DimensionValue raw = generic_upper_bound({-0.5, kL}, 1.0, true);
    CHECK(raw.value != dim_2d(kL, 1.0).value);
    CHECK_THROWS_AS(generic_upper_bound({kL, 0.0}, 1.0), DomainError);
    CHECK_THROWS_AS(generic_upper_bound({-2.0, kL}, 1.0, true), DomainError);
}

TEST_CASE("dim_3d_example candidate lists") {
    DimensionValue v = dim_3d_example(3, kL, 1.0);
    CHECK(v.value == doctest::Approx(1.5407).epsilon(1e-3));
    CHECK(v.candidates.size() == 5);  // m = 3 > lambda = 2.618
    CHECK(v.branch == "(2logL+logm)/(tau+logL)");
    double expected[] = {1.9809, 1.5705, 1.5407, 2.0611, 1.9624};
    for (int i = 0; i < 5; ++i)
        CHECK(v.candidates[i].value == doctest::Approx(expected[i]).epsilon(1e-3));
    // m = 2 < lambda: the 4-candidate list, and (tau+logL)/tau = 2 at tau = logL.
    DimensionValue w = dim_3d_example(2, kL, kL);
    CHECK(w.candidates.size() == 4);
    CHECK(w.candidates[3].value == doctest::Approx(2.0).epsilon(1e-14));
    // Hypothesis m > sqrt(lambda).
    CHECK_THROWS_AS(dim_3d_example(2, 2 * std::log(2.1), 1.0), HypothesisError);
}

TEST_CASE("dim_3d_example never exceeds the generic bound") {
    for (long m : {2L, 3L, 5L}) {
        double lm = std::log(static_cast<double>(m));
        for (int i = 1; i <= 20; ++i) {
            double tau = 0.1 + (4.0 - 0.1) * i / 20.0;
            double v3 = dim_3d_example(m, kL, tau).value;
            std::vector<double> ells = {0.0, kL, lm};
            if (lm < kL) std::swap(ells[1], ells[2]);
            double vg = generic_upper_bound(ells, tau).value;
            CHECK(v3 <= vg + 1e-12);
        }
    }
}

TEST_CASE("2D covering counts") {
    CoverRow major = covering_counts(kCat, 1.0, 2, "major-axis");
    CHECK(major.count == doctest::Approx(5.0).epsilon(1e-12));
    SpectralData s = eigen_data(kCat);
    double l1 = s.lambda1.to_double();
    CHECK(major.radius ==
          doctest::Approx(std::exp(-2.0) / std::abs(1 - l1 * l1)).epsilon(1e-12));
    // Minor-axis count per component approaches lambda2^n.
    CoverRow minor20 = covering_counts(kCat, 1.0, 20, "minor-axis");
    CoverRow major20 = covering_counts(kCat, 1.0, 20, "major-axis");
    double per_component = std::exp(minor20.log_count - major20.log_count);
    CHECK(per_component ==
          doctest::Approx(std::exp(20 * kL)).epsilon(1e-3));
    CHECK_THROWS_AS(covering_counts(kCat, 1.0, 2, "k1"), DomainError);
}

TEST_CASE("covering exponents track the Theorem 1.1 branches") {
    for (double tau : {0.5 * kL, 2.0 * kL}) {
        std::vector<double> x_major, y_major, x_minor, y_minor;
        for (unsigned long n = 10; n <= 30; ++n) {
            CoverRow ma = covering_counts(kCat, tau, n, "major-axis");
            CoverRow mi = covering_counts(kCat, tau, n, "minor-axis");
            x_major.push_back(-ma.log_radius);
            y_major.push_back(ma.log_count);
            x_minor.push_back(-mi.log_radius);
            y_minor.push_back(mi.log_count);
        }
        double slope_major = ols_slope(x_major, y_major).first;
        double slope_minor = ols_slope(x_minor, y_minor).first;
        CHECK(std::abs(slope_major - kL / tau) < 0.05);
        CHECK(std::abs(slope_minor - 2 * kL / (tau + kL)) < 0.05);
    }
}

TEST_CASE("3D covering regimes") {
    IntMatrix a{{3, 0, 0}, {0, 2, 1}, {0, 1, 1}};
    // m = 3 > lambda^(1/2); lambda = 2.618 < m, tau on both sides of the
    // k=2 sub-case boundary log m - log lambda = 0.0986.
    CoverRow k2_low = covering_counts(a, 0.05, 12, "k2");
    CoverRow k2_high = covering_counts(a, 1.0, 12, "k2");
    CHECK(k2_low.log_count > 0);
    CHECK(k2_high.log_count > 0);
    CHECK_THROWS_AS(covering_counts(a, std::log(3.0) - kL, 12, "k2"), RegimeError);
    CHECK_THROWS_AS(covering_counts(a, std::log(3.0), 12, "k1"), RegimeError);
    CoverRow k3 = covering_counts(a, 1.0, 12, "k3");
    // lambda < m: k=3 count is (m^n - 1)^3.
    CHECK(k3.log_count == doctest::Approx(3 * std::log(std::pow(3.0, 12) - 1))
                              .epsilon(1e-12));
}

TEST_CASE("partial sums classify around s0") {
    for (auto a : {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{3, 1}, {1, 1}},
                   IntMatrix{{2, 1}, {1, 0}}, IntMatrix{{4, 1}, {1, 1}}}) {
        SpectralData s = eigen_data(a);
        for (double tau : {0.6 * s.log_abs_lambda2, 1.7 * s.log_abs_lambda2}) {
            double s0 = dim_2d(s.log_abs_lambda2, tau).value;
            PartialSumReport above = hausdorff_partial_sum(a, tau, s0 + 0.1, 5, 40);
            PartialSumReport below =
                hausdorff_partial_sum(a, tau, std::max(0.05, s0 - 0.1), 5, 40);
            CHECK(above.classification == TailClass::ShrinkingTail);
            CHECK(below.classification == TailClass::GrowingTerms);
        }
    }
}

TEST_CASE("partial sum terms and errors") {
    PartialSumReport rep = hausdorff_partial_sum(kCat, kL, 1.1, 3, 20);
    CHECK(rep.log_terms.size() == 18);
    CHECK(rep.sum > 0);
    CHECK_THROWS_AS(hausdorff_partial_sum(kCat, kL, 0.0, 3, 10), DomainError);
    CHECK_THROWS_AS(hausdorff_partial_sum(kCat, kL, 2.5, 3, 10), DomainError);
    CHECK_THROWS_AS(hausdorff_partial_sum(kCat, kL, 1.0, 10, 3), DomainError);
}
