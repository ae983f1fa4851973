#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torrec/errors.hpp"
#include "torrec/geometry.hpp"
#include "torrec/periodic.hpp"
#include "torrec/rng.hpp"
#include "torrec/spectral.hpp"
#include "torrec/torus.hpp"

using namespace torrec;

namespace {
const IntMatrix kCat{{2, 1}, {1, 1}};
const double kL = 0.9624236501192069;  // log lambda2 of the cat map
}

TEST_CASE("disjointness threshold") {
    CHECK(min_disjoint_n(std::log(2.0)) == 2);
    CHECK(min_disjoint_n(1.0) == 1);
    CHECK(min_disjoint_n(0.1) == 7);
    CHECK_THROWS_AS(min_disjoint_n(0.0), DomainError);
}

TEST_CASE("torus distance convention") {
    CHECK(torus_distance(0.9, 0.0, 0.1, 0.0) == doctest::Approx(0.2));
    CHECK(torus_distance(0.3, 0.7, 0.3, 0.7) == 0.0);
    CHECK(torus_distance(0.75, 0.75, 0.25, 0.25) ==
          doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("membership at exact points") {
    // Fixed point: always inside.
    CHECK(contains(kCat, 1.0, 3, {0.0, 0.0, 0.0}).inside);
    // Period-2 point (1/5, 2/5): inside R_2 for any tau.
    CHECK(contains(kCat, 5.0, 2, {0.2, 0.4, 0.0}).inside);
    // (1/2, 1/2) at n = 1, tau = 1: displacement (0, 1/2), distance 1/2 >= 1/e.
    ContainsResult r = contains(kCat, 1.0, 1, {0.5, 0.5, 0.0});
    CHECK_FALSE(r.inside);
    CHECK_FALSE(r.uncertain);
}

TEST_CASE("component geometry semi-axes") {
    PeriodicPointSet set = enumerate_periodic(kCat, 3);
    RecurrenceComponent c = component_geometry(kCat, 1.0, 3, set.points.front());
    CHECK(c.semi_axis_minor == doctest::Approx(2.938e-3).epsilon(1e-3));
    // Exact-field cross-check within 2 ulp territory.
    SpectralData s = eigen_data(kCat);
    double exact_major =
        std::exp(-3.0) / std::abs(1.0 - std::pow(s.lambda1.to_double(), 3));
    CHECK(c.semi_axis_major == doctest::Approx(exact_major).epsilon(1e-12));
    CHECK(c.semi_axis_major > c.semi_axis_minor);
    // Cat map is symmetric: stable and unstable axes are orthogonal.
    double dot = c.axis_unstable[0] * c.axis_stable[0] +
                 c.axis_unstable[1] * c.axis_stable[1];
    CHECK(dot == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("parallelogram areas scale by 1/(4 c1^2)") {
    PeriodicPointSet set = enumerate_periodic(kCat, 4);
    RecurrenceComponent c = component_geometry(kCat, 1.0, 4, set.points.front());
    auto area = [](const std::array<std::array<double, 2>, 4>& v) {
        double s = 0;
        for (int i = 0; i < 4; ++i) {
            int j = (i + 1) % 4;
            s += v[i][0] * v[j][1] - v[j][0] * v[i][1];
        }
        return std::abs(s) / 2;
    };
    SpectralData s = eigen_data(kCat);
    double ratio = area(c.inscribed) / area(c.circumscribed);
    CHECK(ratio == doctest::Approx(1.0 / (4 * s.c1 * s.c1)).epsilon(1e-9));
}

TEST_CASE("sandwich E subset ellipse subset E-tilde") {
    SpectralData s = eigen_data(kCat);
    CounterRng rng(11);
    std::uint64_t ctr = 0;
    for (double tau : {kL / 2, kL, 2 * kL}) {
        unsigned long n = 6;
        PeriodicPointSet set = enumerate_periodic(kCat, n);
        RecurrenceComponent c = component_geometry(kCat, tau, n, set.points.front());
        MembershipOracle oracle(kCat, tau, n);
        auto quad_value = [&](double dx, double dy) {
            // Coordinates along the eigen-axes, normalized by the semi-axes.
            double a = dx * c.axis_stable[0] + dy * c.axis_stable[1];
            double b = dx * c.axis_unstable[0] + dy * c.axis_unstable[1];
            double qa = a / c.semi_axis_major, qb = b / c.semi_axis_minor;
            return qa * qa + qb * qb;
        };
        for (int i = 0; i < 2000; ++i) {
            // Random point on the boundary of the inscribed parallelogram.
            double t = 2 * rng.uniform(ctr++) - 1;
            int edge = static_cast<int>(rng.uniform(ctr++) * 4);
            double u = (edge < 2) ? t : (edge == 2 ? 1.0 : -1.0);
            double v = (edge < 2) ? (edge == 0 ? 1.0 : -1.0) : t;
            double dx = 0.5 * (u * c.semi_axis_major * c.axis_stable[0] +
                               v * c.semi_axis_minor * c.axis_unstable[0]);
            double dy = 0.5 * (u * c.semi_axis_major * c.axis_stable[1] +
                               v * c.semi_axis_minor * c.axis_unstable[1]);
            CHECK(quad_value(dx, dy) <= 1.0 + 1e-12);
            // The same point, via the defining inequality.
            CHECK(oracle.displacement_norm({dx, dy, 0.0}) <
                  std::exp(-tau * n) * (1 + 1e-9));
            // Random point on the ellipse boundary lies inside E-tilde.
            double ang = 2 * M_PI * rng.uniform(ctr++);
            double ex = std::cos(ang) * c.semi_axis_major * c.axis_stable[0] +
                        std::sin(ang) * c.semi_axis_minor * c.axis_unstable[0];
            double ey = std::cos(ang) * c.semi_axis_major * c.axis_stable[1] +
                        std::sin(ang) * c.semi_axis_minor * c.axis_unstable[1];
            double a = ex * c.axis_stable[0] + ey * c.axis_stable[1];
            double b = ex * c.axis_unstable[0] + ey * c.axis_unstable[1];
            CHECK(std::abs(a) <= s.c1 * c.semi_axis_major * (1 + 1e-9));
            CHECK(std::abs(b) <= s.c1 * c.semi_axis_minor * (1 + 1e-9));
        }
    }
}

TEST_CASE("membership/geometry consistency") {
    const double tau = kL;
    const unsigned long n = 5;
    PeriodicPointSet set = enumerate_periodic(kCat, n);
    RecurrenceComponent c = component_geometry(kCat, tau, n, set.points[2]);
    MembershipOracle oracle(kCat, tau, n);
    const double cx = set.points[2].coord(0), cy = set.points[2].coord(1);
    CounterRng rng(5);
    std::uint64_t ctr = 0;
    for (int i = 0; i < 2000; ++i) {
        double u = 2 * rng.uniform(ctr++) - 1;
        double v = 2 * rng.uniform(ctr++) - 1;
        // Inside the inscribed parallelogram: contains must agree.
        double dx = 0.5 * (u * c.semi_axis_major * c.axis_stable[0] +
                           v * c.semi_axis_minor * c.axis_unstable[0]);
        double dy = 0.5 * (u * c.semi_axis_major * c.axis_stable[1] +
                           v * c.semi_axis_minor * c.axis_unstable[1]);
        CHECK(oracle({cx + dx, cy + dy, 0.0}).inside);
        // Outside E-tilde but within 3 diameters: contains must refuse.
        auto pm = [](double x) { return x >= 0 ? 1.0 : -1.0; };
        double fa = (2.5 + rng.uniform(ctr++) * 3.0) * pm(u);
        double fb = (2.5 + rng.uniform(ctr++) * 3.0) * pm(v);
        double ox = fa * c.semi_axis_major * c.axis_stable[0] +
                    fb * c.semi_axis_minor * c.axis_unstable[0];
        double oy = fa * c.semi_axis_major * c.axis_stable[1] +
                    fb * c.semi_axis_minor * c.axis_unstable[1];
        CHECK_FALSE(oracle({cx + ox, cy + oy, 0.0}).inside);
    }
}

TEST_CASE("disjointness of circumscribed parallelograms") {
    const double tau = kL;
    const unsigned long n = 4;
    PeriodicPointSet set = enumerate_periodic(kCat, n);
    RecurrenceComponent ref = component_geometry(kCat, tau, n, set.points.front());
    // Centers further apart than twice the circumradius of E-tilde cannot
    // have overlapping parallelograms.
    SpectralData s = eigen_data(kCat);
    double circumradius =
        std::hypot(s.c1 * ref.semi_axis_major, s.c1 * ref.semi_axis_minor);
    for (std::size_t i = 0; i < set.points.size(); ++i)
        for (std::size_t j = i + 1; j < set.points.size(); ++j) {
            double d = torus_distance(set.points[i].coord(0), set.points[i].coord(1),
                                      set.points[j].coord(0), set.points[j].coord(1));
            CHECK(d > 2 * circumradius);
        }
}

TEST_CASE("odd powers with a negative eigenvalue are refused for geometry") {
    IntMatrix a{{2, 1}, {1, 0}};  // lambda1 = 1 - sqrt2 < 0
    PeriodicPointSet set = enumerate_periodic(a, 2);
    CHECK_THROWS_AS(component_geometry(a, 1.0, 3, set.points.front()),
                    OddPowerWithNegativeEigenvalue);
    CHECK_NOTHROW(component_geometry(a, 1.0, 4, set.points.front()));
    // Membership stays available at all n.
    CHECK(contains(a, 1.0, 3, {0.0, 0.0, 0.0}).inside);
}

TEST_CASE("separation regimes") {
    CHECK(separation_profile(kCat, kL, 6).regime == Regime::Case1);
    CHECK(separation_profile(kCat, 0.3, 6).regime == Regime::Case2);
    CHECK(separation_profile(kCat, 0.5 * kL, 6).regime == Regime::Case3);
    SeparationProfile p1 = separation_profile(kCat, kL, 6);
    CHECK(p1.gap_stable > 0);
    CHECK(p1.gap_unstable > 0);
    SeparationProfile p2 = separation_profile(kCat, 0.3, 8);
    CHECK(p2.gap_stable > 0);
    CHECK(p2.gap_unstable > 0);
}

TEST_CASE("separation constant c2 is positive and small") {
    SpectralData s = eigen_data(kCat);
    double c2 = separation_constant_c2(s);
    // cStar = min q||q gamma|| = ||gamma|| at q = 1 for the golden ratio.
    double g = s.gamma.to_double();
    CHECK(c2 == doctest::Approx((1 - g) / (4 * std::sqrt(1 + g * g))).epsilon(1e-9));
    CHECK(c2 > 0);
    CHECK(c2 < 0.5);
}
