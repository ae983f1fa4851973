#include "torrec/geometry.hpp"

#include <cmath>

#include "torrec/equidist.hpp"
#include "torrec/errors.hpp"

namespace torrec {

namespace {

long double mpz_to_ld(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long double>(z.get_si());
    // Two-round extraction keeps ~106 bits for entries beyond word size.
    double hi = z.get_d();
    mpz_class rest = z - mpz_class(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::array<double, 2> unit_vector(double slope) {
    double norm = std::sqrt(1.0 + slope * slope);
    return {1.0 / norm, slope / norm};
}

}  // namespace

long min_disjoint_n(double tau) {
    if (!(tau > 0)) throw DomainError("min_disjoint_n requires tau > 0");
    long n = static_cast<long>(std::floor(std::log(2.0) / tau));
    if (n < 1) n = 1;
    while (!(std::exp(-tau * static_cast<double>(n)) < 0.5)) ++n;
    return n;
}

MembershipOracle::MembershipOracle(const IntMatrix& a, double tau,
                                   unsigned long n, double guard)
    : dim_(a.dim()), guard_(guard) {
    if (!(tau > 0)) throw DomainError("membership requires tau > 0");
    if (n == 0) throw DomainError("membership requires n >= 1");
    Validation v = validate_hyperbolic(a);
    if (!v.accepted) throw HypothesisError(v.reason);
    radius_ = std::exp(-tau * static_cast<double>(n));
    IntMatrix m = matrix_power(a, n) - IntMatrix::identity(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m_[i][j] = mpz_to_ld(m.at(i, j));
}

ContainsResult MembershipOracle::operator()(const std::array<double, 3>& x) const {
    long double s = 0;
    for (int i = 0; i < dim_; ++i) {
        long double y = 0;
        for (int j = 0; j < dim_; ++j)
            y += m_[i][j] * static_cast<long double>(x[j]);
        long double r = y - std::floor(y);
        if (r >= 0.5L) r -= 1.0L;
        s += r * r;
    }
    long double norm = std::sqrt(s);
    ContainsResult res;
    res.inside = norm < static_cast<long double>(radius_);
    res.uncertain =
        std::abs(norm - static_cast<long double>(radius_)) <= guard_;
    return res;
}

double MembershipOracle::displacement_norm(const std::array<double, 3>& v) const {
    long double s = 0;
    for (int i = 0; i < dim_; ++i) {
        long double y = 0;
        for (int j = 0; j < dim_; ++j)
            y += m_[i][j] * static_cast<long double>(v[j]);
        s += y * y;
    }
    return static_cast<double>(std::sqrt(s));
}

ContainsResult contains(const IntMatrix& a, double tau, unsigned long n,
                        const std::array<double, 3>& x, double guard) {
    return MembershipOracle(a, tau, n, guard)(x);
}

RecurrenceComponent component_geometry(const IntMatrix& a, double tau,
                                       unsigned long n, const RationalPoint& center) {
    Validation v = validate_hyperbolic(a);
    if (!v.accepted || !v.spectral)
        throw HypothesisError("component geometry requires an accepted 2x2 matrix: " +
                              v.reason);
    const SpectralData& s = *v.spectral;
    if ((s.lambda1.sign() < 0 || s.lambda2.sign() < 0) && n % 2 == 1)
        throw OddPowerWithNegativeEigenvalue(
            "geometry at odd n = " + std::to_string(n) +
            " with a negative eigenvalue; use even n");
    if (static_cast<long>(n) < min_disjoint_n(tau))
        throw DomainError("n below the disjointness threshold");

    QuadraticSurd one = QuadraticSurd::integer(1);
    QuadraticSurd d1 = (one - s.lambda1.pow(n)).abs();
    QuadraticSurd d2 = (s.lambda2.pow(n) - one).abs();

    RecurrenceComponent comp;
    comp.center = center;
    comp.semi_axis_major =
        std::exp(-tau * static_cast<double>(n) - d1.log_abs());
    comp.semi_axis_minor =
        std::exp(-tau * static_cast<double>(n) - d2.log_abs());
    comp.axis_unstable = unit_vector(s.gamma.to_double());
    comp.axis_stable = unit_vector(s.beta.to_double());

    // The major semi-axis lies along the stable eigendirection: A^n - I
    // scales that direction by |lambda1^n - 1|, the smaller factor.
    const double cx = center.coord(0), cy = center.coord(1);
    auto vertices = [&](double f, std::array<std::array<double, 2>, 4>& out) {
        double ux = f * comp.semi_axis_major * comp.axis_stable[0];
        double uy = f * comp.semi_axis_major * comp.axis_stable[1];
        double wx = f * comp.semi_axis_minor * comp.axis_unstable[0];
        double wy = f * comp.semi_axis_minor * comp.axis_unstable[1];
        out[0] = {cx + ux + wx, cy + uy + wy};
        out[1] = {cx + ux - wx, cy + uy - wy};
        out[2] = {cx - ux - wx, cy - uy - wy};
        out[3] = {cx - ux + wx, cy - uy + wy};
    };
    vertices(0.5, comp.inscribed);
    vertices(s.c1, comp.circumscribed);
    return comp;
}

SeparationProfile separation_profile(const IntMatrix& a, double tau,
                                     unsigned long n) {
    if (!(tau > 0)) throw DomainError("separation_profile requires tau > 0");
    SpectralData s = eigen_data(a);
    const double half_log = 0.5 * s.log_abs_lambda2;

    SeparationProfile prof;
    prof.direction_unstable = unit_vector(s.gamma.to_double());
    prof.direction_stable = unit_vector(s.beta.to_double());
    if (std::abs(tau - half_log) <= 1e-14 * s.log_abs_lambda2)
        prof.regime = Regime::Case3;
    else
        prof.regime = (tau > half_log) ? Regime::Case1 : Regime::Case2;

    auto [l1n, l2n] = growth_exponents(a, n);
    double c2 = separation_constant_c2(s);
    double nd = static_cast<double>(n);
    if (prof.regime == Regime::Case2) {
        // Stable gap levels off at a constant; unstable gap decays like
        // e^{n(tau - l_{2,n})}.
        prof.gap_stable = c2;
        prof.gap_unstable = c2 * std::exp(nd * (tau - l2n));
    } else {
        double sep = c2 * std::exp(-0.5 * nd * l2n);  // |lambda2^n - 1|^{-1/2}
        prof.gap_stable = sep;
        prof.gap_unstable = sep;
    }
    return prof;
}

double separation_constant_c2(const SpectralData& s, long q_bound) {
    double g = s.gamma.to_double();
    double c_star = badly_approximable_constant(s.gamma, mpz_class(q_bound));
    return c_star / (4.0 * std::sqrt(1.0 + g * g));
}

}  // namespace torrec
