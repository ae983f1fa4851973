#pragma once

#include <array>
#include <vector>

#include "torrec/int_matrix.hpp"
#include "torrec/periodic.hpp"
#include "torrec/spectral.hpp"
#include "torrec/torus.hpp"

namespace torrec {

/// Smallest n with e^{-tau n} < 1/2 (strict), where the components of R_n
/// are pairwise disjoint.
long min_disjoint_n(double tau);

struct ContainsResult {
    bool inside = false;
    bool uncertain = false;  // within the guard band of the boundary
};

/// Membership in R_n from the defining inequality dist(A^n x, x) < e^{-n tau},
/// with A^n - I carried exactly and applied in extended precision.
class MembershipOracle {
public:
    MembershipOracle(const IntMatrix& a, double tau, unsigned long n,
                     double guard = 1e-12);

    ContainsResult operator()(const std::array<double, 3>& x) const;

    /// ||(A^n - I) v|| for a displacement v, no torus reduction. Used to
    /// compare against the defining radius for local geometry checks.
    double displacement_norm(const std::array<double, 3>& v) const;

    double radius() const { return radius_; }
    int dim() const { return dim_; }

private:
    int dim_;
    double radius_;
    double guard_;
    std::array<std::array<long double, 3>, 3> m_{};
};

ContainsResult contains(const IntMatrix& a, double tau, unsigned long n,
                        const std::array<double, 3>& x, double guard = 1e-12);

/// One component of R_n: the ellipse around a periodic point together with
/// its inscribed parallelogram E and circumscribed parallelogram E-tilde.
struct RecurrenceComponent {
    RationalPoint center;
    double semi_axis_major = 0;  // lambda_{n,1} = e^{-tau n} / |1 - lambda1^n|
    double semi_axis_minor = 0;  // lambda_{n,2} = e^{-tau n} / |lambda2^n - 1|
    std::array<double, 2> axis_unstable{};  // (1, gamma) normalized
    std::array<double, 2> axis_stable{};    // (1, beta) normalized
    std::array<std::array<double, 2>, 4> inscribed{};
    std::array<std::array<double, 2>, 4> circumscribed{};
};

RecurrenceComponent component_geometry(const IntMatrix& a, double tau,
                                       unsigned long n, const RationalPoint& center);

enum class Regime { Case1, Case2, Case3 };

struct SeparationProfile {
    std::array<double, 2> direction_unstable{};
    std::array<double, 2> direction_stable{};
    double gap_unstable = 0;
    double gap_stable = 0;
    Regime regime = Regime::Case1;
};

/// Component separation data. Regime from comparing tau with (1/2)log|lambda2|;
/// gap constants derive from the Diophantine constant c2 of the slope gamma.
SeparationProfile separation_profile(const IntMatrix& a, double tau, unsigned long n);

/// c2 = cStar(gamma, q_bound) / (4*sqrt(1+gamma^2)), the conservative
/// Liouville-type separation constant of the slope gamma.
double separation_constant_c2(const SpectralData& s, long q_bound = 1'000'000);

}  // namespace torrec
