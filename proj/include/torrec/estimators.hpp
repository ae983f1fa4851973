#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "torrec/int_matrix.hpp"

namespace torrec {

struct BoxCountReport {
    int dim = 2;
    unsigned long n_min = 0, n_max = 0;
    int j_min = 0, j_max = 0;
    int fit_j_min = 0, fit_j_max = 0;
    std::vector<double> scales;  // box side lengths 2^-j
    std::vector<long> counts;    // occupied boxes per scale
    double fitted_slope = 0;
    double r_squared = 0;
    std::vector<std::string> warnings;
};

/// Dyadic box counting of the union of R_n over n in [n_min, n_max].
/// A box is occupied when a probe of its 3x3 (3x3x3 in 3D) center subgrid
/// satisfies the membership inequality for some n, or when it holds a
/// periodic center. Slope fitted by OLS over [fit_j_min, fit_j_max]
/// (default: trim the 2 coarsest and 1 finest scales).
/// Throws BudgetExceeded; under-resolution is flagged in warnings.
BoxCountReport box_count(const IntMatrix& a, double tau, unsigned long n_min,
                         unsigned long n_max, int j_min, int j_max,
                         int fit_j_min = -1, int fit_j_max = -1,
                         int threads = 0);

/// k i.i.d. uniform points of E_n (union of inscribed parallelograms),
/// deterministic in (seed, sample index).
std::vector<std::array<double, 3>> sample_E_n(const IntMatrix& a, double tau,
                                              unsigned long n, long k,
                                              std::uint64_t seed);

struct MuEstimate {
    double value = 0;
    double stderr_ = 0;
    long hits = 0;
    long samples = 0;
};

/// Monte-Carlo mu_n(B(center, r)) with binomial standard error; k >= 1000.
MuEstimate mu_n_ball(const IntMatrix& a, double tau, unsigned long n,
                     const std::array<double, 3>& center, double r, long k,
                     std::uint64_t seed);

struct MeasureScanReport {
    unsigned long n = 0;
    std::array<double, 3> center{};
    std::vector<double> radii;          // kept buckets only
    std::vector<MuEstimate> mu;         // parallel to radii
    std::vector<double> ratios_to_lebesgue;
    std::vector<double> dropped_radii;  // buckets with < 30 hits
    double fitted_local_exponent = 0;
    double predicted_exponent = 0;
    std::string regime;
};

/// Local-exponent scan: mu_n estimates over a radius grid around one
/// center, OLS fit of log mu against log r, and the per-case predicted
/// exponent. Buckets with fewer than 30 hits are dropped and flagged;
/// InsufficientSamples when fewer than two distinct radii survive.
MeasureScanReport measure_scan(const IntMatrix& a, double tau, unsigned long n,
                               const std::array<double, 3>& center,
                               const std::vector<double>& radii_grid, long k,
                               std::uint64_t seed);

/// OLS slope and r^2 of y against x; shared by the fitting paths.
std::pair<double, double> ols_slope(const std::vector<double>& x,
                                    const std::vector<double>& y);

}  // namespace torrec
