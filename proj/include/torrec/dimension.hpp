#pragma once

#include <string>
#include <vector>

#include "torrec/int_matrix.hpp"

namespace torrec {

struct Candidate {
    std::string label;
    double value = 0;
};

struct DimensionValue {
    double value = 0;
    std::string branch;  // label of the attaining candidate
    std::vector<Candidate> candidates;
};

/// Closed form in 2D: min{2L/(tau+L), L/tau} with L = log|lambda2|.
/// Ties are reported as a crossover branch.
DimensionValue dim_2d(double log_lambda2, double tau);

/// Generic d-dimensional upper bound min_i (i*l_i + sum_{j>i} l_j)/(tau+l_i)
/// over nondecreasing eigenvalue logs. By default each l_i is clamped to
/// max(0, l_i), which reproduces dim_2d exactly at d = 2; raw_logs = true
/// keeps the inputs as given, for comparison.
DimensionValue generic_upper_bound(const std::vector<double>& ells, double tau,
                                   bool raw_logs = false);

/// The block-diagonal 3D family diag(m, unimodular block with eigenvalue
/// lambda > 1): min over the 5-candidate (m > lambda) or 4-candidate
/// (m <= lambda) list. Requires m > lambda^(1/2).
DimensionValue dim_3d_example(long m, double log_lambda, double tau);

/// One row of a covering table: counts and radii carried in log space so
/// large n stays finite; count and radius are the exp() shadows.
struct CoverRow {
    std::string strategy;
    unsigned long n = 0;
    double radius = 0;
    double log_radius = 0;
    double count = 0;
    double log_count = 0;

    double log_term(double s) const { return log_count + s * log_radius; }
};

/// 2D strategies "major-axis" / "minor-axis"; 3D strategies "k1" / "k2" /
/// "k3" with the regime splits of the block family. Throws RegimeError when
/// a 3D sub-case condition sits on its boundary.
CoverRow covering_counts(const IntMatrix& a, double tau, unsigned long n,
                         const std::string& strategy);

enum class TailClass { ShrinkingTail, GrowingTerms, Indeterminate };

struct PartialSumReport {
    double s = 0;
    unsigned long n_min = 0, n_max = 0;
    std::vector<double> log_terms;  // per n, better of the two 2D strategies
    double sum = 0;                 // sum of terms, may overflow to inf
    TailClass classification = TailClass::Indeterminate;
};

/// Partial Hausdorff sums sum_n count(n)*radius(n)^s for a 2x2 matrix.
/// Classification uses the last 10 term ratios with a 1e-3 dead zone.
PartialSumReport hausdorff_partial_sum(const IntMatrix& a, double tau, double s,
                                       unsigned long n_min, unsigned long n_max);

}  // namespace torrec
