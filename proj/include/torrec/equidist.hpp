#pragma once

#include <utility>
#include <vector>

#include "torrec/surd.hpp"

namespace torrec {

struct CountingReport {
    double a = 0, b = 1;
    long horizon = 0;
    long count = 0;
    double ratio = 0;
};

/// {n*alpha} for n = 1..N, accumulated exactly in the surd field and
/// converted to double once per term.
std::vector<double> fractional_parts(const QuadraticSurd& alpha, long n_terms);

/// #{1 <= n <= N : {n*alpha} in [a, b)}.
CountingReport counting_function(const QuadraticSurd& alpha, double a, double b, long n_terms);

/// Star discrepancy D*_N of ({n*alpha})_{n<=N}, exact given the sorted points.
double star_discrepancy(const QuadraticSurd& alpha, long n_terms);

struct DiophantineProfile {
    std::vector<mpz_class> quotients;               // partial quotients a_0, a_1, ...
    long preperiod = -1;                            // start of detected period, -1 if none
    long period = 0;                                // 0 when not detected within depth
    std::vector<std::pair<mpz_class, mpz_class>> convergents;  // (p_k, q_k)
    double c_star = 0;       // min over convergent q of q*||q*alpha||
    double liminf_proxy = 0; // same min restricted to the largest scanned q
};

/// Exact continued fraction of a quadratic irrational; throws RationalInput.
DiophantineProfile continued_fraction(const QuadraticSurd& alpha, int depth);

/// min over 1 <= q <= q_bound of q*||q*alpha||, via convergent denominators
/// (sufficient: intermediate q only do worse). Feasible for q_bound ~ 10^12.
double badly_approximable_constant(const QuadraticSurd& alpha, const mpz_class& q_bound);

/// Proxy for liminf q*||q*alpha||: the same minimum restricted to the last
/// few convergents below q_bound, so early small-q minima are ignored.
double liminf_constant_proxy(const QuadraticSurd& alpha, const mpz_class& q_bound);

}  // namespace torrec
