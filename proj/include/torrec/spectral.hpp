#pragma once

#include <optional>
#include <string>
#include <utility>

#include "torrec/int_matrix.hpp"
#include "torrec/surd.hpp"

namespace torrec {

/// Exact eigen-structure of an accepted hyperbolic 2x2 integer matrix.
/// lambda1 is the contracting eigenvalue (|lambda1| < 1 < |lambda2|);
/// (1, gamma) and (1, beta) are eigenvectors for lambda2 and lambda1.
struct SpectralData {
    QuadraticSurd lambda1;
    QuadraticSurd lambda2;
    QuadraticSurd gamma;
    QuadraticSurd beta;
    QuadraticSurd c1_squared;  // (1+beta^2)(1+gamma^2)/(beta-gamma)^2, exact
    double c1 = 0;
    double log_abs_lambda1 = 0;
    double log_abs_lambda2 = 0;
};

/// The 3x3 family: block-diagonal with an integer m > 1 and a unimodular
/// 2x2 block whose larger eigenvalue is lambda > 1.
struct Block3Data {
    mpz_class m;
    SpectralData block;  // spectral data of the 2x2 sub-block
};

struct Validation {
    bool accepted = false;
    std::string reason;  // set when rejected
    std::optional<SpectralData> spectral;
    std::optional<Block3Data> spectral3;
};

/// Checks the hyperbolicity hypotheses and returns exact spectral data on
/// acceptance. For 3x3 input only the block-diagonal family is accepted.
Validation validate_hyperbolic(const IntMatrix& a);

/// Spectral data of an accepted 2x2 matrix; throws HypothesisError otherwise.
SpectralData eigen_data(const IntMatrix& a);

/// |det(A^n - I)|, exact. Throws SingularError when det(A^n - I) = 0.
mpz_class count_H_n(const IntMatrix& a, unsigned long n);

/// (l_{1,n}, l_{2,n}) with l_{i,n} = (1/n) log|lambda_i^n - 1|.
std::pair<double, double> growth_exponents(const IntMatrix& a, unsigned long n);

}  // namespace torrec
