#include "torrec/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "torrec/errors.hpp"

namespace torrec {

namespace {

Validation reject(std::string reason) {
    Validation v;
    v.accepted = false;
    v.reason = std::move(reason);
    return v;
}

SpectralData build_spectral(const IntMatrix& a, const QuadraticSurd& l1,
                            const QuadraticSurd& l2) {
    if (a.at(0, 1) == 0 || a.at(1, 0) == 0)
        throw std::logic_error("b = 0 or c = 0 reached despite acceptance");
    SpectralData s;
    s.lambda1 = l1;
    s.lambda2 = l2;
    QuadraticSurd av = QuadraticSurd::rational(mpq_class(a.at(0, 0)));
    QuadraticSurd bv = QuadraticSurd::rational(mpq_class(a.at(0, 1)));
    s.gamma = (l2 - av) / bv;
    s.beta = (l1 - av) / bv;
    QuadraticSurd one = QuadraticSurd::integer(1);
    QuadraticSurd diff = s.beta - s.gamma;
    s.c1_squared =
        (one + s.beta * s.beta) * (one + s.gamma * s.gamma) / (diff * diff);
    s.c1 = std::sqrt(s.c1_squared.to_double());
    s.log_abs_lambda1 = l1.log_abs();
    s.log_abs_lambda2 = l2.log_abs();
    return s;
}

Validation validate_2x2(const IntMatrix& a) {
    mpz_class det = a.det();
    if (det == 0) return reject("singular matrix");
    mpz_class tr = a.trace();
    mpz_class disc = tr * tr - 4 * det;

    if (disc < 0) {
        // Complex conjugate pair of modulus sqrt(det).
        if (det == 1) return reject("eigenvalue on unit circle");
        return reject("complex eigenvalues of modulus >= 1: |lambda1| >= 1");
    }
    if (disc == 0) {
        mpz_class lam = tr / 2;
        if (lam == 1 || lam == -1)
            return reject("eigenvalue " + lam.get_str() + " on unit circle");
        return reject("repeated eigenvalue " + lam.get_str() + ": |lambda1| >= 1");
    }

    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    bool square = (root * root == disc);
    if (square) {
        // Rational (hence integer) eigenvalues.
        mpz_class p1 = (tr + root) / 2, p2 = (tr - root) / 2;
        mpz_class small = (::abs(p1) <= ::abs(p2)) ? p1 : p2;
        mpz_class large = (::abs(p1) <= ::abs(p2)) ? p2 : p1;
        if (::abs(small) == 1 || ::abs(large) == 1) {
            mpz_class culprit = (::abs(small) == 1) ? small : large;
            return reject("eigenvalue " + culprit.get_str() + " on unit circle");
        }
        if (small == 0) return reject("lambda1 = 0");
        if (::abs(small) >= 1)
            return reject("|lambda1| = " + mpz_class(::abs(small)).get_str() + " >= 1");
        return reject("no eigenvalue outside the unit circle");
    }

    QuadraticSurd half_tr(mpq_class(tr, 2), 0, 0);
    QuadraticSurd plus = half_tr + QuadraticSurd(0, mpq_class(1, 2), disc);
    QuadraticSurd minus = half_tr - QuadraticSurd(0, mpq_class(1, 2), disc);
    QuadraticSurd l2 = (plus.abs() > minus.abs()) ? plus : minus;
    QuadraticSurd l1 = (plus.abs() > minus.abs()) ? minus : plus;
    QuadraticSurd one = QuadraticSurd::integer(1);
    if (l1.abs() >= one) return reject("|lambda1| >= 1");
    if (l2.abs() <= one) return reject("no eigenvalue outside the unit circle");
    // Irrational conjugate surds: |lambda| = 1 and lambda = 0 are impossible
    // here, so the remaining hypotheses hold.
    Validation v;
    v.accepted = true;
    v.spectral = build_spectral(a, l1, l2);
    return v;
}

Validation validate_3x3(const IntMatrix& a) {
    bool block_shape = a.at(0, 1) == 0 && a.at(0, 2) == 0 && a.at(1, 0) == 0 &&
                       a.at(2, 0) == 0;
    if (!block_shape)
        return reject(
            "general 3x3 matrices are not supported; expected block-diagonal "
            "form diag(m, [[a,b],[c,d]])");
    mpz_class m = a.at(0, 0);
    if (m <= 1) return reject("leading entry m must exceed 1");
    IntMatrix block(2);
    block.at(0, 0) = a.at(1, 1);
    block.at(0, 1) = a.at(1, 2);
    block.at(1, 0) = a.at(2, 1);
    block.at(1, 1) = a.at(2, 2);
    if (block.det() != 1) return reject("2x2 block must have determinant 1");
    Validation inner = validate_2x2(block);
    if (!inner.accepted) return reject("2x2 block rejected: " + inner.reason);
    if (inner.spectral->lambda2.sign() <= 0)
        return reject("2x2 block eigenvalue must be > 1 (trace >= 3)");
    Validation v;
    v.accepted = true;
    v.spectral3 = Block3Data{m, *inner.spectral};
    return v;
}

}  // namespace

Validation validate_hyperbolic(const IntMatrix& a) {
    if (a.dim() == 2) return validate_2x2(a);
    return validate_3x3(a);
}

SpectralData eigen_data(const IntMatrix& a) {
    if (a.dim() != 2) throw HypothesisError("eigen_data requires a 2x2 matrix");
    Validation v = validate_hyperbolic(a);
    if (!v.accepted) throw HypothesisError("matrix rejected: " + v.reason);
    return *v.spectral;
}

mpz_class count_H_n(const IntMatrix& a, unsigned long n) {
    IntMatrix m = matrix_power(a, n) - IntMatrix::identity(a.dim());
    mpz_class d = m.det();
    if (d == 0) throw SingularError("det(A^n - I) = 0 at n = " + std::to_string(n));
    return ::abs(d);
}

std::pair<double, double> growth_exponents(const IntMatrix& a, unsigned long n) {
    SpectralData s = eigen_data(a);
    QuadraticSurd one = QuadraticSurd::integer(1);
    QuadraticSurd p1 = s.lambda1.pow(n) - one;
    QuadraticSurd p2 = s.lambda2.pow(n) - one;
    if (p1.is_zero() || p2.is_zero())
        throw SingularError("lambda^n = 1 at n = " + std::to_string(n));
    double inv_n = 1.0 / static_cast<double>(n);
    return {inv_n * p1.log_abs(), inv_n * p2.log_abs()};
}

}  // namespace torrec
