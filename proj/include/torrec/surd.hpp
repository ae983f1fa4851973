#pragma once

#include <gmpxx.h>

#include <string>

namespace torrec {

/// Exact element a + b*sqrt(D) of a real quadratic field, with rational a, b
/// and a fixed nonnegative integer radicand D. All arithmetic is exact;
/// doubles are derived read-only shadows.
class QuadraticSurd {
public:
    QuadraticSurd() : a_(0), b_(0), d_(0) {}
    QuadraticSurd(mpq_class a, mpq_class b, mpz_class d);
    static QuadraticSurd rational(const mpq_class& a) { return {a, 0, 0}; }
    static QuadraticSurd integer(long v) { return {mpq_class(v), 0, 0}; }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_part() const { return b_; }
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Galois conjugate a - b*sqrt(D).
    QuadraticSurd conjugate() const { return {a_, -b_, d_}; }

    int sign() const;
    QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

    QuadraticSurd operator-() const { return {-a_, -b_, d_}; }
    QuadraticSurd operator+(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const QuadraticSurd& o) const;
    QuadraticSurd operator*(const QuadraticSurd& o) const;
    QuadraticSurd operator/(const QuadraticSurd& o) const;
    QuadraticSurd pow(unsigned long n) const;
    QuadraticSurd inverse() const;

    bool operator==(const QuadraticSurd& o) const { return (*this - o).is_zero(); }
    bool operator!=(const QuadraticSurd& o) const { return !(*this == o); }
    bool operator<(const QuadraticSurd& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadraticSurd& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadraticSurd& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadraticSurd& o) const { return (*this - o).sign() >= 0; }

    /// Correctly rounded double shadow.
    double to_double() const;
    /// Natural log of the absolute value, safe for values far outside
    /// double range.
    double log_abs() const;
    /// Smallest integer >= value.
    mpz_class ceil() const;
    mpz_class floor() const;

    std::string str() const;

private:
    static mpz_class merge_radicand(const QuadraticSurd& x, const QuadraticSurd& y);
    mpq_class a_, b_;
    mpz_class d_;
};

/// log of a positive multiprecision float, safe for any magnitude.
double log_mpf(const mpf_class& x);

}  // namespace torrec
