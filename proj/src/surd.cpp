#include "torrec/surd.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace torrec {

namespace {
constexpr int kShadowPrec = 256;
}

QuadraticSurd::QuadraticSurd(mpq_class a, mpq_class b, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw std::invalid_argument("negative radicand");
    // sqrt(0) and perfect squares collapse to the rational part so that
    // is_rational() is an honest predicate.
    if (b_ != 0 && d_ == 0) b_ = 0;
    if (b_ != 0) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), d_.get_mpz_t());
        if (r * r == d_) {
            a_ += b_ * r;
            b_ = 0;
        }
    }
    if (b_ == 0) d_ = 0;
}

mpz_class QuadraticSurd::merge_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_) throw std::invalid_argument("mixed radicands in surd arithmetic");
    return x.d_;
}

int QuadraticSurd::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 * D.
    mpq_class lhs = a_ * a_;
    mpq_class rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // cannot happen for irrational values
    return (c > 0) ? sa : sb;
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
    return {a_ + o.a_, b_ + o.b_, merge_radicand(*this, o)};
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
    return {a_ - o.a_, b_ - o.b_, merge_radicand(*this, o)};
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    mpz_class d = merge_radicand(*this, o);
    return {a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d};
}

QuadraticSurd QuadraticSurd::inverse() const {
    if (is_zero()) throw std::domain_error("surd division by zero");
    // 1/(a+b sqrt(D)) = (a - b sqrt(D)) / (a^2 - b^2 D)
    mpq_class norm = a_ * a_ - b_ * b_ * d_;
    return {a_ / norm, -b_ / norm, d_};
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
    return *this * o.inverse();
}

QuadraticSurd QuadraticSurd::pow(unsigned long n) const {
    QuadraticSurd result = rational(1);
    QuadraticSurd base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

double QuadraticSurd::to_double() const {
    mpf_class v(a_, kShadowPrec);
    if (b_ != 0) {
        mpf_class root(d_, kShadowPrec);
        root = sqrt(root);
        v += mpf_class(b_, kShadowPrec) * root;
    }
    return v.get_d();
}

double QuadraticSurd::log_abs() const {
    mpf_class v(a_, kShadowPrec);
    if (b_ != 0) {
        mpf_class root(d_, kShadowPrec);
        root = sqrt(root);
        v += mpf_class(b_, kShadowPrec) * root;
    }
    v = ::abs(v);
    if (v == 0) throw std::domain_error("log of zero");
    return log_mpf(v);
}

mpz_class QuadraticSurd::floor() const {
    if (b_ == 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        return q;
    }
    // Bracket with a float estimate, then fix up with exact comparisons.
    mpf_class v(a_, kShadowPrec);
    mpf_class root(d_, kShadowPrec);
    v += mpf_class(b_, kShadowPrec) * sqrt(root);
    mpf_class fl = ::floor(v);
    mpz_class guess(fl);
    while (*this < rational(mpq_class(guess))) --guess;
    while (*this >= rational(mpq_class(guess + 1))) ++guess;
    return guess;
}

mpz_class QuadraticSurd::ceil() const {
    mpz_class f = floor();
    if (*this == rational(mpq_class(f))) return f;
    return f + 1;
}

std::string QuadraticSurd::str() const {
    if (b_ == 0) return a_.get_str();
    return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + ")";
}

double log_mpf(const mpf_class& x) {
    if (x <= 0) throw std::domain_error("log of nonpositive value");
    long exp2;
    double mant = mpf_get_d_2exp(&exp2, x.get_mpf_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace torrec
