#include "torrec/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "torrec/errors.hpp"

namespace torrec {

namespace {

// Sign of t + u*sqrt(D), all integers, D >= 0 and not a perfect square
// (or u = 0).
int sign_of(const mpz_class& t, const mpz_class& u, const mpz_class& d) {
    if (u == 0) return sgn(t);
    if (t == 0) return sgn(u);
    if (t > 0 && u > 0) return 1;
    if (t < 0 && u < 0) return -1;
    mpz_class t2 = t * t;
    mpz_class u2 = u * u * d;
    int c = cmp(t2, u2);
    if (c == 0) return 0;
    return (t > 0) ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

struct Convergent {
    mpz_class p, q;
    double v;  // q * |q*alpha - p|
};

// Convergents of alpha with q <= q_bound, exact CF recurrence. Terminates
// for rational alpha; the terminal convergent carries v = 0.
std::vector<Convergent> convergents_up_to(const QuadraticSurd& alpha,
                                          const mpz_class& q_bound) {
    std::vector<Convergent> out;
    QuadraticSurd cur = alpha;
    mpz_class p2 = 0, p1 = 1;  // p_{k-2}, p_{k-1}
    mpz_class q2 = 1, q1 = 0;
    for (int k = 0; k < 10000; ++k) {
        mpz_class a = cur.floor();
        mpz_class p = a * p1 + p2;
        mpz_class q = a * q1 + q2;
        if (q > q_bound) break;
        QuadraticSurd qs = QuadraticSurd::rational(mpq_class(q));
        QuadraticSurd t = alpha * qs - QuadraticSurd::rational(mpq_class(p));
        out.push_back({p, q, (t.abs() * qs).to_double()});
        QuadraticSurd frac = cur - QuadraticSurd::rational(mpq_class(a));
        if (frac.is_zero()) break;
        cur = frac.inverse();
        p2 = p1; p1 = p;
        q2 = q1; q1 = q;
    }
    return out;
}

double min_v(const std::vector<Convergent>& cs, std::size_t tail = 0) {
    if (cs.empty()) return 0.0;
    std::size_t begin = (tail > 0 && cs.size() > tail) ? cs.size() - tail : 0;
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = begin; i < cs.size(); ++i) m = std::min(m, cs[i].v);
    return m;
}

}  // namespace

std::vector<double> fractional_parts(const QuadraticSurd& alpha, long n_terms) {
    if (n_terms < 1) throw DomainError("fractional_parts requires N >= 1");
    // Write {alpha} as (p + u*sqrt(D)) / den with integer p, u and den > 0,
    // then accumulate the integer state exactly; one conditional subtraction
    // per step keeps the state in [0, den).
    const mpq_class& ar = alpha.rational_part();
    const mpq_class& br = alpha.radical_part();
    mpz_class d = alpha.radicand();
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), ar.get_den().get_mpz_t(), br.get_den().get_mpz_t());
    mpz_class p = ar.get_num() * (den / ar.get_den());
    mpz_class u = br.get_num() * (den / br.get_den());
    p -= alpha.floor() * den;  // reduce the step into [0, 1)

    const double den_d = den.get_d();
    const double sqrt_d = std::sqrt(d.get_d());
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_terms));
    mpz_class acc_p = 0, acc_u = 0;
    for (long n = 0; n < n_terms; ++n) {
        acc_p += p;
        acc_u += u;
        mpz_class t = acc_p - den;
        if (sign_of(t, acc_u, d) >= 0) acc_p = std::move(t);
        double v = (acc_p.get_d() + acc_u.get_d() * sqrt_d) / den_d;
        if (v < 0.0) v = 0.0;
        if (v >= 1.0) v = std::nextafter(1.0, 0.0);
        out.push_back(v);
    }
    return out;
}

CountingReport counting_function(const QuadraticSurd& alpha, double a, double b,
                                 long n_terms) {
    if (!(0.0 <= a && a < b && b <= 1.0))
        throw DomainError("counting_function requires 0 <= a < b <= 1");
    if (n_terms < 1) throw DomainError("counting_function requires N >= 1");
    CountingReport rep;
    rep.a = a;
    rep.b = b;
    rep.horizon = n_terms;
    for (double v : fractional_parts(alpha, n_terms))
        if (a <= v && v < b) ++rep.count;
    rep.ratio = static_cast<double>(rep.count) / static_cast<double>(n_terms);
    return rep;
}

double star_discrepancy(const QuadraticSurd& alpha, long n_terms) {
    if (n_terms < 1) throw DomainError("star_discrepancy requires N >= 1");
    std::vector<double> xs = fractional_parts(alpha, n_terms);
    std::sort(xs.begin(), xs.end());
    const double n_d = static_cast<double>(n_terms);
    double d_star = 0;
    for (long i = 1; i <= n_terms; ++i) {
        double x = xs[static_cast<std::size_t>(i - 1)];
        d_star = std::max(d_star, static_cast<double>(i) / n_d - x);
        d_star = std::max(d_star, x - static_cast<double>(i - 1) / n_d);
    }
    return d_star;
}

DiophantineProfile continued_fraction(const QuadraticSurd& alpha, int depth) {
    if (alpha.is_rational()) throw RationalInput("continued_fraction: rational input");
    if (depth < 1) throw DomainError("continued_fraction requires depth >= 1");

    DiophantineProfile prof;
    QuadraticSurd cur = alpha;
    mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    // Period detection by repetition of the complete quotient, whose
    // canonical (a, b) pair is a full state for fixed D.
    std::map<std::pair<std::string, std::string>, long> seen;
    for (int k = 0; k < depth; ++k) {
        auto key = std::make_pair(cur.rational_part().get_str(),
                                  cur.radical_part().get_str());
        auto it = seen.find(key);
        if (it != seen.end() && prof.period == 0) {
            prof.preperiod = it->second;
            prof.period = k - it->second;
        }
        if (it == seen.end()) seen.emplace(key, k);
        mpz_class a = cur.floor();
        prof.quotients.push_back(a);
        mpz_class p = a * p1 + p2;
        mpz_class q = a * q1 + q2;
        prof.convergents.emplace_back(p, q);
        p2 = p1; p1 = p;
        q2 = q1; q1 = q;
        cur = (cur - QuadraticSurd::rational(mpq_class(a))).inverse();
    }

    std::vector<Convergent> cs;
    for (const auto& [p, q] : prof.convergents) {
        QuadraticSurd qs = QuadraticSurd::rational(mpq_class(q));
        QuadraticSurd t = alpha * qs - QuadraticSurd::rational(mpq_class(p));
        cs.push_back({p, q, (t.abs() * qs).to_double()});
    }
    prof.c_star = min_v(cs);
    prof.liminf_proxy = min_v(cs, 8);
    return prof;
}

double badly_approximable_constant(const QuadraticSurd& alpha,
                                   const mpz_class& q_bound) {
    if (q_bound < 1) throw DomainError("badly_approximable_constant requires Q >= 1");
    return min_v(convergents_up_to(alpha, q_bound));
}

double liminf_constant_proxy(const QuadraticSurd& alpha, const mpz_class& q_bound) {
    if (q_bound < 1) throw DomainError("liminf_constant_proxy requires Q >= 1");
    return min_v(convergents_up_to(alpha, q_bound), 8);
}

}  // namespace torrec
