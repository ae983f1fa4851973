#include "torrec/periodic.hpp"

#include <algorithm>
#include <limits>

#include "torrec/errors.hpp"
#include "torrec/spectral.hpp"
#include "torrec/surd.hpp"
#include "torrec/torus.hpp"

namespace torrec {

bool RationalPoint::operator==(const RationalPoint& o) const {
    if (dim != o.dim) return false;
    for (int i = 0; i < dim; ++i)
        if (exact(i) != o.exact(i)) return false;
    return true;
}

bool RationalPoint::operator<(const RationalPoint& o) const {
    for (int i = 0; i < dim; ++i) {
        if (num[i] != o.num[i]) return num[i] < o.num[i];
    }
    return false;
}

namespace {

PeriodicPointSet structure_of(const IntMatrix& a, unsigned long n, SmithForm* out_snf) {
    IntMatrix m = matrix_power(a, n) - IntMatrix::identity(a.dim());
    if (m.det() == 0)
        throw SingularError("A^n - I singular at n = " + std::to_string(n));
    SmithForm snf = smith_normal_form(m);
    PeriodicPointSet set;
    set.n = n;
    set.dim = a.dim();
    set.count = 1;
    for (int i = 0; i < a.dim(); ++i) {
        set.denominators.push_back(snf.d.at(i, i));
        set.count *= snf.d.at(i, i);
    }
    if (out_snf) *out_snf = snf;
    return set;
}

}  // namespace

PeriodicPointSet periodic_structure(const IntMatrix& a, unsigned long n) {
    return structure_of(a, n, nullptr);
}

PeriodicPointSet enumerate_periodic(const IntMatrix& a, unsigned long n, long cap) {
    SmithForm snf(a.dim());
    PeriodicPointSet set = structure_of(a, n, &snf);
    if (set.count > cap) throw CapExceeded(set.count.get_str());

    const int d = a.dim();
    // Walk the box [0,d1) x ... in Smith coordinates and map back through V:
    // x = V * (y1/d1, ..., yd/dd) mod 1 enumerates P_n without duplicates.
    mpz_class common = 1;  // lcm of the diagonal = last entry by divisibility
    for (const auto& di : set.denominators)
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), di.get_mpz_t());
    std::vector<mpz_class> scale(d);  // common / d_j
    for (int j = 0; j < d; ++j) scale[j] = common / set.denominators[j];

    long total = set.count.get_si();
    set.points.reserve(total);
    std::vector<long> y(d, 0);
    std::vector<long> dims(d);
    for (int j = 0; j < d; ++j) dims[j] = set.denominators[j].get_si();
    for (;;) {
        RationalPoint p;
        p.dim = d;
        p.den = common;
        for (int i = 0; i < d; ++i) {
            mpz_class s = 0;
            for (int j = 0; j < d; ++j) s += snf.v.at(i, j) * y[j] * scale[j];
            mpz_mod(p.num[i].get_mpz_t(), s.get_mpz_t(), common.get_mpz_t());
        }
        set.points.push_back(std::move(p));
        int j = d - 1;
        while (j >= 0 && ++y[j] == dims[j]) y[j--] = 0;
        if (j < 0) break;
    }
    std::sort(set.points.begin(), set.points.end());
    set.listed = true;
    return set;
}

PeriodicPointSet brute_force_periodic(const IntMatrix& a, unsigned long n) {
    if (a.dim() != 2) throw HypothesisError("brute-force oracle supports 2x2 only");
    IntMatrix m = matrix_power(a, n) - IntMatrix::identity(2);
    mpz_class det = m.det();
    if (det == 0)
        throw SingularError("A^n - I singular at n = " + std::to_string(n));
    mpz_class q_big = ::abs(det);
    if (q_big > 10000)
        throw OracleTooLarge("oracle scan bound 10^4 exceeded: " + q_big.get_str());
    long q = q_big.get_si();
    long m00, m01, m10, m11;
    if (!m.at(0, 0).fits_slong_p() || !m.at(0, 1).fits_slong_p() ||
        !m.at(1, 0).fits_slong_p() || !m.at(1, 1).fits_slong_p())
        throw OracleTooLarge("matrix entries exceed oracle word size");
    m00 = m.at(0, 0).get_si() % q;
    m01 = m.at(0, 1).get_si() % q;
    m10 = m.at(1, 0).get_si() % q;
    m11 = m.at(1, 1).get_si() % q;

    PeriodicPointSet set;
    set.n = n;
    set.dim = 2;
    set.denominators = {mpz_class(q), mpz_class(q)};
    for (long p = 0; p < q; ++p)
        for (long r = 0; r < q; ++r) {
            if ((m00 * p + m01 * r) % q == 0 && (m10 * p + m11 * r) % q == 0) {
                RationalPoint pt;
                pt.dim = 2;
                pt.num[0] = p;
                pt.num[1] = r;
                pt.den = q;
                set.points.push_back(std::move(pt));
            }
        }
    std::sort(set.points.begin(), set.points.end());
    set.count = static_cast<long>(set.points.size());
    set.listed = true;
    return set;
}

long count_in_ball(const IntMatrix& a, unsigned long n,
                   const std::array<double, 3>& center, double radius, long cap) {
    PeriodicPointSet set = enumerate_periodic(a, n, cap);
    long hits = 0;
    for (const auto& p : set.points) {
        std::array<double, 3> x{p.coord(0), p.coord(1),
                                a.dim() == 3 ? p.coord(2) : 0.0};
        if (torus_distance(x, center, a.dim()) <= radius) ++hits;
    }
    return hits;
}

Grid3Report grid_3d_periodic(const IntMatrix& a, unsigned long n, long cap) {
    Validation v = validate_hyperbolic(a);
    if (!v.accepted || !v.spectral3)
        throw HypothesisError("3D grid requires the block-diagonal family: " + v.reason);
    const Block3Data& b3 = *v.spectral3;
    const QuadraticSurd& lam = b3.block.lambda2;
    QuadraticSurd one = QuadraticSurd::integer(1);

    QuadraticSurd s_surd;
    if (n % 2 == 1) {
        // sum_{j=-k}^{k} lambda^j
        unsigned long k = n / 2;
        QuadraticSurd inv = lam.inverse();
        s_surd = one;
        for (unsigned long j = 1; j <= k; ++j)
            s_surd = s_surd + lam.pow(j) + inv.pow(j);
    } else {
        unsigned long k = n / 2;
        QuadraticSurd root = lam - lam.inverse();  // sqrt(tr^2 - 4)
        s_surd = root * (lam.pow(k) - lam.inverse().pow(k));
    }
    if (!s_surd.is_rational() || s_surd.rational_part().get_den() != 1)
        throw std::logic_error("S_n did not reduce to an integer");
    mpz_class s_n = s_surd.rational_part().get_num();

    mpz_class m_pow;
    mpz_pow_ui(m_pow.get_mpz_t(), b3.m.get_mpz_t(), n);
    mpz_class m_term = m_pow - 1;

    Grid3Report rep;
    rep.s_n = s_n;
    rep.grid_count = m_term * s_n * s_n;
    rep.det_count = count_H_n(a, n);
    rep.counts_agree = (rep.grid_count == rep.det_count);
    rep.note =
        "grid S_n grows like lambda^(n/2); grid count and |det(A^n - I)| are "
        "both reported and may differ by a constant factor for even n";

    rep.set.n = n;
    rep.set.dim = 3;
    rep.set.denominators = {m_term, s_n, s_n};
    rep.set.count = rep.grid_count;
    if (rep.grid_count > cap) return rep;  // structure-only

    mpz_class common;
    mpz_lcm(common.get_mpz_t(), m_term.get_mpz_t(), s_n.get_mpz_t());
    mpz_class f1 = common / m_term, f2 = common / s_n;
    long i1_max = m_term.get_si(), s_max = s_n.get_si();
    rep.set.points.reserve(rep.grid_count.get_si());
    for (long i1 = 0; i1 < i1_max; ++i1)
        for (long i2 = 0; i2 < s_max; ++i2)
            for (long i3 = 0; i3 < s_max; ++i3) {
                RationalPoint p;
                p.dim = 3;
                p.den = common;
                p.num[0] = i1 * f1;
                p.num[1] = i2 * f2;
                p.num[2] = i3 * f2;
                rep.set.points.push_back(std::move(p));
            }
    std::sort(rep.set.points.begin(), rep.set.points.end());
    rep.set.listed = true;
    return rep;
}

}  // namespace torrec
