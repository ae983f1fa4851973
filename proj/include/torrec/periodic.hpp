#pragma once

#include <array>
#include <string>
#include <vector>

#include "torrec/int_matrix.hpp"
#include "torrec/smith.hpp"

namespace torrec {

/// Exact rational point of the torus, coordinates num[i]/den in [0,1).
struct RationalPoint {
    std::array<mpz_class, 3> num{mpz_class(0), mpz_class(0), mpz_class(0)};
    mpz_class den{1};
    int dim = 2;

    double coord(int i) const { return mpq_class(num[i], den).get_d(); }
    mpq_class exact(int i) const {
        mpq_class q(num[i], den);
        q.canonicalize();
        return q;
    }
    std::string str(int i) const { return num[i].get_str() + "/" + den.get_str(); }

    bool operator==(const RationalPoint& o) const;
    bool operator<(const RationalPoint& o) const;  // lexicographic by numerators
};

struct PeriodicPointSet {
    unsigned long n = 0;
    int dim = 2;
    std::vector<mpz_class> denominators;  // Smith diagonal, d1 | d2 (| d3)
    mpz_class count{0};                   // always exact, = |det(A^n - I)|
    bool listed = false;
    std::vector<RationalPoint> points;    // sorted; empty when !listed
};

constexpr long kDefaultListingCap = 10'000'000;

/// Exact listing of P_n = (A^n - I)^{-1} Z^d mod 1 via Smith coordinates.
/// Throws SingularError, or CapExceeded when the count exceeds cap.
PeriodicPointSet enumerate_periodic(const IntMatrix& a, unsigned long n,
                                    long cap = kDefaultListingCap);

/// Count and group structure only; never caps.
PeriodicPointSet periodic_structure(const IntMatrix& a, unsigned long n);

/// Independent O(q^2) oracle scanning the full q-grid, q = |det(A^n - I)|.
/// Throws OracleTooLarge for q > 10^4.
PeriodicPointSet brute_force_periodic(const IntMatrix& a, unsigned long n);

/// Number of points of P_n within torus distance radius of center.
long count_in_ball(const IntMatrix& a, unsigned long n,
                   const std::array<double, 3>& center, double radius,
                   long cap = kDefaultListingCap);

/// The 3D grid of the block-diagonal family, built from the closed-form
/// (i1/(m^n - 1), i2/S_n, i3/S_n) lattice. Both the grid count and
/// |det(A^n - I)| are reported; disagreement is flagged, not hidden.
struct Grid3Report {
    PeriodicPointSet set;
    mpz_class s_n;
    mpz_class grid_count;  // (m^n - 1) * S_n^2
    mpz_class det_count;   // |det(A^n - I)|
    bool counts_agree = false;
    std::string note;
};

Grid3Report grid_3d_periodic(const IntMatrix& a, unsigned long n,
                             long cap = kDefaultListingCap);

}  // namespace torrec
