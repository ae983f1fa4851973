#include "torrec/smith.hpp"

#include <utility>

namespace torrec {

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
    for (int c = 0; c < m.dim(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
    for (int r = 0; r < m.dim(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row(IntMatrix& m, int dst, int src, const mpz_class& f) {
    for (int c = 0; c < m.dim(); ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col(IntMatrix& m, int dst, int src, const mpz_class& f) {
    for (int r = 0; r < m.dim(); ++r) m.at(r, dst) += f * m.at(r, src);
}

void negate_row(IntMatrix& m, int i) {
    for (int c = 0; c < m.dim(); ++c) m.at(i, c) = -m.at(i, c);
}

// Smallest nonzero |entry| in the trailing submatrix, ties broken row-major.
bool find_pivot(const IntMatrix& m, int k, int& pr, int& pc) {
    bool found = false;
    mpz_class best;
    for (int r = k; r < m.dim(); ++r)
        for (int c = k; c < m.dim(); ++c) {
            if (m.at(r, c) == 0) continue;
            mpz_class a = ::abs(m.at(r, c));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const int n = m.dim();
    SmithForm s(n);
    s.u = IntMatrix::identity(n);
    s.v = IntMatrix::identity(n);
    s.d = m;
    IntMatrix& a = s.d;

    for (int k = 0; k < n; ++k) {
        int pr, pc;
        if (!find_pivot(a, k, pr, pc)) break;
        for (;;) {
            find_pivot(a, k, pr, pc);
            if (pr != k) {
                swap_rows(a, k, pr);
                swap_rows(s.u, k, pr);
            }
            if (pc != k) {
                swap_cols(a, k, pc);
                swap_cols(s.v, k, pc);
            }
            bool clean = true;
            for (int r = k + 1; r < n; ++r) {
                if (a.at(r, k) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(r, k).get_mpz_t(), a.at(k, k).get_mpz_t());
                add_row(a, r, k, -q);
                add_row(s.u, r, k, -q);
                if (a.at(r, k) != 0) clean = false;
            }
            for (int c = k + 1; c < n; ++c) {
                if (a.at(k, c) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(k, c).get_mpz_t(), a.at(k, k).get_mpz_t());
                add_col(a, c, k, -q);
                add_col(s.v, c, k, -q);
                if (a.at(k, c) != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot must divide the trailing submatrix for the chain d1 | d2.
            bool divides = true;
            for (int r = k + 1; r < n && divides; ++r)
                for (int c = k + 1; c < n && divides; ++c)
                    if (a.at(r, c) % a.at(k, k) != 0) {
                        add_row(a, k, r, 1);
                        add_row(s.u, k, r, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (a.at(k, k) < 0) {
            negate_row(a, k);
            negate_row(s.u, k);
        }
    }
    return s;
}

}  // namespace torrec
