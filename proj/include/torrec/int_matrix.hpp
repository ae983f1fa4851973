#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace torrec {

/// Square integer matrix, dimension 2 or 3, exact arbitrary-precision entries.
class IntMatrix {
public:
    explicit IntMatrix(int dim);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int dim);
    /// Parses "a,b;c,d" (rows separated by semicolons).
    static IntMatrix parse(const std::string& literal);
    /// Parses a JSON array-of-arrays, e.g. [[2,1],[1,1]].
    static IntMatrix parse_json(const std::string& json_text);

    int dim() const { return dim_; }
    const mpz_class& at(int r, int c) const { return e_[r * dim_ + c]; }
    mpz_class& at(int r, int c) { return e_[r * dim_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

    mpz_class det() const;
    mpz_class trace() const;

    std::string str() const;

private:
    int dim_;
    std::vector<mpz_class> e_;
};

/// Exact A^n via binary exponentiation, n >= 1 (n = 0 gives the identity).
IntMatrix matrix_power(const IntMatrix& a, unsigned long n);

}  // namespace torrec
