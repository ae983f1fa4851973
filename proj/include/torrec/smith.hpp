#pragma once

#include "torrec/int_matrix.hpp"

namespace torrec {

/// Smith normal form U*M*V = D with unimodular U, V and nonnegative
/// diagonal D whose entries satisfy d1 | d2 (| d3).
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    SmithForm(int dim) : u(dim), d(dim), v(dim) {}
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace torrec
