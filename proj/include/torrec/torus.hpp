#pragma once

#include <array>
#include <cmath>

namespace torrec {

/// Reduces t into [-1/2, 1/2).
inline double wrap_half(double t) {
    double r = t - std::floor(t);  // [0,1)
    return (r >= 0.5) ? r - 1.0 : r;
}

/// Reduces t into [0, 1).
inline double wrap_unit(double t) {
    double r = t - std::floor(t);
    return (r >= 1.0) ? 0.0 : r;
}

/// Quotient metric for the Euclidean norm: reduce each coordinate
/// difference to [-1/2, 1/2), then take the norm.
inline double torus_distance(const std::array<double, 3>& x,
                             const std::array<double, 3>& y, int dim) {
    double s = 0;
    for (int i = 0; i < dim; ++i) {
        double d = wrap_half(x[i] - y[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

inline double torus_distance(double x0, double x1, double y0, double y1) {
    return torus_distance({x0, x1, 0.0}, {y0, y1, 0.0}, 2);
}

}  // namespace torrec
