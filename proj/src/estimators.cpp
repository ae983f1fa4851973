#include "torrec/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "torrec/errors.hpp"
#include "torrec/geometry.hpp"
#include "torrec/periodic.hpp"
#include "torrec/rng.hpp"
#include "torrec/spectral.hpp"
#include "torrec/torus.hpp"

namespace torrec {

std::pair<double, double> ols_slope(const std::vector<double>& x,
                                    const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || n != y.size())
        throw InsufficientSamples("regression needs at least two points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) throw InsufficientSamples("regression window has one abscissa");
    double slope = sxy / sxx;
    double r2 = (syy == 0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return {slope, r2};
}

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp<unsigned>(hc, 1, 16));
}

}  // namespace

BoxCountReport box_count(const IntMatrix& a, double tau, unsigned long n_min,
                         unsigned long n_max, int j_min, int j_max,
                         int fit_j_min, int fit_j_max, int threads) {
    const int d = a.dim();
    if (!(tau > 0)) throw DomainError("box_count requires tau > 0");
    if (n_min > n_max) throw DomainError("box_count requires N <= M");
    if (static_cast<long>(n_min) < min_disjoint_n(tau))
        throw DomainError("box_count requires N >= min_disjoint_n(tau)");
    if (j_min < 1 || j_min > j_max) throw DomainError("box_count needs 1 <= jMin <= jMax");
    if (d * j_max > 28) throw BudgetExceeded("grid of 2^(d*jMax) boxes exceeds memory budget");

    const int probes_per_axis = 3;
    const long probes_per_box = (d == 2) ? 9 : 27;
    double probe_evals = 0;
    for (int j = j_min; j <= j_max; ++j)
        probe_evals += std::pow(2.0, d * j) * static_cast<double>(probes_per_box) *
                       static_cast<double>(n_max - n_min + 1);
    if (probe_evals > 8e9) throw BudgetExceeded("probe budget of 8e9 evaluations exceeded");

    // Periodic centers for box marking, under the enumeration budget.
    mpz_class total_points = 0;
    for (unsigned long n = n_min; n <= n_max; ++n)
        total_points += count_H_n(a, n);
    if (total_points > 1'000'000)
        throw BudgetExceeded("periodic-point budget of 1e6 exceeded: " +
                             total_points.get_str());
    std::vector<std::array<double, 3>> centers;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        PeriodicPointSet set = enumerate_periodic(a, n);
        for (const auto& p : set.points)
            centers.push_back({p.coord(0), p.coord(1), d == 3 ? p.coord(2) : 0.0});
    }

    std::vector<MembershipOracle> oracles;
    for (unsigned long n = n_min; n <= n_max; ++n)
        oracles.emplace_back(a, tau, n);

    BoxCountReport rep;
    rep.dim = d;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.j_min = j_min;
    rep.j_max = j_max;

    const int n_threads = resolve_threads(threads);
    for (int j = j_min; j <= j_max; ++j) {
        const long side_boxes = 1L << j;
        const double side = std::ldexp(1.0, -j);
        const long total = (d == 2) ? side_boxes * side_boxes
                                    : side_boxes * side_boxes * side_boxes;

        std::vector<std::uint8_t> occ(static_cast<std::size_t>(total), 0);
        for (const auto& c : centers) {
            long idx = 0;
            for (int ax = 0; ax < d; ++ax) {
                long k = static_cast<long>(std::floor(c[ax] * side_boxes));
                k = std::clamp(k, 0L, side_boxes - 1);
                idx = idx * side_boxes + k;
            }
            occ[static_cast<std::size_t>(idx)] = 1;
        }

        auto box_occupied = [&](long idx) {
            std::array<long, 3> k{};
            long rest = idx;
            for (int ax = d - 1; ax >= 0; --ax) {
                k[ax] = rest % side_boxes;
                rest /= side_boxes;
            }
            std::array<double, 3> x{0, 0, 0};
            std::array<int, 3> p{};
            for (p[0] = 0; p[0] < probes_per_axis; ++p[0])
                for (p[1] = 0; p[1] < probes_per_axis; ++p[1])
                    for (p[2] = 0; p[2] < (d == 3 ? probes_per_axis : 1); ++p[2]) {
                        for (int ax = 0; ax < d; ++ax)
                            x[ax] = (static_cast<double>(k[ax]) +
                                     (p[ax] + 0.5) / probes_per_axis) * side;
                        for (const auto& oracle : oracles)
                            if (oracle(x).inside) return true;
                    }
            return false;
        };

        std::vector<long> partial(static_cast<std::size_t>(n_threads), 0);
        auto worker = [&](int t) {
            long lo = total * t / n_threads;
            long hi = total * (t + 1) / n_threads;
            long local = 0;
            for (long b = lo; b < hi; ++b)
                if (occ[static_cast<std::size_t>(b)] || box_occupied(b)) ++local;
            partial[static_cast<std::size_t>(t)] = local;
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker, t);
        worker(0);
        for (auto& th : pool) th.join();

        long count = 0;
        for (long c : partial) count += c;
        rep.scales.push_back(side);
        rep.counts.push_back(count);
    }

    // Resolution check against the thinnest component of R_{n_max}.
    double thinnest;
    if (d == 2) {
        SpectralData s = eigen_data(a);
        QuadraticSurd one = QuadraticSurd::integer(1);
        thinnest = std::exp(-tau * static_cast<double>(n_max) -
                            (s.lambda2.pow(n_max) - one).log_abs());
    } else {
        Validation v = validate_hyperbolic(a);
        const Block3Data& b3 = *v.spectral3;
        QuadraticSurd one = QuadraticSurd::integer(1);
        mpz_class m_pow;
        mpz_pow_ui(m_pow.get_mpz_t(), b3.m.get_mpz_t(), n_max);
        double r2 = std::exp(-tau * static_cast<double>(n_max) -
                             (b3.block.lambda2.pow(n_max) - one).log_abs());
        double r3 = std::exp(-tau * static_cast<double>(n_max)) /
                    mpf_class(m_pow - 1).get_d();
        thinnest = std::min(r2, r3);
    }
    if (std::ldexp(1.0, -j_max) > thinnest)
        rep.warnings.push_back(
            "ResolutionWarning: finest scale 2^-" + std::to_string(j_max) +
            " under-resolves the thinnest ellipse axis");

    if (fit_j_min < 0) fit_j_min = j_min + 2;
    if (fit_j_max < 0) fit_j_max = j_max - 1;
    fit_j_min = std::max(fit_j_min, j_min);
    fit_j_max = std::min(fit_j_max, j_max);
    rep.fit_j_min = fit_j_min;
    rep.fit_j_max = fit_j_max;

    std::vector<double> xs, ys;
    for (int j = fit_j_min; j <= fit_j_max; ++j) {
        long c = rep.counts[static_cast<std::size_t>(j - j_min)];
        if (c <= 0) continue;
        xs.push_back(std::log(2.0) * j);
        ys.push_back(std::log(static_cast<double>(c)));
    }
    if (xs.size() < 2) {
        rep.warnings.push_back("fit window degenerate: fewer than two usable scales");
    } else {
        auto [slope, r2] = ols_slope(xs, ys);
        rep.fitted_slope = slope;
        rep.r_squared = r2;
        if (r2 < 0.98)
            rep.warnings.push_back("fit quality warning: rSquared < 0.98");
    }
    return rep;
}

std::vector<std::array<double, 3>> sample_E_n(const IntMatrix& a, double tau,
                                              unsigned long n, long k,
                                              std::uint64_t seed) {
    if (k < 1) throw DomainError("sample_E_n requires k >= 1");
    PeriodicPointSet set = enumerate_periodic(a, n);
    RecurrenceComponent geo = component_geometry(a, tau, n, set.points.front());
    const double h = static_cast<double>(set.points.size());

    // Half-edges of the inscribed parallelogram around any center.
    const double ux = 0.5 * geo.semi_axis_major * geo.axis_stable[0];
    const double uy = 0.5 * geo.semi_axis_major * geo.axis_stable[1];
    const double wx = 0.5 * geo.semi_axis_minor * geo.axis_unstable[0];
    const double wy = 0.5 * geo.semi_axis_minor * geo.axis_unstable[1];

    CounterRng rng(seed);
    std::vector<std::array<double, 3>> out;
    out.reserve(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) {
        std::uint64_t c = static_cast<std::uint64_t>(i) * 3;
        auto idx = static_cast<std::size_t>(
            std::min(h - 1.0, std::floor(rng.uniform(c) * h)));
        double t1 = 2.0 * rng.uniform(c + 1) - 1.0;
        double t2 = 2.0 * rng.uniform(c + 2) - 1.0;
        const RationalPoint& p = set.points[idx];
        out.push_back({wrap_unit(p.coord(0) + t1 * ux + t2 * wx),
                       wrap_unit(p.coord(1) + t1 * uy + t2 * wy), 0.0});
    }
    return out;
}

MuEstimate mu_n_ball(const IntMatrix& a, double tau, unsigned long n,
                     const std::array<double, 3>& center, double r, long k,
                     std::uint64_t seed) {
    if (k < 1000) throw DomainError("mu_n_ball requires k >= 1000");
    if (r < 0) throw DomainError("mu_n_ball requires r >= 0");
    auto samples = sample_E_n(a, tau, n, k, seed);
    MuEstimate est;
    est.samples = k;
    for (const auto& x : samples)
        if (torus_distance(x, center, a.dim()) <= r) ++est.hits;
    est.value = static_cast<double>(est.hits) / static_cast<double>(k);
    est.stderr_ = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(k));
    return est;
}

MeasureScanReport measure_scan(const IntMatrix& a, double tau, unsigned long n,
                               const std::array<double, 3>& center,
                               const std::vector<double>& radii_grid, long k,
                               std::uint64_t seed) {
    if (k < 1000) throw DomainError("measure_scan requires k >= 1000");
    if (radii_grid.empty()) throw DomainError("measure_scan requires a radius grid");
    auto samples = sample_E_n(a, tau, n, k, seed);

    MeasureScanReport rep;
    rep.n = n;
    rep.center = center;
    for (double r : radii_grid) {
        MuEstimate est;
        est.samples = k;
        for (const auto& x : samples)
            if (torus_distance(x, center, a.dim()) <= r) ++est.hits;
        if (est.hits < 30) {
            rep.dropped_radii.push_back(r);
            continue;
        }
        est.value = static_cast<double>(est.hits) / static_cast<double>(k);
        est.stderr_ =
            std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(k));
        rep.radii.push_back(r);
        rep.mu.push_back(est);
        rep.ratios_to_lebesgue.push_back(est.value / (M_PI * r * r));
    }

    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < rep.radii.size(); ++i) {
        xs.push_back(std::log(rep.radii[i]));
        ys.push_back(std::log(rep.mu[i].value));
    }
    if (xs.size() < 2 ||
        *std::max_element(xs.begin(), xs.end()) ==
            *std::min_element(xs.begin(), xs.end()))
        throw InsufficientSamples("fewer than two usable radius buckets");
    rep.fitted_local_exponent = ols_slope(xs, ys).first;

    SpectralData s = eigen_data(a);
    auto [l1n, l2n] = growth_exponents(a, n);
    const double half = 0.5 * s.log_abs_lambda2;
    double case1 = std::min((l1n + l2n) / (tau + l1n), 2 * l2n / (tau + l2n));
    if (tau > half) {
        rep.regime = "Case1";
        rep.predicted_exponent = case1;
    } else if (tau < half) {
        rep.regime = "Case2";
        rep.predicted_exponent = 2 * l2n / (tau + l2n);
    } else {
        rep.regime = "Case3";
        rep.predicted_exponent = case1;
    }
    return rep;
}

}  // namespace torrec
