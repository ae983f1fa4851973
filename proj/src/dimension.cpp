#include "torrec/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "torrec/errors.hpp"
#include "torrec/spectral.hpp"
#include "torrec/surd.hpp"

namespace torrec {

namespace {

DimensionValue pick_min(std::vector<Candidate> candidates) {
    DimensionValue dv;
    dv.candidates = std::move(candidates);
    dv.value = dv.candidates.front().value;
    dv.branch = dv.candidates.front().label;
    for (const auto& c : dv.candidates)
        if (c.value < dv.value) {
            dv.value = c.value;
            dv.branch = c.label;
        }
    return dv;
}

bool near_boundary(double x, double boundary) {
    return std::abs(x - boundary) <= 1e-12 * std::max(1.0, std::abs(boundary));
}

double log_of_mpz(const mpz_class& z) { return log_mpf(mpf_class(z)); }

}  // namespace

DimensionValue dim_2d(double log_lambda2, double tau) {
    if (!(log_lambda2 > 0)) throw DomainError("dim_2d requires log|lambda2| > 0");
    if (!(tau > 0)) throw DomainError("dim_2d requires tau > 0");
    const double l = log_lambda2;
    DimensionValue dv = pick_min({
        {"2log|lambda2|/(tau+log|lambda2|)", 2 * l / (tau + l)},
        {"log|lambda2|/tau", l / tau},
    });
    if (dv.candidates[0].value == dv.candidates[1].value)
        dv.branch = "tie (Case-3 crossover)";
    return dv;
}

DimensionValue generic_upper_bound(const std::vector<double>& ells, double tau,
                                   bool raw_logs) {
    if (ells.empty()) throw DomainError("generic_upper_bound requires d >= 1");
    for (std::size_t i = 1; i < ells.size(); ++i)
        if (ells[i] < ells[i - 1])
            throw DomainError("generic_upper_bound requires nondecreasing logs");
    std::vector<double> l = ells;
    if (!raw_logs)
        for (double& x : l) x = std::max(0.0, x);
    for (double x : l)
        if (tau + x <= 0) throw DomainError("tau + l_i <= 0");

    const std::size_t d = l.size();
    std::vector<Candidate> cs;
    for (std::size_t i = 1; i <= d; ++i) {
        double suffix = 0;
        for (std::size_t j = d; j > i; --j) suffix += l[j - 1];
        double num = static_cast<double>(i) * l[i - 1] + suffix;
        cs.push_back({"i=" + std::to_string(i), num / (tau + l[i - 1])});
    }
    return pick_min(std::move(cs));
}

DimensionValue dim_3d_example(long m, double log_lambda, double tau) {
    if (m <= 1) throw DomainError("dim_3d_example requires m > 1");
    if (!(log_lambda > 0)) throw DomainError("dim_3d_example requires log(lambda) > 0");
    if (!(tau > 0)) throw DomainError("dim_3d_example requires tau > 0");
    const double lm = std::log(static_cast<double>(m));
    const double ll = log_lambda;
    if (!(lm > 0.5 * ll))
        throw HypothesisError("dim_3d_example requires m > lambda^(1/2)");
    if (lm > ll) {
        return pick_min({
            {"(tau+3logL)/(tau+logL)", (tau + 3 * ll) / (tau + ll)},
            {"3logm/(tau+logm)", 3 * lm / (tau + lm)},
            {"(2logL+logm)/(tau+logL)", (2 * ll + lm) / (tau + ll)},
            {"(logL+logm)/tau", (ll + lm) / tau},
            {"(tau+logL)/tau", (tau + ll) / tau},
        });
    }
    return pick_min({
        {"(2logm+logL)/(tau+logm)", (2 * lm + ll) / (tau + lm)},
        {"3logL/(tau+logL)", 3 * ll / (tau + ll)},
        {"(logL+logm)/tau", (ll + lm) / tau},
        {"(tau+logL)/tau", (tau + ll) / tau},
    });
}

namespace {

CoverRow cover_2d(const IntMatrix& a, double tau, unsigned long n,
                  const std::string& strategy) {
    SpectralData s = eigen_data(a);
    QuadraticSurd one = QuadraticSurd::integer(1);
    QuadraticSurd d1 = (one - s.lambda1.pow(n)).abs();
    QuadraticSurd d2 = (s.lambda2.pow(n) - one).abs();
    mpz_class h_n = count_H_n(a, n);

    CoverRow row;
    row.strategy = strategy;
    row.n = n;
    const double nt = tau * static_cast<double>(n);
    if (strategy == "major-axis") {
        row.log_radius = -nt - d1.log_abs();
        row.log_count = log_of_mpz(h_n);
    } else {  // minor-axis
        row.log_radius = -nt - d2.log_abs();
        mpz_class per_component = (d2 / d1).ceil();
        row.log_count = log_of_mpz(h_n * per_component);
    }
    row.radius = std::exp(row.log_radius);
    row.count = std::exp(row.log_count);
    return row;
}

CoverRow cover_3d(const IntMatrix& a, double tau, unsigned long n,
                  const std::string& strategy) {
    Validation v = validate_hyperbolic(a);
    if (!v.accepted || !v.spectral3)
        throw HypothesisError("3D covering requires the block-diagonal family: " +
                              v.reason);
    const Block3Data& b3 = *v.spectral3;
    const double nt = tau * static_cast<double>(n);
    const double log_m = log_of_mpz(b3.m);
    const double log_l = b3.block.log_abs_lambda2;

    QuadraticSurd one = QuadraticSurd::integer(1);
    // Factor logs: f_up = log(lambda^n - 1), f_dn = log(1 - lambda^-n),
    // f_m = log(m^n - 1).
    const double f_up = (b3.block.lambda2.pow(n) - one).log_abs();
    const double f_dn = (one - b3.block.lambda1.pow(n)).log_abs();
    mpz_class m_pow;
    mpz_pow_ui(m_pow.get_mpz_t(), b3.m.get_mpz_t(), n);
    const double f_m = log_of_mpz(m_pow - 1);

    const bool m_le_lambda = !(log_m > log_l);

    CoverRow row;
    row.strategy = strategy;
    row.n = n;
    if (strategy == "k1") {
        row.log_radius = -nt - f_dn;
        if (near_boundary(tau, log_m))
            throw RegimeError("k=1 sub-case boundary tau = log m");
        if (tau < log_m)
            row.log_count = nt + f_up + 2 * f_dn;
        else
            row.log_count = f_m + f_up + f_dn;
    } else if (strategy == "k2") {
        row.log_radius = -nt - f_up;
        if (m_le_lambda) {
            row.log_count = 3 * f_up;
        } else {
            if (near_boundary(tau, log_m - log_l))
                throw RegimeError("k=2 sub-case boundary tau = log m - log lambda");
            if (tau < log_m - log_l)
                row.log_count = 3 * f_up + nt;
            else
                row.log_count = 2 * f_up + f_m;
        }
    } else {  // k3
        row.log_radius = -nt - f_m;
        row.log_count = m_le_lambda ? 2 * f_m + f_up : 3 * f_m;
    }
    row.radius = std::exp(row.log_radius);
    row.count = std::exp(row.log_count);
    return row;
}

}  // namespace

CoverRow covering_counts(const IntMatrix& a, double tau, unsigned long n,
                         const std::string& strategy) {
    if (!(tau > 0)) throw DomainError("covering_counts requires tau > 0");
    if (n == 0) throw DomainError("covering_counts requires n >= 1");
    if (a.dim() == 2) {
        if (strategy != "major-axis" && strategy != "minor-axis")
            throw DomainError("2D strategy must be major-axis or minor-axis");
        return cover_2d(a, tau, n, strategy);
    }
    if (strategy != "k1" && strategy != "k2" && strategy != "k3")
        throw DomainError("3D strategy must be k1, k2 or k3");
    return cover_3d(a, tau, n, strategy);
}

PartialSumReport hausdorff_partial_sum(const IntMatrix& a, double tau, double s,
                                       unsigned long n_min, unsigned long n_max) {
    if (n_min > n_max) throw DomainError("hausdorff_partial_sum requires N <= M");
    if (!(s > 0 && s <= 2)) throw DomainError("hausdorff_partial_sum requires s in (0,2]");
    if (a.dim() != 2)
        throw HypothesisError("hausdorff_partial_sum supports 2x2 matrices");

    PartialSumReport rep;
    rep.s = s;
    rep.n_min = n_min;
    rep.n_max = n_max;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        double major = cover_2d(a, tau, n, "major-axis").log_term(s);
        double minor = cover_2d(a, tau, n, "minor-axis").log_term(s);
        double t = std::min(major, minor);
        rep.log_terms.push_back(t);
        rep.sum += std::exp(t);
    }

    const std::size_t k = rep.log_terms.size();
    if (k >= 2) {
        std::size_t window = std::min<std::size_t>(10, k - 1);
        double mean = 0;
        for (std::size_t i = k - window; i < k; ++i)
            mean += rep.log_terms[i] - rep.log_terms[i - 1];
        mean /= static_cast<double>(window);
        const double dead = std::log(1.0 + 1e-3);
        if (mean < -dead)
            rep.classification = TailClass::ShrinkingTail;
        else if (mean > dead)
            rep.classification = TailClass::GrowingTerms;
    }
    return rep;
}

}  // namespace torrec
