#include "torrec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "torrec/dimension.hpp"
#include "torrec/equidist.hpp"
#include "torrec/errors.hpp"
#include "torrec/estimators.hpp"
#include "torrec/geometry.hpp"
#include "torrec/periodic.hpp"
#include "torrec/spectral.hpp"

namespace torrec {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

IntMatrix parse_matrix(const std::string& literal) {
    if (!literal.empty() && literal.front() == '[')
        return IntMatrix::parse_json(literal);
    return IntMatrix::parse(literal);
}

mpq_class parse_fraction(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output path: " + path);
    f << body;
}

// Every artifact opens with the full run configuration so re-running an
// embedded config reproduces the file.
ordered_json provenance(const ordered_json& config) {
    ordered_json head;
    head["schema"] = kSchemaVersion;
    head["version"] = kVersion;
    head["config"] = config;
    return head;
}

std::string csv_header(const ordered_json& config) {
    std::string out = "# schema=" + std::to_string(kSchemaVersion) +
                      " version=" + std::string(kVersion) + "\n# config=";
    out += json(config).dump();
    out += "\n";
    return out;
}

ordered_json spectral_json(const SpectralData& s) {
    ordered_json j;
    j["lambda1"] = s.lambda1.str();
    j["lambda2"] = s.lambda2.str();
    j["lambda1_value"] = s.lambda1.to_double();
    j["lambda2_value"] = s.lambda2.to_double();
    j["gamma"] = s.gamma.str();
    j["gamma_value"] = s.gamma.to_double();
    j["beta"] = s.beta.str();
    j["beta_value"] = s.beta.to_double();
    j["c1"] = s.c1;
    j["log_abs_lambda2"] = s.log_abs_lambda2;
    return j;
}

ordered_json dimension_json(const DimensionValue& dv) {
    ordered_json j;
    j["value"] = dv.value;
    j["branch"] = dv.branch;
    ordered_json cs = ordered_json::array();
    for (const auto& c : dv.candidates)
        cs.push_back({{"label", c.label}, {"value", c.value}});
    j["candidates"] = cs;
    return j;
}

int threads_from_env(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("TORREC_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 0;
}

struct Common {
    std::string matrix_literal;
    double tau = 0;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out = "-";
    std::string format = "json";
};

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"torrec: recurrence sets of hyperbolic toral endomorphisms"};
    app.require_subcommand(1);

    Common c;
    // Subcommand-specific parameters.
    unsigned long n = 1, n_min = 1, n_max = 1;
    long cap = kDefaultListingCap;
    bool oracle = false, structure_only = false, raw_logs = false;
    std::string center_str = "0,0", strategy = "major-axis";
    std::string ells_str, radii_str = "0.05,0.1,0.15,0.2,0.25", interval_str;
    long m_param = 0;
    double log_lambda = 0, s_exp = 1.0;
    long samples = 10000, horizon = 0;
    int j_min = 4, j_max = 10, fit_lo = -1, fit_hi = -1, depth = 64;
    double q_bound = 1e6;

    auto add_common = [&](CLI::App* sub, bool need_matrix, bool need_tau) {
        auto* mo = sub->add_option("--matrix", c.matrix_literal,
                                   "matrix literal \"a,b;c,d\" or [[a,b],[c,d]]");
        if (need_matrix) mo->required();
        auto* to = sub->add_option("--tau", c.tau, "recurrence exponent tau > 0");
        if (need_tau) to->required();
        sub->add_option("--seed", c.seed, "RNG seed");
        sub->add_option("--threads", c.threads, "worker threads (0 = auto)");
        sub->add_option("--out", c.out, "output path, - for stdout");
        sub->add_option("--format", c.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* sc_validate = app.add_subcommand("validate", "check hyperbolicity hypotheses");
    add_common(sc_validate, true, false);

    auto* sc_periodic = app.add_subcommand("periodic", "enumerate P_n");
    add_common(sc_periodic, true, false);
    sc_periodic->add_option("--n", n, "power n")->required();
    sc_periodic->add_option("--cap", cap, "listing cap");
    sc_periodic->add_flag("--oracle", oracle, "use the brute-force oracle");
    sc_periodic->add_flag("--structure-only", structure_only, "skip the listing");

    auto* sc_geometry = app.add_subcommand("geometry", "component geometry of R_n");
    add_common(sc_geometry, true, true);
    sc_geometry->add_option("--n", n, "power n")->required();
    sc_geometry->add_option("--center", center_str, "exact center \"p/q,p/q\"");

    auto* sc_dim = app.add_subcommand("dim", "Hausdorff dimension, 2D closed form");
    add_common(sc_dim, true, true);

    auto* sc_dim3d = app.add_subcommand("dim3d", "dimension of the 3D block family");
    add_common(sc_dim3d, false, true);
    sc_dim3d->add_option("--m", m_param, "diagonal entry m > 1");
    sc_dim3d->add_option("--log-lambda", log_lambda, "log of the block eigenvalue");

    auto* sc_upper = app.add_subcommand("upper-bound", "generic eigenvalue-log bound");
    add_common(sc_upper, false, true);
    sc_upper->add_option("--ells", ells_str, "comma-separated eigenvalue logs")
        ->required();
    sc_upper->add_flag("--raw-logs", raw_logs, "skip the max(0,.) clamp");

    auto* sc_cover = app.add_subcommand("cover", "covering-count table");
    add_common(sc_cover, true, true);
    sc_cover->add_option("--n-min", n_min, "first n")->required();
    sc_cover->add_option("--n-max", n_max, "last n")->required();
    sc_cover->add_option("--strategy", strategy,
                         "major-axis|minor-axis (2D), k1|k2|k3 (3D)");

    auto* sc_sum = app.add_subcommand("sum", "partial Hausdorff sums");
    add_common(sc_sum, true, true);
    sc_sum->add_option("--s", s_exp, "exponent s in (0,2]")->required();
    sc_sum->add_option("--n-min", n_min, "first n")->required();
    sc_sum->add_option("--n-max", n_max, "last n")->required();

    auto* sc_box = app.add_subcommand("boxcount", "box-counting estimator");
    add_common(sc_box, true, true);
    sc_box->add_option("--n-min", n_min, "first n")->required();
    sc_box->add_option("--n-max", n_max, "last n")->required();
    sc_box->add_option("--jmin", j_min, "coarsest dyadic level");
    sc_box->add_option("--jmax", j_max, "finest dyadic level");
    sc_box->add_option("--fit-lo", fit_lo, "fit window start (default jmin+2)");
    sc_box->add_option("--fit-hi", fit_hi, "fit window end (default jmax-1)");

    auto* sc_measure = app.add_subcommand("measure", "Monte-Carlo mu_n scan");
    add_common(sc_measure, true, true);
    sc_measure->add_option("--n", n, "power n")->required();
    sc_measure->add_option("--center", center_str, "ball center \"x,y\" (floats)");
    sc_measure->add_option("--radii", radii_str, "comma-separated radius grid");
    sc_measure->add_option("--samples", samples, "Monte-Carlo sample count");

    auto* sc_equi = app.add_subcommand("equidist", "Diophantine profile of gamma");
    add_common(sc_equi, true, false);
    sc_equi->add_option("--depth", depth, "continued-fraction depth");
    sc_equi->add_option("--Q", q_bound, "denominator bound for cStar");
    sc_equi->add_option("--N", horizon, "horizon for counting/discrepancy");
    sc_equi->add_option("--interval", interval_str, "counting interval \"a,b\"");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    c.threads = threads_from_env(c.threads);

    ordered_json config;
    config["subcommand"] = name;
    if (!c.matrix_literal.empty()) config["matrix"] = c.matrix_literal;
    if (sub->count("--tau")) config["tau"] = c.tau;
    config["seed"] = c.seed;
    config["threads"] = c.threads;
    config["format"] = c.format;
    for (const auto* opt : sub->parse_order())
        if (opt->count() && opt->get_name() != "--out")
            config[opt->get_name().substr(2)] = opt->results().front();

    try {
        ordered_json result;
        std::string csv_body;

        if (name == "validate") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            Validation v = validate_hyperbolic(a);
            result["accepted"] = v.accepted;
            result["reason"] = v.reason;
            if (v.spectral) result["spectral"] = spectral_json(*v.spectral);
            if (v.spectral3) {
                result["m"] = v.spectral3->m.get_str();
                result["block"] = spectral_json(v.spectral3->block);
            }
            if (!v.accepted) {
                std::cerr << "rejected: " << v.reason << "\n";
                ordered_json out = provenance(config);
                out["result"] = result;
                write_output(c.out, out.dump(2) + "\n");
                return 2;
            }
        } else if (name == "periodic") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            if (a.dim() == 3) {
                Grid3Report rep = grid_3d_periodic(a, n, cap);
                result["n"] = n;
                result["s_n"] = rep.s_n.get_str();
                result["grid_count"] = rep.grid_count.get_str();
                result["det_count"] = rep.det_count.get_str();
                result["counts_agree"] = rep.counts_agree;
                result["note"] = rep.note;
                result["listed"] = rep.set.listed;
                if (rep.set.listed) {
                    ordered_json pts = ordered_json::array();
                    for (const auto& p : rep.set.points)
                        pts.push_back({p.str(0), p.str(1), p.str(2)});
                    result["points"] = pts;
                }
            } else {
                PeriodicPointSet set =
                    structure_only ? periodic_structure(a, n)
                    : oracle       ? brute_force_periodic(a, n)
                                   : enumerate_periodic(a, n, cap);
                result["n"] = n;
                result["count"] = set.count.get_str();
                ordered_json dens = ordered_json::array();
                for (const auto& d : set.denominators) dens.push_back(d.get_str());
                result["denominators"] = dens;
                result["listed"] = set.listed;
                if (set.listed) {
                    ordered_json pts = ordered_json::array();
                    csv_body = "x0,x1\n";
                    for (const auto& p : set.points) {
                        pts.push_back({p.str(0), p.str(1)});
                        csv_body += p.str(0) + "," + p.str(1) + "\n";
                    }
                    result["points"] = pts;
                }
            }
        } else if (name == "geometry") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            auto parts = split(center_str, ',');
            if (parts.size() != 2) throw ParseError("center needs two coordinates");
            RationalPoint center;
            center.dim = 2;
            mpq_class x0 = parse_fraction(parts[0]), x1 = parse_fraction(parts[1]);
            mpz_class den;
            mpz_lcm(den.get_mpz_t(), x0.get_den().get_mpz_t(),
                    x1.get_den().get_mpz_t());
            center.den = den;
            center.num[0] = x0.get_num() * (den / x0.get_den());
            center.num[1] = x1.get_num() * (den / x1.get_den());
            RecurrenceComponent comp = component_geometry(a, c.tau, n, center);
            SeparationProfile sep = separation_profile(a, c.tau, n);
            result["n"] = n;
            result["min_disjoint_n"] = min_disjoint_n(c.tau);
            result["center"] = {comp.center.str(0), comp.center.str(1)};
            result["semi_axis_major"] = comp.semi_axis_major;
            result["semi_axis_minor"] = comp.semi_axis_minor;
            result["axis_unstable"] = comp.axis_unstable;
            result["axis_stable"] = comp.axis_stable;
            result["inscribed"] = comp.inscribed;
            result["circumscribed"] = comp.circumscribed;
            result["regime"] = sep.regime == Regime::Case1   ? "Case1"
                               : sep.regime == Regime::Case2 ? "Case2"
                                                             : "Case3";
            result["gap_unstable"] = sep.gap_unstable;
            result["gap_stable"] = sep.gap_stable;
            csv_body = "vertex_set,x,y\n";
            for (const auto& v : comp.inscribed)
                csv_body += "inscribed," + std::to_string(v[0]) + "," +
                            std::to_string(v[1]) + "\n";
            for (const auto& v : comp.circumscribed)
                csv_body += "circumscribed," + std::to_string(v[0]) + "," +
                            std::to_string(v[1]) + "\n";
        } else if (name == "dim") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            SpectralData s = eigen_data(a);
            result = dimension_json(dim_2d(s.log_abs_lambda2, c.tau));
            result["log_abs_lambda2"] = s.log_abs_lambda2;
        } else if (name == "dim3d") {
            if (!c.matrix_literal.empty()) {
                IntMatrix a = parse_matrix(c.matrix_literal);
                Validation v = validate_hyperbolic(a);
                if (!v.accepted || !v.spectral3)
                    throw HypothesisError("dim3d requires the block family: " + v.reason);
                m_param = v.spectral3->m.get_si();
                log_lambda = v.spectral3->block.log_abs_lambda2;
            }
            if (m_param <= 1 || !(log_lambda > 0))
                throw ParseError("dim3d needs --matrix or both --m and --log-lambda");
            result = dimension_json(dim_3d_example(m_param, log_lambda, c.tau));
            result["m"] = m_param;
            result["log_lambda"] = log_lambda;
        } else if (name == "upper-bound") {
            std::vector<double> ells;
            for (const auto& part : split(ells_str, ','))
                ells.push_back(std::stod(part));
            result = dimension_json(generic_upper_bound(ells, c.tau, raw_logs));
        } else if (name == "cover") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            ordered_json rows = ordered_json::array();
            csv_body = "n,strategy,radius,count,log_radius,log_count\n";
            for (unsigned long nn = n_min; nn <= n_max; ++nn) {
                CoverRow row = covering_counts(a, c.tau, nn, strategy);
                rows.push_back({{"n", nn},
                                {"strategy", row.strategy},
                                {"radius", row.radius},
                                {"count", row.count},
                                {"log_radius", row.log_radius},
                                {"log_count", row.log_count}});
                csv_body += std::to_string(nn) + "," + row.strategy + "," +
                            std::to_string(row.radius) + "," +
                            std::to_string(row.count) + "," +
                            std::to_string(row.log_radius) + "," +
                            std::to_string(row.log_count) + "\n";
            }
            result["rows"] = rows;
        } else if (name == "sum") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            PartialSumReport rep = hausdorff_partial_sum(a, c.tau, s_exp, n_min, n_max);
            result["s"] = rep.s;
            result["n_min"] = rep.n_min;
            result["n_max"] = rep.n_max;
            result["log_terms"] = rep.log_terms;
            result["sum"] = rep.sum;
            result["classification"] =
                rep.classification == TailClass::ShrinkingTail  ? "ShrinkingTail"
                : rep.classification == TailClass::GrowingTerms ? "GrowingTerms"
                                                                : "Indeterminate";
            csv_body = "n,log_term\n";
            for (std::size_t i = 0; i < rep.log_terms.size(); ++i)
                csv_body += std::to_string(n_min + i) + "," +
                            std::to_string(rep.log_terms[i]) + "\n";
        } else if (name == "boxcount") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            BoxCountReport rep = box_count(a, c.tau, n_min, n_max, j_min, j_max,
                                           fit_lo, fit_hi, c.threads);
            result["dim"] = rep.dim;
            result["n_min"] = rep.n_min;
            result["n_max"] = rep.n_max;
            result["scales"] = rep.scales;
            result["counts"] = rep.counts;
            result["fitted_slope"] = rep.fitted_slope;
            result["fit_window"] = {rep.fit_j_min, rep.fit_j_max};
            result["r_squared"] = rep.r_squared;
            result["warnings"] = rep.warnings;
            csv_body = "scale,count\n";
            for (std::size_t i = 0; i < rep.scales.size(); ++i)
                csv_body += std::to_string(rep.scales[i]) + "," +
                            std::to_string(rep.counts[i]) + "\n";
        } else if (name == "measure") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            auto parts = split(center_str, ',');
            if (parts.size() < 2) throw ParseError("center needs two coordinates");
            std::array<double, 3> center{std::stod(parts[0]), std::stod(parts[1]),
                                         parts.size() > 2 ? std::stod(parts[2]) : 0.0};
            std::vector<double> radii;
            for (const auto& part : split(radii_str, ','))
                radii.push_back(std::stod(part));
            MeasureScanReport rep =
                measure_scan(a, c.tau, n, center, radii, samples, c.seed);
            result["n"] = rep.n;
            result["center"] = {rep.center[0], rep.center[1]};
            result["radii"] = rep.radii;
            ordered_json mus = ordered_json::array();
            for (const auto& m : rep.mu)
                mus.push_back({{"value", m.value},
                               {"stderr", m.stderr_},
                               {"hits", m.hits},
                               {"samples", m.samples}});
            result["mu"] = mus;
            result["ratios_to_lebesgue"] = rep.ratios_to_lebesgue;
            result["dropped_radii"] = rep.dropped_radii;
            result["fitted_local_exponent"] = rep.fitted_local_exponent;
            result["predicted_exponent"] = rep.predicted_exponent;
            result["regime"] = rep.regime;
            csv_body = "r,mu,stderr\n";
            for (std::size_t i = 0; i < rep.radii.size(); ++i)
                csv_body += std::to_string(rep.radii[i]) + "," +
                            std::to_string(rep.mu[i].value) + "," +
                            std::to_string(rep.mu[i].stderr_) + "\n";
        } else if (name == "equidist") {
            IntMatrix a = parse_matrix(c.matrix_literal);
            SpectralData s = eigen_data(a);
            DiophantineProfile prof = continued_fraction(s.gamma, depth);
            result["alpha"] = s.gamma.str();
            ordered_json qs = ordered_json::array();
            for (const auto& q : prof.quotients) qs.push_back(q.get_str());
            result["quotients"] = qs;
            result["preperiod"] = prof.preperiod;
            result["period"] = prof.period;
            ordered_json cv = ordered_json::array();
            for (const auto& [p, q] : prof.convergents)
                cv.push_back({p.get_str(), q.get_str()});
            result["convergents"] = cv;
            mpz_class qb(q_bound);
            result["c_star"] = badly_approximable_constant(s.gamma, qb);
            result["liminf_proxy"] = liminf_constant_proxy(s.gamma, qb);
            if (horizon > 0) {
                result["star_discrepancy"] = star_discrepancy(s.gamma, horizon);
                if (!interval_str.empty()) {
                    auto parts = split(interval_str, ',');
                    if (parts.size() != 2)
                        throw ParseError("interval needs two endpoints");
                    CountingReport cr = counting_function(
                        s.gamma, std::stod(parts[0]), std::stod(parts[1]), horizon);
                    result["counting"] = {{"a", cr.a},
                                          {"b", cr.b},
                                          {"N", cr.horizon},
                                          {"count", cr.count},
                                          {"ratio", cr.ratio}};
                }
            }
        }

        if (c.format == "csv") {
            if (csv_body.empty())
                throw ParseError("csv format not available for subcommand " + name);
            write_output(c.out, csv_header(config) + csv_body);
        } else {
            ordered_json out = provenance(config);
            out["result"] = result;
            write_output(c.out, out.dump(2) + "\n");
        }
        return 0;
    } catch (const CapExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const OracleTooLarge& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientSamples& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const HypothesisError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const RationalInput& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const OddPowerWithNegativeEigenvalue& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const RegimeError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const SingularError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace torrec
