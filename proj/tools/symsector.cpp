// Command-line front end: every subcommand prints a JSON result to stdout
// (or --out) and drops a run manifest next to it, so reported numbers can
// be regenerated from the manifest alone.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symsector/symsector.hpp"

namespace {

using symsector::json;

int g_exit_code = 0;

struct OutputOpts {
    std::string out_path;      // empty: stdout
    std::string manifest_path; // empty: derived default
};

void add_output_flags(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--out", opts.out_path, "write the result JSON to this file");
    cmd->add_option("--manifest", opts.manifest_path,
                    "run-manifest path (default: <out>.manifest.json or <command>-manifest.json)");
}

int resolve_workers(int flag_value) {
    if (const char* env = std::getenv("SYMSECTOR_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (...) {
            throw symsector::InputError("SYMSECTOR_WORKERS is not a positive integer");
        }
    }
    return flag_value;
}

void emit(const std::string& command, const json& parameters, const json& result,
          double duration_seconds, const OutputOpts& opts,
          std::optional<std::uint64_t> seed = std::nullopt) {
    const std::string text = symsector::dump_json(result);
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_path);
        if (!out) throw symsector::InputError("cannot write " + opts.out_path);
        out << text;
    }
    json manifest{{"command", command},
                  {"parameters", parameters},
                  {"seed", seed ? json(*seed) : json(nullptr)},
                  {"tool_version", symsector::kVersion},
                  {"duration_seconds", duration_seconds},
                  {"result", result}};
    std::string path = opts.manifest_path;
    if (path.empty())
        path = opts.out_path.empty() ? command + "-manifest.json"
                                     : opts.out_path + ".manifest.json";
    symsector::write_json_file(path, manifest);
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

std::vector<int> parse_composition_counts(const std::string& text) {
    std::vector<int> counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            counts.push_back(std::stoi(item));
        } catch (...) {
            throw symsector::InputError("--k expects comma-separated integers, got '" + text + "'");
        }
    }
    if (counts.empty())
        throw symsector::InputError("--k expects comma-separated integers");
    return counts;
}

json gauge_params_to_json(const symsector::GaugeParams& gp) {
    return json{{"angles", gp.angles}, {"phases", gp.phases}};
}

json bound_result_to_json(const symsector::BoundResult& r) {
    return json{{"minimum", r.minimum},
                {"argmin", gauge_params_to_json(r.argmin)},
                {"evaluations", r.evaluations},
                {"stage", r.stage == symsector::BoundResult::Stage::Grid ? "grid" : "refined"},
                {"grid_step", r.grid_step},
                {"grid_minimum", r.grid_minimum},
                {"grid_argmin", gauge_params_to_json(r.grid_argmin)}};
}

std::vector<int> mask_to_particles(symsector::SubsetMask mask, int n) {
    std::vector<int> particles;
    for (int m = 1; m <= n; ++m)
        if (mask & (1u << (m - 1))) particles.push_back(m);
    return particles;
}

// ---------------------------------------------------------------------- dicke

void setup_dicke(CLI::App& app) {
    auto* cmd = app.add_subcommand("dicke", "emit one Dicke state or the full labeled basis");
    auto d = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto k_text = std::make_shared<std::string>();
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--d", *d, "local dimension")->required();
    cmd->add_option("--n", *n, "number of qudits")->required();
    cmd->add_option("--k", *k_text, "composition, e.g. 1,0,2 (omit to list the basis)");
    add_output_flags(cmd, *opts);
    cmd->callback([d, n, k_text, opts]() {
        Stopwatch timer;
        json params{{"d", *d}, {"n", *n}};
        json result;
        if (!k_text->empty()) {
            params["k"] = *k_text;
            const symsector::Composition k{parse_composition_counts(*k_text)};
            if (k.d() != *d || k.n() != *n)
                throw symsector::InputError("--k must have d entries summing to n");
            const symsector::PureState psi = symsector::dicke_state(k);
            result = symsector::vector_to_json(psi.amplitudes, psi.d, psi.n);
            result["k"] = k.counts;
            result["orbit_size"] = symsector::multinomial(k);
        } else {
            json states = json::array();
            const auto comps = symsector::enumerate_compositions(*d, *n);
            for (const auto& k : comps) {
                const symsector::PureState psi = symsector::dicke_state(k);
                json entry = symsector::vector_to_json(psi.amplitudes, psi.d, psi.n);
                entry["k"] = k.counts;
                entry["orbit_size"] = symsector::multinomial(k);
                states.push_back(std::move(entry));
            }
            result = json{{"d", *d}, {"n", *n},
                          {"count", comps.size()}, {"states", std::move(states)}};
        }
        emit("dicke", params, result, timer.seconds(), *opts);
    });
}

// ------------------------------------------------------------------ projector

void setup_projector(CLI::App& app) {
    auto* cmd = app.add_subcommand("projector",
                                   "emit the symmetric projector and verify its invariants");
    auto d = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto method = std::make_shared<std::string>("dicke");
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--d", *d, "local dimension")->required();
    cmd->add_option("--n", *n, "number of qudits")->required();
    cmd->add_option("--method", *method, "construction: dicke or perm")
        ->check(CLI::IsMember({"dicke", "perm"}));
    add_output_flags(cmd, *opts);
    cmd->callback([d, n, method, opts]() {
        Stopwatch timer;
        const json params{{"d", *d}, {"n", *n}, {"method", *method}};
        const symsector::Projector pi = (*method == "dicke")
                                            ? symsector::projector_dicke(*d, *n)
                                            : symsector::projector_permutation(*d, *n);
        const symsector::Projector other = (*method == "dicke")
                                               ? symsector::projector_permutation(*d, *n)
                                               : symsector::projector_dicke(*d, *n);
        json result = symsector::matrix_to_json(pi.matrix, *d, *n);
        const double sym_dim =
            static_cast<double>(symsector::binomial_checked(*n + *d - 1, *d - 1));
        const double idem = symsector::max_abs_diff(pi.matrix * pi.matrix, pi.matrix);
        const double herm = symsector::hermiticity_defect(pi.matrix);
        const double cross = symsector::max_abs_diff(pi.matrix, other.matrix);
        const double trace_defect = std::abs(pi.matrix.trace().real() - sym_dim);
        result["diagnostics"] = json{{"symmetric_dimension", sym_dim},
                                     {"trace", pi.matrix.trace().real()},
                                     {"idempotency_defect", idem},
                                     {"hermiticity_defect", herm},
                                     {"cross_construction_defect", cross},
                                     {"invariants_ok", idem <= 1e-10 && herm <= 1e-12 &&
                                                           cross <= 1e-12 &&
                                                           trace_defect <= 1e-9}};
        emit("projector", params, result, timer.seconds(), *opts);
    });
}

// -------------------------------------------------------------------- overlap

void setup_overlap(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "overlap", "symmetric-sector norm of a product state by three independent routes");
    auto file = std::make_shared<std::string>();
    auto lax = std::make_shared<bool>(false);
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--file", *file, "F-matrix JSON file (n rows, d columns)")->required();
    cmd->add_flag("--lax", *lax, "skip the unit-row check");
    add_output_flags(cmd, *opts);
    cmd->callback([file, lax, opts]() {
        Stopwatch timer;
        const json params{{"file", *file}, {"lax", *lax}};
        const symsector::FMatrix f = symsector::fmatrix_from_file(*file);
        symsector::validate_rows(f, *lax ? symsector::RowNorm::Lax
                                         : symsector::RowNorm::Strict);
        const double via_dicke = symsector::symmetric_norm_squared(f);
        const double via_cycles = symsector::symmetric_norm_squared_cycles(f);
        const symsector::Projector pi = symsector::projector_dicke(f.d, f.n);
        const symsector::PureState psi =
            symsector::product_state(f, symsector::RowNorm::Lax);
        const double via_projector =
            symsector::inner(psi.amplitudes, pi.matrix * psi.amplitudes).real();
        const double dev = std::max({std::abs(via_dicke - via_cycles),
                                     std::abs(via_dicke - via_projector),
                                     std::abs(via_cycles - via_projector)});
        const json result{{"d", f.d},
                          {"n", f.n},
                          {"norm_squared", via_dicke},
                          {"routes", json{{"dicke_sum", via_dicke},
                                          {"cycle_sum", via_cycles},
                                          {"projector_form", via_projector}}},
                          {"max_route_deviation", dev},
                          {"routes_agree", dev <= 1e-10}};
        emit("overlap", params, result, timer.seconds(), *opts);
    });
}

// ------------------------------------------------------------------ min-bound

void setup_min_bound(CLI::App& app) {
    auto* cmd = app.add_subcommand("min-bound",
                                   "minimize the symmetric overlap over product states");
    struct Args {
        int n = 0, d = 0;
        int grid = 41, restarts = 8, workers = 1;
        double tol = 0.0; // 0: per-mode default
        bool specialized = false, exact_form = false, assert_paper = false, grid_only = false;
        std::string csv;
        OutputOpts out;
    };
    auto a = std::make_shared<Args>();
    cmd->add_option("--n", a->n, "number of qudits")->required();
    cmd->add_option("--d", a->d, "local dimension")->required();
    cmd->add_option("--grid", a->grid, "grid points per dimension (default 41)");
    cmd->add_option("--restarts", a->restarts, "refinement restarts (default 8)");
    cmd->add_option("--workers", a->workers, "parallel grid workers (default 1)");
    cmd->add_option("--tol", a->tol, "tolerance for --assert-paper");
    cmd->add_flag("--specialized", a->specialized,
                  "use the reduced four-qubit objective (requires n=4, d=2)");
    cmd->add_flag("--exact-form", a->exact_form,
                  "with --specialized: use the exact quadratic part instead of the "
                  "reference one");
    cmd->add_flag("--grid-only", a->grid_only, "skip simplex refinement");
    cmd->add_flag("--assert-paper", a->assert_paper,
                  "exit 1 if the minimum deviates from the stored reference value");
    cmd->add_option("--csv", a->csv, "dump per-dimension grid slices through the argmin");
    add_output_flags(cmd, a->out);
    cmd->callback([a]() {
        Stopwatch timer;
        symsector::OptimizerConfig config;
        config.grid_points = a->grid;
        config.restarts = a->restarts;
        config.workers = resolve_workers(a->workers);
        if (a->grid_only)
            config.refinement = symsector::OptimizerConfig::Refinement::None;

        if (a->specialized && (a->n != 4 || a->d != 2))
            throw symsector::InputError("--specialized applies to n=4, d=2 only");

        const symsector::BoundResult result =
            a->specialized ? symsector::minimize_n4d2(config, a->exact_form)
                           : symsector::minimize(a->n, a->d, config);

        json out = bound_result_to_json(result);
        out["n"] = a->n;
        out["d"] = a->d;
        out["specialized"] = a->specialized;
        const std::optional<double> bound = symsector::known_bound(a->n, a->d);
        out["known_bound"] = bound ? json(*bound) : json(nullptr);

        constexpr double kReferenceReducedMin = 1.3572 / 24.0;
        if (a->specialized && !a->exact_form) {
            out["reference_minimum"] = kReferenceReducedMin;
            out["below_reference"] = result.minimum < kReferenceReducedMin - 5e-4;
        }

        if (!a->csv.empty()) {
            std::ofstream csv(a->csv);
            if (!csv) throw symsector::InputError("cannot write " + a->csv);
            csv.precision(17);
            csv << "dim,index,value,objective\n";
            if (a->specialized) {
                const auto obj = a->exact_form ? symsector::objective_n4d2_exact
                                               : symsector::objective_n4d2;
                const auto& gp = result.argmin;
                double q[4] = {std::cos(gp.angles[0]) * std::cos(gp.angles[0]),
                               std::cos(gp.angles[1]) * std::cos(gp.angles[1]),
                               std::cos(gp.angles[2]) * std::cos(gp.angles[2]),
                               gp.phases[0] / symsector::kTwoPi};
                for (int dim = 0; dim < 4; ++dim) {
                    double probe[4] = {q[0], q[1], q[2], q[3]};
                    for (int i = 0; i < a->grid; ++i) {
                        probe[dim] = static_cast<double>(i) / (a->grid - 1);
                        csv << dim << ',' << i << ',' << probe[dim] << ','
                            << obj(probe[0], probe[1], probe[2], probe[3]) << '\n';
                    }
                }
            } else {
                const symsector::GaugeLayout layout = symsector::GaugeLayout::of(a->n, a->d);
                symsector::GaugeParams gp = result.argmin;
                for (int dim = 0; dim < layout.dimension(); ++dim) {
                    const bool is_phase = dim >= layout.angle_count;
                    double& slot = is_phase ? gp.phases[static_cast<std::size_t>(
                                                  dim - layout.angle_count)]
                                            : gp.angles[static_cast<std::size_t>(dim)];
                    const double saved = slot;
                    const double span = is_phase ? symsector::kTwoPi : symsector::kPi;
                    for (int i = 0; i < a->grid; ++i) {
                        slot = span * static_cast<double>(i) /
                               (is_phase ? a->grid : a->grid - 1);
                        csv << dim << ',' << i << ',' << slot << ','
                            << symsector::objective(gp, a->n, a->d) << '\n';
                    }
                    slot = saved;
                }
            }
        }

        bool assertion_failed = false;
        if (a->assert_paper) {
            double reference = 0.0, tolerance = 0.0;
            bool have_reference = false;
            if (a->specialized && !a->exact_form) {
                reference = kReferenceReducedMin;
                tolerance = a->tol > 0.0 ? a->tol : 5e-4;
                have_reference = true;
            } else if (bound) {
                reference = *bound;
                tolerance = a->tol > 0.0 ? a->tol : 1e-6;
                have_reference = true;
            }
            if (!have_reference)
                throw symsector::InputError(
                    "--assert-paper: no reference value for this configuration");
            out["assert"] = json{{"reference", reference}, {"tolerance", tolerance}};
            if (std::abs(result.minimum - reference) > tolerance) {
                assertion_failed = true;
                std::cerr << "assertion failed: minimum " << result.minimum
                          << " deviates from reference " << reference << " by more than "
                          << tolerance << "\n";
            }
        }

        json params{{"n", a->n},       {"d", a->d},
                    {"grid", a->grid}, {"restarts", a->restarts},
                    {"workers", config.workers}, {"specialized", a->specialized},
                    {"exact_form", a->exact_form}, {"grid_only", a->grid_only},
                    {"assert_paper", a->assert_paper}};
        emit("min-bound", params, out, timer.seconds(), a->out);
        if (assertion_failed) g_exit_code = 1;
    });
}

// ---------------------------------------------------------------- lemma-check

void setup_lemma_check(CLI::App& app) {
    auto* cmd = app.add_subcommand("lemma-check",
                                   "randomized falsification sweep for the zero-row property");
    struct Args {
        int n = 3, d = 2, trials = 1000;
        std::uint64_t seed = 0;
        double row_floor = 0.1, tol = 1e-8;
        OutputOpts out;
    };
    auto a = std::make_shared<Args>();
    cmd->add_option("--n", a->n, "rows (particles)")->required();
    cmd->add_option("--d", a->d, "columns (local dimension)")->required();
    cmd->add_option("--trials", a->trials, "number of random matrices (default 1000)");
    cmd->add_option("--seed", a->seed, "master seed (default 0)");
    cmd->add_option("--row-floor", a->row_floor, "minimum row norm (default 0.1)");
    cmd->add_option("--tol", a->tol, "orbit-sum tolerance (default 1e-8)");
    add_output_flags(cmd, a->out);
    cmd->callback([a]() {
        Stopwatch timer;
        const symsector::LemmaFuzzReport report =
            symsector::lemma_fuzz(a->n, a->d, a->trials, a->seed, a->row_floor, a->tol);
        const json result{{"n", report.n},
                          {"d", report.d},
                          {"trials", report.trials},
                          {"seed", report.seed},
                          {"row_floor", report.row_floor},
                          {"tolerance", report.tolerance},
                          {"lemma_violations", report.lemma_violations},
                          {"violating_trials", report.violating_trials},
                          {"min_max_abs_sum", report.min_max_abs_sum}};
        const json params{{"n", a->n},           {"d", a->d},
                          {"trials", a->trials}, {"seed", a->seed},
                          {"row_floor", a->row_floor}, {"tol", a->tol}};
        emit("lemma-check", params, result, timer.seconds(), a->out, a->seed);
        if (report.lemma_violations > 0) {
            std::cerr << "lemma violation: " << report.lemma_violations
                      << " random matrices satisfied every orbit-sum condition\n";
            g_exit_code = 1;
        }
    });
}

// --------------------------------------------------------------- witness-eval

void setup_witness_eval(CLI::App& app) {
    auto* cmd = app.add_subcommand("witness-eval",
                                   "evaluate Tr[(Pi - B 1) rho] for a density-matrix file");
    struct Args {
        std::string file;
        double bound = -1.0;
        OutputOpts out;
    };
    auto a = std::make_shared<Args>();
    cmd->add_option("--file", a->file, "density-matrix JSON file")->required();
    cmd->add_option("--bound", a->bound, "witness offset B (default: certified bound)");
    add_output_flags(cmd, a->out);
    cmd->callback([a]() {
        Stopwatch timer;
        const symsector::DensityMatrix rho = symsector::density_from_file(a->file);
        const symsector::Witness w =
            a->bound >= 0.0 ? symsector::make_witness(rho.d, rho.n, a->bound)
                            : symsector::make_witness(rho.d, rho.n);
        const double value = symsector::witness_value(w, rho);
        const json result{{"d", rho.d},
                          {"n", rho.n},
                          {"bound", w.bound},
                          {"symmetric_trace", value + w.bound},
                          {"value", value},
                          {"entangled", value < 0.0}};
        const json params{{"file", a->file}, {"bound", a->bound >= 0.0 ? json(a->bound) : json(nullptr)}};
        emit("witness-eval", params, result, timer.seconds(), a->out);
    });
}

// ------------------------------------------------------------------ ppt-check

void setup_ppt_check(CLI::App& app) {
    auto* cmd = app.add_subcommand("ppt-check",
                                   "partial-transposition sweep for a density-matrix file");
    struct Args {
        std::string file;
        double tol = 1e-9;
        OutputOpts out;
    };
    auto a = std::make_shared<Args>();
    cmd->add_option("--file", a->file, "density-matrix JSON file")->required();
    cmd->add_option("--tol", a->tol, "relative PSD tolerance (default 1e-9)");
    add_output_flags(cmd, a->out);
    cmd->callback([a]() {
        Stopwatch timer;
        const symsector::DensityMatrix rho = symsector::density_from_file(a->file);
        const symsector::PptReport report = symsector::ppt_sweep(rho, a->tol);
        json subsets = json::array();
        for (const auto& s : report.subsets)
            subsets.push_back(json{{"particles", mask_to_particles(s.subset, rho.n)},
                                   {"min_eigenvalue", s.min_eigenvalue},
                                   {"psd", s.psd},
                                   {"boundary", s.boundary}});
        const json result{{"d", rho.d},
                          {"n", rho.n},
                          {"subsets_checked", report.subsets_checked},
                          {"is_ppt", report.is_ppt},
                          {"subsets", std::move(subsets)}};
        const json params{{"file", a->file}, {"tol", a->tol}};
        emit("ppt-check", params, result, timer.seconds(), a->out);
    });
}

// ---------------------------------------------------------------- werner-scan

void setup_werner_scan(CLI::App& app) {
    auto* cmd = app.add_subcommand("werner-scan",
                                   "sweep the Werner family: witness value and PPT verdict");
    struct Args {
        double p_min = 0.0, p_max = 1.0;
        int steps = 101;
        int d = 2, n = 3;
        std::string csv;
        OutputOpts out;
    };
    auto a = std::make_shared<Args>();
    cmd->add_option("--p-min", a->p_min, "lower end of the sweep (default 0)");
    cmd->add_option("--p-max", a->p_max, "upper end of the sweep (default 1)");
    cmd->add_option("--steps", a->steps, "number of sample points (default 101)");
    cmd->add_option("--d", a->d, "local dimension (default 2)");
    cmd->add_option("--n", a->n, "number of qudits (default 3)");
    cmd->add_option("--csv", a->csv, "also write the table as CSV");
    add_output_flags(cmd, a->out);
    cmd->callback([a]() {
        Stopwatch timer;
        if (a->steps < 1)
            throw symsector::InputError("--steps must be >= 1");
        if (a->p_min < 0.0 || a->p_max > 1.0 || a->p_min > a->p_max ||
            (a->p_min == a->p_max && a->steps > 1))
            throw symsector::InputError("require 0 <= p-min < p-max <= 1");
        const std::optional<double> bound = symsector::known_bound(a->n, a->d);

        json rows = json::array();
        std::ofstream csv;
        if (!a->csv.empty()) {
            csv.open(a->csv);
            if (!csv) throw symsector::InputError("cannot write " + a->csv);
            csv.precision(17);
            csv << "p,witness_value,min_pt_eigenvalue,is_ppt\n";
        }
        for (int i = 0; i < a->steps; ++i) {
            const double p =
                a->steps == 1 ? a->p_min
                              : a->p_min + (a->p_max - a->p_min) * static_cast<double>(i) /
                                               static_cast<double>(a->steps - 1);
            const symsector::DensityMatrix rho = symsector::werner_state(p, a->d, a->n);
            const symsector::PptReport report = symsector::ppt_sweep(rho);
            double min_eig = std::numeric_limits<double>::infinity();
            for (const auto& s : report.subsets) min_eig = std::min(min_eig, s.min_eigenvalue);
            json row{{"p", p},
                     {"min_pt_eigenvalue", min_eig},
                     {"is_ppt", report.is_ppt}};
            if (bound) {
                const double wv = symsector::symmetric_trace(rho) - *bound;
                row["witness_value"] = wv;
                if (csv.is_open())
                    csv << p << ',' << wv << ',' << min_eig << ',' << report.is_ppt << '\n';
            } else {
                row["witness_value"] = nullptr;
                if (csv.is_open())
                    csv << p << ",," << min_eig << ',' << report.is_ppt << '\n';
            }
            rows.push_back(std::move(row));
        }

        json result{{"d", a->d}, {"n", a->n}, {"rows", std::move(rows)}};
        if (a->d == 2 && a->n == 3) {
            const symsector::WernerThresholds t = symsector::werner_thresholds();
            result["thresholds"] = json{{"ppt_boundary", t.ppt_boundary},
                                        {"witness_threshold", t.witness_threshold}};
        }
        const json params{{"p_min", a->p_min}, {"p_max", a->p_max}, {"steps", a->steps},
                          {"d", a->d},         {"n", a->n}};
        emit("werner-scan", params, result, timer.seconds(), a->out);
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric-sector toolkit: Dicke bases, projectors, separable-overlap "
                 "bounds, entanglement witnesses and partial-transposition tests"};
    app.set_version_flag("--version", symsector::kVersion);
    app.require_subcommand(1);

    setup_dicke(app);
    setup_projector(app);
    setup_overlap(app);
    setup_min_bound(app);
    setup_lemma_check(app);
    setup_witness_eval(app);
    setup_ppt_check(app);
    setup_werner_scan(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const symsector::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const symsector::SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return g_exit_code;
}
