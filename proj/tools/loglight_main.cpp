// Command-line front end: run named experiments, custom fits, and Laplace
// solves from a JSON config (with flag overrides); emit CSV/JSON artifacts.

#include "loglight/fit.hpp"
#include "loglight/laplace.hpp"
#include "loglight/poles.hpp"
#include "loglight/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace loglight;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double parse_double(const std::string& s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw UsageError("malformed number '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw UsageError("malformed integer '" + s + "'");
    return v;
}

/// "lo:hi:M" -> logspace grid parameters.
struct GridSpec {
    double lo_exp = -24.0;
    double hi_exp = 0.0;
    int count = 1000;
};

GridSpec parse_grid(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 3)
        throw UsageError("malformed grid spec '" + s + "' (want lo:hi:M)");
    GridSpec g;
    g.lo_exp = parse_double(parts[0]);
    g.hi_exp = parse_double(parts[1]);
    g.count = parse_int(parts[2]);
    if (!(g.lo_exp < g.hi_exp) || g.count < 2)
        throw UsageError("invalid grid spec '" + s + "'");
    return g;
}

/// "10" -> {10}; "2:2:20" -> {2,4,...,20}.
std::vector<int> parse_n_values(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() == 1) return {parse_int(parts[0])};
    if (parts.size() != 3)
        throw UsageError("malformed n spec '" + s + "' (want n or start:step:stop)");
    int start = parse_int(parts[0]), step = parse_int(parts[1]), stop = parse_int(parts[2]);
    if (step <= 0 || stop < start) throw UsageError("invalid n range '" + s + "'");
    std::vector<int> out;
    for (int n = start; n <= stop; n += step) out.push_back(n);
    return out;
}

Json load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("config parse error in " + path.string() + ": " + e.what());
    }
}

/// Apply config values for options the user did not pass on the command
/// line; reject unknown keys.
void apply_config(const Json& config, CLI::App* cmd,
                  const std::map<std::string, std::function<void(const Json&)>>& setters) {
    if (!config.is_object()) throw UsageError("config root must be a JSON object");
    for (const auto& [key, value] : config.items()) {
        auto it = setters.find(key);
        if (it == setters.end())
            throw UsageError("unknown config field '" + key + "' for command " +
                             cmd->get_name());
        std::string flag = key == "arnoldi" ? "no-arnoldi" : key;
        for (char& c : flag)
            if (c == '_') c = '-';
        const CLI::Option* opt = cmd->get_option_no_throw("--" + flag);
        if (opt != nullptr && opt->count() > 0) continue;  // CLI flag wins
        it->second(value);
    }
}

std::string n_spec_from_json(const Json& v) {
    if (v.is_number_integer()) return std::to_string(v.get<int>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& e : v) {
            if (!out.empty()) out += ",";
            out += std::to_string(e.get<int>());
        }
        return out;
    }
    throw UsageError("config field 'n' must be an integer, range string, or array");
}

std::vector<int> parse_n_spec(const std::string& s) {
    if (s.find(',') == std::string::npos) return parse_n_values(s);
    std::vector<int> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(part));
    return out;
}

fs::path resolve_output_dir(const std::string& cli_value) {
    std::string dir = cli_value;
    if (dir.empty()) {
        if (const char* env = std::getenv("LOGLIGHT_OUTPUT_DIR")) dir = env;
    }
    if (dir.empty()) dir = ".";
    fs::path p(dir);
    fs::create_directories(p);
    return p;
}

ClusteredGrid make_grid(const GridSpec& g) { return logspace_grid(g.lo_exp, g.hi_exp, g.count); }

// ---------------------------------------------------------------------------
// fit1d

struct Fit1dOpts {
    std::string config;
    std::string output_dir;
    std::string target = "sqrt";
    std::string poles = "hankel";
    std::string n_spec = "10";
    double scale_factor = 0.0;  // 0: kind default (1/4 hankel, 1/2 confluent)
    int pin = 0;                // >0: pinned variant with this power
    std::string grid = "-24:0:1000";
    std::string validation_grid;  // empty: derived from grid
    int poly_degree = 0;
    bool no_arnoldi = false;
    int lawson = 0;
    std::string report_name = "report.csv";
    std::string approximant_name = "approximant.json";
    std::string curve_name = "error_curve.csv";
};

int run_fit1d(const Fit1dOpts& o) {
    if (o.target != "sqrt") throw UsageError("fit1d: unknown target '" + o.target + "'");
    auto f = [](Complex z) { return std::sqrt(z); };

    GridSpec gs = parse_grid(o.grid);
    GridSpec vs = o.validation_grid.empty()
                      ? GridSpec{std::max(gs.lo_exp, -16.0), gs.hi_exp, 4 * gs.count}
                      : parse_grid(o.validation_grid);
    std::vector<int> ns = parse_n_spec(o.n_spec);

    SampleSet samples = SampleSet::from_grid(make_grid(gs), f);
    ComplexVector val = make_grid(vs).as_vector();

    auto spec_for = [&](int n) {
        FitSpec spec;
        spec.poly_degree = o.poly_degree;
        spec.use_arnoldi = !o.no_arnoldi;
        PoleConfig cfg;
        if (o.poles == "hankel") {
            cfg = PoleConfig::hankel(n, (o.scale_factor > 0 ? o.scale_factor : 0.25) * n);
        } else if (o.poles == "confluent" || o.poles == "pinned") {
            double s0 = (o.scale_factor > 0 ? o.scale_factor : 0.5) * n;
            cfg = (o.poles == "pinned" || o.pin > 0) ? PoleConfig::pinned(n, s0, o.pin > 0 ? o.pin : 2)
                                                     : PoleConfig::confluent(n, s0);
        } else {
            throw UsageError("fit1d: unknown pole kind '" + o.poles + "'");
        }
        spec.terms = {BranchTerm{Complex(0.0, 0.0), 0.0, cfg}};
        return spec;
    };

    ReciprocalLogApproximant last;
    auto run_one = [&](int n) {
        FitSpec spec = spec_for(n);
        last = o.lawson > 0 ? lawson_refine(spec, samples, o.lawson).approx : fit(spec, samples);
        return FitOutcome{last.dof, max_error(last, f, val).err, last.training_err};
    };

    ConvergenceReport report = convergence_sweep(ns, run_one);

    fs::path dir = resolve_output_dir(o.output_dir);
    save_text_atomic(dir / o.report_name,
                     [&](std::ostream& os) { write_report_csv(os, report); });
    save_json_atomic(dir / o.approximant_name, to_json(last));
    auto curve = error_curve(last, f, val);
    save_text_atomic(dir / o.curve_name,
                     [&](std::ostream& os) { write_error_curve_csv(os, curve); });

    for (const auto& p : report.series)
        std::cout << "fit1d " << o.target << " " << o.poles << " N=" << p.N
                  << " max_err=" << p.max_err << "\n";
    std::cout << "wrote " << (dir / o.report_name).string() << ", "
              << (dir / o.approximant_name).string() << ", " << (dir / o.curve_name).string()
              << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// fit2d

struct Fit2dOpts {
    std::string config;
    std::string output_dir;
    std::string problem = "pacman";
    std::string method = "loglight";
    std::string n_spec = "5:5:45";
    double scale_factor = 1.0 / 3.0;
    int poly_degree = -1;  // -1: method default
    int per_edge = 500;
    double min_dist = 1e-14;
    bool no_arnoldi = false;
    std::string report_name = "report.csv";
    std::string approximant_name = "approximant.json";
    std::string curve_name = "error_curve.csv";
};

int run_fit2d(const Fit2dOpts& o) {
    TestProblem problem = builtin_problem(o.problem);
    if (!problem.domain || problem.real_data)
        throw UsageError("fit2d: problem '" + o.problem + "' is not a planar fit problem");
    const PlanarDomain& dom = *problem.domain;

    std::vector<int> ns = parse_n_spec(o.n_spec);
    SampleSet samples =
        SampleSet::from_grid(boundary_grid(dom, o.per_edge, o.min_dist), problem.target);
    ComplexVector val = boundary_grid(dom, 4 * o.per_edge, o.min_dist).as_vector();

    Json last_json;
    std::vector<ErrorCurvePoint> last_curve;

    auto run_one = [&](int n) {
        if (o.method == "loglight") {
            FitSpec spec;
            spec.poly_degree = o.poly_degree < 0 ? 0 : o.poly_degree;
            spec.use_arnoldi = !o.no_arnoldi;
            for (const Corner& c : dom.corners())
                spec.terms.push_back(corner_term(c, PoleConfig::confluent(n, o.scale_factor * n)));
            auto g = fit(spec, samples);
            last_json = to_json(g);
            last_curve = error_curve(g, problem.target, val);
            return FitOutcome{g.dof, max_error(g, problem.target, val).err, g.training_err};
        }
        if (o.method == "lightning") {
            LightningSpec spec;
            spec.n_per_corner = n;
            // For rational lightning a substantial polynomial part is
            // needed for the smooth component: degree n-1 makes the total
            // dof come out as N = 4n, i.e. a quarter of N in the tail.
            spec.poly_degree = o.poly_degree < 0 ? std::max(0, n - 1) : o.poly_degree;
            spec.use_arnoldi = !o.no_arnoldi;
            for (const Corner& c : dom.corners()) spec.corners.emplace_back(c.vertex, c.bisector);
            spec.pole_inside_check = [&dom](Complex z) { return dom.contains(z); };
            auto g = fit_lightning(spec, samples);
            last_json = to_json(g);
            last_curve = error_curve(g, problem.target, val);
            return FitOutcome{g.dof, max_error(g, problem.target, val).err, g.training_err};
        }
        throw UsageError("fit2d: unknown method '" + o.method + "'");
    };

    ConvergenceReport report = convergence_sweep(ns, run_one);

    fs::path dir = resolve_output_dir(o.output_dir);
    save_text_atomic(dir / o.report_name,
                     [&](std::ostream& os) { write_report_csv(os, report); });
    save_json_atomic(dir / o.approximant_name, last_json);
    save_text_atomic(dir / o.curve_name,
                     [&](std::ostream& os) { write_error_curve_csv(os, last_curve); });

    for (const auto& p : report.series)
        std::cout << "fit2d " << o.problem << " " << o.method << " N=" << p.N
                  << " max_err=" << p.max_err << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// laplace

struct LaplaceOpts {
    std::string config;
    std::string output_dir;
    std::string problem = "lshape";
    std::string method = "both";
    std::string n_spec = "2:2:20";
    double scale_factor = 1.0 / 3.0;
    int poly_degree = -1;  // -1: equal to n
    int per_edge = 500;
    double min_dist = 1e-14;
    bool no_arnoldi = false;
    std::string field;  // "nx,ny"
    std::string report_name = "report.csv";
    std::string solution_name = "solution.json";
    std::string field_name = "field.csv";
};

BoundaryData problem_data(const TestProblem& problem) {
    auto target = problem.target;
    return [target](Complex z) { return target(z).real(); };
}

int run_laplace(const LaplaceOpts& o) {
    TestProblem problem = builtin_problem(o.problem);
    if (!problem.domain || !problem.real_data)
        throw UsageError("laplace: problem '" + o.problem + "' is not a Dirichlet problem");
    const PlanarDomain& dom = *problem.domain;
    BoundaryData data = problem_data(problem);

    std::vector<int> ns = parse_n_spec(o.n_spec);
    LaplaceOptions lap;
    lap.per_edge = o.per_edge;
    lap.min_dist = o.min_dist;
    lap.use_arnoldi = !o.no_arnoldi;

    std::vector<std::string> methods;
    if (o.method == "both") {
        methods = {"loglight", "lightning"};
    } else if (o.method == "loglight" || o.method == "lightning") {
        methods = {o.method};
    } else {
        throw UsageError("laplace: unknown method '" + o.method + "'");
    }

    fs::path dir = resolve_output_dir(o.output_dir);
    HarmonicSolution last;
    for (const std::string& method : methods) {
        auto run_one = [&](int n) {
            int degree = o.poly_degree < 0 ? n : o.poly_degree;
            last = method == "loglight"
                       ? solve_dirichlet(dom, data, n, degree, o.scale_factor, lap)
                       : solve_dirichlet_lightning(dom, data, n, degree, lap);
            return FitOutcome{last.dof, last.boundary_err, last.training_err};
        };
        ConvergenceReport report = convergence_sweep(ns, run_one);

        std::string name = o.report_name;
        if (methods.size() > 1) {
            auto dot = name.rfind('.');
            name = name.substr(0, dot) + "_" + method + name.substr(dot);
        }
        save_text_atomic(dir / name, [&](std::ostream& os) { write_report_csv(os, report); });
        for (const auto& p : report.series)
            std::cout << "laplace " << o.problem << " " << method << " N=" << p.N
                      << " boundary_err=" << p.max_err << "\n";
    }

    Json sol_json{{"domain", to_json(dom)},
                  {"boundary_err", last.boundary_err},
                  {"dof", last.dof}};
    sol_json["approximant"] = std::visit([](const auto& g) { return to_json(g); }, last.g);
    save_json_atomic(dir / o.solution_name, sol_json);

    if (!o.field.empty()) {
        auto parts = split(o.field, ',');
        if (parts.size() != 2) throw UsageError("laplace: malformed field spec '" + o.field + "'");
        auto field = sample_field(last, parse_int(parts[0]), parse_int(parts[1]));
        save_text_atomic(dir / o.field_name,
                         [&](std::ostream& os) { write_field_csv(os, field); });
    }
    return 0;
}

// ---------------------------------------------------------------------------
// diagnostics

struct DiagOpts {
    std::string config;
    std::string output_dir;
    int n = 8;
    double sigma = 0.5;
    double mu = 2.0;
    double rho = 1.0;
    std::string identity_name = "phi_identity.csv";
    std::string distances_name = "interp_distances.csv";
    std::string fw_name = "fejer_walsh.csv";
};

int run_diagnostics(const DiagOpts& o) {
    fs::path dir = resolve_output_dir(o.output_dir);

    // Identity residuals between the pole/interpolation product form and
    // the closed power-sum form, at random points off the slit.
    save_text_atomic(dir / o.identity_name, [&](std::ostream& os) {
        os << std::setprecision(17) << "n,sigma,max_rel_diff\n";
        std::mt19937 rng(12345);
        for (int n = 1; n <= 15; ++n) {
            for (double sigma : {0.25, 0.5, 1.0}) {
                RealVector alphas = fejer_walsh_interp_points(n, sigma);
                ComplexVector poles = ComplexVector::Constant(n, Complex(n * sigma, 0.0));
                std::uniform_real_distribution<double> U(-1.0, 1.0);
                double worst = 0.0;
                int got = 0;
                while (got < 100) {
                    Complex s(10 * n * sigma * U(rng), 10 * n * sigma * U(rng));
                    if (std::abs(s) > 10 * n * sigma) continue;
                    if (s.real() <= 0.0 && std::abs(s.imag()) < 1e-6 * (1.0 + std::abs(s)))
                        continue;
                    ++got;
                    Complex prod = phi_product(s, alphas, poles);
                    Complex closed = phi_closed(phi_map_t(s, n, sigma).t, n);
                    worst = std::max(worst, std::abs(prod - closed) / std::abs(closed));
                }
                os << n << "," << sigma << "," << worst << "\n";
            }
        }
    });

    save_text_atomic(dir / o.distances_name, [&](std::ostream& os) {
        os << std::setprecision(17) << "j,alpha,exp_alpha\n";
        RealVector alphas = fejer_walsh_interp_points(o.n, o.sigma);
        for (int j = 1; j <= o.n; ++j)
            os << j << "," << alphas[j - 1] << "," << std::exp(alphas[j - 1]) << "\n";
    });

    save_text_atomic(dir / o.fw_name, [&](std::ostream& os) {
        os << std::setprecision(17) << "k,re_pole,im_pole,re_interp,im_interp\n";
        auto fw = fejer_walsh_poles(o.n, o.sigma, o.mu, o.rho);
        for (int k = 0; k < o.n; ++k)
            os << k + 1 << "," << fw.poles[k].real() << "," << fw.poles[k].imag() << ","
               << fw.interp[k].real() << "," << fw.interp[k].imag() << "\n";
    });

    std::cout << std::setprecision(16) << "K(0)   = " << elliptic_K(0.0) << "\n"
              << "K(0.5) = " << elliptic_K(0.5) << "\n"
              << "sn(K(0.5)|0.5) = " << jacobi_sn(Complex(elliptic_K(0.5), 0.0), 0.5) << "\n";
    std::cout << "wrote " << (dir / o.identity_name).string() << ", "
              << (dir / o.distances_name).string() << ", " << (dir / o.fw_name).string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reciprocal-log (log-lightning) approximation toolkit"};
    app.require_subcommand(1);

    Fit1dOpts f1;
    CLI::App* fit1d = app.add_subcommand("fit1d", "fit a function on [0,1] with branch point at 0");
    fit1d->add_option("--config", f1.config, "JSON config file");
    fit1d->add_option("--output-dir", f1.output_dir, "output directory");
    fit1d->add_option("--target", f1.target, "target function (sqrt)");
    fit1d->add_option("--poles", f1.poles, "pole family: hankel|confluent|pinned");
    fit1d->add_option("--n", f1.n_spec, "pole count or sweep start:step:stop");
    fit1d->add_option("--scale-factor", f1.scale_factor, "pole scale = factor*n");
    fit1d->add_option("--pin", f1.pin, "pinned lowest power J (>= 2)");
    fit1d->add_option("--grid", f1.grid, "training grid lo:hi:M (log10 exponents)");
    fit1d->add_option("--validation-grid", f1.validation_grid, "validation grid lo:hi:M");
    fit1d->add_option("--poly-degree", f1.poly_degree, "polynomial tail degree");
    fit1d->add_flag("--no-arnoldi", f1.no_arnoldi, "disable Arnoldi stabilization");
    fit1d->add_option("--lawson", f1.lawson, "Lawson refinement steps");
    fit1d->add_option("--report", f1.report_name, "report CSV filename");
    fit1d->add_option("--approximant", f1.approximant_name, "approximant JSON filename");
    fit1d->add_option("--error-curve", f1.curve_name, "error curve CSV filename");

    Fit2dOpts f2;
    CLI::App* fit2d = app.add_subcommand("fit2d", "fit a function on a planar domain");
    fit2d->add_option("--config", f2.config, "JSON config file");
    fit2d->add_option("--output-dir", f2.output_dir, "output directory");
    fit2d->add_option("--problem", f2.problem, "built-in problem (pacman)");
    fit2d->add_option("--method", f2.method, "loglight|lightning");
    fit2d->add_option("--n", f2.n_spec, "poles per corner or sweep start:step:stop");
    fit2d->add_option("--scale-factor", f2.scale_factor, "confluent s0 = factor*n");
    fit2d->add_option("--poly-degree", f2.poly_degree, "polynomial degree (-1: method default)");
    fit2d->add_option("--per-edge", f2.per_edge, "training points per boundary edge");
    fit2d->add_option("--min-dist", f2.min_dist, "relative clustering depth");
    fit2d->add_flag("--no-arnoldi", f2.no_arnoldi, "disable Arnoldi stabilization");
    fit2d->add_option("--report", f2.report_name, "report CSV filename");
    fit2d->add_option("--approximant", f2.approximant_name, "approximant JSON filename");
    fit2d->add_option("--error-curve", f2.curve_name, "error curve CSV filename");

    LaplaceOpts lp;
    CLI::App* laplace = app.add_subcommand("laplace", "Dirichlet Laplace solve on a polygon");
    laplace->add_option("--config", lp.config, "JSON config file");
    laplace->add_option("--output-dir", lp.output_dir, "output directory");
    laplace->add_option("--problem", lp.problem, "built-in problem: lshape|square-z3");
    laplace->add_option("--method", lp.method, "loglight|lightning|both");
    laplace->add_option("--n", lp.n_spec, "singularities per corner or sweep start:step:stop");
    laplace->add_option("--scale-factor", lp.scale_factor, "pole scale = factor*n");
    laplace->add_option("--poly-degree", lp.poly_degree, "polynomial degree (-1: equal to n)");
    laplace->add_option("--per-edge", lp.per_edge, "training points per boundary edge");
    laplace->add_option("--min-dist", lp.min_dist, "relative clustering depth");
    laplace->add_flag("--no-arnoldi", lp.no_arnoldi, "disable Arnoldi stabilization");
    laplace->add_option("--field", lp.field, "interior field lattice nx,ny");
    laplace->add_option("--report", lp.report_name, "report CSV filename");
    laplace->add_option("--solution", lp.solution_name, "solution JSON filename");
    laplace->add_option("--field-csv", lp.field_name, "field CSV filename");

    DiagOpts dg;
    CLI::App* diagnostics = app.add_subcommand("diagnostics", "potential-theory diagnostics");
    diagnostics->add_option("--config", dg.config, "JSON config file");
    diagnostics->add_option("--output-dir", dg.output_dir, "output directory");
    diagnostics->add_option("--n", dg.n, "interpolation point count");
    diagnostics->add_option("--sigma", dg.sigma, "sigma parameter");
    diagnostics->add_option("--mu", dg.mu, "wedge parameter mu");
    diagnostics->add_option("--rho", dg.rho, "segment parameter rho");
    diagnostics->add_option("--identity-csv", dg.identity_name, "identity residual CSV filename");
    diagnostics->add_option("--distances-csv", dg.distances_name, "distance table CSV filename");
    diagnostics->add_option("--fw-csv", dg.fw_name, "pole/interp table CSV filename");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit1d->parsed()) {
            if (!f1.config.empty()) {
                apply_config(
                    load_config(f1.config), fit1d,
                    {{"output_dir", [&](const Json& v) { f1.output_dir = v.get<std::string>(); }},
                     {"target", [&](const Json& v) { f1.target = v.get<std::string>(); }},
                     {"poles", [&](const Json& v) { f1.poles = v.get<std::string>(); }},
                     {"n", [&](const Json& v) { f1.n_spec = n_spec_from_json(v); }},
                     {"scale_factor", [&](const Json& v) { f1.scale_factor = v.get<double>(); }},
                     {"pin", [&](const Json& v) { f1.pin = v.get<int>(); }},
                     {"grid", [&](const Json& v) { f1.grid = v.get<std::string>(); }},
                     {"validation_grid",
                      [&](const Json& v) { f1.validation_grid = v.get<std::string>(); }},
                     {"poly_degree", [&](const Json& v) { f1.poly_degree = v.get<int>(); }},
                     {"arnoldi", [&](const Json& v) { f1.no_arnoldi = !v.get<bool>(); }},
                     {"lawson", [&](const Json& v) { f1.lawson = v.get<int>(); }},
                     {"report", [&](const Json& v) { f1.report_name = v.get<std::string>(); }},
                     {"approximant",
                      [&](const Json& v) { f1.approximant_name = v.get<std::string>(); }},
                     {"error_curve", [&](const Json& v) { f1.curve_name = v.get<std::string>(); }}});
            }
            return run_fit1d(f1);
        }
        if (fit2d->parsed()) {
            if (!f2.config.empty()) {
                apply_config(
                    load_config(f2.config), fit2d,
                    {{"output_dir", [&](const Json& v) { f2.output_dir = v.get<std::string>(); }},
                     {"problem", [&](const Json& v) { f2.problem = v.get<std::string>(); }},
                     {"method", [&](const Json& v) { f2.method = v.get<std::string>(); }},
                     {"n", [&](const Json& v) { f2.n_spec = n_spec_from_json(v); }},
                     {"scale_factor", [&](const Json& v) { f2.scale_factor = v.get<double>(); }},
                     {"poly_degree", [&](const Json& v) { f2.poly_degree = v.get<int>(); }},
                     {"per_edge", [&](const Json& v) { f2.per_edge = v.get<int>(); }},
                     {"min_dist", [&](const Json& v) { f2.min_dist = v.get<double>(); }},
                     {"arnoldi", [&](const Json& v) { f2.no_arnoldi = !v.get<bool>(); }},
                     {"report", [&](const Json& v) { f2.report_name = v.get<std::string>(); }},
                     {"approximant",
                      [&](const Json& v) { f2.approximant_name = v.get<std::string>(); }},
                     {"error_curve", [&](const Json& v) { f2.curve_name = v.get<std::string>(); }}});
            }
            return run_fit2d(f2);
        }
        if (laplace->parsed()) {
            if (!lp.config.empty()) {
                apply_config(
                    load_config(lp.config), laplace,
                    {{"output_dir", [&](const Json& v) { lp.output_dir = v.get<std::string>(); }},
                     {"problem", [&](const Json& v) { lp.problem = v.get<std::string>(); }},
                     {"method", [&](const Json& v) { lp.method = v.get<std::string>(); }},
                     {"n", [&](const Json& v) { lp.n_spec = n_spec_from_json(v); }},
                     {"scale_factor", [&](const Json& v) { lp.scale_factor = v.get<double>(); }},
                     {"poly_degree", [&](const Json& v) { lp.poly_degree = v.get<int>(); }},
                     {"per_edge", [&](const Json& v) { lp.per_edge = v.get<int>(); }},
                     {"min_dist", [&](const Json& v) { lp.min_dist = v.get<double>(); }},
                     {"arnoldi", [&](const Json& v) { lp.no_arnoldi = !v.get<bool>(); }},
                     {"field", [&](const Json& v) { lp.field = v.get<std::string>(); }},
                     {"report", [&](const Json& v) { lp.report_name = v.get<std::string>(); }},
                     {"solution", [&](const Json& v) { lp.solution_name = v.get<std::string>(); }},
                     {"field_csv", [&](const Json& v) { lp.field_name = v.get<std::string>(); }}});
            }
            return run_laplace(lp);
        }
        if (diagnostics->parsed()) {
            if (!dg.config.empty()) {
                apply_config(
                    load_config(dg.config), diagnostics,
                    {{"output_dir", [&](const Json& v) { dg.output_dir = v.get<std::string>(); }},
                     {"n", [&](const Json& v) { dg.n = v.get<int>(); }},
                     {"sigma", [&](const Json& v) { dg.sigma = v.get<double>(); }},
                     {"mu", [&](const Json& v) { dg.mu = v.get<double>(); }},
                     {"rho", [&](const Json& v) { dg.rho = v.get<double>(); }},
                     {"identity_csv",
                      [&](const Json& v) { dg.identity_name = v.get<std::string>(); }},
                     {"distances_csv",
                      [&](const Json& v) { dg.distances_name = v.get<std::string>(); }},
                     {"fw_csv", [&](const Json& v) { dg.fw_name = v.get<std::string>(); }}});
            }
            return run_diagnostics(dg);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
