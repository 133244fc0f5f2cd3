// invosc: command-line front end for the confined inverted oscillator library.
//
//   invosc eval       sample psi1 (--n) or psi2 (--k) on [0, L(t)] to CSV
//   invosc propagate  Crank-Nicolson run of a mode or superposition, with l2 error
//   invosc verify     full check report; exit 2 if any check fails
//   invosc gas        frozen-occupation cooling curve
//
// Exit codes: 0 success, 1 validation error, 2 verification failure, 3 I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "invosc/analytic.hpp"
#include "invosc/csv.hpp"
#include "invosc/error.hpp"
#include "invosc/propagator.hpp"
#include "invosc/statmech.hpp"
#include "invosc/verifier.hpp"

namespace {

using namespace invosc;

constexpr int exit_validation = 1;
constexpr int exit_verification = 2;
constexpr int exit_io = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double omega = 0.5;
    double l0 = std::numbers::pi;
    std::optional<int> n;
    std::optional<double> k;
    std::string coeffs;
    std::string t_list;
    double t_max = 0.5;
    int steps = default_cn_steps;
    int grid_m = 256;
    double beta0 = 1.0;
    int n_max = 5;
    std::string phase_convention = "corrected";
    std::string out_path;
};

void require(bool ok, const std::string& flag, const std::string& what)
{
    if (!ok) throw ValidationError(flag + " " + what);
}

PhaseConvention parse_convention(const std::string& text)
{
    return text == "as-printed" ? PhaseConvention::AsPrinted : PhaseConvention::Corrected;
}

BoxConfig make_box(const RunConfig& cfg)
{
    require(std::isfinite(cfg.omega), "--omega", "must be finite");
    require(std::isfinite(cfg.l0) && cfg.l0 > 0.0, "--l0", "must be finite and > 0");
    return BoxConfig(cfg.l0, OscillatorParams{cfg.omega});
}

void require_grid(int m)
{
    require(m >= Grid1D::min_intervals && m % 2 == 0, "--grid", "must be an even interval count >= 8");
}

std::vector<double> parse_times(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == item.size() && !item.empty() && std::isfinite(v), "--t", "must be a comma-separated list of times");
        out.push_back(v);
    }
    require(!out.empty(), "--t", "must list at least one time");
    return out;
}

// "n:re" or "n:re:im", comma separated.
std::vector<ModeCoefficient> parse_coeffs(const std::string& text)
{
    std::vector<ModeCoefficient> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::vector<std::string> parts;
        std::stringstream is(item);
        std::string part;
        while (std::getline(is, part, ':')) parts.push_back(part);
        require(parts.size() == 2 || parts.size() == 3, "--coeffs", "entries must look like n:re or n:re:im");
        try {
            ModeCoefficient c;
            c.n = std::stoi(parts[0]);
            c.amplitude = cplx(std::stod(parts[1]), parts.size() == 3 ? std::stod(parts[2]) : 0.0);
            out.push_back(c);
        } catch (const std::exception&) {
            throw ValidationError("--coeffs entry '" + item + "' is not numeric");
        }
    }
    require(!out.empty(), "--coeffs", "must list at least one mode");
    return out;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + out_path + "' for writing");
    file << text;
    if (!file) throw IoError("failed writing '" + out_path + "'");
}

void write_sample_row(std::ostream& os, double t, double x, cplx v)
{
    os << csv::format_number(t) << ',' << csv::format_number(x) << ',' << csv::format_number(v.real()) << ','
       << csv::format_number(v.imag()) << ',' << csv::format_number(std::norm(v)) << '\n';
}

int cmd_eval(const RunConfig& cfg)
{
    const BoxConfig box = make_box(cfg);
    require_grid(cfg.grid_m);
    require(cfg.n.has_value() != cfg.k.has_value(), "--n/--k", "exactly one mode selector is required");
    const std::vector<double> times = parse_times(cfg.t_list.empty() ? "0" : cfg.t_list);
    const PhaseConvention conv = parse_convention(cfg.phase_convention);

    std::optional<ConfinedMode> confined;
    std::optional<ScatteringMode> scattering;
    if (cfg.n) {
        require(*cfg.n >= 1, "--n", "must be >= 1 (there is no n = 0 state)");
        confined = make_confined_mode(*cfg.n, box);
    } else {
        require(std::isfinite(*cfg.k), "--k", "must be finite");
        require(cfg.omega != 0.0, "--omega", "must be nonzero for the plane-wave family (--k)");
        scattering = ScatteringMode{*cfg.k, box.params()};
    }

    std::ostringstream os;
    os << "t,x,re,im,abs2\n";
    for (double t : times) {
        const Grid1D grid(0.0, box_length(box, t), cfg.grid_m);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double x = grid.point(j);
            const cplx v = confined ? psi1_eval(*confined, x, t, conv) : psi2_eval(*scattering, x, t);
            write_sample_row(os, t, x, v);
        }
    }
    emit(os.str(), cfg.out_path);
    return 0;
}

int cmd_propagate(const RunConfig& cfg)
{
    const BoxConfig box = make_box(cfg);
    require_grid(cfg.grid_m);
    require(std::isfinite(cfg.t_max) && cfg.t_max > 0.0, "--t-max", "must be > 0");
    require(cfg.steps >= 1, "--steps", "must be >= 1");
    require(!(cfg.n && !cfg.coeffs.empty()), "--n/--coeffs", "are mutually exclusive");

    std::vector<ModeCoefficient> coeffs;
    if (!cfg.coeffs.empty()) {
        coeffs = parse_coeffs(cfg.coeffs);
        double total = 0.0;
        for (const auto& c : coeffs) total += std::norm(c.amplitude);
        require(total > 0.0, "--coeffs", "needs a nonzero amplitude");
        for (auto& c : coeffs) c.amplitude /= std::sqrt(total);
    } else {
        const int n = cfg.n.value_or(1);
        require(n >= 1, "--n", "must be >= 1 (there is no n = 0 state)");
        coeffs.push_back({n, 1.0});
    }
    for (const auto& c : coeffs) require(c.n >= 1, "--coeffs", "mode indices must be >= 1");

    const ComovingField start = init_mode_superposition(box, coeffs, cfg.grid_m);
    const ComovingField end = propagate_to(start, cfg.t_max, cfg.steps);
    const LabField lab = lab_frame(end);

    std::ostringstream os;
    os << "t,x,re,im,abs2\n";
    for (std::size_t j = 0; j < lab.values.size(); ++j) write_sample_row(os, lab.t_lab, lab.x_grid.point(j), lab.values[j]);
    emit(os.str(), cfg.out_path);

    if (coeffs.size() == 1) {
        const ConfinedMode mode = make_confined_mode(coeffs.front().n, box);
        const cplx amp = coeffs.front().amplitude;
        const PhaseConvention conv = parse_convention(cfg.phase_convention);
        const double error = lab_l2_error(lab, [&](double x, double t) { return amp * psi1_eval(mode, x, t, conv); });
        std::cout << "l2_error," << csv::format_number(error) << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, int quadrature_m)
{
    make_box(cfg);
    require(quadrature_m >= 1024 && quadrature_m % 2 == 0, "--grid", "must be an even interval count >= 1024");
    require(cfg.n_max >= 2, "--n-max", "must be >= 2");
    require(cfg.steps >= 1, "--steps", "must be >= 1");
    require(std::isfinite(cfg.beta0) && cfg.beta0 > 0.0, "--beta0", "must be > 0");

    VerifyConfig vc;
    vc.l0 = cfg.l0;
    vc.omega = cfg.omega;
    vc.n_max = cfg.n_max;
    vc.m = quadrature_m;
    vc.propagation.steps = cfg.steps;
    vc.beta0 = cfg.beta0;
    vc.convention = parse_convention(cfg.phase_convention);

    const Report report = run_full_report(vc);
    std::ostringstream os;
    write_report_csv(report, os);
    emit(os.str(), cfg.out_path);
    return report.all_pass ? 0 : exit_verification;
}

int cmd_gas(const RunConfig& cfg, double t_max, int intervals)
{
    const BoxConfig box = make_box(cfg);
    require(std::isfinite(cfg.beta0) && cfg.beta0 > 0.0, "--beta0", "must be > 0");
    require(cfg.n_max >= 2, "--n-max", "must be >= 2");
    std::vector<double> times;
    if (!cfg.t_list.empty()) {
        times = parse_times(cfg.t_list);
    } else {
        require(std::isfinite(t_max) && t_max >= 0.0, "--t-max", "must be >= 0");
        require(intervals >= 1, "--steps", "must be >= 1");
        for (int i = 0; i <= intervals; ++i) times.push_back(t_max * i / intervals);
    }
    require(std::is_sorted(times.begin(), times.end()), "--t", "must be sorted ascending");

    const GasState gas = gibbs_occupations(box, cfg.beta0, cfg.n_max);
    std::ostringstream os;
    os << "t,L,U,T,TL2\n";
    for (const CoolingRow& r : cooling_curve(gas, times)) {
        os << csv::format_number(r.t) << ',' << csv::format_number(r.box_length) << ','
           << csv::format_number(r.mean_energy) << ',' << csv::format_number(r.temperature) << ','
           << csv::format_number(r.temperature_length2) << '\n';
    }
    emit(os.str(), cfg.out_path);
    return 0;
}

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--omega", cfg.omega, "Oscillator frequency omega");
    cmd->add_option("--l0", cfg.l0, "Initial box length");
    cmd->add_option("--out", cfg.out_path, "Output CSV path (standard output if omitted)");
}

void add_convention(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--phase-convention", cfg.phase_convention, "Sign of the (eps/4 omega) e^{-4 omega t} phase")
        ->check(CLI::IsMember({"corrected", "as-printed"}));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Confined inverted harmonic oscillator: exact solutions, propagation and verification"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    RunConfig eval_cfg;
    auto* eval = app.add_subcommand("eval", "Sample psi1 (--n) or psi2 (--k) on [0, L(t)]");
    add_common(eval, eval_cfg);
    add_convention(eval, eval_cfg);
    auto* eval_n = eval->add_option("--n", eval_cfg.n, "Quantum number of the confined mode (>= 1)");
    auto* eval_k = eval->add_option("--k", eval_cfg.k, "Wavenumber of the plane-wave mode");
    eval_n->excludes(eval_k);
    eval->add_option("--t", eval_cfg.t_list, "Comma-separated list of times")->default_str("0");
    eval->add_option("--grid", eval_cfg.grid_m, "Interval count per time (even, >= 8)");

    RunConfig prop_cfg;
    prop_cfg.omega = 0.25;
    prop_cfg.grid_m = default_propagation_intervals;
    auto* prop = app.add_subcommand("propagate", "Crank-Nicolson propagation in the comoving frame");
    add_common(prop, prop_cfg);
    add_convention(prop, prop_cfg);
    prop->add_option("--n", prop_cfg.n, "Initial single mode (default 1)");
    prop->add_option("--coeffs", prop_cfg.coeffs, "Superposition n:re[:im],... (renormalized to unit norm)");
    prop->add_option("--t-max", prop_cfg.t_max, "Final lab time (> 0)");
    prop->add_option("--steps", prop_cfg.steps, "Crank-Nicolson steps");
    prop->add_option("--grid", prop_cfg.grid_m, "Comoving interval count (even, >= 8)");

    RunConfig verify_cfg;
    int verify_m = default_quadrature_intervals;
    auto* verify = app.add_subcommand("verify", "Run every check and write the report CSV");
    add_common(verify, verify_cfg);
    add_convention(verify, verify_cfg);
    verify->add_option("--n-max", verify_cfg.n_max, "Highest mode in the Gram matrix");
    verify->add_option("--grid", verify_m, "Quadrature interval count (even, >= 1024)");
    verify->add_option("--steps", verify_cfg.steps, "Crank-Nicolson steps of the propagation check");
    verify->add_option("--beta0", verify_cfg.beta0, "Initial inverse temperature of the gas checks");

    RunConfig gas_cfg;
    gas_cfg.n_max = 20;
    double gas_t_max = 2.0;
    int gas_intervals = 8;
    auto* gas = app.add_subcommand("gas", "Cooling curve of the frozen-occupation gas");
    add_common(gas, gas_cfg);
    gas->add_option("--beta0", gas_cfg.beta0, "Initial inverse temperature (> 0)");
    gas->add_option("--n-max", gas_cfg.n_max, "Initial level cutoff (extended automatically)");
    gas->add_option("--t", gas_cfg.t_list, "Comma-separated list of times (overrides --t-max/--steps)");
    gas->add_option("--t-max", gas_t_max, "Last time of the uniform schedule");
    gas->add_option("--steps", gas_intervals, "Intervals of the uniform schedule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_validation;
    }

    try {
        if (*eval) return cmd_eval(eval_cfg);
        if (*prop) return cmd_propagate(prop_cfg);
        if (*verify) return cmd_verify(verify_cfg, verify_m);
        if (*gas) return cmd_gas(gas_cfg, gas_t_max, gas_intervals);
    } catch (const ValidationError& e) {
        std::cerr << "validation-error: " << e.what() << '\n';
        return exit_validation;
    } catch (const IoError& e) {
        std::cerr << "io-error: " << e.what() << '\n';
        return exit_io;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.code() == ErrorCode::Io ? exit_io : exit_validation;
    }
    return exit_validation;
}
