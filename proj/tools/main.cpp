#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbat/linalg.hpp"
#include "qbat/optimizer.hpp"
#include "qbat/state_io.hpp"
#include "qbat/verify.hpp"

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void print_state(const qbat::ComplexMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string line = "  ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const qbat::cplx v = m(i, j);
            line += fixed6(v.real()) + (v.imag() < 0 ? "-" : "+") + fixed6(std::abs(v.imag())) + "i";
            if (j + 1 < m.cols()) line += "  ";
        }
        std::cout << line << "\n";
    }
}

struct StateHamArgs {
    std::string state_path;
    std::string ham_path;
};

void add_state_ham(CLI::App* cmd, StateHamArgs& args) {
    cmd->add_option("--state", args.state_path, "state JSON file")->required();
    cmd->add_option("--ham", args.ham_path, "Hamiltonian JSON file")->required();
}

int report_extraction(const StateHamArgs& args, const std::string& mode) {
    const qbat::DensityOperator rho = qbat::load_state(args.state_path);
    const qbat::HamiltonianFile ham = qbat::load_hamiltonian(args.ham_path);
    const qbat::ErgotropyResult result =
        mode == "local" ? qbat::local_ergotropy(rho, ham.hamiltonian)
                        : qbat::ergotropy(rho, qbat::full_hamiltonian(ham.hamiltonian));
    const double initial = qbat::energy(rho, ham.hamiltonian);
    std::cout << "mode           = " << mode << "\n";
    std::cout << "initial energy = " << fixed6(initial) << " eps\n";
    std::cout << "final energy   = " << fixed6(qbat::energy(result.final_state, ham.hamiltonian))
              << " eps\n";
    std::cout << "work           = " << fixed6(result.work) << " eps\n";
    std::cout << (mode == "local" ? "locally passive state:" : "passive state:") << "\n";
    print_state(result.final_state.matrix());
    return 0;
}

int run_curve(const std::string& which, double emin, double emax, int steps, double eps_a,
              double eps_b, std::uint64_t seed, int restarts, const std::string& out_path) {
    if (!(emin >= 0.0 && emin <= emax && emax <= 1.0))
        throw std::invalid_argument("curve: need 0 <= emin <= emax <= 1");
    if (steps < 2) throw std::invalid_argument("curve: steps must be >= 2");

    const qbat::CurveId id = qbat::curve_from_string(which);
    const qbat::TwoQubitZZ h(eps_a, eps_b);
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = emin + (emax - emin) * static_cast<double>(i) / static_cast<double>(steps - 1);

    qbat::OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    const qbat::SweepResult result = qbat::sweep(id, grid, h, cfg);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw qbat::FileError("cannot write file '" + out_path + "'");
        out = &file;
    }
    *out << "E,work_over_eps,curve,eps_a,eps_b,residual\n";
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        const auto& pt = result.points[i];
        const auto& diag = result.diagnostics[i];
        *out << fixed6(pt.entanglement) << ','
             << (diag.feasible ? fixed6(pt.value) : std::string("NaN")) << ','
             << qbat::curve_to_string(id) << ',' << fixed6(eps_a) << ',' << fixed6(eps_b) << ','
             << fixed6(diag.ent_residual) << "\n";
    }
    if (!result.all_feasible()) {
        std::cerr << "error: optimizer reached no feasible point on at least one grid point\n";
        return kExitInfeasible;
    }
    return 0;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed) {
    if (trials < 0) throw std::invalid_argument("verify: trials must be >= 1");
    const std::vector<qbat::verify::SuiteResult> results = qbat::verify::run(suite, trials, seed);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
        if (!r.pass && r.failing_sample) {
            const std::string path = "failing_sample_" + r.name + ".json";
            qbat::save_state(path, *r.failing_sample);
            std::cout << "      failing sample written to " << path << "\n";
        }
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Work extraction from bipartite quantum batteries: passive and locally passive "
                 "states, ergotropy, and entanglement-constrained work curves."};
    app.require_subcommand(1);

    StateHamArgs ergo_args;
    std::string mode = "global";
    CLI::App* ergo = app.add_subcommand("ergotropy", "extractable work from a state file");
    add_state_ham(ergo, ergo_args);
    ergo->add_option("--mode", mode, "global or local")->check(CLI::IsMember({"global", "local"}));

    StateHamArgs passive_args;
    CLI::App* passive = app.add_subcommand("passive", "passive state under the full Hamiltonian");
    add_state_ham(passive, passive_args);

    StateHamArgs lp_args;
    CLI::App* local_passive =
        app.add_subcommand("local-passive", "locally passive state under a local Hamiltonian");
    add_state_ham(local_passive, lp_args);

    std::string which;
    double emin = 0.0, emax = 1.0, eps_a = 2.0, eps_b = 1.0;
    int steps = 101, restarts = 64;
    std::uint64_t seed = 0;
    std::string out_path;
    CLI::App* curve = app.add_subcommand("curve", "emit a work curve as CSV");
    curve->add_option("--which", which, "gp|g|lbar|deficit|gp_mixed|g_mixed|l_pure")->required();
    curve->add_option("--emin", emin, "lower entanglement bound");
    curve->add_option("--emax", emax, "upper entanglement bound");
    curve->add_option("--steps", steps, "number of grid points");
    curve->add_option("--eps-a", eps_a, "qubit A level splitting");
    curve->add_option("--eps-b", eps_b, "qubit B level splitting");
    curve->add_option("--seed", seed, "RNG seed for numeric curves");
    curve->add_option("--restarts", restarts, "optimizer restarts per point");
    curve->add_option("--out", out_path, "output CSV path (stdout when omitted)");

    std::string suite = "all";
    int trials = 0;
    std::uint64_t vseed = 0;
    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", suite, "all|passivity|uniqueness|theorem3|prop4|oracle");
    verify->add_option("--trials", trials, "samples per suite (0 = suite default)");
    verify->add_option("--seed", vseed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (ergo->parsed()) return report_extraction(ergo_args, mode);
        if (passive->parsed()) return report_extraction(passive_args, "global");
        if (local_passive->parsed()) return report_extraction(lp_args, "local");
        if (curve->parsed())
            return run_curve(which, emin, emax, steps, eps_a, eps_b, seed, restarts, out_path);
        if (verify->parsed()) return run_verify(suite, trials, vseed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
