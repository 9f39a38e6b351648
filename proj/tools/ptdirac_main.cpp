#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptdirac/pspin.hpp"
#include "ptdirac/refdata.hpp"
#include "ptdirac/report.hpp"
#include "ptdirac/spin.hpp"

namespace {

using namespace ptdirac;

constexpr int kExitUsage = 1;
constexpr int kExitNoRoot = 2;
constexpr int kExitValidation = 3;

struct cli_config {
    std::string symmetry = "spin";
    potential_params params;
    double cs = 0.35;    // arbitrated reference default
    double cps = -15.0;  // arbitrated reference default
    int n = 0;
    int kappa = 1;
    int sigma = +1, tau = -1;
    double tol = 1e-12;
    int grid_points = 20000;
    std::string out;
    std::string format = "csv";
    std::string states;
    // scan
    std::string vary;
    double from = 0.0, to = 0.0;
    int steps = 0;
    // wavefunction
    double x_from = 0.1, x_to = 10.0;
    int samples = 0;
    bool quick = false;
    std::string config_path;
};

std::string sig12(double v) { return report::format_significant(v, 12); }

void add_common_options(CLI::App* cmd, cli_config& cfg) {
    cmd->add_option("--symmetry", cfg.symmetry, "spin or pspin")
        ->check(CLI::IsMember({"spin", "pspin"}));
    cmd->add_option("--alpha", cfg.params.alpha, "screening parameter (fm^-1)");
    cmd->add_option("--A", cfg.params.A, "well depth parameter");
    cmd->add_option("--B", cfg.params.B, "barrier strength parameter");
    cmd->add_option("--M", cfg.params.M, "mass (fm^-1)");
    cmd->add_option("--x0", cfg.params.x0, "imaginary coordinate shift (fm)");
    cmd->add_option("--Cs", cfg.cs, "spin symmetry constant (fm^-1)");
    cmd->add_option("--Cps", cfg.cps, "pseudospin symmetry constant (fm^-1)");
    cmd->add_option("--n", cfg.n, "radial quantum number");
    cmd->add_option("--kappa", cfg.kappa, "spin-orbit quantum number (nonzero)");
    cmd->add_option("--sigma", cfg.sigma)->check(CLI::IsMember({-1, 1}));
    cmd->add_option("--tau", cfg.tau)->check(CLI::IsMember({-1, 1}));
    cmd->add_option("--tol", cfg.tol, "root tolerance");
    cmd->add_option("--grid-points", cfg.grid_points, "energy scan grid points");
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
    cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "markdown"}));
    cmd->add_option("--config", cfg.config_path, "flat key=value config file");
}

// Flat key=value config, applied before flag parsing so that flags override
// config and config overrides defaults.
int apply_config_file(const std::string& path, cli_config& cfg) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "cannot read --config file: " << path << "\n";
        return kExitUsage;
    }
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::cerr << "config line " << line_no << ": expected key=value\n";
            return kExitUsage;
        }
        auto strip = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        try {
            if (key == "symmetry") cfg.symmetry = value;
            else if (key == "alpha") cfg.params.alpha = std::stod(value);
            else if (key == "A") cfg.params.A = std::stod(value);
            else if (key == "B") cfg.params.B = std::stod(value);
            else if (key == "M") cfg.params.M = std::stod(value);
            else if (key == "x0") cfg.params.x0 = std::stod(value);
            else if (key == "Cs") cfg.cs = std::stod(value);
            else if (key == "Cps") cfg.cps = std::stod(value);
            else if (key == "n") cfg.n = std::stoi(value);
            else if (key == "kappa") cfg.kappa = std::stoi(value);
            else if (key == "sigma") cfg.sigma = std::stoi(value);
            else if (key == "tau") cfg.tau = std::stoi(value);
            else if (key == "tol") cfg.tol = std::stod(value);
            else if (key == "grid-points" || key == "grid_points") cfg.grid_points = std::stoi(value);
            else if (key == "out") cfg.out = value;
            else if (key == "format") cfg.format = value;
            else if (key == "states") cfg.states = value;
            else if (key == "vary") cfg.vary = value;
            else if (key == "from") cfg.from = std::stod(value);
            else if (key == "to") cfg.to = std::stod(value);
            else if (key == "steps") cfg.steps = std::stoi(value);
            else if (key == "x-from" || key == "x_from") cfg.x_from = std::stod(value);
            else if (key == "x-to" || key == "x_to") cfg.x_to = std::stod(value);
            else if (key == "samples") cfg.samples = std::stoi(value);
            else {
                std::cerr << "config: unknown key '" << key << "'\n";
                return kExitUsage;
            }
        } catch (const std::exception&) {
            std::cerr << "config: bad value for key '" << key << "'\n";
            return kExitUsage;
        }
    }
    return 0;
}

symmetry_kind kind_of(const cli_config& cfg) {
    return cfg.symmetry == "spin" ? symmetry_kind::spin : symmetry_kind::pspin;
}

double sym_const_of(const cli_config& cfg) {
    return kind_of(cfg) == symmetry_kind::spin ? cfg.cs : cfg.cps;
}

int write_out(const cli_config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open --out path: " << cfg.out << "\n";
        return kExitUsage;
    }
    f << text;
    return 0;
}

std::optional<std::vector<quantum_numbers>> parse_states(const cli_config& cfg,
                                                         std::string* err) {
    std::vector<quantum_numbers> states;
    if (cfg.states.empty()) {
        *err = "at least one state required (--states \"n:kappa[,n:kappa...]\")";
        return std::nullopt;
    }
    std::stringstream ss(cfg.states);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            *err = "--states entries must look like n:kappa";
            return std::nullopt;
        }
        try {
            int n = std::stoi(item.substr(0, colon));
            int kappa = std::stoi(item.substr(colon + 1));
            states.emplace_back(n, kappa);
        } catch (const std::exception& e) {
            *err = std::string("--states: ") + e.what();
            return std::nullopt;
        }
    }
    if (states.empty()) {
        *err = "at least one state required";
        return std::nullopt;
    }
    return states;
}

solve_outcome run_solver(const cli_config& cfg, int n, int kappa) {
    solver_options opts;
    opts.tol = cfg.tol;
    opts.grid_points = cfg.grid_points;
    opts.sigma = cfg.sigma;
    opts.tau = cfg.tau;
    return kind_of(cfg) == symmetry_kind::spin
               ? solve_spin_energy(n, kappa, cfg.params, cfg.cs, opts)
               : solve_pspin_energy(n, kappa, cfg.params, cfg.cps, opts);
}

int cmd_solve(const cli_config& cfg) {
    if (cfg.kappa == 0) {
        std::cerr << "kappa must be nonzero\n";
        return kExitUsage;
    }
    bool spin = kind_of(cfg) == symmetry_kind::spin;
    auto out = run_solver(cfg, cfg.n, cfg.kappa);

    std::ostringstream os;
    os << "symmetry " << cfg.symmetry << ", n=" << cfg.n << ", kappa=" << cfg.kappa
       << ", constant=" << sig12(sym_const_of(cfg)) << "\n";
    const auto* root = out.physical_root();
    if (root) {
        os << "E = " << sig12(root->energy) << " fm^-1\n";
        os << "residual = " << sig12(root->residual) << "\n";
        os << (spin ? "lambda = " : "nu = ") << sig12(root->exponents.lambda) << "\n";
        os << (spin ? "eta = " : "delta = ") << sig12(root->exponents.eta) << "\n";
        os << "n_max (radical form) = " << sig12(root->n_max) << "\n";
        os << "n_max (exponent sum) = " << sig12(root->lambda_plus_eta) << "\n";
        os << "quantization gap = " << sig12(root->quant_gap) << "\n";
        os << "bracket = [" << sig12(root->bracket.first) << ", " << sig12(root->bracket.second)
           << "]\n";
        os << "sigma/tau requested = (" << out.sigma_requested << "," << out.tau_requested
           << "), effective = (" << out.sigma_effective << "," << out.tau_effective << ")\n";
    }
    int shown = 0;
    for (const auto& s : out.solutions)
        if (!s.physical)
            os << "non-physical root " << ++shown << ": E = " << sig12(s.energy)
               << " (n_max = " << sig12(s.n_max) << ")\n";
    for (const auto& ex : out.excluded)
        os << "excluded (complex branch): [" << sig12(ex.first) << ", " << sig12(ex.second)
           << "]\n";
    if (!root) os << "no physical root found\n";

    int rc = write_out(cfg, os.str());
    if (rc != 0) return rc;
    return root ? 0 : kExitNoRoot;
}

int cmd_table(const cli_config& cfg, bool states_given) {
    bool spin = kind_of(cfg) == symmetry_kind::spin;
    const auto& ref_levels = spin ? refdata::spin_levels() : refdata::pspin_levels();

    std::vector<refdata::reference_level> levels;
    if (states_given) {
        std::string err;
        auto parsed = parse_states(cfg, &err);
        if (!parsed) {
            std::cerr << err << "\n";
            return kExitUsage;
        }
        for (const auto& qn : *parsed) {
            refdata::reference_level lvl;
            lvl.n = qn.n;
            lvl.kappa_pos = qn.kappa;
            lvl.kappa_neg = spin ? -qn.kappa - 1 : -qn.kappa + 1;
            lvl.l = l_from_kappa(qn.kappa, {kind_of(cfg), sym_const_of(cfg)});
            lvl.energy = std::nan("");
            for (const auto& r : ref_levels)
                if (r.n == qn.n && (r.kappa_pos == qn.kappa || r.kappa_neg == qn.kappa)) {
                    lvl = r;
                    break;
                }
            levels.push_back(lvl);
        }
    } else {
        levels = ref_levels;
    }

    std::ostringstream os;
    bool markdown = cfg.format == "markdown";
    if (markdown) {
        os << "| l | n | kappa | labels | E (fm^-1) | reference | delta |\n";
        os << "|---|---|---|---|---|---|---|\n";
    } else {
        os << "l,n,kappa_neg,kappa_pos,labels,energy,reference,delta\n";
    }
    for (const auto& lvl : levels) {
        auto out = run_solver(cfg, lvl.n, lvl.kappa_pos);
        const auto* root = out.physical_root();
        std::string e_str = "-", d_str = "-";
        if (!root && !out.solutions.empty() && !std::isnan(lvl.energy)) {
            // fall back to the closest stored root (non-normalizable branch rows)
            const energy_solution* best = nullptr;
            for (const auto& s : out.solutions)
                if (!best || std::abs(s.energy - lvl.energy) < std::abs(best->energy - lvl.energy))
                    best = &s;
            root = best;
            std::cerr << "warning: n=" << lvl.n << " kappa=" << lvl.kappa_pos
                      << ": no physical root; closest non-normalizable root reported\n";
        }
        if (root) {
            e_str = sig12(root->energy);
            if (!std::isnan(lvl.energy)) d_str = sig12(root->energy - lvl.energy);
        } else {
            std::cerr << "warning: n=" << lvl.n << " kappa=" << lvl.kappa_pos
                      << ": no root found\n";
        }
        std::string ref_str = std::isnan(lvl.energy) ? "-" : sig12(lvl.energy);
        std::string labels = lvl.labels.empty() ? "-" : lvl.labels;
        if (markdown)
            os << "| " << lvl.l << " | " << lvl.n << " | " << lvl.kappa_neg << ","
               << lvl.kappa_pos << " | " << labels << " | " << e_str << " | " << ref_str << " | "
               << d_str << " |\n";
        else
            os << lvl.l << "," << lvl.n << "," << lvl.kappa_neg << "," << lvl.kappa_pos << ","
               << labels << "," << e_str << "," << ref_str << "," << d_str << "\n";
    }
    return write_out(cfg, os.str());
}

int cmd_scan(const cli_config& cfg, bool states_given) {
    static const std::vector<std::string> allowed = {"alpha", "A", "B", "M", "Cs", "Cps"};
    if (std::find(allowed.begin(), allowed.end(), cfg.vary) == allowed.end()) {
        std::cerr << "--vary must be one of alpha|A|B|M|Cs|Cps\n";
        return kExitUsage;
    }
    if (cfg.steps < 1) {
        std::cerr << "--steps must be >= 1\n";
        return kExitUsage;
    }
    if (cfg.steps > 1 && cfg.from == cfg.to) {
        std::cerr << "empty range: --from equals --to\n";
        return kExitUsage;
    }

    std::vector<quantum_numbers> states;
    if (states_given) {
        std::string err;
        auto parsed = parse_states(cfg, &err);
        if (!parsed) {
            std::cerr << err << "\n";
            return kExitUsage;
        }
        states = *parsed;
    } else {
        if (cfg.kappa == 0) {
            std::cerr << "kappa must be nonzero\n";
            return kExitUsage;
        }
        states.emplace_back(cfg.n, cfg.kappa);
    }

    std::ostringstream os;
    os << "param,n,kappa,energy,converged\n";
    for (int i = 0; i < cfg.steps; ++i) {
        double v = cfg.steps == 1 ? cfg.from
                                  : cfg.from + (cfg.to - cfg.from) * i / (cfg.steps - 1.0);
        cli_config local = cfg;
        if (cfg.vary == "alpha") local.params.alpha = v;
        else if (cfg.vary == "A") local.params.A = v;
        else if (cfg.vary == "B") local.params.B = v;
        else if (cfg.vary == "M") local.params.M = v;
        else if (cfg.vary == "Cs") local.cs = v;
        else local.cps = v;
        for (const auto& qn : states) {
            bool converged = false;
            double energy = std::nan("");
            try {
                auto out = run_solver(local, qn.n, qn.kappa);
                if (const auto* root = out.physical_root()) {
                    converged = true;
                    energy = root->energy;
                }
            } catch (const error&) {
                // invalid parameter combination along the sweep: report unconverged
            }
            os << sig12(v) << "," << qn.n << "," << qn.kappa << ","
               << (converged ? sig12(energy) : "nan") << "," << (converged ? 1 : 0) << "\n";
        }
    }
    return write_out(cfg, os.str());
}

int cmd_wavefunction(const cli_config& cfg) {
    if (cfg.kappa == 0) {
        std::cerr << "kappa must be nonzero\n";
        return kExitUsage;
    }
    if (cfg.samples < 1) {
        std::cerr << "--samples must be >= 1\n";
        return kExitUsage;
    }
    bool spin = kind_of(cfg) == symmetry_kind::spin;
    auto out = run_solver(cfg, cfg.n, cfg.kappa);
    const auto* root = out.physical_root();
    if (!root) {
        std::cerr << "no physical root for the requested state\n";
        return kExitNoRoot;
    }
    quantum_numbers qn(cfg.n, cfg.kappa);

    std::ostringstream os;
    os << "x,F_re,F_im,G_re,G_im\n";
    for (int i = 0; i < cfg.samples; ++i) {
        double x = cfg.samples == 1
                       ? cfg.x_from
                       : cfg.x_from + (cfg.x_to - cfg.x_from) * i / (cfg.samples - 1.0);
        cplx f, g;
        try {
            if (spin) {
                f = spin_upper_component(*root, qn, cfg.params, x);
                g = spin_lower_component(*root, qn, cfg.params, cfg.cs, x);
            } else {
                g = pspin_lower_component(*root, qn, cfg.params, x);
                f = pspin_upper_component(*root, qn, cfg.params, cfg.cps, x);
            }
        } catch (const error& e) {
            if (e.code() == errc::pole_on_contour) {
                os << sig12(x) << ",nan,nan,nan,nan\n";
                continue;
            }
            std::cerr << "guard violated: " << e.what() << "\n";
            return kExitNoRoot;
        }
        os << sig12(x) << "," << sig12(f.real()) << "," << sig12(f.imag()) << ","
           << sig12(g.real()) << "," << sig12(g.imag()) << "\n";
    }
    return write_out(cfg, os.str());
}

int cmd_validate(const cli_config& cfg) {
    report::validation_options opts;
    opts.quick = cfg.quick;
    auto result = report::run_validation(opts);
    int rc = write_out(cfg, result.markdown);
    if (rc != 0) return rc;
    if (!result.all_pass) {
        for (const auto& c : result.checks)
            if (!c.pass)
                std::cerr << "FAILED criterion " << c.id << ": " << c.name << "\n";
        return kExitValidation;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic bound states of the complex PT-symmetric Poschl-Teller potential"};
    app.require_subcommand(1);

    cli_config cfg;
    auto* solve = app.add_subcommand("solve", "solve one (n, kappa) state");
    auto* table = app.add_subcommand("table", "reproduce the reference level tables");
    auto* scan = app.add_subcommand("scan", "parameter sweep, CSV output");
    auto* wave = app.add_subcommand("wavefunction", "sample the two-spinor components");
    auto* validate = app.add_subcommand("validate", "run the full validation report");

    for (auto* cmd : {solve, table, scan, wave, validate}) add_common_options(cmd, cfg);

    auto* states_table = table->add_option("--states", cfg.states, "comma-separated n:kappa list");
    auto* states_scan = scan->add_option("--states", cfg.states, "comma-separated n:kappa list");
    scan->add_option("--vary", cfg.vary, "parameter to sweep: alpha|A|B|M|Cs|Cps");
    scan->add_option("--from", cfg.from, "sweep start");
    scan->add_option("--to", cfg.to, "sweep end");
    scan->add_option("--steps", cfg.steps, "number of grid points");
    wave->add_option("--x-from", cfg.x_from, "first sample coordinate (fm)");
    wave->add_option("--x-to", cfg.x_to, "last sample coordinate (fm)");
    wave->add_option("--samples", cfg.samples, "number of samples");
    validate->add_flag("--quick", cfg.quick, "restrict to the lowest-n states");

    // pre-scan for --config so its values act as defaults under the flags
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
        if (!path.empty()) {
            int rc = apply_config_file(path, cfg);
            if (rc != 0) return rc;
            break;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(cfg);
        if (table->parsed()) return cmd_table(cfg, states_table->count() > 0);
        if (scan->parsed()) return cmd_scan(cfg, states_scan->count() > 0);
        if (wave->parsed()) return cmd_wavefunction(cfg);
        if (validate->parsed()) return cmd_validate(cfg);
    } catch (const ptdirac::error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case ptdirac::errc::invalid_kappa:
            case ptdirac::errc::invalid_argument:
                return kExitUsage;
            default:
                return kExitNoRoot;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
