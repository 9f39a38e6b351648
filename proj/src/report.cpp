#include "ptdirac/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "ptdirac/limits.hpp"
#include "ptdirac/oracle.hpp"
#include "ptdirac/pspin.hpp"
#include "ptdirac/rootfind.hpp"
#include "ptdirac/specfun.hpp"

namespace ptdirac::report {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

solve_outcome solve_for(symmetry_kind kind, int n, int kappa, const potential_params& p,
                        double sym_const, const solver_options& opts = {}) {
    return kind == symmetry_kind::spin ? solve_spin_energy(n, kappa, p, sym_const, opts)
                                       : solve_pspin_energy(n, kappa, p, sym_const, opts);
}

const energy_solution* closest_root(const solve_outcome& out, double target) {
    const energy_solution* best = nullptr;
    for (const auto& s : out.solutions)
        if (!best || std::abs(s.energy - target) < std::abs(best->energy - target)) best = &s;
    return best;
}

}  // namespace

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::vector<table_row> reproduce_table(symmetry_kind kind, double sym_const,
                                       const potential_params& p) {
    const auto& levels = kind == symmetry_kind::spin ? refdata::spin_levels()
                                                     : refdata::pspin_levels();
    std::vector<table_row> rows;
    for (const auto& ref : levels) {
        table_row row;
        row.ref = ref;
        auto out = solve_for(kind, ref.n, ref.kappa_pos, p, sym_const);
        if (const auto* phys = out.physical_root()) {
            row.found = true;
            row.physical = true;
            row.energy = phys->energy;
        } else if (const auto* any = closest_root(out, ref.energy)) {
            row.found = true;
            row.energy = any->energy;
            row.note = "non-normalizable branch (n > n_max = " +
                       fmt("%.6f", any->n_max) + ")";
        }
        row.delta = row.found ? row.energy - ref.energy : std::nan("");
        rows.push_back(row);
    }
    return rows;
}

arbitration_outcome arbitrate_constant(symmetry_kind kind, const std::vector<double>& candidates,
                                       const potential_params& p) {
    arbitration_outcome out;
    for (double c : candidates) {
        arbitration_candidate cand;
        cand.constant = c;
        cand.rows = reproduce_table(kind, c, p);
        for (const auto& row : cand.rows) {
            if (row.found && std::abs(row.delta) <= 5e-3) ++cand.reproduced;
            if (row.found) cand.max_delta = std::max(cand.max_delta, std::abs(row.delta));
        }
        const auto& first = cand.rows.front().ref;
        if (kind == symmetry_kind::pspin) {
            double mps = p.M - first.energy + c;
            cand.radicand1 = 1.0 - 4.0 * mps * p.well_strength() / p.M;
            double kb = 2.0 * first.kappa_pos - 1.0;
            cand.radicand2 = kb * kb - 4.0 * mps * p.barrier_strength() / p.M;
        } else {
            double ms = p.M + first.energy - c;
            cand.radicand1 = 1.0 + 4.0 * ms * p.well_strength() / p.M;
            double kb = 2.0 * first.kappa_pos + 1.0;
            cand.radicand2 = kb * kb + 4.0 * ms * p.barrier_strength() / p.M;
        }
        out.candidates.push_back(std::move(cand));
    }
    for (std::size_t i = 0; i < out.candidates.size(); ++i) {
        const auto& c = out.candidates[i];
        if (c.reproduced == static_cast<int>(c.rows.size())) {
            if (out.winner < 0 || c.max_delta < out.candidates[out.winner].max_delta)
                out.winner = static_cast<int>(i);
        }
    }
    return out;
}

namespace {

struct wavefn_checks {
    double worst_ode = 0.0;
    double worst_deriv = 0.0;
    bool ok = true;
};

wavefn_checks spin_wavefn_checks(const potential_params& p, double cs) {
    wavefn_checks res;
    for (int n = 0; n <= 2; ++n) {
        auto out = solve_spin_energy(n, 1, p, cs);
        const auto* sol = out.physical_root();
        if (!sol) {
            res.ok = false;
            continue;
        }
        quantum_numbers qn(n, 1);
        auto c = make_spin_couplings(p, cs, sol->energy, 1);
        auto sampler = [&](double x) { return spin_upper_component(*sol, qn, p, x); };
        auto ueff = [&](double x) { return effective_potential(p, c.v1, c.v2, x); };
        res.worst_ode = std::max(res.worst_ode,
                                 oracle::ode_residual(sampler, ueff, sol->etilde_sq, 0.25, 8.0, 1500));

        double ms = p.M + sol->energy - cs;
        double gmax = 0.0, gerr = 0.0;
        for (int i = 0; i < 30; ++i) {
            double x = 0.4 + 0.2 * i;
            const double h = 1e-5;
            cplx df = (sampler(x - 2 * h) - 8.0 * sampler(x - h) + 8.0 * sampler(x + h) -
                       sampler(x + 2 * h)) /
                      (12.0 * h);
            cplx gfd = (static_cast<double>(qn.kappa) / cplx(x, -p.x0) * sampler(x) + df) / ms;
            cplx g = spin_lower_component(*sol, qn, p, cs, x);
            gmax = std::max(gmax, std::abs(g));
            gerr = std::max(gerr, std::abs(g - gfd));
        }
        res.worst_deriv = std::max(res.worst_deriv, gerr / gmax);
    }
    return res;
}

wavefn_checks pspin_wavefn_checks(const potential_params& p, double cps) {
    wavefn_checks res;
    const std::pair<int, int> states[] = {{1, 2}, {2, 2}};
    for (auto [n, kappa] : states) {
        auto out = solve_pspin_energy(n, kappa, p, cps);
        const auto* sol = out.physical_root();
        if (!sol) {
            res.ok = false;
            continue;
        }
        quantum_numbers qn(n, kappa);
        auto [v1e, v2e] = pspin_effective_strengths(p, cps, sol->energy, kappa);
        auto sampler = [&](double x) { return pspin_lower_component(*sol, qn, p, x); };
        auto ueff = [&, v1e, v2e](double x) { return effective_potential(p, v1e, v2e, x); };
        res.worst_ode = std::max(res.worst_ode,
                                 oracle::ode_residual(sampler, ueff, sol->etilde_sq, 0.25, 8.0, 1500));

        double mps = p.M - sol->energy + cps;
        double fmax = 0.0, ferr = 0.0;
        for (int i = 0; i < 30; ++i) {
            double x = 0.4 + 0.2 * i;
            const double h = 1e-5;
            cplx dg = (sampler(x - 2 * h) - 8.0 * sampler(x - h) + 8.0 * sampler(x + h) -
                       sampler(x + 2 * h)) /
                      (12.0 * h);
            cplx ffd = (dg - static_cast<double>(qn.kappa) / cplx(x, -p.x0) * sampler(x)) / mps;
            cplx f = pspin_upper_component(*sol, qn, p, cps, x);
            fmax = std::max(fmax, std::abs(f));
            ferr = std::max(ferr, std::abs(f - ffd));
        }
        res.worst_deriv = std::max(res.worst_deriv, ferr / fmax);
    }
    return res;
}

struct specfun_suite {
    double jacobi_worst = 0.0;
    double deriv_worst = 0.0;
    double identity_worst = 0.0;
};

specfun_suite run_specfun_suite() {
    using namespace specfun;
    specfun_suite s;

    // solver-style pairs (a = -2 lam - 1/2, b = -2 eta - 1/2): the strongly
    // negative a is double-precision-conditioned only up to moderate degree
    struct ab_case { double a, b; int n_max; };
    const ab_case ab_pairs[] = {
        {-11.3, 2.9, 5}, {-4.9, 1.1, 10}, {-2.3, 0.4, 10},
        {0.5, -0.3, 10}, {-2.25, -0.75, 10}, {1.7, 3.1, 10}};
    for (auto [a, b, deg_cap] : ab_pairs) {
        for (int n = 0; n <= deg_cap; ++n) {
            for (int iz = 0; iz < 8; ++iz) {
                cplx z(-2.0 + 0.55 * iz, 0.35);
                if (std::abs(z) > 2.0) z *= 2.0 / std::abs(z);
                cplx x = 1.0 - 2.0 * z;
                cplx lhs = jacobi_p(n, a, b, x);
                cplx rhs = pochhammer(a + 1.0, n) / std::tgamma(n + 1.0) *
                           gauss_2f1(-n, 1.0 + a + b + n, a + 1.0, z);
                double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
                s.jacobi_worst = std::max(s.jacobi_worst, std::abs(lhs - rhs) / scale);
            }
        }
    }

    const double params[][3] = {{-3.0, 2.2, 0.7}, {-5.0, -1.3, 1.9}, {-8.0, 4.4, -10.5}};
    for (auto [a, b, c] : params) {
        for (int iz = 0; iz < 6; ++iz) {
            cplx z(-1.5 + 0.6 * iz, 0.4);
            const double h = 1e-6;
            cplx fd = (gauss_2f1(a, b, c, z + h) - gauss_2f1(a, b, c, z - h)) / (2.0 * h);
            cplx an = gauss_2f1_derivative(a, b, c, z);
            double scale = std::max(1e-30, std::abs(an));
            s.deriv_worst = std::max(s.deriv_worst, std::abs(fd - an) / scale);
        }
    }

    for (double ax0 : {0.1, 0.5, 1.0, 1.4}) {
        for (int i = 0; i <= 12; ++i) {
            double ax = -3.0 + 0.5 * i;
            cplx qc = std::exp(cplx(0.0, 2.0 * ax0));
            cplx q = -qc * qc;
            cplx sh = deformed_sinh(qc, ax), ch = deformed_cosh(qc, ax);
            cplx sh2 = deformed_sinh(q, 2.0 * ax), ch2 = deformed_cosh(q, 2.0 * ax);
            cplx shifted = cplx(ax, -ax0);
            // residuals scaled by the largest term entering the identity, the
            // meaningful floating-point statement for the cancelling squares
            auto rel = [&](cplx lhs, cplx rhs, double term_scale) {
                return std::abs(lhs - rhs) / std::max(1.0, term_scale);
            };
            double sh_sq = std::norm(sh), ch_sq = std::norm(ch);
            double w = 0.0;
            w = std::max(w, rel(std::sinh(shifted), sh / std::sqrt(qc), std::abs(sh)));
            w = std::max(w, rel(std::cosh(shifted), ch / std::sqrt(qc), std::abs(ch)));
            w = std::max(w, rel(2.0 * ch * ch, qc + sh2, 2.0 * ch_sq));
            w = std::max(w, rel(ch * ch - sh * sh, qc, std::max(ch_sq, sh_sq)));
            w = std::max(w, rel(ch * ch + sh * sh, sh2, std::max(ch_sq, sh_sq)));
            w = std::max(w, rel(4.0 * sh * sh * ch * ch, ch2 * ch2, 4.0 * sh_sq * ch_sq));
            cplx sh2c = deformed_sinh(qc, 2.0 * ax), ch2c = deformed_cosh(qc, 2.0 * ax);
            w = std::max(w, rel(ch2c * ch2c - sh2c * sh2c, qc,
                                std::max(std::norm(ch2c), std::norm(sh2c))));
            s.identity_worst = std::max(s.identity_worst, w);
        }
    }
    return s;
}

double trend_slope(symmetry_kind kind, int n, int kappa, const potential_params& base,
                   double sym_const, const std::function<void(potential_params&, double&, double)>& bump,
                   double h) {
    auto eval = [&](double step) {
        potential_params p = base;
        double c = sym_const;
        bump(p, c, step);
        auto out = solve_for(kind, n, kappa, p, c);
        const auto* root = out.physical_root();
        return root ? root->energy : std::nan("");
    };
    return (eval(h) - eval(-h)) / (2.0 * h);
}

}  // namespace

validation_result run_validation(const validation_options& opts) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();

    validation_result res;
    std::ostringstream md;
    potential_params P = refdata::reference_params();

    md << "# Validation report\n\n";
    md << "Parameter set: alpha=" << P.alpha << ", A=" << P.A << ", B=" << P.B << ", M=" << P.M
       << ", x0=" << P.x0 << " (energies in fm^-1)\n\n";

    // ---- arbitration of the symmetry constants (checks 2 and 3) ----
    auto arb_s = arbitrate_constant(symmetry_kind::spin, {refdata::kCsText, refdata::kCsFigures});
    auto arb_p = arbitrate_constant(symmetry_kind::pspin, {refdata::kCpsText, refdata::kCpsFigures});
    double cs = arb_s.winner >= 0 ? arb_s.candidates[arb_s.winner].constant : refdata::kCsFigures;
    double cps = arb_p.winner >= 0 ? arb_p.candidates[arb_p.winner].constant : refdata::kCpsFigures;

    auto emit_arbitration = [&md](const char* title, const arbitration_outcome& arb) {
        md << "## " << title << "\n\n";
        md << "| constant | rows reproduced (<=5e-3) | max |delta| | radicand1 | radicand2 |\n";
        md << "|---|---|---|---|---|\n";
        for (const auto& c : arb.candidates)
            md << "| " << c.constant << " | " << c.reproduced << "/" << c.rows.size() << " | "
               << fmt("%.3e", c.max_delta) << " | " << fmt("%.4f", c.radicand1) << " | "
               << fmt("%.4f", c.radicand2) << " |\n";
        if (arb.winner >= 0)
            md << "\nWinner: `" << arb.candidates[arb.winner].constant << "`\n\n";
        else
            md << "\nNo candidate reproduces the table.\n\n";
    };
    emit_arbitration("Spin constant arbitration (Cs from text vs figure captions)", arb_s);
    emit_arbitration("Pseudospin constant arbitration (Cps, radicands at the first reference energy)",
                     arb_p);

    {
        check_line c2{2, "Spin reference-table reproduction under arbitrated Cs (|dE| <= 5e-3, deltas published)", false, ""};
        c2.pass = arb_s.winner >= 0;
        if (c2.pass)
            c2.detail = "Cs = " + fmt("%g", arb_s.candidates[arb_s.winner].constant) +
                        ", max |delta| = " + fmt("%.3e", arb_s.candidates[arb_s.winner].max_delta);
        res.checks.push_back(c2);
        check_line c3{3, "Pseudospin reference-table arbitration over Cps in {-10, -15} (|dE| <= 5e-3)", false, ""};
        c3.pass = arb_p.winner >= 0;
        if (c3.pass)
            c3.detail = "Cps = " + fmt("%g", arb_p.candidates[arb_p.winner].constant) +
                        ", max |delta| = " + fmt("%.3e", arb_p.candidates[arb_p.winner].max_delta);
        res.checks.push_back(c3);
    }

    // ---- per-row table with oracle column (check 1) ----
    struct row_with_oracle {
        table_row row;
        oracle::oracle_result orc;
        symmetry_kind kind;
    };
    std::vector<row_with_oracle> all_rows;
    auto add_rows = [&](symmetry_kind kind, double sym_const) {
        auto rows = reproduce_table(kind, sym_const, P);
        for (const auto& r : rows) {
            if (opts.quick) {
                bool keep = kind == symmetry_kind::spin ? r.ref.n == 0
                                                        : (r.ref.n == 1 && r.ref.kappa_pos == 2);
                if (!keep) continue;
            }
            row_with_oracle rw;
            rw.row = r;
            rw.kind = kind;
            rw.orc = oracle::oracle_energy(r.ref.n, r.ref.kappa_pos, P, {kind, sym_const});
            all_rows.push_back(std::move(rw));
        }
    };
    auto t_oracle0 = clock::now();
    add_rows(symmetry_kind::spin, cs);
    add_rows(symmetry_kind::pspin, cps);
    double oracle_elapsed =
        std::chrono::duration<double>(clock::now() - t_oracle0).count();

    md << "## Reference-table reproduction and oracle equivalence (arbitrated constants)\n\n";
    md << "| sym | l | n | kappa | labels | E computed | E reference | delta | E oracle | oracle gap | note |\n";
    md << "|---|---|---|---|---|---|---|---|---|---|---|\n";
    bool oracle_ok = true;
    double worst_gap = 0.0;
    for (const auto& rw : all_rows) {
        const auto& r = rw.row;
        bool spurious = !r.physical;
        bool row_ok;
        std::string orc_str, gap_str;
        if (!spurious) {
            row_ok = rw.orc.converged && std::abs(rw.orc.gap) <= 1e-4;
            worst_gap = std::max(worst_gap, std::abs(rw.orc.gap));
            orc_str = format_significant(rw.orc.energy);
            gap_str = fmt("%.2e", rw.orc.gap);
        } else {
            // both routes must agree the bound level is absent
            row_ok = !rw.orc.converged;
            orc_str = "absent";
            gap_str = "-";
        }
        oracle_ok = oracle_ok && row_ok;
        md << "| " << (rw.kind == symmetry_kind::spin ? "spin" : "pspin") << " | " << r.ref.l
           << " | " << r.ref.n << " | " << r.ref.kappa_neg << "," << r.ref.kappa_pos << " | "
           << r.ref.labels << " | " << (r.found ? format_significant(r.energy) : "-") << " | "
           << format_significant(r.ref.energy, 10) << " | "
           << (r.found ? fmt("%.2e", r.delta) : "-") << " | " << orc_str << " | " << gap_str
           << " | " << (r.note.empty() ? (rw.orc.note.empty() ? "" : rw.orc.note) : r.note)
           << " |\n";
    }
    md << "\nOracle sweep time: " << fmt("%.1f", oracle_elapsed) << " s\n\n";

    {
        check_line c1{1, "Oracle equivalence |E_analytic - E_oracle| <= 1e-4 (absence agreed for non-normalizable rows), < 60 s", false, ""};
        c1.pass = oracle_ok && oracle_elapsed < 60.0;
        c1.detail = "worst gap = " + fmt("%.2e", worst_gap) + ", elapsed = " +
                    fmt("%.1f", oracle_elapsed) + " s";
        res.checks.push_back(c1);
    }

    // ---- degeneracy (check 4) and quantization identity (check 5) ----
    {
        double worst_deg = 0.0, worst_quant = 0.0;
        bool deg_ok = true;
        auto degeneracy = [&](symmetry_kind kind, double sym_const) {
            const auto& levels = kind == symmetry_kind::spin ? refdata::spin_levels()
                                                             : refdata::pspin_levels();
            for (const auto& ref : levels) {
                auto a = solve_for(kind, ref.n, ref.kappa_pos, P, sym_const);
                auto b = solve_for(kind, ref.n, ref.kappa_neg, P, sym_const);
                const auto* ra = a.physical_root();
                const auto* rb = b.physical_root();
                if (ra && rb) {
                    worst_deg = std::max(worst_deg, std::abs(ra->energy - rb->energy));
                    worst_quant = std::max({worst_quant, ra->quant_gap, rb->quant_gap});
                } else if (static_cast<bool>(ra) != static_cast<bool>(rb)) {
                    deg_ok = false;
                } else {
                    const auto* ca = closest_root(a, ref.energy);
                    const auto* cb = closest_root(b, ref.energy);
                    if (ca && cb) worst_deg = std::max(worst_deg, std::abs(ca->energy - cb->energy));
                }
            }
        };
        degeneracy(symmetry_kind::spin, cs);
        degeneracy(symmetry_kind::pspin, cps);
        check_line c4{4, "Doublet degeneracy E(n,kappa) = E(n,partner) <= 1e-10", false, ""};
        c4.pass = deg_ok && worst_deg <= 1e-10;
        c4.detail = "worst split = " + fmt("%.2e", worst_deg);
        res.checks.push_back(c4);
        check_line c5{5, "Quantization identity |2a(lam+eta-n) - sqrt(-Etilde^2)| <= 1e-8 at physical roots", false, ""};
        c5.pass = worst_quant <= 1e-8;
        c5.detail = "worst gap = " + fmt("%.2e", worst_quant);
        res.checks.push_back(c5);
    }

    // ---- sign-branch invariance (check 6) ----
    {
        double worst = 0.0;
        bool ok = true;
        auto compare_signs = [&](symmetry_kind kind, double sym_const, int n, int kappa) {
            solver_options o1;
            o1.sigma = +1;
            o1.tau = -1;
            solver_options o2;
            o2.sigma = -1;
            o2.tau = +1;
            auto a = solve_for(kind, n, kappa, P, sym_const, o1);
            auto b = solve_for(kind, n, kappa, P, sym_const, o2);
            std::vector<double> pa, pb;
            for (const auto& s : a.solutions)
                if (s.physical) pa.push_back(s.energy);
            for (const auto& s : b.solutions)
                if (s.physical) pb.push_back(s.energy);
            if (pa.size() != pb.size()) {
                ok = false;
                return;
            }
            for (std::size_t i = 0; i < pa.size(); ++i)
                worst = std::max(worst, std::abs(pa[i] - pb[i]));
        };
        for (const auto& ref : refdata::spin_levels())
            compare_signs(symmetry_kind::spin, cs, ref.n, ref.kappa_pos);
        for (const auto& ref : refdata::pspin_levels())
            compare_signs(symmetry_kind::pspin, cps, ref.n, ref.kappa_pos);
        check_line c6{6, "Sign-branch invariance: physical roots of (+1,-1) and (-1,+1) identical <= 1e-10", false, ""};
        c6.pass = ok && worst <= 1e-10;
        c6.detail = "worst difference = " + fmt("%.2e", worst) +
                    " (solver normalizes to the regular branch; raw residuals differ pointwise)";
        res.checks.push_back(c6);
    }

    // ---- wavefunction checks (check 7) ----
    {
        auto ws = spin_wavefn_checks(P, cs);
        auto wp = pspin_wavefn_checks(P, cps);
        md << "## Wavefunction checks\n\n";
        md << "- spin ODE residual (n = 0..2, kappa = 1): " << fmt("%.2e", ws.worst_ode) << "\n";
        md << "- spin G vs derivative-of-F: " << fmt("%.2e", ws.worst_deriv) << "\n";
        md << "- pspin ODE residual ((n,kappa) = (1,2), (2,2)): " << fmt("%.2e", wp.worst_ode) << "\n";
        md << "- pspin F vs derivative-of-G: " << fmt("%.2e", wp.worst_deriv) << "\n\n";
        check_line c7{7, "ODE residuals <= 1e-8; spinor-pair derivative consistency <= 1e-7", false, ""};
        c7.pass = ws.ok && wp.ok && ws.worst_ode <= 1e-8 && wp.worst_ode <= 1e-8 &&
                  ws.worst_deriv <= 1e-7 && wp.worst_deriv <= 1e-7;
        c7.detail = "ode spin " + fmt("%.1e", ws.worst_ode) + ", pspin " + fmt("%.1e", wp.worst_ode) +
                    "; deriv spin " + fmt("%.1e", ws.worst_deriv) + ", pspin " +
                    fmt("%.1e", wp.worst_deriv);
        res.checks.push_back(c7);
    }

    // ---- special functions (check 8) ----
    {
        auto sf = run_specfun_suite();
        md << "## Special-function identities\n\n";
        md << "- terminating 2F1 vs Jacobi: " << fmt("%.2e", sf.jacobi_worst) << "\n";
        md << "- derivative rule vs finite differences: " << fmt("%.2e", sf.deriv_worst) << "\n";
        md << "- deformed-hyperbolic identity family: " << fmt("%.2e", sf.identity_worst) << "\n\n";
        check_line c8{8, "Special-function suite (Jacobi <= 1e-12, derivative <= 1e-6, identities <= 1e-12)", false, ""};
        c8.pass = sf.jacobi_worst <= 1e-12 && sf.deriv_worst <= 1e-6 && sf.identity_worst <= 1e-12;
        c8.detail = "jacobi " + fmt("%.1e", sf.jacobi_worst) + ", deriv " + fmt("%.1e", sf.deriv_worst) +
                    ", identities " + fmt("%.1e", sf.identity_worst);
        res.checks.push_back(c8);
    }

    // ---- centrifugal approximation (check 9) ----
    {
        double alpha = P.alpha;
        double r = 0.1 / alpha;
        double approx = centrifugal_approx(2.0, alpha, r);
        double exact = 2.0 / (r * r);
        double rel = std::abs(approx - exact) / exact;
        double predicted = std::pow(0.1, 4) / 15.0;

        auto shift_at = [&](double al) {
            potential_params q = P;
            q.alpha = al;
            auto rep = oracle::approximation_error_report(q, 1, {symmetry_kind::spin, cs}, {}, 0);
            return rep.rows.front();
        };
        auto s035 = shift_at(0.35);
        auto s005 = shift_at(0.05);

        md << "## Centrifugal approximation\n\n";
        md << "- relative error at alpha*r = 0.1: " << fmt("%.3e", rel) << " (expected "
           << fmt("%.3e", predicted) << ")\n";
        md << "- oracle energy shift exact vs approximate centrifugal, n=0 kappa=1: alpha=0.35: "
           << fmt("%.3e", s035.shift) << ", alpha=0.05: " << fmt("%.3e", s005.shift) << "\n\n";
        check_line c9{9, "Centrifugal approximation error scale and alpha-shrinking oracle shift", false, ""};
        c9.pass = rel <= 2.0 * predicted && rel >= predicted / 2.0 && s035.valid && s005.valid &&
                  s005.shift < s035.shift;
        c9.detail = "pointwise rel " + fmt("%.2e", rel) + "; shifts " + fmt("%.2e", s035.shift) +
                    " -> " + fmt("%.2e", s005.shift);
        res.checks.push_back(c9);
    }

    // ---- limit consistency (check 10) ----
    {
        alt_pt_params alt;
        alt.lambda_alt = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * P.well_strength()));
        alt.k_alt = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * P.barrier_strength()));
        double worst_sub = 0.0;
        for (int i = 0; i <= 40; ++i) {
            double e = -4.0 + 8.8 * i / 40.0;
            auto direct = spin_residual_probe(e, 0, 1, P, cs);
            if (!direct) continue;
            double altr = limits::alt_spin_spectrum_residual(e, 0, 1, alt, P.alpha, P.M, cs);
            worst_sub = std::max(worst_sub, std::abs(altr - *direct));
            auto pdirect = pspin_residual_probe(-e, 1, 2, P, cps);
            if (pdirect) {
                double paltr = limits::alt_pspin_spectrum_residual(-e, 1, 2, alt, P.alpha, P.M, cps);
                worst_sub = std::max(worst_sub, std::abs(paltr - *pdirect));
            }
        }
        std::vector<double> gaps;
        for (double mbig : {50.0, 500.0, 5000.0}) {
            auto f = [&](double e) {
                return dirac_residual_core(e, 0, 0.0, 2.0, 9.0, alt.well_strength(),
                                           alt.barrier_strength(), P.alpha, mbig, +1, -1);
            };
            auto scan = scan_roots([&](double e) { return f(e); }, 0.9 * mbig, mbig - 1e-12, 4000);
            double gap = std::nan("");
            if (!scan.roots.empty()) {
                double e = scan.roots.back().root;
                limits::nonrel_inputs in{mbig, 1, 0, alt, P.alpha};
                gap = std::abs((e - mbig) - limits::nonrel_energy(in));
            }
            gaps.push_back(gap);
        }
        md << "## Limits\n\n";
        md << "- substitution-identity worst deviation: " << fmt("%.2e", worst_sub) << "\n";
        md << "- nonrelativistic gap |(E-M) - E_nr| over M = 50/500/5000: " << fmt("%.4e", gaps[0])
           << ", " << fmt("%.4e", gaps[1]) << ", " << fmt("%.4e", gaps[2]) << "\n\n";
        check_line c10{10, "Alt-parametrization substitution identities <= 1e-12; nonrel gap strictly decreasing", false, ""};
        c10.pass = worst_sub <= 1e-12 && gaps[0] > gaps[1] && gaps[1] > gaps[2];
        c10.detail = "substitution " + fmt("%.1e", worst_sub) + "; gaps " + fmt("%.3e", gaps[0]) +
                     " > " + fmt("%.3e", gaps[1]) + " > " + fmt("%.3e", gaps[2]);
        res.checks.push_back(c10);
    }

    // ---- x0 independence (check 11) ----
    {
        bool energies_identical = true;
        bool samples_differ = false;
        double e_ref_spin = 0.0, e_ref_pspin = 0.0;
        cplx f_prev;
        bool first = true;
        for (double x0 : {0.05, 0.1, 0.3}) {
            potential_params q = P;
            q.x0 = x0;
            auto s = solve_spin_energy(0, 1, q, cs);
            auto ps = solve_pspin_energy(1, 2, q, cps);
            const auto* rs = s.physical_root();
            const auto* rp = ps.physical_root();
            if (!rs || !rp) {
                energies_identical = false;
                break;
            }
            cplx fx = spin_upper_component(*rs, quantum_numbers(0, 1), q, 1.0);
            if (first) {
                e_ref_spin = rs->energy;
                e_ref_pspin = rp->energy;
                f_prev = fx;
                first = false;
            } else {
                energies_identical = energies_identical && rs->energy == e_ref_spin &&
                                     rp->energy == e_ref_pspin;
                if (std::abs(fx - f_prev) > 1e-10) samples_differ = true;
            }
        }
        check_line c11{11, "x0-independence: energies bit-identical over x0 in {0.05, 0.1, 0.3}, samples differ", false, ""};
        c11.pass = energies_identical && samples_differ;
        res.checks.push_back(c11);
    }

    // ---- PT symmetry of the potential (check 12) ----
    {
        double worst = 0.0;
        for (int i = 0; i <= 49; ++i) {
            double x = 0.1 + (5.0 - 0.1) * i / 49.0;
            cplx v = complex_pt_potential(P, x);
            cplx vm = complex_pt_potential(P, -x);
            worst = std::max(worst,
                             std::abs(vm - std::conj(v)) / std::max(1.0, std::abs(v)));
        }
        check_line c12{12, "PT symmetry V(-x) = conj(V(x)) <= 1e-12 on x in [0.1, 5]", false, ""};
        c12.pass = worst <= 1e-12;
        c12.detail = "worst deviation = " + fmt("%.2e", worst);
        res.checks.push_back(c12);
    }

    // ---- trends (published, asserted only where oracle-confirmed) ----
    {
        md << "## Trends at fixed states (centered differences)\n\n";
        auto bump_m = [](potential_params& p, double&, double h) { p.M += h; };
        auto bump_b = [](potential_params& p, double&, double h) { p.B += h; };
        auto bump_c = [](potential_params&, double& c, double h) { c += h; };
        auto bump_a = [](potential_params& p, double&, double h) { p.A += h; };
        auto bump_al = [](potential_params& p, double&, double h) { p.alpha += h; };
        double dm = trend_slope(symmetry_kind::spin, 0, 1, P, cs, bump_m, 1e-3);
        double db = trend_slope(symmetry_kind::spin, 0, 1, P, cs, bump_b, 1e-3);
        double dc = trend_slope(symmetry_kind::spin, 0, 1, P, cs, bump_c, 1e-3);
        double da = trend_slope(symmetry_kind::spin, 0, 1, P, cs, bump_a, 1e-3);
        double dal = trend_slope(symmetry_kind::spin, 0, 1, P, cs, bump_al, 1e-4);
        md << "- spin (0,1): dE/dM = " << fmt("%.4f", dm) << ", dE/dB = " << fmt("%.4f", db)
           << ", dE/dCs = " << fmt("%.4f", dc) << " (all expected > 0); dE/dA = " << fmt("%.4f", da)
           << ", dE/dalpha = " << fmt("%.4f", dal) << " (measured, source text self-contradictory)\n";
        double pm = trend_slope(symmetry_kind::pspin, 1, 2, P, cps, bump_m, 1e-3);
        double pa = trend_slope(symmetry_kind::pspin, 1, 2, P, cps, bump_a, 1e-3);
        double pal = trend_slope(symmetry_kind::pspin, 1, 2, P, cps, bump_al, 1e-4);
        double pb = trend_slope(symmetry_kind::pspin, 1, 2, P, cps, bump_b, 1e-3);
        double pc = trend_slope(symmetry_kind::pspin, 1, 2, P, cps, bump_c, 1e-3);
        md << "- pspin (1,2): dE/dM = " << fmt("%.4f", pm) << ", dE/dA = " << fmt("%.4f", pa)
           << ", dE/dalpha = " << fmt("%.4f", pal) << ", dE/dB = " << fmt("%.4f", pb)
           << ", dE/dCps = " << fmt("%.4f", pc) << " (measured)\n\n";
        bool spin_trends = dm > 0.0 && db > 0.0 && dc > 0.0;
        md << (spin_trends ? "Spin M/B/Cs trends increase as expected.\n\n"
                           : "WARNING: spin M/B/Cs trend direction unexpected.\n\n");
    }

    // ---- per-state exponents and level bounds ----
    {
        md << "## Exponents and level bounds per state\n\n";
        md << "| sym | n | kappa | lambda (nu) | eta (delta) | n_max radical | n_max exponent sum |\n";
        md << "|---|---|---|---|---|---|---|\n";
        auto emit_state = [&](symmetry_kind kind, double sym_const, int n, int kappa) {
            auto out = solve_for(kind, n, kappa, P, sym_const);
            const auto* root = out.physical_root();
            if (!root) return;
            double radical = kind == symmetry_kind::spin
                                 ? spin_n_max(P, sym_const, root->energy, kappa).from_radicals
                                 : pspin_n_max(P, sym_const, root->energy, kappa).from_radicals;
            md << "| " << (kind == symmetry_kind::spin ? "spin" : "pspin") << " | " << n << " | "
               << kappa << " | " << format_significant(root->exponents.lambda, 10) << " | "
               << format_significant(root->exponents.eta, 10) << " | "
               << format_significant(radical, 10) << " | "
               << format_significant(root->lambda_plus_eta, 10) << " |\n";
        };
        for (const auto& r : refdata::spin_levels())
            emit_state(symmetry_kind::spin, cs, r.n, r.kappa_pos);
        for (const auto& r : refdata::pspin_levels())
            emit_state(symmetry_kind::pspin, cps, r.n, r.kappa_pos);
        md << "\n";
    }

    // ---- computed vs quoted intermediate values (report, not assertion) ----
    {
        auto out = solve_spin_energy(0, 1, P, cs);
        if (const auto* root = out.physical_root()) {
            auto nm = spin_n_max(P, cs, root->energy, 1);
            md << "## Quoted intermediate values (report only)\n\n";
            md << "At the (n=0, kappa=1) root E = " << format_significant(root->energy) << ":\n\n";
            md << "- computed lambda = " << format_significant(root->exponents.lambda)
               << " (source quotes 4.989398388)\n";
            md << "- computed eta = " << format_significant(root->exponents.eta)
               << " (source quotes -1.634030092)\n";
            md << "- computed n_max = lambda + eta = " << format_significant(nm.lambda_plus_eta)
               << " = radical form " << format_significant(nm.from_radicals)
               << " (source quotes 3.550238160; matches the computed value, while the quoted "
                  "lambda/eta do not reproduce it)\n\n";
        }
    }

    res.elapsed_seconds = std::chrono::duration<double>(clock::now() - t0).count();

    std::sort(res.checks.begin(), res.checks.end(),
              [](const check_line& a, const check_line& b) { return a.id < b.id; });

    md << "## Acceptance checklist\n\n";
    res.all_pass = true;
    for (const auto& c : res.checks) {
        res.all_pass = res.all_pass && c.pass;
        md << (c.pass ? "- PASS " : "- FAIL ") << "criterion " << c.id << ": " << c.name;
        if (!c.detail.empty()) md << " [" << c.detail << "]";
        md << "\n";
    }
    md << "\nTotal time: " << fmt("%.1f", res.elapsed_seconds) << " s\n";

    res.markdown = md.str();
    return res;
}

}  // namespace ptdirac::report
