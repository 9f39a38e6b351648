#include "ptdirac/spin.hpp"

#include <algorithm>
#include <cmath>

#include "ptdirac/rootfind.hpp"
#include "ptdirac/specfun.hpp"

namespace ptdirac {

namespace {

constexpr double kQuantTol = 1e-8;

double guarded_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

}  // namespace

contour_factors contour_at(const potential_params& p, double x) {
    cplx qc = p.qc();
    cplx q = -qc * qc;
    cplx s2 = specfun::deformed_sinh(q, 2.0 * p.alpha * x);
    cplx c2 = specfun::deformed_cosh(q, 2.0 * p.alpha * x);
    cplx phase = 1.0 / qc;  // e^{-2 i alpha x0}
    return {1.0 - phase * s2, 1.0 + phase * s2, c2, phase};
}

spin_couplings make_spin_couplings(const potential_params& p, double cs, double energy, int kappa) {
    if (kappa == 0) throw error(errc::invalid_kappa, "kappa must be nonzero");
    double a2 = p.alpha * p.alpha;
    double kt = static_cast<double>(kappa) * (kappa + 1);
    spin_couplings c;
    c.ms = p.M + energy - cs;
    c.v1 = a2 * p.well_strength() * c.ms / p.M;
    c.v2 = a2 * (kt + p.barrier_strength() * c.ms / p.M);
    c.beta_sq = energy * energy - p.M * p.M + cs * (p.M - energy);
    c.etilde_sq = c.beta_sq - 4.0 * a2 * kt * kD0;
    return c;
}

exponent_set spin_exponents(const spin_couplings& c, double alpha, int sigma, int tau) {
    double a2 = alpha * alpha;
    double r1 = 1.0 + 4.0 * c.v1 / a2;
    double r2 = 1.0 + 4.0 * c.v2 / a2;
    if (r1 < 0.0 || r2 < 0.0)
        throw error(errc::complex_branch,
                    "negative radicand (r1 = " + std::to_string(r1) + ", r2 = " + std::to_string(r2) + ")");
    exponent_set e;
    e.sigma = sigma;
    e.tau = tau;
    e.lambda = 0.25 * (-1.0 + sigma * std::sqrt(r1));
    e.eta = 0.25 * (-1.0 + tau * std::sqrt(r2));
    e.c1_residual = -e.lambda * e.lambda - 0.5 * e.lambda + c.v1 / (4.0 * a2);
    e.c2_residual = -e.eta * e.eta - 0.5 * e.eta + c.v2 / (4.0 * a2);
    return e;
}

std::optional<double> dirac_residual_core(double energy, int n, double c_const,
                                          double kappa_term, double kb_sq,
                                          double strength_a, double strength_b,
                                          double alpha, double mass,
                                          int sigma, int tau) noexcept {
    double ms = mass + energy - c_const;
    double r1 = 1.0 + 4.0 * ms * strength_a / mass;
    double r2 = kb_sq + 4.0 * ms * strength_b / mass;
    if (r1 < 0.0 || r2 < 0.0) return std::nullopt;
    double a2 = alpha * alpha;
    double lhs = mass * mass - energy * energy + c_const * (energy - mass);
    double bracket = -n - 0.5 + 0.25 * (sigma * std::sqrt(r1) + tau * std::sqrt(r2));
    double rhs = -a2 * kappa_term / 3.0 + 4.0 * a2 * bracket * bracket;
    return lhs - rhs;
}

std::optional<double> spin_residual_probe(double energy, int n, int kappa,
                                          const potential_params& p, double cs,
                                          int sigma, int tau) noexcept {
    double kt = static_cast<double>(kappa) * (kappa + 1);
    double kb = 2.0 * kappa + 1.0;
    return dirac_residual_core(energy, n, cs, kt, kb * kb, p.well_strength(),
                               p.barrier_strength(), p.alpha, p.M, sigma, tau);
}

double spin_energy_residual(double energy, int n, int kappa, const potential_params& p,
                            double cs, int sigma, int tau) {
    auto r = spin_residual_probe(energy, n, kappa, p, cs, sigma, tau);
    if (!r)
        throw error(errc::complex_branch, "radicand negative at E = " + std::to_string(energy));
    return *r;
}

n_max_info spin_n_max(const potential_params& p, double cs, double energy, int kappa) {
    auto c = make_spin_couplings(p, cs, energy, kappa);
    auto e = spin_exponents(c, p.alpha, +1, -1);  // throws complex_branch out of domain
    double a2 = p.alpha * p.alpha;
    double r1 = 1.0 + 4.0 * c.v1 / a2;
    double r2 = 1.0 + 4.0 * c.v2 / a2;
    return {0.25 * (std::sqrt(r1) - std::sqrt(r2)) - 0.5, e.lambda + e.eta};
}

namespace detail {

// Shared scan/classify driver for both symmetry limits.
solve_outcome solve_generic(int n, int kappa, const potential_params& p, double sym_const,
                            const solver_options& opts, bool pspin) {
    p.validate();
    if (kappa == 0) throw error(errc::invalid_kappa, "kappa must be nonzero");
    if (n < 0) throw error(errc::invalid_argument, "n must be >= 0");

    solve_outcome out;
    out.sigma_requested = opts.sigma;
    out.tau_requested = opts.tau;
    out.sigma_effective = +1;  // regular branch: lambda > 0 (decay), eta < 0 (regularity)
    out.tau_effective = -1;

    double lo = opts.e_lo, hi = opts.e_hi;
    if (std::isnan(lo))
        lo = pspin ? std::min(-p.M, p.M + sym_const) - 5.0 * p.alpha : sym_const - p.M + 1e-6;
    if (std::isnan(hi)) {
        hi = p.M - 1e-9;
        if (opts.extended_window) hi = p.M + 5.0 * p.alpha;
    }

    auto probe = [&](double e) -> std::optional<double> {
        if (pspin) {
            double kt = static_cast<double>(kappa) * (kappa - 1);
            double kb = 2.0 * kappa - 1.0;
            return dirac_residual_core(-e, n, -sym_const, kt, kb * kb, -p.well_strength(),
                                       -p.barrier_strength(), p.alpha, p.M, +1, -1);
        }
        return spin_residual_probe(e, n, kappa, p, sym_const, +1, -1);
    };

    auto scan = scan_roots(probe, lo, hi, opts.grid_points, opts.tol);
    out.excluded = std::move(scan.excluded);

    for (const auto& br : scan.roots) {
        energy_solution sol;
        sol.energy = br.root;
        sol.bracket = br.bracket;
        sol.n = n;
        sol.kappa = kappa;
        sol.residual = std::abs(probe(br.root).value_or(0.0));

        double a2 = p.alpha * p.alpha;
        if (pspin) {
            double mps = p.M - sol.energy + sym_const;
            double kt = static_cast<double>(kappa) * (kappa - 1);
            double kb = 2.0 * kappa - 1.0;
            double r1 = 1.0 - 4.0 * mps * p.well_strength() / p.M;
            double r2 = kb * kb - 4.0 * mps * p.barrier_strength() / p.M;
            sol.exponents.lambda = -0.25 * (1.0 - guarded_sqrt(r1));  // nu
            sol.exponents.eta = -0.25 * (1.0 + guarded_sqrt(r2));     // delta
            double beta_sq = sol.energy * sol.energy - p.M * p.M - sym_const * (p.M + sol.energy);
            sol.etilde_sq = beta_sq - 4.0 * a2 * kt * kD0;
        } else {
            auto c = make_spin_couplings(p, sym_const, sol.energy, kappa);
            sol.exponents = spin_exponents(c, p.alpha, +1, -1);
            sol.etilde_sq = c.etilde_sq;
        }
        sol.lambda_plus_eta = sol.exponents.lambda + sol.exponents.eta;
        sol.n_max = sol.lambda_plus_eta;
        if (sol.etilde_sq < 0.0)
            sol.quant_gap = std::abs(2.0 * p.alpha * (sol.lambda_plus_eta - n) -
                                     std::sqrt(-sol.etilde_sq));
        else
            sol.quant_gap = std::numeric_limits<double>::infinity();

        bool sign_ok = pspin ? sol.energy < 0.0 : sol.energy > 0.0;
        sol.physical = sign_ok && sol.etilde_sq < 0.0 && sol.quant_gap <= kQuantTol &&
                       n <= static_cast<int>(std::floor(sol.n_max + 1e-12));
        out.solutions.push_back(sol);
    }
    return out;
}

}  // namespace detail

solve_outcome solve_spin_energy(int n, int kappa, const potential_params& p, double cs,
                                const solver_options& opts) {
    return detail::solve_generic(n, kappa, p, cs, opts, false);
}

cplx spin_upper_component(const energy_solution& sol, const quantum_numbers& qn,
                          const potential_params& p, double x) {
    auto f = contour_at(p, x);
    if (std::abs(f.p1) < 1e-14 || std::abs(f.p2) < 1e-14)
        throw error(errc::pole_on_contour, "p1 or p2 vanishes at x = " + std::to_string(x));
    double lam = sol.exponents.lambda, eta = sol.exponents.eta;
    cplx poly = specfun::gauss_2f1(-qn.n, qn.n - 2.0 * (lam + eta), 0.5 - 2.0 * lam, 0.5 * f.p2);
    return std::pow(2.0, lam + eta) * std::pow(f.p2, -lam) * std::pow(f.p1, -eta) * poly;
}

cplx spin_lower_component(const energy_solution& sol, const quantum_numbers& qn,
                          const potential_params& p, double cs, double x) {
    double lam = sol.exponents.lambda, eta = sol.exponents.eta;
    double ms = p.M + sol.energy - cs;
    if (std::abs(ms) < 1e-12)
        throw error(errc::divergent_limit, "M + E - Cs vanishes");
    if (std::abs(lam - 0.25) < 1e-12)
        throw error(errc::exponent_singular, "lambda = 1/4");

    auto f = contour_at(p, x);
    if (std::abs(f.p1) < 1e-14 || std::abs(f.p2) < 1e-14)
        throw error(errc::pole_on_contour, "p1 or p2 vanishes at x = " + std::to_string(x));

    cplx dcoef = p.alpha * f.phase * f.cosh_q2ax;  // alpha e^{-2 i a x0} cosh_q(2 a x)
    cplx fx = spin_upper_component(sol, qn, p, x);
    cplx total = fx * (static_cast<double>(qn.kappa) / cplx(x, -p.x0) +
                       2.0 * dcoef * (-lam / f.p2 + eta / f.p1));
    if (qn.n > 0) {
        double c1 = -2.0 * qn.n * (qn.n - 2.0 * (lam + eta)) / (1.0 - 4.0 * lam);
        cplx poly = specfun::gauss_2f1(1.0 - qn.n, 1.0 + qn.n - 2.0 * (lam + eta),
                                       1.5 - 2.0 * lam, 0.5 * f.p2);
        total += std::pow(2.0, lam + eta) * c1 * dcoef * std::pow(f.p2, -lam) *
                 std::pow(f.p1, -eta) * poly;
    }
    return total / ms;
}

}  // namespace ptdirac
