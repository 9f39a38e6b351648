#include "ptdirac/pspin.hpp"

#include <cmath>

#include "ptdirac/specfun.hpp"

namespace ptdirac {

namespace detail {
solve_outcome solve_generic(int n, int kappa, const potential_params& p, double sym_const,
                            const solver_options& opts, bool pspin);
}

pspin_couplings make_pspin_couplings(const potential_params& p, double cps, double energy, int kappa) {
    if (kappa == 0) throw error(errc::invalid_kappa, "kappa must be nonzero");
    double a2 = p.alpha * p.alpha;
    double kt = static_cast<double>(kappa) * (kappa - 1);
    pspin_couplings c;
    c.mps = p.M - energy + cps;
    c.v1t = a2 * p.well_strength() * c.mps / p.M;
    c.v2t = a2 * (kt + p.barrier_strength() * c.mps / p.M);
    c.beta_sq = energy * energy - p.M * p.M - cps * (p.M + energy);
    c.etilde_sq = c.beta_sq - 4.0 * a2 * kt * kD0;
    return c;
}

pspin_exponent_set pspin_exponents(const potential_params& p, double cps, double energy, int kappa) {
    double mps = p.M - energy + cps;
    double kb = 2.0 * kappa - 1.0;
    double r1 = 1.0 - 4.0 * mps * p.well_strength() / p.M;
    double r2 = kb * kb - 4.0 * mps * p.barrier_strength() / p.M;
    if (r1 < 0.0 || r2 < 0.0)
        throw error(errc::complex_branch,
                    "negative radicand (r1 = " + std::to_string(r1) + ", r2 = " + std::to_string(r2) + ")");
    return {-0.25 * (1.0 - std::sqrt(r1)), -0.25 * (1.0 + std::sqrt(r2))};
}

mapped_spin_args parametric_map(double energy, int n, int kappa, double cps,
                                const potential_params& p) {
    return {-energy, n, kappa - 1, -cps, -p.well_strength(), -p.barrier_strength()};
}

std::optional<double> spin_residual_from_map(const mapped_spin_args& m, double alpha,
                                             double mass, int sigma, int tau) noexcept {
    double kt = static_cast<double>(m.kappa) * (m.kappa + 1);
    double kb = 2.0 * m.kappa + 1.0;
    return dirac_residual_core(m.energy, m.n, m.c_const, kt, kb * kb, m.strength_a,
                               m.strength_b, alpha, mass, sigma, tau);
}

std::optional<double> pspin_residual_probe(double energy, int n, int kappa,
                                           const potential_params& p, double cps,
                                           int sigma, int tau) noexcept {
    double mps = p.M - energy + cps;
    double kb = 2.0 * kappa - 1.0;
    double r1 = 1.0 - 4.0 * mps * p.well_strength() / p.M;
    double r2 = kb * kb - 4.0 * mps * p.barrier_strength() / p.M;
    if (r1 < 0.0 || r2 < 0.0) return std::nullopt;
    double a2 = p.alpha * p.alpha;
    double kt = static_cast<double>(kappa) * (kappa - 1);
    double lhs = p.M * p.M - energy * energy + cps * (energy + p.M);
    double bracket = -n - 0.5 + 0.25 * (sigma * std::sqrt(r1) + tau * std::sqrt(r2));
    return lhs - (-a2 * kt / 3.0 + 4.0 * a2 * bracket * bracket);
}

double pspin_energy_residual(double energy, int n, int kappa, const potential_params& p,
                             double cps, int sigma, int tau) {
    auto r = pspin_residual_probe(energy, n, kappa, p, cps, sigma, tau);
    if (!r)
        throw error(errc::complex_branch, "radicand negative at E = " + std::to_string(energy));
    return *r;
}

n_max_info pspin_n_max(const potential_params& p, double cps, double energy, int kappa) {
    auto e = pspin_exponents(p, cps, energy, kappa);
    double mps = p.M - energy + cps;
    double kb = 2.0 * kappa - 1.0;
    double r1 = 1.0 - 4.0 * mps * p.well_strength() / p.M;
    double r2 = kb * kb - 4.0 * mps * p.barrier_strength() / p.M;
    return {0.25 * std::sqrt(r1) - 0.25 * std::sqrt(r2) - 0.5, e.nu + e.delta};
}

std::pair<double, double> pspin_effective_strengths(const potential_params& p, double cps,
                                                    double energy, int kappa) {
    double a2 = p.alpha * p.alpha;
    double mps = p.M - energy + cps;
    double kt = static_cast<double>(kappa) * (kappa - 1);
    return {-a2 * p.well_strength() * mps / p.M,
            a2 * (kt - p.barrier_strength() * mps / p.M)};
}

solve_outcome solve_pspin_energy(int n, int kappa, const potential_params& p, double cps,
                                 const solver_options& opts) {
    return detail::solve_generic(n, kappa, p, cps, opts, true);
}

cplx pspin_lower_component(const energy_solution& sol, const quantum_numbers& qn,
                           const potential_params& p, double x) {
    auto f = contour_at(p, x);
    if (std::abs(f.p1) < 1e-14 || std::abs(f.p2) < 1e-14)
        throw error(errc::pole_on_contour, "p1 or p2 vanishes at x = " + std::to_string(x));
    double nu = sol.exponents.lambda, delta = sol.exponents.eta;
    cplx poly = specfun::gauss_2f1(-qn.n, qn.n - 2.0 * (nu + delta), 0.5 - 2.0 * nu, 0.5 * f.p2);
    return std::pow(2.0, nu + delta) * std::pow(f.p2, -nu) * std::pow(f.p1, -delta) * poly;
}

cplx pspin_upper_component(const energy_solution& sol, const quantum_numbers& qn,
                           const potential_params& p, double cps, double x) {
    double nu = sol.exponents.lambda, delta = sol.exponents.eta;
    double mps = p.M - sol.energy + cps;
    if (std::abs(mps) < 1e-12)
        throw error(errc::divergent_limit, "M - E + Cps vanishes (E = M + Cps)");
    if (std::abs(nu - 0.25) < 1e-12)
        throw error(errc::exponent_singular, "nu = 1/4");

    auto f = contour_at(p, x);
    if (std::abs(f.p1) < 1e-14 || std::abs(f.p2) < 1e-14)
        throw error(errc::pole_on_contour, "p1 or p2 vanishes at x = " + std::to_string(x));

    cplx dcoef = p.alpha * f.phase * f.cosh_q2ax;
    cplx gx = pspin_lower_component(sol, qn, p, x);
    cplx total = gx * (-static_cast<double>(qn.kappa) / cplx(x, -p.x0) +
                       2.0 * dcoef * (-nu / f.p2 + delta / f.p1));
    if (qn.n > 0) {
        double c1 = -2.0 * qn.n * (qn.n - 2.0 * (nu + delta)) / (1.0 - 4.0 * nu);
        cplx poly = specfun::gauss_2f1(1.0 - qn.n, 1.0 + qn.n - 2.0 * (nu + delta),
                                       1.5 - 2.0 * nu, 0.5 * f.p2);
        total += std::pow(2.0, nu + delta) * c1 * dcoef * std::pow(f.p2, -nu) *
                 std::pow(f.p1, -delta) * poly;
    }
    return total / mps;
}

}  // namespace ptdirac
