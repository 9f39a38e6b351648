#include "ptdirac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ptdirac/pspin.hpp"
#include "ptdirac/spin.hpp"

namespace ptdirac::oracle {

namespace {

double beta_sq_of(const potential_params& p, const symmetry_choice& sym, double energy) {
    if (sym.kind == symmetry_kind::spin)
        return energy * energy - p.M * p.M + sym.constant * (p.M - energy);
    return energy * energy - p.M * p.M - sym.constant * (p.M + energy);
}

double resolve_rmax(const potential_params& p, const grid_spec& g) {
    return g.r_max > 0.0 ? g.r_max : 30.0 / p.alpha;
}

}  // namespace

radial_operator make_radial_operator(const potential_params& p, const symmetry_choice& sym,
                                     double energy, int kappa, const grid_spec& grid,
                                     centrifugal_mode mode) {
    if (kappa == 0) throw error(errc::invalid_kappa, "kappa must be nonzero");
    if (grid.points < 100) throw error(errc::invalid_argument, "grid needs at least 100 points");
    double r_max = resolve_rmax(p, grid);
    if (!(grid.r_min > 0.0 && grid.r_min < r_max))
        throw error(errc::invalid_argument, "require 0 < r_min < r_max");

    bool spin = sym.kind == symmetry_kind::spin;
    double kt = spin ? static_cast<double>(kappa) * (kappa + 1)
                     : static_cast<double>(kappa) * (kappa - 1);
    // spin couples +Ms, pspin couples -Mps to the potential shape
    double mass_factor = spin ? p.M + energy - sym.constant : -(p.M - energy + sym.constant);
    double a2 = p.alpha * p.alpha;

    radial_operator op;
    int n = grid.points;
    op.h = (r_max - grid.r_min) / (n - 1);
    op.off = -1.0 / (op.h * op.h);
    op.diag.resize(n);
    op.continuum_edge = mode == centrifugal_mode::approximate ? 4.0 * a2 * kt * kD0 : 0.0;

    double w_min = std::numeric_limits<double>::infinity();
    double w_max = -w_min;
    for (int i = 0; i < n; ++i) {
        double r = grid.r_min + i * op.h;
        double s = std::sinh(p.alpha * r);
        double c = std::cosh(p.alpha * r);
        double cent = mode == centrifugal_mode::approximate
                          ? a2 * kt * (4.0 * kD0 + 1.0 / (s * s))
                          : kt / (r * r);
        double w = cent + (mass_factor * a2 / p.M) *
                              (p.barrier_strength() / (s * s) - p.well_strength() / (c * c));
        op.diag[i] = 2.0 / (op.h * op.h) + w;
        w_min = std::min(w_min, w);
        w_max = std::max(w_max, w);
    }
    op.w_min = w_min;
    op.w_max = w_max;

    // points-per-oscillation estimate at the largest local wavenumber
    double k_max = std::sqrt(std::max(op.continuum_edge - w_min, 0.0));
    if (k_max > 0.0 && op.h > 2.0 * std::numbers::pi / (20.0 * k_max))
        throw error(errc::grid_too_coarse, "fewer than 20 points per oscillation; refine the grid");
    return op;
}

int sturm_count_below(const radial_operator& op, double x) {
    int count = 0;
    double off_sq = op.off * op.off;
    double q = 1.0;
    for (std::size_t i = 0; i < op.diag.size(); ++i) {
        q = op.diag[i] - x - (i > 0 ? off_sq / q : 0.0);
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

double eigenvalue_by_index(const radial_operator& op, int k) {
    double lo = op.w_min - 1.0;
    double gershgorin = op.w_max + 4.0 / (op.h * op.h) + 1.0;
    // bound-state indices live far below the Gershgorin bound; widen only if needed
    double hi = std::min(op.continuum_edge + 10.0, gershgorin);
    if (sturm_count_below(op, hi) < k + 1) hi = gershgorin;
    if (sturm_count_below(op, hi) < k + 1)
        throw error(errc::no_eigenvalue, "operator has fewer than k+1 eigenvalues below bound");
    while (hi - lo > 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)})) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count_below(op, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double eigenvalue_richardson(const potential_params& p, const symmetry_choice& sym,
                             double energy, int kappa, const grid_spec& grid, int k,
                             centrifugal_mode mode) {
    grid_spec fine = grid;
    fine.points = 2 * grid.points;
    double mu1 = eigenvalue_by_index(make_radial_operator(p, sym, energy, kappa, grid, mode), k);
    double mu2 = eigenvalue_by_index(make_radial_operator(p, sym, energy, kappa, fine, mode), k);
    return (4.0 * mu2 - mu1) / 3.0;
}

oracle_result oracle_energy(int n, int kappa, const potential_params& p,
                            const symmetry_choice& sym, const grid_spec& grid,
                            centrifugal_mode mode) {
    oracle_result res;
    bool spin = sym.kind == symmetry_kind::spin;

    // analytic side, for the gap field only
    solve_outcome analytic = spin ? solve_spin_energy(n, kappa, p, sym.constant)
                                  : solve_pspin_energy(n, kappa, p, sym.constant);
    if (const auto* root = analytic.physical_root()) {
        res.analytic_exists = true;
        res.analytic_energy = root->energy;
    }

    auto h_of = [&](double e) {
        return beta_sq_of(p, sym, e) - eigenvalue_richardson(p, sym, e, kappa, grid, n, mode);
    };

    double lo, hi;
    if (spin) {
        lo = sym.constant - p.M + 1e-3;
        hi = p.M - 1e-6;
    } else {
        lo = std::min(-p.M, p.M + sym.constant) + 1e-3;
        hi = -1e-6;
    }

    // locate a sign change of h on a coarse sweep (h can be non-monotone near
    // the window edges)
    const int sweep = 24;
    double prev_e = lo, prev_h = h_of(lo);
    ++res.iterations;
    double blo = 0.0, bhi = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= sweep; ++i) {
        double e = lo + (hi - lo) * i / sweep;
        double he = h_of(e);
        ++res.iterations;
        if (prev_h * he <= 0.0) {
            blo = prev_e;
            bhi = e;
            bracketed = true;
            break;
        }
        prev_e = e;
        prev_h = he;
    }
    if (!bracketed) {
        res.note = "no self-consistent energy: beta^2(E) never crosses the n-th eigenvalue";
        return res;
    }

    double flo = h_of(blo);
    while (bhi - blo > 1e-11 && res.iterations < 200) {
        double mid = 0.5 * (blo + bhi);
        double fm = h_of(mid);
        ++res.iterations;
        if (flo * fm <= 0.0)
            bhi = mid;
        else {
            blo = mid;
            flo = fm;
        }
    }
    res.energy = 0.5 * (blo + bhi);

    // Genuine levels sit strictly below the continuum edge; Dirichlet box
    // states sit strictly above it (domain truncation raises eigenvalues), so
    // half a box quantum separates the two.
    auto op = make_radial_operator(p, sym, res.energy, kappa, grid, mode);
    double box_scale = std::pow(std::numbers::pi / (resolve_rmax(p, grid) - grid.r_min), 2);
    double mu_n = eigenvalue_by_index(op, n);
    res.bound_exists = mu_n < op.continuum_edge - 0.5 * box_scale;
    res.converged = res.bound_exists && res.iterations < 200;
    if (!res.bound_exists)
        res.note = "candidate eigenvalue sits at the continuum edge (box artifact), not a bound level";
    if (res.analytic_exists) res.gap = res.energy - res.analytic_energy;
    return res;
}

approximation_error_report_t approximation_error_report(const potential_params& p, int kappa,
                                                        const symmetry_choice& sym,
                                                        const grid_spec& grid, int max_levels) {
    // kappa(kappa+-1) = 0 makes both modes identical and every shift exactly zero
    approximation_error_report_t rep;
    rep.kappa = kappa;
    rep.alpha = p.alpha;
    for (int n = 0; n <= max_levels; ++n) {
        approximation_error_row row;
        row.n = n;
        auto ra = oracle_energy(n, kappa, p, sym, grid, centrifugal_mode::approximate);
        auto re = oracle_energy(n, kappa, p, sym, grid, centrifugal_mode::exact);
        if (ra.converged && re.converged) {
            row.energy_approx = ra.energy;
            row.energy_exact = re.energy;
            row.shift = std::abs(ra.energy - re.energy);
            row.valid = true;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

double ode_residual(const std::function<cplx(double)>& sampler,
                    const std::function<cplx(double)>& u_eff, double etilde_sq,
                    double x_lo, double x_hi, int points) {
    if (points < 5) throw error(errc::invalid_argument, "need at least 5 grid points");
    double h = (x_hi - x_lo) / (points - 1);
    std::vector<cplx> f(points);
    for (int i = 0; i < points; ++i) f[i] = sampler(x_lo + i * h);

    double worst = 0.0, scale = 0.0;
    for (int i = 2; i < points - 2; ++i) {
        cplx d2 = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) /
                  (12.0 * h * h);
        cplx term = (etilde_sq - u_eff(x_lo + i * h)) * f[i];
        worst = std::max(worst, std::abs(d2 + term));
        scale = std::max({scale, std::abs(d2), std::abs(term)});
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

}  // namespace ptdirac::oracle
