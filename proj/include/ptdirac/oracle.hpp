#ifndef PTDIRAC_ORACLE_HPP
#define PTDIRAC_ORACLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "ptdirac/model.hpp"

namespace ptdirac::oracle {

struct grid_spec {
    double r_min = 1e-6;
    double r_max = 0.0;  // <= 0 -> 30 / alpha
    int points = 4000;
};

enum class centrifugal_mode { approximate, exact };

// Central-difference discretization of -d^2/dr^2 + W(r; E) with Dirichlet ends.
// W is arranged so the eigenvalue is beta^2 (spin) or beta~^2 (pspin); the
// continuum edge is W(r -> inf) = 4 a^2 kappa(kappa+-1) d0 in approximate mode.
struct radial_operator {
    std::vector<double> diag;
    double off = 0.0;     // constant off-diagonal -1/h^2
    double h = 0.0;
    double continuum_edge = 0.0;
    double w_min = 0.0;
    double w_max = 0.0;
};

radial_operator make_radial_operator(const potential_params& p, const symmetry_choice& sym,
                                     double energy, int kappa, const grid_spec& grid,
                                     centrifugal_mode mode = centrifugal_mode::approximate);

// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count_below(const radial_operator& op, double x);

// k-th smallest eigenvalue (k 0-based) by Sturm bisection.
double eigenvalue_by_index(const radial_operator& op, int k);

// Richardson-extrapolated eigenvalue from the N and 2N grids (h^2 -> h^4).
double eigenvalue_richardson(const potential_params& p, const symmetry_choice& sym,
                             double energy, int kappa, const grid_spec& grid, int k,
                             centrifugal_mode mode = centrifugal_mode::approximate);

struct oracle_result {
    double energy = 0.0;
    double analytic_energy = 0.0;
    double gap = 0.0;
    int iterations = 0;
    bool converged = false;
    bool analytic_exists = false;
    bool bound_exists = false;  // n-th eigenvalue below the continuum edge at the solution
    std::string note;
};

// Solves the self-consistency problem: E such that the (n+1)-th lowest
// eigenvalue of the operator equals beta^2(E).  Outer root by bisection;
// eigenvalues by Sturm bisection with Richardson extrapolation.  The analytic
// solver is consulted only to fill analytic_energy / gap.
oracle_result oracle_energy(int n, int kappa, const potential_params& p,
                            const symmetry_choice& sym, const grid_spec& grid = {},
                            centrifugal_mode mode = centrifugal_mode::approximate);

struct approximation_error_row {
    int n = 0;
    double energy_approx = 0.0;
    double energy_exact = 0.0;
    double shift = 0.0;
    bool valid = false;
};

struct approximation_error_report_t {
    int kappa = 0;
    double alpha = 0.0;
    std::vector<approximation_error_row> rows;
};

// Same eigenproblem with the exact kappa(kappa+-1)/r^2 term and with the
// exponential-type replacement; per-level energy shifts quantify the
// approximation (valid for alpha r << 1).
approximation_error_report_t approximation_error_report(const potential_params& p, int kappa,
                                                        const symmetry_choice& sym,
                                                        const grid_spec& grid = {},
                                                        int max_levels = 2);

// Max over interior grid points of |f'' + (Etilde^2 - U(x)) f|, fourth-order
// central differences, normalized by the largest term magnitude.  Returns 0
// for an identically-zero sampler.
double ode_residual(const std::function<cplx(double)>& sampler,
                    const std::function<cplx(double)>& u_eff, double etilde_sq,
                    double x_lo, double x_hi, int points);

}  // namespace ptdirac::oracle

#endif
