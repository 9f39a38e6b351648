#ifndef PTDIRAC_SPIN_HPP
#define PTDIRAC_SPIN_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ptdirac/model.hpp"

namespace ptdirac {

// Deformed-contour factors shared by the spinor components:
// p1 = 1 - e^{-2 i a x0} sinh_q(2 a x), p2 = 1 + e^{-2 i a x0} sinh_q(2 a x).
// p2/2 = cosh^2 alpha(x - i x0) is the hypergeometric argument.
struct contour_factors {
    cplx p1;
    cplx p2;
    cplx cosh_q2ax;  // cosh_q(2 alpha x), q = -qc^2
    cplx phase;      // e^{-2 i alpha x0}
};
contour_factors contour_at(const potential_params& p, double x);

struct spin_couplings {
    double v1 = 0.0;         // alpha^2 A(A+alpha) Ms / M
    double v2 = 0.0;         // alpha^2 [kappa(kappa+1) + B(B-alpha) Ms / M]
    double etilde_sq = 0.0;  // beta^2 - 4 alpha^2 kappa(kappa+1) d0
    double beta_sq = 0.0;    // E^2 - M^2 + Cs (M - E)
    double ms = 0.0;         // M + E - Cs
};

spin_couplings make_spin_couplings(const potential_params& p, double cs, double energy, int kappa);

struct exponent_set {
    double lambda = 0.0;
    double eta = 0.0;
    int sigma = +1;
    int tau = -1;
    double c1_residual = 0.0;
    double c2_residual = 0.0;
};

// lambda = (-1 + sigma sqrt(1 + 4 V1/a^2))/4, eta = (-1 + tau sqrt(1 + 4 V2/a^2))/4.
// Throws complex_branch if a radicand is negative.
exponent_set spin_exponents(const spin_couplings& c, double alpha, int sigma, int tau);

// Residual (LHS - RHS) of the transcendental spin energy equation written with
// explicit potential strengths; shared by the pseudospin parametric map and by
// the alternative parametrization.  nullopt where a radicand is negative.
std::optional<double> dirac_residual_core(double energy, int n, double c_const,
                                          double kappa_term, double kb_sq,
                                          double strength_a, double strength_b,
                                          double alpha, double mass,
                                          int sigma, int tau) noexcept;

double spin_energy_residual(double energy, int n, int kappa, const potential_params& p,
                            double cs, int sigma = +1, int tau = -1);
std::optional<double> spin_residual_probe(double energy, int n, int kappa,
                                          const potential_params& p, double cs,
                                          int sigma = +1, int tau = -1) noexcept;

struct n_max_info {
    double from_radicals = 0.0;   // (sqrt(R1) - sqrt(R2))/4 - 1/2
    double lambda_plus_eta = 0.0; // identical analytically; both reported
};
n_max_info spin_n_max(const potential_params& p, double cs, double energy, int kappa);

struct solver_options {
    double e_lo = std::nan("");  // NaN -> symmetry-specific default window
    double e_hi = std::nan("");
    int grid_points = 20000;
    double tol = 1e-12;
    int sigma = +1;
    int tau = -1;
    bool extended_window = true;
};

struct energy_solution {
    double energy = 0.0;
    double residual = 0.0;
    double n_max = 0.0;
    double lambda_plus_eta = 0.0;
    double etilde_sq = 0.0;
    // |2 alpha (lambda+eta-n) - sqrt(-Etilde^2)|; large on the complementary branch
    double quant_gap = 0.0;
    exponent_set exponents;  // for pseudospin solutions lambda/eta hold nu/delta
    std::pair<double, double> bracket{0.0, 0.0};
    bool physical = false;
    int n = 0;
    int kappa = 0;
};

struct solve_outcome {
    std::vector<energy_solution> solutions;
    std::vector<std::pair<double, double>> excluded;
    int sigma_requested = +1, tau_requested = -1;
    int sigma_effective = +1, tau_effective = -1;

    const energy_solution* physical_root() const {
        for (const auto& s : solutions)
            if (s.physical) return &s;
        return nullptr;
    }
};

// Scans the energy window, refines each sign change by Brent and classifies
// roots.  The scan always runs on the regular branch (lambda > 0, eta < 0,
// i.e. effective signs (+1,-1)); the requested (sigma, tau) pair is recorded.
// Physical roots are the positive-energy ones with n <= floor(n_max) on the
// decaying quantization branch.
solve_outcome solve_spin_energy(int n, int kappa, const potential_params& p, double cs,
                                const solver_options& opts = {});

// Unnormalized upper component F(x) of the spin-symmetric solution.
cplx spin_upper_component(const energy_solution& sol, const quantum_numbers& qn,
                          const potential_params& p, double x);

// Lower component G(x) = [kappa/r F + dF/dr] / (M + E - Cs) in closed form.
cplx spin_lower_component(const energy_solution& sol, const quantum_numbers& qn,
                          const potential_params& p, double cs, double x);

}  // namespace ptdirac

#endif
