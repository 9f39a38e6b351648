#ifndef PTDIRAC_PSPIN_HPP
#define PTDIRAC_PSPIN_HPP

#include "ptdirac/spin.hpp"

namespace ptdirac {

struct pspin_couplings {
    double v1t = 0.0;        // alpha^2 A(A+alpha) Mps / M
    double v2t = 0.0;        // alpha^2 [kappa(kappa-1) + B(B-alpha) Mps / M]
    double etilde_sq = 0.0;  // beta~^2 - 4 alpha^2 kappa(kappa-1) d0
    double beta_sq = 0.0;    // E^2 - M^2 - Cps (M + E)
    double mps = 0.0;        // M - E + Cps
};

pspin_couplings make_pspin_couplings(const potential_params& p, double cps, double energy, int kappa);

struct pspin_exponent_set {
    double nu = 0.0;
    double delta = 0.0;
};

// nu = -(1 - sqrt(1 - 4 Mps A(A+a)/M))/4, delta = -(1 + sqrt((2k-1)^2 - 4 Mps B(B-a)/M))/4.
// Throws complex_branch with the offending radicand when out of domain; this is
// an expected outcome for parameter regimes with Mps > 0.
pspin_exponent_set pspin_exponents(const potential_params& p, double cps, double energy, int kappa);

// The spin -> pseudospin parametric mapping F<->G, kappa -> kappa-1,
// V -> -V, E -> -E, Cs -> -Cps, expressed as the argument set under which the
// spin-form residual reproduces the pseudospin energy equation.
struct mapped_spin_args {
    double energy = 0.0;  // -E
    int n = 0;
    int kappa = 0;        // kappa - 1
    double c_const = 0.0; // -Cps
    double strength_a = 0.0;  // -A(A+alpha)
    double strength_b = 0.0;  // -B(B-alpha)
};

mapped_spin_args parametric_map(double energy, int n, int kappa, double cps,
                                const potential_params& p);

// Evaluates the spin-form core residual on mapped arguments; pointwise equal
// to pspin_energy_residual by construction of the mapping.
std::optional<double> spin_residual_from_map(const mapped_spin_args& m, double alpha,
                                             double mass, int sigma = +1, int tau = -1) noexcept;

// Residual of the pseudospin energy equation, written out directly (the
// redundant second route next to the parametric map; tests hold them equal).
double pspin_energy_residual(double energy, int n, int kappa, const potential_params& p,
                             double cps, int sigma = +1, int tau = -1);
std::optional<double> pspin_residual_probe(double energy, int n, int kappa,
                                           const potential_params& p, double cps,
                                           int sigma = +1, int tau = -1) noexcept;

n_max_info pspin_n_max(const potential_params& p, double cps, double energy, int kappa);

// Effective (V1, V2) of the lower-component equation written in the spin form;
// the radicands 1 + 4 Vi / alpha^2 reproduce the pseudospin energy equation's.
std::pair<double, double> pspin_effective_strengths(const potential_params& p, double cps,
                                                    double energy, int kappa);

// Physical branch: negative-energy roots with n <= floor(nu + delta) on the
// decaying quantization branch.  Roots on the complementary branch (reference
// rows with n > nu + delta) are retained with physical = false.
solve_outcome solve_pspin_energy(int n, int kappa, const potential_params& p, double cps,
                                 const solver_options& opts = {});

// Unnormalized lower component G(x) of the pseudospin solution.
cplx pspin_lower_component(const energy_solution& sol, const quantum_numbers& qn,
                           const potential_params& p, double x);

// Upper component F(x) = [dG/dr - kappa/r G] / (M - E + Cps) in closed form.
cplx pspin_upper_component(const energy_solution& sol, const quantum_numbers& qn,
                           const potential_params& p, double cps, double x);

}  // namespace ptdirac

#endif
