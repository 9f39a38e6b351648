#include "ptdirac/limits.hpp"

#include <cmath>

namespace ptdirac::limits {

double alt_spin_spectrum_residual(double energy, int n, int kappa, const alt_pt_params& alt,
                                  double alpha, double mass, double cs, int sigma, int tau) {
    double kt = static_cast<double>(kappa) * (kappa + 1);
    double kb = 2.0 * kappa + 1.0;
    auto r = dirac_residual_core(energy, n, cs, kt, kb * kb, alt.well_strength(),
                                 alt.barrier_strength(), alpha, mass, sigma, tau);
    if (!r) throw error(errc::complex_branch, "radicand negative at E = " + std::to_string(energy));
    return *r;
}

double alt_pspin_spectrum_residual(double energy, int n, int kappa, const alt_pt_params& alt,
                                   double alpha, double mass, double cps, int sigma, int tau) {
    // parametric image of the spin form: E -> -E, kappa -> kappa-1, strengths negated.
    double kt = static_cast<double>(kappa - 1) * kappa;
    double kb = 2.0 * (kappa - 1) + 1.0;
    auto r = dirac_residual_core(-energy, n, -cps, kt, kb * kb, -alt.well_strength(),
                                 -alt.barrier_strength(), alpha, mass, sigma, tau);
    if (!r) throw error(errc::complex_branch, "radicand negative at E = " + std::to_string(energy));
    return *r;
}

cplx alt_complex_pt_potential(const alt_pt_params& alt, double alpha, double mass,
                              double x0, double x) {
    cplx arg = alpha * cplx(x, -x0);
    cplx s = std::sinh(arg), c = std::cosh(arg);
    return alpha * alpha / (2.0 * mass) *
           (alt.barrier_strength() / (s * s) - alt.well_strength() / (c * c));
}

double nonrel_energy(const nonrel_inputs& in) {
    double a2 = in.alpha * in.alpha;
    double ll = static_cast<double>(in.l) * (in.l + 1);
    double bracket = -in.n - 0.5 + 0.25 * std::sqrt(1.0 + 8.0 * in.alt.well_strength()) +
                     0.25 * std::sqrt((1.0 + 2.0 * in.l) * (1.0 + 2.0 * in.l) +
                                      8.0 * in.alt.barrier_strength());
    return a2 * ll * kD0 / (2.0 * in.mu) - (2.0 * a2 / in.mu) * bracket * bracket;
}

}  // namespace ptdirac::limits
