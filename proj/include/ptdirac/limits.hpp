#ifndef PTDIRAC_LIMITS_HPP
#define PTDIRAC_LIMITS_HPP

#include "ptdirac/model.hpp"
#include "ptdirac/spin.hpp"

namespace ptdirac::limits {

// Spin energy equation with A(A+alpha) -> lambda(lambda+1) and
// B(B-alpha) -> k(k-1); a thin re-mapping over the shared residual core.
double alt_spin_spectrum_residual(double energy, int n, int kappa, const alt_pt_params& alt,
                                  double alpha, double mass, double cs,
                                  int sigma = +1, int tau = -1);

double alt_pspin_spectrum_residual(double energy, int n, int kappa, const alt_pt_params& alt,
                                   double alpha, double mass, double cps,
                                   int sigma = +1, int tau = -1);

// The (lambda, k) form of the complex potential; unchanged under
// lambda -> -lambda-1, k -> -k+1.
cplx alt_complex_pt_potential(const alt_pt_params& alt, double alpha, double mass,
                              double x0, double x);

struct nonrel_inputs {
    double mu = 1.0;  // reduced mass, fm^-1
    int l = 0;
    int n = 0;
    alt_pt_params alt;
    double alpha = 0.35;
};

// Nonrelativistic spectrum:
// E_nl = a^2 l(l+1) d0 / (2 mu)
//        - (2 a^2/mu) [-n - 1/2 + (1/4) sqrt(1 + 8 lam(lam+1)) + (1/4) sqrt((1+2l)^2 + 8 k(k-1))]^2
double nonrel_energy(const nonrel_inputs& in);

}  // namespace ptdirac::limits

#endif
