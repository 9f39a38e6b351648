#ifndef PTDIRAC_MODEL_HPP
#define PTDIRAC_MODEL_HPP

#include <cmath>
#include <complex>
#include <cstdlib>

#include "ptdirac/errors.hpp"

namespace ptdirac {

using cplx = std::complex<double>;

inline constexpr double kD0 = 1.0 / 12.0;

// Poschl-Teller potential parameters.  Energies and masses are in fm^-1
// (hbar = c = 1); alpha is the inverse range, x0 the imaginary coordinate
// shift r -> x - i x0.
struct potential_params {
    double alpha = 0.35;
    double A = 8.0;
    double B = 2.0;
    double M = 5.0;
    double x0 = 0.1;

    // A(A+alpha): strength of the cosh^-2 well.
    double well_strength() const { return A * (A + alpha); }
    // B(B-alpha): strength of the sinh^-2 barrier.
    double barrier_strength() const { return B * (B - alpha); }

    cplx qc() const { return std::exp(cplx(0.0, 2.0 * alpha * x0)); }

    void validate() const;
};

enum class symmetry_kind { spin, pspin };

struct symmetry_choice {
    symmetry_kind kind = symmetry_kind::spin;
    double constant = 0.0;  // C_s (spin) or C_ps (pspin)
};

// (n, kappa) with kappa in {+-1, +-2, ...}.  l and l~ follow from
// kappa(kappa+1) = l(l+1) and kappa(kappa-1) = l~(l~+1).
struct quantum_numbers {
    int n = 0;
    int kappa = 1;

    quantum_numbers() = default;
    quantum_numbers(int n_, int kappa_);

    double j() const { return std::abs(kappa) - 0.5; }
};

int l_from_kappa(int kappa, const symmetry_choice& symmetry);

// Alternative (lambda, k) parametrization of the potential strengths:
// A(A+alpha) -> lambda(lambda+1), B(B-alpha) -> k(k-1).
struct alt_pt_params {
    double lambda_alt = 2.0;
    double k_alt = 2.0;

    double well_strength() const { return lambda_alt * (lambda_alt + 1.0); }
    double barrier_strength() const { return k_alt * (k_alt - 1.0); }

    void validate() const;
};

// Real-axis potential (alpha^2/2M) [B(B-a)/sinh^2(ar) - A(A+a)/cosh^2(ar)].
double real_pt_potential(const potential_params& p, double r);

// Complex PT-symmetric form, r -> x - i x0, evaluated through the deformed
// hyperbolic identities.  Satisfies V(-x) = conj(V(x)).
cplx complex_pt_potential(const potential_params& p, double x);

// Exponential-type replacement for kappa_term / r^2:
// alpha^2 kappa_term [4 d0 + 1/sinh^2(alpha r)], d0 = 1/12.
// d0 = 0 recovers the Greene-Aldrich form.
double centrifugal_approx(double kappa_term, double alpha, double r, double d0 = kD0);

// Effective potential of the transformed upper-component equation:
// [2 qc^2 (V1+V2) + 2 qc (V2-V1) sinh_q(2 alpha x)] / cosh_q^2(2 alpha x),
// q = -qc^2.
cplx effective_potential(const potential_params& p, double v1, double v2, double x);

}  // namespace ptdirac

#endif
