#ifndef PTDIRAC_SPECFUN_HPP
#define PTDIRAC_SPECFUN_HPP

#include <complex>

#include "ptdirac/errors.hpp"

namespace ptdirac::specfun {

using cplx = std::complex<double>;

struct hyp2f1_args {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    cplx z;
};

// Rising factorial (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1.
double pochhammer(double a, int m);

// Gauss hypergeometric series 2F1(a, b; c; z).
//
// A nonpositive-integer a or b terminates the series, which is then summed
// exactly (n+1 terms) and valid for all finite z.  Otherwise the series is
// summed for |z| < 1 until the term falls below 1e-16 of the partial sum,
// capped at 10000 terms.  A nonpositive-integer c raises pole_at_c unless
// the series terminates before the pole index.
cplx gauss_2f1(const hyp2f1_args& args);
cplx gauss_2f1(double a, double b, double c, cplx z);

// d/dz 2F1(a, b; c; z) = (a b / c) 2F1(a+1, b+1; c+1; z).
cplx gauss_2f1_derivative(const hyp2f1_args& args);
cplx gauss_2f1_derivative(double a, double b, double c, cplx z);

// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
cplx jacobi_p(int n, double a, double b, cplx x);

// Deformed hyperbolic functions, sinh_q(u) = (e^u - q e^{-u}) / 2 and
// cosh_q(u) = (e^u + q e^{-u}) / 2 for a complex deformation parameter.
// They satisfy cosh_q^2(u) - sinh_q^2(u) = q.
cplx deformed_sinh(cplx q, double u);
cplx deformed_cosh(cplx q, double u);

}  // namespace ptdirac::specfun

#endif
