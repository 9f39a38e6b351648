#include "ptdirac/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptdirac/specfun.hpp"

namespace ptdirac {

void potential_params::validate() const {
    if (!(alpha > 0.0)) throw error(errc::invalid_argument, "alpha must be > 0");
    if (!(A > alpha)) throw error(errc::invalid_argument, "A must exceed alpha");
    if (!(B > alpha)) throw error(errc::invalid_argument, "B must exceed alpha");
    if (!(M > 0.0)) throw error(errc::invalid_argument, "M must be > 0");
    double ax0 = alpha * x0;
    if (!(ax0 > 0.0 && ax0 < std::numbers::pi / 2.0))
        throw error(errc::invalid_argument, "alpha*x0 must lie in (0, pi/2)");
}

void alt_pt_params::validate() const {
    if (!(lambda_alt > 1.0) || !(k_alt > 1.0))
        throw error(errc::invalid_argument, "alternative parameters must exceed 1");
}

quantum_numbers::quantum_numbers(int n_, int kappa_) : n(n_), kappa(kappa_) {
    if (kappa == 0) throw error(errc::invalid_kappa, "kappa must be nonzero");
    if (n < 0) throw error(errc::invalid_argument, "n must be >= 0");
}

int l_from_kappa(int kappa, const symmetry_choice& symmetry) {
    if (kappa == 0) throw error(errc::invalid_kappa, "kappa must be nonzero");
    if (symmetry.kind == symmetry_kind::spin)
        return kappa < 0 ? -kappa - 1 : kappa;
    return kappa < 0 ? -kappa : kappa - 1;
}

double real_pt_potential(const potential_params& p, double r) {
    if (!(r > 0.0)) throw error(errc::pole_at_origin, "r must be > 0");
    double s = std::sinh(p.alpha * r);
    double c = std::cosh(p.alpha * r);
    return p.alpha * p.alpha / (2.0 * p.M) *
           (p.barrier_strength() / (s * s) - p.well_strength() / (c * c));
}

cplx complex_pt_potential(const potential_params& p, double x) {
    // sinh^2 a(x-ix0) = (sinh_q(2ax) - qc)/(2 qc), cosh^2 = (qc + sinh_q(2ax))/(2 qc)
    cplx qc = p.qc();
    cplx q = -qc * qc;
    cplx s2ax = specfun::deformed_sinh(q, 2.0 * p.alpha * x);
    cplx sinh_sq = (s2ax - qc) / (2.0 * qc);
    cplx cosh_sq = (qc + s2ax) / (2.0 * qc);
    if (std::abs(sinh_sq) < 1e-28)
        throw error(errc::pole_on_contour, "sinh alpha(x - i x0) vanishes at x = " + std::to_string(x));
    return p.alpha * p.alpha / (2.0 * p.M) *
           (p.barrier_strength() / sinh_sq - p.well_strength() / cosh_sq);
}

double centrifugal_approx(double kappa_term, double alpha, double r, double d0) {
    if (!(r > 0.0)) throw error(errc::pole_at_origin, "r must be > 0");
    double s = std::sinh(alpha * r);
    return alpha * alpha * kappa_term * (4.0 * d0 + 1.0 / (s * s));
}

cplx effective_potential(const potential_params& p, double v1, double v2, double x) {
    cplx qc = p.qc();
    cplx q = -qc * qc;
    cplx s2 = specfun::deformed_sinh(q, 2.0 * p.alpha * x);
    cplx c2 = specfun::deformed_cosh(q, 2.0 * p.alpha * x);
    if (std::abs(c2) < 1e-14)
        throw error(errc::pole_on_contour, "cosh_q(2 alpha x) vanishes at x = " + std::to_string(x));
    return (2.0 * qc * qc * (v1 + v2) + 2.0 * qc * (v2 - v1) * s2) / (c2 * c2);
}

}  // namespace ptdirac
