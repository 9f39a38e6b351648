#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ptdirac/model.hpp"

using namespace ptdirac;

namespace {
potential_params ref() { return {0.35, 8.0, 2.0, 5.0, 0.1}; }
}

TEST_CASE("potential_params invariants") {
    CHECK_NOTHROW(ref().validate());
    potential_params p = ref();
    p.alpha = 0.0;
    CHECK_THROWS_AS(p.validate(), error);
    p = ref();
    p.A = 0.2;
    CHECK_THROWS_AS(p.validate(), error);
    p = ref();
    p.B = 0.1;
    CHECK_THROWS_AS(p.validate(), error);
    p = ref();
    p.M = -1.0;
    CHECK_THROWS_AS(p.validate(), error);
    p = ref();
    p.x0 = 0.0;
    CHECK_THROWS_AS(p.validate(), error);
    p.x0 = 10.0;  // alpha*x0 = 3.5 > pi/2
    CHECK_THROWS_AS(p.validate(), error);
}

TEST_CASE("l_from_kappa mappings") {
    symmetry_choice spin{symmetry_kind::spin, 0.0};
    symmetry_choice pspin{symmetry_kind::pspin, 0.0};
    CHECK(l_from_kappa(-2, spin) == 1);  // p3/2
    CHECK(l_from_kappa(1, spin) == 1);   // p1/2
    CHECK(l_from_kappa(-1, spin) == 0);
    CHECK(l_from_kappa(3, spin) == 3);
    CHECK(l_from_kappa(2, pspin) == 1);  // pairs with kappa = -1
    CHECK(l_from_kappa(-1, pspin) == 1);
    CHECK(l_from_kappa(-3, pspin) == 3);
    CHECK_THROWS_AS(l_from_kappa(0, spin), error);
}

TEST_CASE("quantum_numbers validation and j") {
    CHECK_THROWS_AS(quantum_numbers(0, 0), error);
    CHECK_THROWS_AS(quantum_numbers(-1, 1), error);
    CHECK(quantum_numbers(0, -2).j() == doctest::Approx(1.5));
    CHECK(quantum_numbers(3, 1).j() == doctest::Approx(0.5));
}

TEST_CASE("kappa doublet partners share the centrifugal products") {
    for (int k = 1; k <= 10; ++k) {
        CHECK(k * (k + 1) == (-k - 1) * ((-k - 1) + 1));  // spin partner
        CHECK(k * (k - 1) == (-k + 1) * ((-k + 1) - 1));  // pspin partner
        CHECK((2 * k + 1) * (2 * k + 1) == (2 * (-k - 1) + 1) * (2 * (-k - 1) + 1));
    }
}

TEST_CASE("real potential: decay, reduction, independent evaluation") {
    potential_params p = ref();
    double far = real_pt_potential(p, 60.0);
    CHECK(std::abs(far) < 1e-15);
    CHECK(far < 0.0);  // the attractive well dominates the tail

    // B = alpha removes the barrier term entirely
    potential_params pw = ref();
    pw.B = pw.alpha;
    double r = 0.8;
    double want = -pw.alpha * pw.alpha / (2.0 * pw.M) * pw.well_strength() /
                  std::pow(std::cosh(pw.alpha * r), 2);
    CHECK(real_pt_potential(pw, r) == doctest::Approx(want).epsilon(1e-14));

    // independent expression tree built from exponentials
    double a = p.alpha, A = p.A, B = p.B, M = p.M;
    double e = std::exp(a * 1.0), em = 1.0 / e;
    double sh = (e - em) / 2.0, ch = (e + em) / 2.0;
    double indep = a * a / (2.0 * M) * (B * (B - a) / (sh * sh) - A * (A + a) / (ch * ch));
    CHECK(real_pt_potential(p, 1.0) == doctest::Approx(indep).epsilon(1e-14));

    CHECK_THROWS_AS(real_pt_potential(p, 0.0), error);
    CHECK_THROWS_AS(real_pt_potential(p, -1.0), error);
}

TEST_CASE("real potential invariant under A -> -(A+alpha), B -> -(B-alpha)") {
    potential_params p = ref();
    potential_params q = ref();
    q.A = -(p.A + p.alpha);
    q.B = -(p.B - p.alpha);
    for (int i = 1; i <= 20; ++i) {
        double r = 0.25 * i;
        CHECK(std::abs(real_pt_potential(p, r) - real_pt_potential(q, r)) <=
              1e-13 * std::max(1.0, std::abs(real_pt_potential(p, r))));
    }
}

TEST_CASE("complex potential: continuity in x0 and PT property") {
    potential_params p = ref();
    p.x0 = 1e-8;
    cplx v = complex_pt_potential(p, 1.3);
    CHECK(std::abs(v - cplx(real_pt_potential(p, 1.3))) < 1e-6);

    potential_params q = ref();
    for (int i = 0; i <= 30; ++i) {
        double x = 0.1 + (5.0 - 0.1) * i / 30.0;
        cplx vx = complex_pt_potential(q, x);
        cplx vmx = complex_pt_potential(q, -x);
        CHECK(std::abs(vmx - std::conj(vx)) <= 1e-12 * std::max(1.0, std::abs(vx)));
    }
}

TEST_CASE("complex potential: two evaluation paths agree") {
    potential_params p = ref();
    for (double x : {0.2, 0.9, 2.4, 5.5}) {
        cplx via_identities = complex_pt_potential(p, x);
        cplx arg = p.alpha * cplx(x, -p.x0);
        cplx s = std::sinh(arg), c = std::cosh(arg);
        cplx direct = p.alpha * p.alpha / (2.0 * p.M) *
                      (p.barrier_strength() / (s * s) - p.well_strength() / (c * c));
        CHECK(std::abs(via_identities - direct) <=
              1e-12 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("complex potential pole on contour when x0 = 0") {
    potential_params p = ref();
    p.x0 = 0.0;
    CHECK_THROWS_AS(complex_pt_potential(p, 0.0), error);
}

TEST_CASE("centrifugal approximation") {
    CHECK(centrifugal_approx(0.0, 0.35, 1.7) == 0.0);  // s-wave

    // relative error at alpha r = 0.1 is (alpha r)^4 / 15 to leading order
    double alpha = 0.35, r = 0.1 / alpha;
    double approx = centrifugal_approx(2.0, alpha, r);
    double exact = 2.0 / (r * r);
    double rel = std::abs(approx - exact) / exact;
    double predicted = 1e-4 / 15.0;
    CHECK(rel < 2.0 * predicted);
    CHECK(rel > predicted / 2.0);

    // alpha -> 0 recovers kappa_term / r^2
    double ratio = centrifugal_approx(6.0, 1e-4, 2.0) / (6.0 / 4.0);
    CHECK(std::abs(ratio - 1.0) < 1e-8);

    // d0 = 0 is the Greene-Aldrich form
    double ga = centrifugal_approx(2.0, alpha, r, 0.0);
    CHECK(ga == doctest::Approx(alpha * alpha * 2.0 / std::pow(std::sinh(alpha * r), 2))
                    .epsilon(1e-15));

    CHECK_THROWS_AS(centrifugal_approx(2.0, alpha, 0.0), error);
}

TEST_CASE("effective potential matches the shifted-argument form") {
    potential_params p = ref();
    double v1 = 0.7, v2 = 1.9;
    CHECK(std::abs(effective_potential(p, 0.0, 0.0, 1.0)) == 0.0);
    for (double x : {0.3, 1.1, 2.7, 4.9}) {
        cplx ueff = effective_potential(p, v1, v2, x);
        cplx arg = p.alpha * cplx(x, -p.x0);
        cplx s = std::sinh(arg), c = std::cosh(arg);
        cplx bracket = v2 / (s * s) - v1 / (c * c);
        CHECK(std::abs(ueff - bracket) <= 1e-11 * std::max(1.0, std::abs(bracket)));
    }
}

TEST_CASE("effective potential is real for x0 = 0") {
    potential_params p = ref();
    p.x0 = 0.0;
    cplx u = effective_potential(p, 0.7, 1.9, 1.4);
    double s = std::sinh(p.alpha * 1.4), c = std::cosh(p.alpha * 1.4);
    double want = 1.9 / (s * s) - 0.7 / (c * c);
    CHECK(std::abs(u.imag()) < 1e-13 * std::abs(want));
    CHECK(u.real() == doctest::Approx(want).epsilon(1e-12));
}
