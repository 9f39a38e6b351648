#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ptdirac/specfun.hpp"

using namespace ptdirac;
using namespace ptdirac::specfun;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(2.5, 0) == 1.0);
    CHECK(pochhammer(1.0, 5) == 120.0);  // (1)_m = m!
    CHECK(pochhammer(-3.0, 5) == 0.0);   // product crosses zero at a+3
    CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
}

TEST_CASE("pochhammer recurrence (a)_(m+1) = (a)_m (a+m)") {
    for (double a : {-4.5, -2.0, -0.3, 0.7, 3.25}) {
        for (int m = 0; m < 9; ++m) {
            CHECK(pochhammer(a, m + 1) ==
                  doctest::Approx(pochhammer(a, m) * (a + m)).epsilon(1e-14));
        }
    }
}

TEST_CASE("gauss_2f1 trivial values") {
    CHECK(gauss_2f1(0.7, -2.1, 1.3, cplx(0.0, 0.0)) == cplx(1.0, 0.0));
    // a = -1 truncates to 1 - b z / c
    double b = 2.7, c = 1.9;
    cplx z(0.4, -1.1);
    cplx expected = 1.0 - b * z / c;
    CHECK(std::abs(gauss_2f1(-1.0, b, c, z) - expected) < 1e-15);
}

TEST_CASE("gauss_2f1 is symmetric in a and b") {
    cplx z(0.3, 0.2);
    CHECK(gauss_2f1(-4.0, 2.3, 0.9, z) == gauss_2f1(2.3, -4.0, 0.9, z));
    CHECK(gauss_2f1(0.25, 0.75, 1.1, z) == gauss_2f1(0.75, 0.25, 1.1, z));
}

TEST_CASE("gauss_2f1 terminating series handles any z") {
    // |z| well beyond 1 is fine once the series terminates
    cplx v = gauss_2f1(-3.0, 1.5, 0.25, cplx(4.0, 3.0));
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
}

TEST_CASE("gauss_2f1 domain and convergence errors") {
    CHECK_THROWS_WITH_AS(gauss_2f1(0.5, 0.5, 1.5, cplx(1.2, 0.0)), doctest::Contains("|z| < 1"),
                         error);
    // z on the unit circle edge: terms decay too slowly for the cap
    CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 0.6, cplx(0.9999999999, 0.0)), error);
    try {
        gauss_2f1(0.5, 0.5, 0.6, cplx(0.9999999999, 0.0));
    } catch (const error& e) {
        CHECK(e.code() == errc::non_convergent);
    }
}

TEST_CASE("gauss_2f1 pole in c") {
    // termination (degree 2) precedes the pole index (5): valid
    cplx ok = gauss_2f1(-2.0, 1.3, -5.0, cplx(0.7, 0.0));
    cplx direct = 1.0 + (-2.0) * 1.3 / (-5.0) * 0.7 +
                  (-2.0) * (-1.0) * 1.3 * 2.3 / ((-5.0) * (-4.0) * 2.0) * 0.49;
    CHECK(std::abs(ok - direct) < 1e-14);
    // pole index (2) precedes termination (5): reject
    CHECK_THROWS_AS(gauss_2f1(-5.0, 1.3, -2.0, cplx(0.7, 0.0)), error);
    try {
        gauss_2f1(-5.0, 1.3, -2.0, cplx(0.7, 0.0));
    } catch (const error& e) {
        CHECK(e.code() == errc::pole_at_c);
    }
}

TEST_CASE("gauss_2f1_derivative closed forms") {
    double a = -2.0, b = 1.7, c = 0.8;
    CHECK(std::abs(gauss_2f1_derivative(a, b, c, cplx(0.0, 0.0)) - cplx(a * b / c)) < 1e-15);
    // degree-1 polynomial: derivative is the constant -b/c
    cplx d = gauss_2f1_derivative(-1.0, 2.6, 1.3, cplx(0.5, 2.0));
    CHECK(std::abs(d - cplx(-2.6 / 1.3)) < 1e-14);
}

TEST_CASE("gauss_2f1_derivative matches finite differences") {
    const double h = 1e-6;
    for (auto [a, b, c] : {std::tuple{-3.0, 2.2, 0.7}, {-5.0, -1.3, 1.9}, {-8.0, 4.4, -10.5}}) {
        for (int i = 0; i < 5; ++i) {
            cplx z(-1.4 + 0.6 * i, 0.35);
            cplx fd = (gauss_2f1(a, b, c, z + h) - gauss_2f1(a, b, c, z - h)) / (2.0 * h);
            cplx an = gauss_2f1_derivative(a, b, c, z);
            CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
        }
    }
}

TEST_CASE("jacobi_p low orders") {
    CHECK(jacobi_p(0, -3.7, 1.1, cplx(5.0, -2.0)) == cplx(1.0));
    CHECK(std::abs(jacobi_p(2, 0.0, 0.0, cplx(1.0, 0.0)) - cplx(1.0)) < 1e-14);  // Legendre at 1
    cplx x(0.3, 0.8);
    cplx p1 = jacobi_p(1, 0.4, -0.9, x);
    CHECK(std::abs(p1 - (0.5 * (0.4 + 0.9) + 0.5 * (0.4 - 0.9 + 2.0) * x)) < 1e-15);
}

TEST_CASE("jacobi_p equals pochhammer/n! * 2F1") {
    // solver-style exponents lambda = 5.4, eta = -1.7
    double lam = 5.4, eta = -1.7;
    double a = -2.0 * lam - 0.5, b = -2.0 * eta - 0.5;
    for (int n : {1, 2, 3}) {
        for (int i = 0; i < 6; ++i) {
            cplx z(-1.8 + 0.6 * i, 0.4);
            cplx x = 1.0 - 2.0 * z;
            cplx lhs = jacobi_p(n, a, b, x);
            cplx rhs = pochhammer(a + 1.0, n) / std::tgamma(n + 1.0) *
                       gauss_2f1(-n, 1.0 + a + b + n, a + 1.0, z);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
        }
    }
    // moderate parameters: full degree range
    for (int n = 0; n <= 10; ++n) {
        for (auto [aa, bb] : {std::pair{-2.3, 0.4}, {0.5, -0.3}, {1.7, 3.1}}) {
            cplx z(-0.9, 0.55);
            cplx lhs = jacobi_p(n, aa, bb, 1.0 - 2.0 * z);
            cplx rhs = pochhammer(aa + 1.0, n) / std::tgamma(n + 1.0) *
                       gauss_2f1(-n, 1.0 + aa + bb + n, aa + 1.0, z);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
        }
    }
}

TEST_CASE("jacobi_p handles integer a+b (degenerate recurrence coefficients)") {
    cplx v = jacobi_p(6, -2.25, -0.75, cplx(2.0, -0.5));
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
}

TEST_CASE("deformed functions reduce to sinh/cosh at q = 1") {
    for (double u : {-2.0, -0.3, 0.0, 1.7}) {
        CHECK(std::abs(deformed_sinh(cplx(1.0), u) - cplx(std::sinh(u))) < 1e-15);
        CHECK(std::abs(deformed_cosh(cplx(1.0), u) - cplx(std::cosh(u))) < 1e-15);
    }
}

TEST_CASE("deformed identity cosh_q^2 - sinh_q^2 = q") {
    for (double ax0 : {0.05, 0.6, 1.3}) {
        cplx q = std::exp(cplx(0.0, 2.0 * ax0));
        for (double u : {-3.0, -1.0, 0.4, 2.9}) {
            cplx s = deformed_sinh(q, u), c = deformed_cosh(q, u);
            double scale = std::max({1.0, std::norm(s), std::norm(c)});
            CHECK(std::abs(c * c - s * s - q) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("shifted-argument relation sinh a(x-ix0) = sinh_qc(ax)/sqrt(qc)") {
    for (double ax0 : {0.1, 0.7, 1.35}) {
        cplx qc = std::exp(cplx(0.0, 2.0 * ax0));
        for (double ax : {-2.5, -0.2, 1.1, 3.0}) {
            cplx lhs = std::sinh(cplx(ax, -ax0));
            cplx rhs = deformed_sinh(qc, ax) / std::sqrt(qc);
            CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("deformed functions signal overflow") {
    CHECK_THROWS_AS(deformed_sinh(cplx(1.0, 0.2), 710.0), error);
    CHECK_THROWS_AS(deformed_cosh(cplx(1.0, 0.2), -710.0), error);
}

TEST_CASE("the degree-2 solver-style identity point") {
    // a = -2, b = -2(lam+eta)+2, c = -2 lam + 1/2 at z = 0.3 for lam = 5.4,
    // eta = -1.7: terminating 2F1 equals n!/(c)_n times the Jacobi value
    double lam = 5.4, eta = -1.7;
    double b = -2.0 * (lam + eta) + 2.0;
    double c = -2.0 * lam + 0.5;
    cplx z(0.3, 0.0);
    cplx f = gauss_2f1(-2.0, b, c, z);
    cplx pj = jacobi_p(2, -2.0 * lam - 0.5, -2.0 * eta - 0.5, 1.0 - 2.0 * z);
    cplx want = std::tgamma(3.0) / pochhammer(c, 2) * pj;
    CHECK(std::abs(f - want) <= 1e-12 * std::max(1.0, std::abs(f)));
}

TEST_CASE("argument-struct form of the hypergeometric calls") {
    hyp2f1_args args{-2.0, 1.7, 0.8, cplx(0.4, -0.2)};
    CHECK(gauss_2f1(args) == gauss_2f1(args.a, args.b, args.c, args.z));
    CHECK(gauss_2f1_derivative(args) ==
          gauss_2f1_derivative(args.a, args.b, args.c, args.z));
}
