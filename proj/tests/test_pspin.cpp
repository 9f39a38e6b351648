#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ptdirac/pspin.hpp"
#include "ptdirac/refdata.hpp"

using namespace ptdirac;

namespace {
potential_params ref() { return refdata::reference_params(); }
constexpr double kCps = -15.0;  // arbitrated constant (figure captions)
}

TEST_CASE("parametric map reproduces the pseudospin residual pointwise") {
    potential_params p = ref();
    for (int n : {0, 1, 2}) {
        for (int kappa : {2, 3, -1, -4}) {
            for (int i = 0; i <= 30; ++i) {
                double e = -9.5 + 14.0 * i / 30.0;
                auto direct = pspin_residual_probe(e, n, kappa, p, kCps);
                auto mapped = spin_residual_from_map(parametric_map(e, n, kappa, kCps, p),
                                                     p.alpha, p.M);
                CHECK(direct.has_value() == mapped.has_value());
                if (direct && mapped)
                    CHECK(std::abs(*direct - *mapped) <=
                          1e-12 * std::max(1.0, std::abs(*direct)));
            }
        }
    }
}

TEST_CASE("parametric map bookkeeping") {
    potential_params p = ref();
    auto m = parametric_map(-5.17, 1, 2, kCps, p);
    CHECK(m.energy == 5.17);
    CHECK(m.kappa == 1);
    CHECK(m.c_const == 15.0);
    CHECK(m.strength_a == -p.well_strength());
    CHECK(m.strength_b == -p.barrier_strength());

    // the spin doublet (1, -2) is the image of the pspin pair (2, -1)
    CHECK(parametric_map(0.0, 0, 2, kCps, p).kappa == 1);
    CHECK(parametric_map(0.0, 0, -1, kCps, p).kappa == -2);
    CHECK(2 * (2 - 1) == (-1) * (-1 - 1));

    // applying the map twice undoes the sign flips (kappa needs the +1 shift back)
    auto mm = parametric_map(m.energy, m.n, m.kappa + 1, -m.c_const, p);
    CHECK(mm.energy == -5.17);
    CHECK(mm.kappa == 1);
}

TEST_CASE("pspin exponents: limits and complex-branch reporting") {
    potential_params p = ref();
    // Mps = 0 at E = M + Cps
    auto e0 = pspin_exponents(p, kCps, p.M + kCps, 3);
    CHECK(e0.nu == 0.0);
    CHECK(e0.delta == doctest::Approx(-(1.0 + std::abs(2.0 * 3 - 1.0)) / 4.0).epsilon(1e-14));

    // at the reference energy the -15 candidate has both radicands positive
    CHECK_NOTHROW(pspin_exponents(p, -15.0, -5.170251165, 2));
    // while the text's -10 makes the first radicand negative
    CHECK_THROWS_AS(pspin_exponents(p, -10.0, -5.170251165, 2), error);
    try {
        pspin_exponents(p, -10.0, -5.170251165, 2);
    } catch (const error& e) {
        CHECK(e.code() == errc::complex_branch);
    }
}

TEST_CASE("pspin couplings and residual symmetry") {
    potential_params p = ref();
    auto c = make_pspin_couplings(p, kCps, -5.0, 2);
    CHECK(c.mps == doctest::Approx(p.M + 5.0 + kCps).epsilon(1e-15));
    CHECK(c.etilde_sq ==
          doctest::Approx(c.beta_sq - 4.0 * p.alpha * p.alpha * 2.0 * kD0).epsilon(1e-12));

    for (int i = 0; i <= 20; ++i) {
        double e = -8.0 + 10.0 * i / 20.0;
        auto r1 = pspin_residual_probe(e, 1, 2, p, kCps);
        auto r2 = pspin_residual_probe(e, 1, -1, p, kCps);  // partner -kappa+1
        REQUIRE(r1.has_value() == r2.has_value());
        if (r1) CHECK(*r1 == *r2);
    }
}

TEST_CASE("solve reproduces the reference levels (arbitrated Cps = -15)") {
    potential_params p = ref();
    auto out = solve_pspin_energy(1, 2, p, kCps);
    const auto* root = out.physical_root();
    REQUIRE(root);
    CHECK(root->energy == doctest::Approx(-5.170251165468).epsilon(1e-9));
    CHECK(std::abs(root->energy - (-5.170251165)) < 5e-3);
    CHECK(root->quant_gap <= 1e-8);

    auto out22 = solve_pspin_energy(2, 2, p, kCps);
    REQUIRE(out22.physical_root());
    CHECK(out22.physical_root()->energy == doctest::Approx(-5.000631768524).epsilon(1e-9));
}

TEST_CASE("non-normalizable branch rows are stored but flagged") {
    potential_params p = ref();
    // (n=2, kappa=4) and (n=2, kappa=-4): the tabulated value solves the
    // squared equation on the branch with n > n_max, so no physical root
    for (int kappa : {4, -3}) {
        auto out = solve_pspin_energy(2, kappa, p, kCps);
        CHECK(out.physical_root() == nullptr);
        bool found = false;
        for (const auto& s : out.solutions)
            if (std::abs(s.energy - (-4.915209098)) < 5e-3) {
                found = true;
                CHECK_FALSE(s.physical);
                CHECK(s.n_max < 2.0);
            }
        CHECK(found);
    }
    for (int kappa : {5, -4}) {
        auto out25 = solve_pspin_energy(2, kappa, p, kCps);
        bool found25 = false;
        for (const auto& s : out25.solutions)
            if (std::abs(s.energy - (-4.900619782)) < 5e-3) found25 = true;
        CHECK(found25);
        CHECK(out25.physical_root() == nullptr);
    }
}

TEST_CASE("the text's Cps = -10 yields no roots at all") {
    potential_params p = ref();
    auto out = solve_pspin_energy(1, 2, p, -10.0);
    CHECK(out.solutions.empty());
    CHECK_FALSE(out.excluded.empty());  // complex-branch region reported
}

TEST_CASE("pspin doublets and sign pairs") {
    potential_params p = ref();
    auto a = solve_pspin_energy(1, 2, p, kCps);
    auto b = solve_pspin_energy(1, -1, p, kCps);
    REQUIRE(a.physical_root());
    REQUIRE(b.physical_root());
    CHECK(a.physical_root()->energy == b.physical_root()->energy);

    solver_options o2;
    o2.sigma = -1;
    o2.tau = +1;
    auto c = solve_pspin_energy(1, 2, p, kCps, o2);
    REQUIRE(c.physical_root());
    CHECK(std::abs(c.physical_root()->energy - a.physical_root()->energy) <= 1e-10);
}

TEST_CASE("pspin n_max forms agree") {
    potential_params p = ref();
    auto nm = pspin_n_max(p, kCps, -5.17, 2);
    CHECK(nm.from_radicals == doctest::Approx(nm.lambda_plus_eta).epsilon(1e-13));
}

TEST_CASE("all eight reference rows matched under the arbitrated constant") {
    potential_params p = ref();
    for (const auto& lvl : refdata::pspin_levels()) {
        auto out = solve_pspin_energy(lvl.n, lvl.kappa_pos, p, kCps);
        double best = 1e9;
        for (const auto& s : out.solutions)
            best = std::min(best, std::abs(s.energy - lvl.energy));
        CHECK(best < 5e-3);
    }
}
