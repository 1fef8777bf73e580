#include "doctest.h"

#include <cmath>

#include "slconvex/energy.hpp"
#include "slconvex/exprparse.hpp"
#include "slconvex/sampling.hpp"

using namespace slconvex;

TEST_SUITE_BEGIN("energy");

TEST_CASE("extract_phi on fixed cases")
{
    // W(F) = ||F||^2 - 2  ->  phi(gamma) = gamma^2
    const EnergySpec frob = make_matrix_energy(
        "frob", [](const Mat2& f) { return f.frobenius_sq() - 2.0; }, EnergyDomain::SL2);
    const ScalarProfile phi = extract_phi(frob);
    CHECK(phi.value(1.5) == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(phi.value(0.0) == doctest::Approx(0.0));

    const EnergySpec constant =
        make_matrix_energy("const", [](const Mat2&) { return 3.5; }, EnergyDomain::SL2);
    CHECK(extract_phi(constant).value(2.0) == doctest::Approx(3.5));

    // W(F) = lmax - 1/lmax  ->  phi identity
    const EnergySpec spread = make_matrix_energy(
        "spread",
        [](const Mat2& f) {
            const SingularPair sv = singular_values(f);
            return sv.lmax - 1.0 / sv.lmax;
        },
        EnergyDomain::SL2);
    CHECK(extract_phi(spread).value(3.0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("phi_from_psi / psi_from_phi substitution and round trip")
{
    const ScalarProfile psi_lin = make_profile([](double i) { return i - 2.0; }, 2.0);
    const ScalarProfile phi_of = phi_from_psi(psi_lin);
    CHECK(phi_of.value(2.0) == doctest::Approx(4.0));

    const ScalarProfile phi_id = make_profile([](double g) { return g; }, 0.0);
    const ScalarProfile psi_of = psi_from_phi(phi_id);
    CHECK(psi_of.value(6.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(psi_of.value(1.5), DomainError);

    const ScalarProfile psi_plain = make_profile([](double i) { return i; }, 2.0);
    CHECK(phi_from_psi(psi_plain).value(0.0) == doctest::Approx(2.0));

    // round trip on the shared domain
    for (double gamma : {0.0, 0.3, 1.0, 2.5, 6.0}) {
        const double round = phi_from_psi(psi_of).value(gamma);
        CHECK(std::abs(round - phi_id.value(gamma)) <= 1e-12);
    }
    for (double i : {2.0, 2.4, 4.0, 11.0}) {
        const double round = psi_from_phi(phi_of).value(i);
        CHECK(std::abs(round - psi_lin.value(i)) <= 1e-12);
    }
}

TEST_CASE("phi_from_h on fixed cases")
{
    const ScalarProfile h_id = make_profile([](double t) { return t; }, 0.0);
    CHECK(phi_from_h(h_id).value(0.0) == doctest::Approx(1.0)); // lmax(0) = 1

    const ScalarProfile h_abs = make_profile(
        [](double t) { return std::abs(std::sqrt(t) - std::sqrt(1.0 / t)); }, 0.0);
    CHECK(phi_from_h(h_abs).value(1.5) == doctest::Approx(1.5).epsilon(1e-14));

    const ScalarProfile h_sum = make_profile([](double t) { return t + 1.0 / t; }, 0.0);
    CHECK(phi_from_h(h_sum).value(1.0) == doctest::Approx(3.0).epsilon(1e-14)); // theta^2 + 2
    // direct-substitution oracle: lmax^2 + 1/lmax^2 = gamma^2 + 2
    for (double theta : {0.0, 0.5, 2.0, 5.0})
        CHECK(phi_from_h(h_sum).value(theta) ==
              doctest::Approx(theta * theta + 2.0).epsilon(1e-13));
}

TEST_CASE("eval_energy dispatch on fixed cases")
{
    const EnergySpec phi_sq =
        make_phi_energy("sq", make_profile([](double g) { return g * g; }, 0.0));
    CHECK(eval_energy(phi_sq, Mat2::shear(1.5)) == doctest::Approx(2.25).epsilon(1e-14));

    const EnergySpec psi_lin =
        make_psi_energy("lin", make_profile([](double i) { return i - 2.0; }, 2.0));
    CHECK(eval_energy(psi_lin, Mat2::identity()) == doctest::Approx(0.0));

    const EnergySpec h_abs = make_h_energy(
        "abs", make_profile([](double t) { return std::abs(std::sqrt(t) - std::sqrt(1.0 / t)); },
                            0.0));
    CHECK(eval_energy(h_abs, Mat2::diagonal(2.0, 0.5)) == doctest::Approx(1.5).epsilon(1e-14));

    // domain enforcement
    CHECK_THROWS_AS(eval_energy(phi_sq, Mat2::diagonal(2.0, 1.0)), DomainError);   // det != 1
    CHECK_THROWS_AS(eval_energy(h_abs, Mat2::diagonal(2.0, -0.5)), DomainError);   // det < 0
}

TEST_CASE("representation coherence across random SL(2) points")
{
    // One underlying energy, five representations: W(F) = gamma^2 = I - 2.
    const EnergySpec as_phi =
        make_phi_energy("c-phi", make_profile([](double g) { return g * g; }, 0.0));
    const EnergySpec as_psi =
        make_psi_energy("c-psi", make_profile([](double i) { return i - 2.0; }, 2.0));
    const EnergySpec as_h = make_h_energy(
        "c-h", make_profile([](double t) { return t + 1.0 / t - 2.0; }, 0.0));
    const EnergySpec as_g = make_g_energy(
        "c-g", [](double l1, double l2) { return l1 / l2 + l2 / l1 - 2.0; });
    const EnergySpec as_w = make_matrix_energy(
        "c-w", [](const Mat2& f) { return f.frobenius_sq() - 2.0; }, EnergyDomain::SL2);

    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const Mat2 f = rng.sl2();
        const double v = eval_energy(as_phi, f);
        CHECK(std::abs(eval_energy(as_psi, f) - v) <= 1e-10 * (1.0 + std::abs(v)));
        CHECK(std::abs(eval_energy(as_h, f) - v) <= 1e-10 * (1.0 + std::abs(v)));
        CHECK(std::abs(eval_energy(as_g, f) - v) <= 1e-10 * (1.0 + std::abs(v)));
        CHECK(std::abs(eval_energy(as_w, f) - v) <= 1e-10 * (1.0 + std::abs(v)));
    }
}

TEST_CASE("extract_phi inverts building a matrix energy from a shear profile")
{
    const ScalarProfile phi = make_profile([](double g) { return g * g * g + 2.0 * g; }, 0.0);
    EnergySpec from_phi = make_phi_energy("cube", phi);
    const EnergySpec as_matrix = make_matrix_energy(
        "cube-w", [from_phi](const Mat2& f) { return eval_energy(from_phi, f); },
        EnergyDomain::SL2);
    const ScalarProfile extracted = extract_phi(as_matrix);
    for (int i = 0; i <= 60; ++i) {
        const double gamma = 0.1 * i;
        CHECK(std::abs(extracted.value(gamma) - phi.value(gamma)) <= 1e-12 * (1.0 + gamma * gamma));
    }
}

TEST_CASE("shear response is even: W(shear(gamma)) = W(shear(-gamma))")
{
    const EnergySpec e = catalog_entry("phi-poly");
    for (int i = 0; i <= 80; ++i) {
        const double gamma = 0.1 * i;
        const double pos = eval_energy(e, Mat2::shear(gamma));
        const double neg = eval_energy(e, Mat2::shear(-gamma));
        CHECK(std::abs(pos - neg) <= 1e-12 * (1.0 + std::abs(pos)));
    }
}

TEST_CASE("matrix energies must be objective and isotropic")
{
    CHECK_THROWS_AS(make_matrix_energy(
                        "broken", [](const Mat2& f) { return f.a12; }, EnergyDomain::SL2),
                    DomainError);
    CHECK_THROWS_AS(make_g_energy("asym", [](double l1, double l2) { return l1 - l2; }),
                    DomainError);
}

TEST_CASE("analytic and finite-difference derivatives agree on smooth profiles")
{
    const ScalarProfile analytic = make_profile(
        [](double g) { return g * g * g * g + g * g; },
        [](double g) { return 4.0 * g * g * g + 2.0 * g; },
        [](double g) { return 12.0 * g * g + 2.0; }, 0.0);
    ScalarProfile numeric = analytic;
    numeric.d1 = nullptr;
    numeric.d2 = nullptr;
    for (int i = 1; i <= 80; ++i) {
        const double g = 0.1 * i;
        CHECK(std::abs(numeric.deriv1(g) - analytic.deriv1(g)) <=
              1e-5 * (1.0 + std::abs(analytic.deriv1(g))));
        CHECK(std::abs(numeric.deriv2(g) - analytic.deriv2(g)) <=
              1e-5 * (1.0 + std::abs(analytic.deriv2(g))));
    }
}

TEST_CASE("catalog contract")
{
    CHECK(catalog().size() >= 6);

    const EnergySpec& iso = catalog_entry("counterexample-iso");
    CHECK(iso.representation == Representation::RatioH);
    CHECK(iso.expected.glp_rank_one_convex == false);

    const EnergySpec& inc = catalog_entry("counterexample-inc");
    CHECK(inc.representation == Representation::ShearPhi);
    CHECK(inc.expected.sl2_polyconvex == true);

    const EnergySpec& nh = catalog_entry("neo-hooke-inc");
    CHECK(nh.representation == Representation::InvariantPsi);
    CHECK(nh.expected.sl2_polyconvex == true);
    CHECK(eval_energy(nh, Mat2::identity()) == doctest::Approx(0.0));

    CHECK_THROWS_AS(catalog_entry("no-such-energy"), DomainError);

    // stable order
    CHECK(catalog().front().name == "neo-hooke-inc");
}

TEST_CASE("parse_energy and energy files")
{
    const EnergySpec e = parse_energy("phi: gamma^2");
    CHECK(e.representation == Representation::ShearPhi);
    CHECK(eval_energy(e, Mat2::shear(2.0)) == doctest::Approx(4.0).epsilon(1e-13));

    CHECK_THROWS_AS(parse_energy("w: gamma"), DomainError);
    CHECK_THROWS_AS(parse_energy("phi gamma"), DomainError);
    CHECK_THROWS_AS(parse_energy("phi: t"), expr::ParseError); // wrong variable
}

TEST_SUITE_END();
