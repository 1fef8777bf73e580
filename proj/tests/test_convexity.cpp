#include "doctest.h"

#include <cmath>

#include "slconvex/convexity.hpp"
#include "slconvex/energy.hpp"
#include "slconvex/sampling.hpp"

using namespace slconvex;

namespace {

Config fast_config(std::uint64_t seed = 12345)
{
    Config cfg;
    cfg.seed = seed;
    cfg.oracle.n_f = 120;
    cfg.oracle.n_eta = 8;
    return cfg;
}

} // namespace

TEST_SUITE_BEGIN("convexity");

TEST_CASE("dfz_check on fixed profiles")
{
    const Config cfg;

    const CriterionResult convex =
        dfz_check(make_profile([](double g) { return g * g; }, 0.0), cfg);
    CHECK(convex.verdict == Verdict::Holds);
    CHECK(!convex.boundary);

    const CriterionResult decreasing =
        dfz_check(make_profile([](double g) { return -g; }, 0.0), cfg);
    CHECK(decreasing.verdict == Verdict::Fails);
    CHECK(decreasing.slacks[0].min_value < -0.5); // slope -1 everywhere

    const CriterionResult concave =
        dfz_check(make_profile([](double g) { return std::sqrt(g); }, 0.0), cfg);
    CHECK(concave.verdict == Verdict::Fails);
    CHECK(concave.slacks[1].min_value < 0.0);

    const CriterionResult linear = dfz_check(make_profile([](double g) { return g; }, 0.0), cfg);
    CHECK(linear.verdict == Verdict::Holds);
    CHECK(linear.boundary); // zero convexity slack
}

TEST_CASE("second divided difference of sqrt at {1,2,3} matches hand value")
{
    // (sqrt(3) - 2 sqrt(2) + 1) / 1^2, frozen from direct arithmetic
    const double expected = -0.0963763171773131;
    const CriterionResult r = monotone_convex_on_grid(
        "probe", {1.0, 2.0, 3.0},
        {std::sqrt(1.0), std::sqrt(2.0), std::sqrt(3.0)}, 1e-8, 10.0);
    CHECK(r.slacks[1].min_value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.verdict == Verdict::Fails);
}

TEST_CASE("abeyaratne_check on fixed profiles")
{
    const Config cfg;

    const CriterionResult increasing = abeyaratne_check(
        make_profile([](double i) { return i; }, [](double) { return 1.0; },
                     [](double) { return 0.0; }, 2.0),
        cfg);
    CHECK(increasing.verdict == Verdict::Holds);
    CHECK(increasing.min_slack() == doctest::Approx(1.0));

    // psi(I) = sqrt(I - 2), i.e. phi(gamma) = gamma: combination is exactly
    // zero, a boundary case. Use the chain-rule conversion path.
    const ScalarProfile phi_id = make_profile([](double g) { return g; }, 0.0);
    const CriterionResult boundary = abeyaratne_check(psi_from_phi(phi_id), cfg);
    CHECK(boundary.verdict == Verdict::Holds);
    CHECK(boundary.boundary);
    CHECK(std::abs(boundary.slacks[1].min_value) <= 1e-7);

    const CriterionResult negative = abeyaratne_check(
        make_profile([](double i) { return -i; }, [](double) { return -1.0; },
                     [](double) { return 0.0; }, 2.0),
        cfg);
    CHECK(negative.verdict == Verdict::Fails);
    CHECK(negative.slacks[0].min_value == doctest::Approx(-1.0));
}

TEST_CASE("mielke polyconvexity criterion is the shear-profile predicate")
{
    const Config cfg;
    CHECK(mielke_polyconvexity_check(make_profile([](double g) { return g; }, 0.0), cfg).verdict ==
          Verdict::Holds);
    CHECK(mielke_polyconvexity_check(make_profile([](double g) { return g * g; }, 0.0), cfg)
              .verdict == Verdict::Holds);
    CHECK(mielke_polyconvexity_check(make_profile([](double g) { return -g; }, 0.0), cfg)
              .verdict == Verdict::Fails);
}

TEST_CASE("acoustic tensor on fixed cases")
{
    const ScalarProfile psi_lin = catalog_entry("neo-hooke-inc").profile;
    const AcousticData lin = acoustic_tensor(psi_lin, Mat2::identity(), {0.0, 1.0});
    CHECK(lin.q.a11 == 2.0);
    CHECK(lin.q.a22 == 2.0);
    CHECK(lin.q.a12 == 0.0);
    CHECK(lin.q.a21 == 0.0);

    const ScalarProfile psi_quad = catalog_entry("psi-quad").profile;
    const AcousticData quad = acoustic_tensor(psi_quad, Mat2::identity(), {0.0, 1.0});
    CHECK(quad.q.a11 == doctest::Approx(8.0));
    CHECK(quad.q.a22 == doctest::Approx(16.0));
    CHECK(quad.q.a12 == doctest::Approx(0.0));

    // F eta aligned with e2: off-diagonal vanishes
    const AcousticData diag = acoustic_tensor(psi_quad, Mat2::diagonal(2.0, 0.5), {0.0, 1.0});
    CHECK(diag.q.a12 == doctest::Approx(0.0));
    CHECK(diag.q.a12 == diag.q.a21);

    CHECK_THROWS_AS(acoustic_tensor(psi_lin, Mat2::identity(), {0.0, 2.0}), DomainError);
    CHECK_THROWS_AS(acoustic_tensor(psi_lin, Mat2::diagonal(2.0, 1.0), {0.0, 1.0}), DomainError);

    AcousticOptions normalize;
    normalize.normalize_eta = true;
    const AcousticData renorm = acoustic_tensor(psi_lin, Mat2::identity(), {0.0, 2.0}, normalize);
    CHECK(renorm.q.a22 == doctest::Approx(2.0));
}

TEST_CASE("analytic acoustic tensor matches the finite-difference Hessian")
{
    Rng rng(0xACDC);
    for (const char* name : {"neo-hooke-inc", "psi-quad", "psi-exp"}) {
        const ScalarProfile psi = to_psi_profile(catalog_entry(name));
        for (int i = 0; i < 40; ++i) {
            Mat2 f = rng.sl2();
            while (singular_values(f).gamma < 0.1)
                f = rng.sl2();
            const Vec2 eta = rng.unit_vector();
            const Mat2 analytic = acoustic_tensor(psi, f, eta).q;
            const Mat2 fd = fd_acoustic_tensor(psi, f, eta);
            const double scale = std::max(1.0, analytic.max_abs());
            CHECK((analytic - fd).max_abs() <= 1e-6 * scale);
        }
    }
}

TEST_CASE("lh_quartic on fixed cases")
{
    const ScalarProfile psi_lin = catalog_entry("neo-hooke-inc").profile;

    const double r = 1.0 / std::sqrt(2.0);
    const LhQuartic balanced = lh_quartic(psi_lin, 1.0, 1.0, {r, r});
    CHECK(balanced.squared_form == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(balanced.expanded_form == doctest::Approx(1.0).epsilon(1e-12));

    const LhQuartic stretched = lh_quartic(psi_lin, 2.0, 0.5, {0.0, 1.0});
    CHECK(stretched.squared_form == doctest::Approx(16.0));
    CHECK(stretched.expanded_form == doctest::Approx(4.0));

    // psi' < 0: eta = (1,0) exposes a negative value in both forms
    const ScalarProfile psi_dec = make_profile([](double i) { return -i; },
                                               [](double) { return -1.0; },
                                               [](double) { return 0.0; }, 2.0);
    const LhQuartic neg = lh_quartic(psi_dec, 2.0, 0.5, {1.0, 0.0});
    CHECK(neg.squared_form < 0.0);
    CHECK(neg.expanded_form < 0.0);

    CHECK_THROWS_AS(lh_quartic(psi_lin, 2.0, 0.6, {0.0, 1.0}), DomainError);
}

TEST_CASE("e_matrix_check on fixed cases")
{
    const Config cfg;
    const ScalarProfile psi_lin = catalog_entry("neo-hooke-inc").profile;

    const EMatrixResult plug = e_matrix_check(psi_lin, 2.0, 0.5, cfg);
    CHECK(plug.e11 == doctest::Approx(0.25));
    CHECK(plug.e22 == doctest::Approx(4.0));
    CHECK(plug.e12 == doctest::Approx(2.125));
    CHECK(plug.verdict == Verdict::Holds);
    CHECK(plug.routes_agree);

    const ScalarProfile psi_dec = make_profile([](double i) { return -i; },
                                               [](double) { return -1.0; },
                                               [](double) { return 0.0; }, 2.0);
    const EMatrixResult dec = e_matrix_check(psi_dec, 2.0, 0.5, cfg);
    CHECK(dec.e11 < 0.0);
    CHECK(dec.verdict == Verdict::Fails);

    // strongly negative curvature: E12 < 0 and det E < 0
    const ScalarProfile psi_concave = psi_from_phi(
        make_profile([](double g) { return std::sqrt(g); }, 0.0));
    const EMatrixResult conc = e_matrix_check(psi_concave, 3.0, 1.0 / 3.0, cfg);
    CHECK(conc.e12 < 0.0);
    CHECK(conc.det_e < 0.0);
    CHECK(conc.verdict == Verdict::Fails);

    CHECK_THROWS_AS(e_matrix_check(psi_lin, 2.0, 0.51, cfg), DomainError);
}

TEST_CASE("LH quartic sign over an eta grid matches the E-matrix verdict")
{
    const Config cfg;
    for (const char* name : {"neo-hooke-inc", "psi-quad", "psi-exp", "phi-poly", "phi-sqrt"}) {
        const ScalarProfile psi = to_psi_profile(catalog_entry(name));
        for (double lambda : cfg.lambda_grid.make()) {
            const EMatrixResult em = e_matrix_check(psi, lambda, 1.0 / lambda, cfg);
            double min_quartic = std::numeric_limits<double>::infinity();
            for (int k = 0; k < 64; ++k) {
                const double angle = M_PI * k / 64.0;
                const Vec2 eta{std::cos(angle), std::sin(angle)};
                min_quartic = std::min(
                    min_quartic, lh_quartic(psi, lambda, 1.0 / lambda, eta).expanded_form);
            }
            if (std::abs(min_quartic) <= 1e-7 || std::abs(em.cone_slack) <= 1e-7)
                continue; // boundary straddle
            CHECK((min_quartic >= 0.0) == (em.cone_slack >= 0.0));
        }
    }
}

TEST_CASE("rank-one oracle agrees with the shear-profile criterion")
{
    const Config cfg = fast_config();

    const OracleResult nh =
        rank_one_oracle(catalog_entry("neo-hooke-inc"), SegmentMode::Sl2Tangent, cfg);
    CHECK(nh.result.verdict == Verdict::Holds);
    CHECK(nh.witnesses.empty());

    const OracleResult sqrt_fail =
        rank_one_oracle(catalog_entry("phi-sqrt"), SegmentMode::Sl2Tangent, cfg);
    CHECK(sqrt_fail.result.verdict == Verdict::Fails);
    REQUIRE(!sqrt_fail.witnesses.empty());

    // the counterexample restriction is rank-one convex on SL(2)
    const OracleResult linear =
        rank_one_oracle(catalog_entry("counterexample-inc"), SegmentMode::Sl2Tangent, cfg);
    CHECK(linear.result.verdict == Verdict::Holds);
}

TEST_CASE("oracle witnesses re-evaluate to violations")
{
    const Config cfg = fast_config();
    for (const char* name : {"phi-sqrt", "phi-neg"}) {
        const EnergySpec& e = catalog_entry(name);
        const OracleResult r = rank_one_oracle(e, SegmentMode::Sl2Tangent, cfg);
        REQUIRE(r.result.verdict == Verdict::Fails);
        for (const Witness& w : r.witnesses) {
            const double margin = witness_margin(e, w);
            CHECK(margin >= 0.5 * cfg.oracle.tau);
            CHECK(margin == doctest::Approx(w.margin).epsilon(1e-9));
        }
        CHECK(witness_margin(e, r.worst) >= 1e-6);
    }
}

TEST_CASE("oracle is deterministic and the parallel path matches the serial one")
{
    Config serial = fast_config(777);
    serial.oracle.threads = 0;
    Config parallel = serial;
    parallel.oracle.threads = -1;

    for (const char* name : {"phi-sqrt", "neo-hooke-inc"}) {
        const EnergySpec& e = catalog_entry(name);
        const OracleResult a = rank_one_oracle(e, SegmentMode::Sl2Tangent, serial);
        const OracleResult b = rank_one_oracle(e, SegmentMode::Sl2Tangent, serial);
        const OracleResult c = rank_one_oracle(e, SegmentMode::Sl2Tangent, parallel);

        CHECK(a.result.min_slack() == b.result.min_slack());
        CHECK(a.result.min_slack() == c.result.min_slack());
        CHECK(a.violations == c.violations);
        CHECK(a.triples_tested == c.triples_tested);
        REQUIRE(a.witnesses.size() == c.witnesses.size());
        for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
            CHECK(a.witnesses[i].sample_index == c.witnesses[i].sample_index);
            CHECK(a.witnesses[i].margin == c.witnesses[i].margin);
            CHECK(a.witnesses[i].t_center == c.witnesses[i].t_center);
        }
    }
}

TEST_CASE("different seeds explore different samples")
{
    Config a = fast_config(1);
    Config b = fast_config(2);
    const EnergySpec& e = catalog_entry("phi-poly");
    const OracleResult ra = rank_one_oracle(e, SegmentMode::Sl2Tangent, a);
    const OracleResult rb = rank_one_oracle(e, SegmentMode::Sl2Tangent, b);
    CHECK(ra.result.min_slack() != rb.result.min_slack());
}

TEST_CASE("analyze on SL(2): catalog fixtures")
{
    const Config cfg = fast_config();

    const ConvexityReport nh = analyze(catalog_entry("neo-hooke-inc"), EnergyDomain::SL2, cfg);
    for (const char* crit : {"dfz", "mielke-polyconvexity", "abeyaratne", "e-matrix",
                             "rank-one-oracle-sl2"}) {
        const CriterionResult* c = nh.find(crit);
        REQUIRE(c != nullptr);
        CHECK(c->verdict == Verdict::Holds);
    }
    CHECK(nh.all_applicable_hold());

    // counterexample restriction: grid criteria hold, derivative criteria at
    // the boundary, no hard disagreement diagnostics
    const ConvexityReport ce =
        analyze(catalog_entry("counterexample-inc"), EnergyDomain::SL2, cfg);
    CHECK(ce.find("mielke-polyconvexity")->verdict == Verdict::Holds);
    CHECK(ce.find("rank-one-oracle-sl2")->verdict == Verdict::Holds);
    CHECK(ce.find("abeyaratne")->boundary);
    CHECK(ce.find("e-matrix")->boundary);
    for (const std::string& d : ce.diagnostics)
        CHECK(d.find("hard disagreement") == std::string::npos);

    const ConvexityReport neg = analyze(catalog_entry("phi-neg"), EnergyDomain::SL2, cfg);
    CHECK(!neg.all_applicable_hold());
    CHECK(neg.find("dfz")->verdict == Verdict::Fails);
    CHECK(neg.find("abeyaratne")->verdict == Verdict::Fails);
    REQUIRE(!neg.witnesses.empty());
    for (const Witness& w : neg.witnesses)
        CHECK(w.margin > 0.0);
}

TEST_CASE("kink detection flags |gamma - 2| but not smooth or merely steep profiles")
{
    const auto xs = Config{}.gamma_grid.make();
    std::vector<double> smooth, steep, kinked;
    for (double x : xs) {
        smooth.push_back(x * x);
        steep.push_back(std::sqrt(x));
        kinked.push_back(std::abs(x - 2.0));
    }
    CHECK(detect_kinks(xs, smooth).empty());
    CHECK(detect_kinks(xs, steep).empty());
    const auto kinks = detect_kinks(xs, kinked);
    REQUIRE(!kinks.empty());
    CHECK(std::abs(kinks.front() - 2.0) <= 0.02);
}

TEST_CASE("interior kinks disable derivative criteria but not the grid routes")
{
    const Config cfg = fast_config();
    const EnergySpec e = parse_energy("phi: abs(gamma - 2)");
    const ConvexityReport r = analyze(e, EnergyDomain::SL2, cfg);
    CHECK(r.find("abeyaratne")->verdict == Verdict::Inapplicable);
    CHECK(r.find("e-matrix")->verdict == Verdict::Inapplicable);
    CHECK(r.find("dfz")->verdict == Verdict::Fails); // decreasing on [0, 2)
    CHECK(r.find("mielke-polyconvexity")->verdict == Verdict::Fails);
    REQUIRE(!r.witnesses.empty());
    for (const Witness& w : r.witnesses)
        CHECK(w.margin > 0.0);
}

TEST_CASE("criteria equivalence on a catalog subset")
{
    const Config cfg = fast_config();
    for (const char* name : {"psi-quad", "phi-poly", "phi-sqrt", "phi-neg"}) {
        const ConvexityReport r = analyze(catalog_entry(name), EnergyDomain::SL2, cfg);
        Verdict reference = Verdict::Inapplicable;
        for (const CriterionResult& c : r.criteria) {
            if (c.verdict == Verdict::Inapplicable || c.boundary)
                continue;
            if (reference == Verdict::Inapplicable)
                reference = c.verdict;
            CHECK(c.verdict == reference);
        }
    }
}

TEST_SUITE_END();
