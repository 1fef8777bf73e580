#include "slconvex/isochoric.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "slconvex/sampling.hpp"

namespace slconvex {

namespace {

void verify_scale_invariance(const std::function<double(const Mat2&)>& w, const std::string& name)
{
    Rng rng(0x13198a2e);
    for (int i = 0; i < 32; ++i) {
        const Mat2 f = rng.glp2();
        const double base = w(f);
        for (double a : {0.5, 2.0, 10.0}) {
            const double scaled = w(a * f);
            if (std::abs(scaled - base) > 1e-10 * (1.0 + std::abs(base)))
                throw DomainError("make_isochoric(" + name + "): payload is not isochoric, "
                                  "|W(aF) - W(F)| = " + std::to_string(std::abs(scaled - base)) +
                                  " at a = " + std::to_string(a));
        }
    }
}

IsochoricEnergy finish(IsochoricEnergy iso, const std::string& name)
{
    verify_scale_invariance(iso.w_iso, name);
    auto w = iso.w_iso;
    iso.h.domain_lo = 0.0;
    iso.h.eval = [w](double t) {
        if (t <= 0.0)
            throw DomainError("h profile: ratio argument must be positive, got " +
                              std::to_string(t));
        const double root = std::sqrt(t);
        return w(Mat2::diagonal(root, 1.0 / root));
    };
    iso.g = [w](double l1, double l2) {
        if (l1 <= 0.0 || l2 <= 0.0)
            throw DomainError("g: singular values must be positive");
        return w(Mat2::diagonal(l1, l2));
    };
    return iso;
}

} // namespace

IsochoricEnergy lift(const EnergySpec& w_inc, double eps_det)
{
    IsochoricEnergy iso;
    iso.source = w_inc;
    EnergySpec base = w_inc;
    iso.w_iso = [base, eps_det](const Mat2& f) {
        const double d = f.det();
        if (d <= 0.0)
            throw DomainError("isochoric lift: det F = " + std::to_string(d) + " <= 0");
        const double s = std::sqrt(d);
        return eval_energy(base, (1.0 / s) * f, eps_det);
    };
    iso.glp = make_matrix_energy(w_inc.name + "-iso", iso.w_iso, EnergyDomain::GLplus2);
    iso.glp.expression = w_inc.expression;
    return finish(std::move(iso), w_inc.name);
}

IsochoricEnergy make_isochoric(const EnergySpec& e, double eps_det)
{
    if (e.claimed_domain == EnergyDomain::SL2)
        return lift(e, eps_det);
    IsochoricEnergy iso;
    iso.source = e;
    iso.glp = e;
    EnergySpec copy = e;
    iso.w_iso = [copy, eps_det](const Mat2& f) { return eval_energy(copy, f, eps_det); };
    return finish(std::move(iso), e.name);
}

CriterionResult h_criterion(const IsochoricEnergy& iso, const Config& cfg)
{
    const auto xs = cfg.t_grid.make();
    std::vector<double> fs;
    fs.reserve(xs.size());
    for (double t : xs)
        fs.push_back(iso.h.value(t));
    return monotone_convex_on_grid("h-criterion", xs, fs, cfg.tau, cfg.boundary_factor);
}

CriterionResult separate_convexity_check(const IsochoricEnergy& iso, const Config& cfg)
{
    CriterionResult r;
    r.criterion = "separate-convexity";
    NamedSlack slack{"slice-convexity", std::numeric_limits<double>::infinity(), 0.0};
    double worst_frozen = 0.0;

    const auto axis = cfg.lambda_axis_grid.make();
    for (double frozen : axis) {
        std::vector<double> fs;
        fs.reserve(axis.size());
        for (double moving : axis)
            fs.push_back(iso.g(moving, frozen));
        for (std::size_t i = 1; i + 1 < axis.size(); ++i) {
            const double left = (fs[i] - fs[i - 1]) / (axis[i] - axis[i - 1]);
            const double right = (fs[i + 1] - fs[i]) / (axis[i + 1] - axis[i]);
            const double second = 2.0 * (right - left) / (axis[i + 1] - axis[i - 1]);
            if (second < slack.min_value) {
                slack.min_value = second;
                slack.at = axis[i];
                worst_frozen = frozen;
            }
        }
    }

    r.slacks = {slack};
    r.verdict = slack.min_value >= -cfg.tau ? Verdict::Holds : Verdict::Fails;
    r.boundary = std::abs(slack.min_value) <= cfg.boundary_factor * cfg.tau;
    // g is symmetric, so one axis covers both; record the worst slice.
    std::ostringstream os;
    os << "worst slice at frozen lambda = " << worst_frozen;
    r.note = os.str();
    return r;
}

ForwardImplication forward_implication_check(const IsochoricEnergy& iso, const Config& cfg)
{
    ForwardImplication out;
    const CriterionResult h = h_criterion(iso, cfg);
    const CriterionResult restriction = dfz_check(to_phi_profile(iso.source), cfg);
    out.glp_verdict = h.verdict;
    out.restriction_verdict = restriction.verdict;
    out.implication_ok = h.verdict != Verdict::Holds || restriction.verdict == Verdict::Holds;
    out.reverse_holds =
        restriction.verdict == Verdict::Holds && h.verdict == Verdict::Fails;
    if (!out.implication_ok) {
        out.note = "GL+(2) criterion holds but the SL(2) restriction fails: "
                   "this indicates a toolkit defect";
    } else if (out.reverse_holds) {
        out.note = "restriction is rank-one convex on SL(2) while the isochoric energy "
                   "is not rank-one convex on GL+(2)";
    }
    return out;
}

namespace {

void synthesize_slice_witness(const IsochoricEnergy& iso, const Config& cfg,
                              std::vector<Witness>& witnesses)
{
    // Worst convexity violation along an axis slice of g; the slice is the
    // rank-one line diag(x, frozen) + t e1 (x) e1.
    const auto axis = cfg.lambda_axis_grid.make();
    double worst = 0.0;
    Witness best;
    bool found = false;
    for (double frozen : axis) {
        for (std::size_t i = 1; i + 1 < axis.size(); ++i) {
            const double step = std::min(axis[i] - axis[i - 1], axis[i + 1] - axis[i]);
            const double mid = iso.g(axis[i], frozen);
            const double lo = iso.g(axis[i] - step, frozen);
            const double hi = iso.g(axis[i] + step, frozen);
            const double margin = mid - 0.5 * (lo + hi);
            if (margin > worst) {
                worst = margin;
                best.f = Mat2::diagonal(axis[i], frozen);
                best.xi = {1.0, 0.0};
                best.eta = {1.0, 0.0};
                best.t_center = 0.0;
                best.t_step = step;
                best.margin = margin;
                best.sample_index = 0;
                found = true;
            }
        }
    }
    if (found)
        witnesses.push_back(best);
}

} // namespace

ConvexityReport analyze_isochoric(const EnergySpec& e, const Config& cfg)
{
    const IsochoricEnergy iso = make_isochoric(e, cfg.eps_det);

    ConvexityReport report;
    report.energy_name = e.name;
    report.domain = EnergyDomain::GLplus2;
    report.seed = cfg.seed;
    report.n_f = cfg.oracle.n_f;
    report.n_eta = cfg.oracle.n_eta;
    report.n_t = cfg.oracle.n_t;

    report.criteria.push_back(h_criterion(iso, cfg));
    report.criteria.push_back(separate_convexity_check(iso, cfg));

    OracleResult oracle = rank_one_oracle(iso.glp, SegmentMode::GlpUnconstrained, cfg);
    report.criteria.push_back(oracle.result);
    report.witnesses = oracle.witnesses;

    const ForwardImplication fwd = forward_implication_check(iso, cfg);
    if (!fwd.note.empty())
        report.diagnostics.push_back("forward-implication: " + fwd.note);
    if (!fwd.implication_ok)
        report.diagnostics.push_back(
            "forward-implication VIOLATED: GL+(2) holds but restriction fails");

    bool any_fails = false;
    for (const CriterionResult& c : report.criteria)
        any_fails = any_fails || c.verdict == Verdict::Fails;
    if (any_fails && report.witnesses.empty())
        synthesize_slice_witness(iso, cfg, report.witnesses);

    for (std::size_t a = 0; a < report.criteria.size(); ++a) {
        for (std::size_t b = a + 1; b < report.criteria.size(); ++b) {
            const CriterionResult& ca = report.criteria[a];
            const CriterionResult& cb = report.criteria[b];
            if (ca.verdict == Verdict::Inapplicable || cb.verdict == Verdict::Inapplicable ||
                ca.verdict == cb.verdict)
                continue;
            std::ostringstream os;
            os << (ca.boundary || cb.boundary ? "boundary-case difference: "
                                              : "hard disagreement: ")
               << ca.criterion << "=" << to_string(ca.verdict) << " vs " << cb.criterion << "="
               << to_string(cb.verdict);
            report.diagnostics.push_back(os.str());
        }
    }
    return report;
}

CounterexampleReport counterexample_suite(const Config& cfg)
{
    CounterexampleReport out;
    out.seed = cfg.seed;
    const EnergySpec& entry = catalog_entry("counterexample-iso");
    const IsochoricEnergy iso = make_isochoric(entry, cfg.eps_det);

    // (i) objectivity, isotropy, isochoricity
    {
        Rng rng = Rng::stream(cfg.seed, 0xA11CE);
        double max_rot_dev = 0.0, max_scale_dev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Mat2 f = rng.glp2(cfg.log_lambda_range);
            const double base = iso.w_iso(f);
            const auto [q1, q2] = rng.orthogonal_pair();
            max_rot_dev = std::max(max_rot_dev, std::abs(iso.w_iso(q1 * f * q2) - base));
            for (double a : {0.5, 2.0, 3.0, 10.0})
                max_scale_dev = std::max(max_scale_dev, std::abs(iso.w_iso(a * f) - base));
        }
        out.invariance.claim = "objective, isotropic and isochoric on GL+(2)";
        out.invariance.pass = max_rot_dev <= 1e-8 && max_scale_dev <= 1e-12;
        std::ostringstream os;
        os << "max |W(Q1 F Q2) - W(F)| = " << max_rot_dev << ", max |W(aF) - W(F)| = "
           << max_scale_dev;
        out.invariance.detail = os.str();
    }

    // (ii) not rank-one convex on GL+(2)
    {
        out.h_second_at_2_fd = iso.h.deriv2(2.0);
        out.h_second_at_2_formula = -0.25 * std::pow(2.0, -1.5) - 0.75 * std::pow(2.0, -2.5);

        bool curvature_negative = true;
        for (double t : cfg.t_grid.make()) {
            if (t < 1.1)
                continue; // keep clear of the kink at t = 1
            if (iso.h.deriv2(t) >= 0.0)
                curvature_negative = false;
        }

        OracleResult oracle = rank_one_oracle(iso.glp, SegmentMode::GlpUnconstrained, cfg);
        const bool witness_found = oracle.violations > 0;
        if (witness_found) {
            out.glp_witness = oracle.worst;
            out.glp_witness_margin = witness_margin(iso.glp, oracle.worst, cfg.eps_det);
        }

        out.not_rank_one_glp.claim = "not rank-one convex on GL+(2)";
        out.not_rank_one_glp.pass =
            curvature_negative &&
            std::abs(out.h_second_at_2_fd - out.h_second_at_2_formula) <= 1e-6 &&
            witness_found && out.glp_witness_margin >= 1e-6;
        std::ostringstream os;
        os << "h''(2) fd = " << out.h_second_at_2_fd << " vs formula = "
           << out.h_second_at_2_formula << "; rank-one violation margin = "
           << out.glp_witness_margin;
        out.not_rank_one_glp.detail = os.str();
    }

    // (iii) the SL(2) restriction is polyconvex with identity shear profile
    {
        const ScalarProfile phi = to_phi_profile(entry);
        double max_err = 0.0;
        for (double gamma : cfg.gamma_grid.make())
            max_err = std::max(max_err, std::abs(phi.value(gamma) - gamma));
        out.phi_identity_max_err = max_err;

        const CriterionResult mielke = mielke_polyconvexity_check(phi, cfg);
        out.restriction_polyconvex.claim =
            "SL(2) restriction is polyconvex (shear profile is the identity)";
        out.restriction_polyconvex.pass =
            mielke.verdict == Verdict::Holds && max_err <= 1e-12;
        std::ostringstream os;
        os << "max |phi(gamma) - gamma| = " << max_err << "; polyconvexity criterion "
           << to_string(mielke.verdict);
        out.restriction_polyconvex.detail = os.str();
    }

    return out;
}

} // namespace slconvex
