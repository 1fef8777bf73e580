#pragma once

// Convexity criteria for objective, isotropic energies on SL(2), plus an
// independent brute-force rank-one-convexity sampling oracle. The grid
// criteria use divided differences (no regularity assumed); the invariant
// criteria (Abeyaratne form, E-matrix, acoustic tensor) use first and second
// derivatives of psi. All checks are pure given (energy, config, seed); the
// oracle's sample loop may run in parallel, with a deterministic merge that
// makes parallel and serial runs produce identical results.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "slconvex/config.hpp"
#include "slconvex/energy.hpp"
#include "slconvex/profile.hpp"
#include "slconvex/tensor2.hpp"

namespace slconvex {

enum class Verdict { Holds, Fails, Inapplicable };

std::string to_string(Verdict v);

struct NamedSlack {
    std::string label;
    double min_value = std::numeric_limits<double>::infinity();
    double at = 0.0; // grid coordinate of the minimizer
};

struct CriterionResult {
    std::string criterion;
    Verdict verdict = Verdict::Inapplicable;
    bool boundary = false; // |min slack| within boundary_factor * tau of zero
    std::vector<NamedSlack> slacks;
    std::string note;

    double min_slack() const;
};

// Divided-difference monotonicity + convexity over arbitrary sorted
// abscissae. Convexity slack is 2 * f[x_{i-1}, x_i, x_{i+1}] (the classical
// second divided difference scaled to approximate f''); on a uniform grid
// this is (f_{i+1} - 2 f_i + f_{i-1}) / dx^2.
CriterionResult monotone_convex_on_grid(const std::string& criterion,
                                        const std::vector<double>& xs,
                                        const std::vector<double>& fs, double tau,
                                        double boundary_factor);

// Interior kink scan: second differences whose magnitude exceeds 10^3 times
// their neighborhood indicate a non-differentiable point. Returns kink
// abscissae (empty for smooth profiles).
std::vector<double> detect_kinks(const std::vector<double>& xs, const std::vector<double>& fs);

// phi nondecreasing and convex on the gamma grid <=> rank-one convexity on
// SL(2) for W(F) = phi(sqrt(||F||^2 - 2)).
CriterionResult dfz_check(const ScalarProfile& phi, const Config& cfg = {});

// Same predicate, stated as the polyconvexity criterion on SL(2).
CriterionResult mielke_polyconvexity_check(const ScalarProfile& phi, const Config& cfg = {});

// psi'(I) >= 0 and 2 (I - 2) psi''(I) + psi'(I) >= 0 on the I grid.
CriterionResult abeyaratne_check(const ScalarProfile& psi, const Config& cfg = {});

// Acoustic tensor of the isotropic extension F |-> psi(||F||^2):
//   Q(F, eta) = 4 psi''(I) (F eta)(x)(F eta) + 2 psi'(I) Id,
// together with the E-matrix entries at the singular values of F:
//   E11 = l2^2 psi', E22 = l1^2 psi',
//   E12 = [ (l1^2 + l2^2) psi' + 2 (l1^2 - l2^2)^2 psi'' ] / 2.
struct AcousticData {
    Mat2 q;
    double e11 = 0.0, e22 = 0.0, e12 = 0.0;
    double I = 0.0;
    SingularPair sv;
};
struct AcousticOptions {
    double eps_det = kDefaultEpsDet;
    double unit_tol = 1e-12;
    bool normalize_eta = false; // default: reject non-unit eta
};
AcousticData acoustic_tensor(const ScalarProfile& psi, const Mat2& f, Vec2 eta,
                             const AcousticOptions& opts = {});

// Independent cross-check: central-difference Hessian of F |-> psi(||F||^2)
// contracted with eta in the second slots. Kept free of the analytic path.
Mat2 fd_acoustic_tensor(const ScalarProfile& psi, const Mat2& f, Vec2 eta,
                        double rel_step = 1e-4);

// Constrained Legendre-Hadamard quartic at (l1, l2) with l1 l2 = 1, in the
// two printed forms:
//   squared_form  = (l1^2 eta2^2 + l2^2 eta1^2)^2 psi' + 2 (l1^2-l2^2)^2 eta1^2 eta2^2 psi''
//   expanded_form = [l2^2 psi'] eta1^4 + [l1^2 psi'] eta2^4
//                   + [(l1^2+l2^2) psi' + 2 (l1^2-l2^2)^2 psi''] eta1^2 eta2^2
// The two differ algebraically (squared vs unsquared leading coefficient);
// the expanded form is the one equivalent to the E-matrix cone condition and
// drives the verdict machinery. Both are reported.
struct LhQuartic {
    double squared_form = 0.0;
    double expanded_form = 0.0;
    double I = 0.0;
};
LhQuartic lh_quartic(const ScalarProfile& psi, double lambda1, double lambda2, Vec2 eta);

// E-matrix cone condition at one (l1, l2) with l1 l2 = 1:
//   E11 >= -tau, E22 >= -tau, and (E12 >= -tau or det E >= -tau),
// computed alongside the equivalent psi-inequality route
//   psi' >= -tau and psi' + 2 (I - 2) psi'' >= -tau.
struct EMatrixResult {
    double e11 = 0.0, e22 = 0.0, e12 = 0.0, det_e = 0.0;
    double I = 0.0;
    Verdict verdict = Verdict::Inapplicable; // cone route
    bool boundary = false;
    double cone_slack = 0.0;
    Verdict psi_route_verdict = Verdict::Inapplicable;
    double psi_route_slack = 0.0;
    bool routes_agree = true;
};
EMatrixResult e_matrix_check(const ScalarProfile& psi, double lambda1, double lambda2,
                             const Config& cfg = {});

// Cone condition swept over (lambda, 1/lambda) for lambda in cfg.lambda_grid.
CriterionResult e_matrix_sweep(const ScalarProfile& psi, const Config& cfg = {});

// Brute-force rank-one convexity oracle. Sl2Tangent constrains directions to
// the tangent space (xi = alternator F^{-T} eta) and asserts the sampled
// segments stay on det = 1; GlpUnconstrained samples free rank-one segments
// and keeps only triples with det bounded away from zero.
enum class SegmentMode { Sl2Tangent, GlpUnconstrained };

struct Witness {
    Mat2 f;
    Vec2 xi, eta;
    double t_center = 0.0;
    double t_step = 0.0;
    double margin = 0.0; // positive violation magnitude
    std::uint64_t sample_index = 0;
};

struct OracleResult {
    CriterionResult result;
    std::vector<Witness> witnesses; // ordered by sample index; capped
    Witness worst;                  // largest margin; meaningful iff !witnesses.empty()
    std::uint64_t triples_tested = 0;
    std::uint64_t violations = 0;
};

OracleResult rank_one_oracle(const EnergySpec& e, SegmentMode mode, const Config& cfg = {});

// Recomputes a witness's midpoint-convexity margin from scratch.
double witness_margin(const EnergySpec& e, const Witness& w, double eps_det = kDefaultEpsDet);

struct ConvexityReport {
    std::string energy_name;
    EnergyDomain domain = EnergyDomain::SL2;
    std::vector<CriterionResult> criteria;
    std::vector<Witness> witnesses;
    std::vector<std::string> diagnostics; // cross-criterion notes; never dropped
    std::uint64_t seed = 0;
    int n_f = 0, n_eta = 0, n_t = 0;

    bool all_applicable_hold() const;
    const CriterionResult* find(const std::string& criterion) const;
};

// Runs every criterion applicable to (energy, domain) and reconciles them.
// For GLplus2 the isochoric battery (h-criterion, separate convexity,
// unconstrained oracle, forward implication) is used.
ConvexityReport analyze(const EnergySpec& e, EnergyDomain domain, const Config& cfg = {});

} // namespace slconvex
