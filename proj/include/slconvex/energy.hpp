#pragma once

// Energy representations for objective, isotropic planar energies and the
// exact conversions between them:
//
//   MatrixW      W(F)            any domain
//   InvariantPsi psi(I),         I = ||F||^2 on SL(2)
//   ShearPhi     phi(gamma),     gamma = lmax - 1/lmax on SL(2)
//   RatioH       h(lmax/lmin)    isochoric on GL+(2)
//   SingularG    g(l1, l2)       isochoric on GL+(2)
//
// On SL(2) every objective isotropic energy has a unique shear profile phi
// with W(F) = phi(sqrt(||F||^2 - 2)); ShearPhi is therefore the canonical
// form all SL(2) criteria normalize to.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slconvex/config.hpp"
#include "slconvex/profile.hpp"
#include "slconvex/tensor2.hpp"

namespace slconvex {

enum class Representation { MatrixW, InvariantPsi, ShearPhi, RatioH, SingularG };
enum class EnergyDomain { SL2, GLplus2 };

std::string to_string(Representation r);
std::string to_string(EnergyDomain d);

// Golden verdicts attached to catalog entries, used as test fixtures.
struct ExpectedVerdicts {
    std::optional<bool> sl2_rank_one_convex;
    std::optional<bool> sl2_polyconvex;
    std::optional<bool> glp_rank_one_convex;
};

struct EnergySpec {
    Representation representation = Representation::ShearPhi;
    EnergyDomain claimed_domain = EnergyDomain::SL2;
    std::string name;
    std::string expression; // source text when defined via the expression language

    // Exactly one payload is active, per `representation`.
    std::function<double(const Mat2&)> matrix_w;        // MatrixW
    ScalarProfile profile;                              // InvariantPsi / ShearPhi / RatioH
    std::function<double(double, double)> singular_g;   // SingularG

    ExpectedVerdicts expected;
    bool smooth_psi = false; // safe for derivative-based acoustic cross-checks
};

// Factories. make_matrix_energy validates objectivity/isotropy on a fixed
// seeded sample and throws DomainError on violation; make_g_energy validates
// the symmetry g(l1, l2) = g(l2, l1).
EnergySpec make_phi_energy(std::string name, ScalarProfile phi);
EnergySpec make_psi_energy(std::string name, ScalarProfile psi);
EnergySpec make_h_energy(std::string name, ScalarProfile h);
EnergySpec make_g_energy(std::string name, std::function<double(double, double)> g);
EnergySpec make_matrix_energy(std::string name, std::function<double(const Mat2&)> w,
                              EnergyDomain domain, double tol = 1e-8);

// Builds an EnergySpec from "<repr>: <expr>" where <repr> is one of
// phi | psi | h | g with variables gamma | I | t | l1,l2 respectively.
EnergySpec parse_energy(const std::string& definition);
// Reads the first non-empty, non-'#' line of a definition file.
EnergySpec load_energy_file(const std::string& path);

// Evaluates E at F, enforcing the claimed domain (det F > 0 everywhere,
// |det F - 1| <= eps_det when the energy lives on SL(2)).
double eval_energy(const EnergySpec& e, const Mat2& f, double eps_det = kDefaultEpsDet);

// phi(gamma) = W([[1, gamma], [0, 1]]); the unique shear profile of W.
ScalarProfile extract_phi(const EnergySpec& w);

// phi(gamma) = psi(2 + gamma^2) and psi(I) = phi(sqrt(I - 2)), with
// chain-rule derivatives wherever the source profile has them:
//   dpsi/dI   = phi' / (2 gamma)
//   d2psi/dI2 = phi'' / (4 gamma^2) - phi' / (4 gamma^3)
// psi-side evaluation rejects I < 2.
ScalarProfile phi_from_psi(const ScalarProfile& psi);
ScalarProfile psi_from_phi(const ScalarProfile& phi);

// phi(theta) = h(lmax^2) with lmax = (theta + sqrt(theta^2 + 4)) / 2, the
// largest singular value of a simple shear by amount theta.
ScalarProfile phi_from_h(const ScalarProfile& h);

// Canonical profiles for an energy regardless of its representation.
ScalarProfile to_phi_profile(const EnergySpec& e);
ScalarProfile to_psi_profile(const EnergySpec& e);

// Builtin catalog (>= 6 entries, stable order) with expected verdicts.
const std::vector<EnergySpec>& catalog();
const EnergySpec& catalog_entry(const std::string& name); // throws if absent

} // namespace slconvex
