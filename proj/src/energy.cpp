#include "slconvex/energy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "slconvex/exprparse.hpp"
#include "slconvex/sampling.hpp"

namespace slconvex {

std::string to_string(Representation r)
{
    switch (r) {
    case Representation::MatrixW: return "matrix-w";
    case Representation::InvariantPsi: return "psi";
    case Representation::ShearPhi: return "phi";
    case Representation::RatioH: return "h";
    case Representation::SingularG: return "g";
    }
    return "?";
}

std::string to_string(EnergyDomain d)
{
    return d == EnergyDomain::SL2 ? "sl2" : "glplus2";
}

EnergySpec make_phi_energy(std::string name, ScalarProfile phi)
{
    EnergySpec e;
    e.representation = Representation::ShearPhi;
    e.claimed_domain = EnergyDomain::SL2;
    e.name = std::move(name);
    e.profile = std::move(phi);
    e.profile.domain_lo = 0.0;
    return e;
}

EnergySpec make_psi_energy(std::string name, ScalarProfile psi)
{
    EnergySpec e;
    e.representation = Representation::InvariantPsi;
    e.claimed_domain = EnergyDomain::SL2;
    e.name = std::move(name);
    e.profile = std::move(psi);
    e.profile.domain_lo = 2.0;
    return e;
}

EnergySpec make_h_energy(std::string name, ScalarProfile h)
{
    EnergySpec e;
    e.representation = Representation::RatioH;
    e.claimed_domain = EnergyDomain::GLplus2;
    e.name = std::move(name);
    e.profile = std::move(h);
    e.profile.domain_lo = 0.0;
    return e;
}

EnergySpec make_g_energy(std::string name, std::function<double(double, double)> g)
{
    Rng rng(0x5f3759df);
    for (int i = 0; i < 64; ++i) {
        const double l1 = std::exp(rng.uniform(-1.3, 1.3));
        const double l2 = std::exp(rng.uniform(-1.3, 1.3));
        const double fwd = g(l1, l2), rev = g(l2, l1);
        const double scale = 1.0 + std::abs(fwd);
        if (std::abs(fwd - rev) > 1e-10 * scale)
            throw DomainError("make_g_energy(" + name + "): g(l1,l2) != g(l2,l1) at l1=" +
                              std::to_string(l1) + ", l2=" + std::to_string(l2));
    }
    EnergySpec e;
    e.representation = Representation::SingularG;
    e.claimed_domain = EnergyDomain::GLplus2;
    e.name = std::move(name);
    e.singular_g = std::move(g);
    return e;
}

EnergySpec make_matrix_energy(std::string name, std::function<double(const Mat2&)> w,
                              EnergyDomain domain, double tol)
{
    // Objectivity/isotropy spot check W(Q1 F Q2) = W(F) at registration.
    Rng rng(0x243f6a88);
    for (int i = 0; i < 100; ++i) {
        const Mat2 f = domain == EnergyDomain::SL2 ? rng.sl2() : rng.glp2();
        const auto [q1, q2] = rng.orthogonal_pair();
        const double base = w(f);
        const double rotated = w(q1 * f * q2);
        if (std::abs(base - rotated) > tol * (1.0 + std::abs(base)))
            throw DomainError("make_matrix_energy(" + name +
                              "): payload is not objective/isotropic, |W(Q1 F Q2) - W(F)| = " +
                              std::to_string(std::abs(base - rotated)));
    }
    EnergySpec e;
    e.representation = Representation::MatrixW;
    e.claimed_domain = domain;
    e.name = std::move(name);
    e.matrix_w = std::move(w);
    return e;
}

double eval_energy(const EnergySpec& e, const Mat2& f, double eps_det)
{
    if (!f.finite())
        throw DomainError("eval_energy(" + e.name + "): non-finite matrix");
    const double d = f.det();
    if (d <= 0.0)
        throw DomainError("eval_energy(" + e.name + "): det F = " + std::to_string(d) +
                          " outside GL+(2)");
    if (e.claimed_domain == EnergyDomain::SL2 && std::abs(d - 1.0) > eps_det)
        throw DomainError("eval_energy(" + e.name + "): |det F - 1| = " +
                          std::to_string(std::abs(d - 1.0)) + " exceeds the SL(2) tolerance");

    switch (e.representation) {
    case Representation::MatrixW:
        return e.matrix_w(f);
    case Representation::InvariantPsi:
        return e.profile.value(f.frobenius_sq());
    case Representation::ShearPhi:
        return e.profile.value(singular_values(f).gamma);
    case Representation::RatioH: {
        const SingularPair sv = singular_values(f);
        return e.profile.value(sv.ratio());
    }
    case Representation::SingularG: {
        const SingularPair sv = singular_values(f);
        return e.singular_g(sv.lmax, sv.lmin);
    }
    }
    throw Error("eval_energy: corrupt representation tag");
}

ScalarProfile extract_phi(const EnergySpec& w)
{
    EnergySpec copy = w;
    ScalarProfile phi;
    phi.domain_lo = 0.0;
    phi.eval = [copy](double gamma) {
        try {
            return eval_energy(copy, Mat2::shear(gamma));
        } catch (const Error& err) {
            throw DomainError("extract_phi(" + copy.name + ") failed at gamma = " +
                              std::to_string(gamma) + ": " + err.what());
        }
    };
    return phi;
}

ScalarProfile phi_from_psi(const ScalarProfile& psi)
{
    ScalarProfile phi;
    phi.domain_lo = 0.0;
    phi.eval = [psi](double gamma) { return psi.value(2.0 + gamma * gamma); };
    phi.d1 = [psi](double gamma) { return 2.0 * gamma * psi.deriv1(2.0 + gamma * gamma); };
    phi.d2 = [psi](double gamma) {
        const double i = 2.0 + gamma * gamma;
        return 2.0 * psi.deriv1(i) + 4.0 * gamma * gamma * psi.deriv2(i);
    };
    return phi;
}

ScalarProfile psi_from_phi(const ScalarProfile& phi)
{
    constexpr double kSlack = 1e-12; // absorb rounding on I = 2 + gamma^2
    auto gamma_of = [](double i) { return std::sqrt(std::max(i - 2.0, 0.0)); };
    ScalarProfile psi;
    psi.domain_lo = 2.0;
    psi.eval = [phi, gamma_of](double i) {
        if (i < 2.0 - kSlack)
            throw DomainError("psi evaluation rejects I = " + std::to_string(i) + " < 2");
        return phi.value(gamma_of(i));
    };
    psi.d1 = [phi, gamma_of](double i) {
        const double gamma = std::max(gamma_of(i), 1e-150);
        return phi.deriv1(gamma) / (2.0 * gamma);
    };
    psi.d2 = [phi, gamma_of](double i) {
        const double gamma = std::max(gamma_of(i), 1e-150);
        return phi.deriv2(gamma) / (4.0 * gamma * gamma) -
               phi.deriv1(gamma) / (4.0 * gamma * gamma * gamma);
    };
    return psi;
}

ScalarProfile phi_from_h(const ScalarProfile& h)
{
    auto lmax_of = [](double theta) {
        return 0.5 * (theta + std::sqrt(theta * theta + 4.0));
    };
    ScalarProfile phi;
    phi.domain_lo = 0.0;
    phi.eval = [h, lmax_of](double theta) {
        const double lmax = lmax_of(theta);
        return h.value(lmax * lmax);
    };
    if (h.d1 && h.d2) {
        phi.d1 = [h, lmax_of](double theta) {
            const double r = std::sqrt(theta * theta + 4.0);
            const double m = lmax_of(theta) * lmax_of(theta);
            return h.deriv1(m) * 2.0 * m / r;
        };
        phi.d2 = [h, lmax_of](double theta) {
            const double r = std::sqrt(theta * theta + 4.0);
            const double m = lmax_of(theta) * lmax_of(theta);
            const double m1 = 2.0 * m / r;
            const double m2 = 4.0 * m / (r * r) - 2.0 * m * theta / (r * r * r);
            return h.deriv2(m) * m1 * m1 + h.deriv1(m) * m2;
        };
    }
    return phi;
}

ScalarProfile to_phi_profile(const EnergySpec& e)
{
    switch (e.representation) {
    case Representation::ShearPhi:
        return e.profile;
    case Representation::InvariantPsi:
        return phi_from_psi(e.profile);
    case Representation::RatioH:
        return phi_from_h(e.profile);
    case Representation::SingularG: {
        auto g = e.singular_g;
        ScalarProfile phi;
        phi.domain_lo = 0.0;
        phi.eval = [g](double gamma) {
            const double lmax = 0.5 * (gamma + std::sqrt(gamma * gamma + 4.0));
            return g(lmax, 1.0 / lmax);
        };
        return phi;
    }
    case Representation::MatrixW:
        return extract_phi(e);
    }
    throw Error("to_phi_profile: corrupt representation tag");
}

ScalarProfile to_psi_profile(const EnergySpec& e)
{
    if (e.representation == Representation::InvariantPsi)
        return e.profile;
    return psi_from_phi(to_phi_profile(e));
}

namespace {

ScalarProfile profile_from_expr(const expr::Expr& parsed, const std::string& variable,
                                double domain_lo)
{
    ScalarProfile p;
    p.domain_lo = domain_lo;
    p.eval = [parsed, variable](double x) { return parsed.eval({{variable, x}}); };
    return p;
}

std::pair<std::string, std::string> split_definition(const std::string& definition)
{
    const auto colon = definition.find(':');
    if (colon == std::string::npos)
        throw DomainError("energy definition must look like '<phi|psi|h|g>: <expr>', got '" +
                          definition + "'");
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r\n");
        const auto b = s.find_last_not_of(" \t\r\n");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    return {trim(definition.substr(0, colon)), trim(definition.substr(colon + 1))};
}

} // namespace

EnergySpec parse_energy(const std::string& definition)
{
    const auto [kind, text] = split_definition(definition);
    EnergySpec e;
    if (kind == "phi") {
        e = make_phi_energy("phi-expr", profile_from_expr(expr::parse(text, {"gamma"}), "gamma", 0.0));
    } else if (kind == "psi") {
        e = make_psi_energy("psi-expr", profile_from_expr(expr::parse(text, {"I"}), "I", 2.0));
    } else if (kind == "h") {
        e = make_h_energy("h-expr", profile_from_expr(expr::parse(text, {"t"}), "t", 0.0));
    } else if (kind == "g") {
        const expr::Expr parsed = expr::parse(text, {"l1", "l2"});
        e = make_g_energy("g-expr", [parsed](double l1, double l2) {
            return parsed.eval({{"l1", l1}, {"l2", l2}});
        });
    } else {
        throw DomainError("unknown energy representation '" + kind +
                          "' (expected phi, psi, h or g)");
    }
    e.expression = kind + ": " + text;
    return e;
}

EnergySpec load_energy_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open energy file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return parse_energy(line);
    }
    throw DomainError("energy file '" + path + "' contains no definition line");
}

namespace {

ScalarProfile expr_profile_with_derivs(const std::string& text, const std::string& variable,
                                       double domain_lo, std::function<double(double)> d1,
                                       std::function<double(double)> d2)
{
    ScalarProfile p = profile_from_expr(expr::parse(text, {variable}), variable, domain_lo);
    p.d1 = std::move(d1);
    p.d2 = std::move(d2);
    return p;
}

std::vector<EnergySpec> build_catalog()
{
    std::vector<EnergySpec> entries;

    // Incompressible neo-Hooke type: psi(I) = I - 2.
    {
        EnergySpec e = make_psi_energy(
            "neo-hooke-inc",
            expr_profile_with_derivs("I - 2", "I", 2.0, [](double) { return 1.0; },
                                     [](double) { return 0.0; }));
        e.expression = "psi: I - 2";
        e.expected = {true, true, true};
        e.smooth_psi = true;
        entries.push_back(std::move(e));
    }

    // psi(I) = I^2.
    {
        EnergySpec e = make_psi_energy(
            "psi-quad", expr_profile_with_derivs("I^2", "I", 2.0, [](double i) { return 2.0 * i; },
                                                 [](double) { return 2.0; }));
        e.expression = "psi: I^2";
        e.expected = {true, true, true};
        e.smooth_psi = true;
        entries.push_back(std::move(e));
    }

    // psi(I) = exp(I - 2).
    {
        EnergySpec e = make_psi_energy(
            "psi-exp",
            expr_profile_with_derivs("exp(I - 2)", "I", 2.0,
                                     [](double i) { return std::exp(i - 2.0); },
                                     [](double i) { return std::exp(i - 2.0); }));
        e.expression = "psi: exp(I - 2)";
        e.expected = {true, true, true};
        e.smooth_psi = true;
        entries.push_back(std::move(e));
    }

    // phi(gamma) = gamma^4 + gamma^2; psi(I) = (I - 2)^2 + (I - 2).
    {
        EnergySpec e = make_phi_energy(
            "phi-poly",
            expr_profile_with_derivs("gamma^4 + gamma^2", "gamma", 0.0,
                                     [](double g) { return 4.0 * g * g * g + 2.0 * g; },
                                     [](double g) { return 12.0 * g * g + 2.0; }));
        e.expression = "phi: gamma^4 + gamma^2";
        e.expected = {true, true, true};
        e.smooth_psi = true;
        entries.push_back(std::move(e));
    }

    // Isochoric h(t) = t + 1/t; restriction has psi(I) = I.
    {
        EnergySpec e = make_h_energy(
            "isochoric-quad",
            expr_profile_with_derivs("t + 1/t", "t", 0.0,
                                     [](double t) { return 1.0 - 1.0 / (t * t); },
                                     [](double t) { return 2.0 / (t * t * t); }));
        e.expression = "h: t + 1/t";
        e.expected = {true, true, true};
        e.smooth_psi = true;
        entries.push_back(std::move(e));
    }

    // h(t) = |sqrt(t) - sqrt(1/t)|: isochoric, objective, isotropic, yet not
    // rank-one convex on GL+(2); its SL(2) restriction (phi identity) is
    // polyconvex. Keep both forms in the catalog.
    {
        EnergySpec e = make_h_energy(
            "counterexample-iso",
            profile_from_expr(expr::parse("abs(sqrt(t) - sqrt(1/t))", {"t"}), "t", 0.0));
        e.expression = "h: abs(sqrt(t) - sqrt(1/t))";
        e.expected = {true, true, false};
        entries.push_back(std::move(e));
    }

    // The SL(2) restriction of the energy above: phi(gamma) = gamma.
    {
        EnergySpec e = make_phi_energy(
            "counterexample-inc",
            expr_profile_with_derivs("gamma", "gamma", 0.0, [](double) { return 1.0; },
                                     [](double) { return 0.0; }));
        e.expression = "phi: gamma";
        e.expected = {true, true, false};
        entries.push_back(std::move(e));
    }

    // Decreasing shear profile: fails monotonicity everywhere.
    {
        EnergySpec e = make_phi_energy(
            "phi-neg", expr_profile_with_derivs("-gamma", "gamma", 0.0,
                                                [](double) { return -1.0; },
                                                [](double) { return 0.0; }));
        e.expression = "phi: -gamma";
        e.expected = {false, false, false};
        entries.push_back(std::move(e));
    }

    // Concave shear profile: monotone but not convex.
    {
        EnergySpec e = make_phi_energy(
            "phi-sqrt", profile_from_expr(expr::parse("sqrt(gamma)", {"gamma"}), "gamma", 0.0));
        e.expression = "phi: sqrt(gamma)";
        e.expected = {false, false, false};
        entries.push_back(std::move(e));
    }

    return entries;
}

} // namespace

const std::vector<EnergySpec>& catalog()
{
    static const std::vector<EnergySpec> entries = build_catalog();
    return entries;
}

const EnergySpec& catalog_entry(const std::string& name)
{
    for (const EnergySpec& e : catalog()) {
        if (e.name == name)
            return e;
    }
    throw DomainError("no catalog energy named '" + name + "'");
}

} // namespace slconvex
