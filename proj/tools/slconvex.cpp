// slconvex: convexity analysis for objective, isotropic planar energies on
// SL(2) and GL+(2). Subcommands:
//   analyze          run every applicable criterion and emit a JSON report
//   counterexample   verify the isochoric counterexample suite
//   profile          dump plot-ready CSV curves (phi / psi / h / slacks)
//   catalog          list the builtin energy catalog
//
// Exit codes: 0 all applicable criteria hold (or suite passes), 1 a
// criterion fails, 2 usage or parse errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "slconvex/convexity.hpp"
#include "slconvex/energy.hpp"
#include "slconvex/isochoric.hpp"
#include "slconvex/report_json.hpp"

namespace {

using namespace slconvex;

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("SLCONVEX_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0')
            return static_cast<std::uint64_t>(v);
        std::cerr << "warning: ignoring malformed SLCONVEX_SEED='" << env << "'\n";
    }
    return 12345;
}

struct EnergySource {
    std::string expr;
    std::string file;
    std::string catalog_name;

    EnergySpec resolve() const
    {
        const int given = (!expr.empty()) + (!file.empty()) + (!catalog_name.empty());
        if (given != 1)
            throw DomainError("exactly one of --energy-expr, --energy-file, --catalog required");
        if (!expr.empty())
            return parse_energy(expr);
        if (!file.empty())
            return load_energy_file(file);
        return catalog_entry(catalog_name);
    }
};

void write_output(const std::string& out_path, const std::string& content)
{
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw DomainError("cannot open output file '" + out_path + "'");
    f << content;
}

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

EnergyDomain parse_domain(const std::string& name)
{
    if (name == "sl2")
        return EnergyDomain::SL2;
    if (name == "glplus2")
        return EnergyDomain::GLplus2;
    throw DomainError("--domain must be sl2 or glplus2, got '" + name + "'");
}

int run_analyze(const EnergySource& source, const std::string& domain_name, const Config& cfg,
                const std::string& out_path)
{
    const auto start = std::chrono::steady_clock::now();
    const EnergySpec energy = source.resolve();
    const EnergyDomain domain = parse_domain(domain_name);
    const ConvexityReport report = analyze(energy, domain, cfg);
    const Json doc = analyze_document(report, energy, cfg, ms_since(start));
    write_output(out_path, dump_document(doc));
    for (const std::string& d : report.diagnostics)
        std::cerr << "diagnostic: " << d << "\n";
    return report.all_applicable_hold() ? 0 : 1;
}

int run_counterexample(const Config& cfg, const std::string& out_path)
{
    const auto start = std::chrono::steady_clock::now();
    const CounterexampleReport report = counterexample_suite(cfg);
    const Json doc = counterexample_document(report, cfg, ms_since(start));
    write_output(out_path, dump_document(doc));
    for (const ClaimResult* claim :
         {&report.invariance, &report.not_rank_one_glp, &report.restriction_polyconvex})
        std::cerr << (claim->pass ? "pass: " : "FAIL: ") << claim->claim << " (" << claim->detail
                  << ")\n";
    return report.all_pass() ? 0 : 1;
}

std::string format_csv(const std::vector<std::pair<double, double>>& rows,
                       const std::string& header)
{
    std::ostringstream os;
    os.precision(17);
    os << header << "\n";
    for (const auto& [x, y] : rows)
        os << x << "," << y << "\n";
    return os.str();
}

int run_profile(const EnergySource& source, const std::string& curve, const Config& cfg,
                const std::string& out_path)
{
    const EnergySpec energy = source.resolve();
    std::vector<std::pair<double, double>> rows;
    std::string header;

    if (curve == "phi") {
        const ScalarProfile phi = to_phi_profile(energy);
        header = "gamma,phi";
        for (double g : cfg.gamma_grid.make())
            rows.emplace_back(g, phi.value(g));
    } else if (curve == "psi") {
        const ScalarProfile psi = to_psi_profile(energy);
        header = "I,psi";
        for (double g : cfg.gamma_grid.make())
            rows.emplace_back(2.0 + g * g, psi.value(2.0 + g * g));
    } else if (curve == "h") {
        const IsochoricEnergy iso = make_isochoric(energy, cfg.eps_det);
        header = "t,h";
        for (double t : cfg.t_grid.make())
            rows.emplace_back(t, iso.h.value(t));
    } else if (curve == "slack-dfz") {
        const ScalarProfile phi = to_phi_profile(energy);
        const auto xs = cfg.gamma_grid.make();
        std::vector<double> fs;
        for (double x : xs)
            fs.push_back(phi.value(x));
        header = "gamma,slack";
        for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
            const double left = (fs[i] - fs[i - 1]) / (xs[i] - xs[i - 1]);
            const double right = (fs[i + 1] - fs[i]) / (xs[i + 1] - xs[i]);
            const double second = 2.0 * (right - left) / (xs[i + 1] - xs[i - 1]);
            rows.emplace_back(xs[i], std::min(right, second));
        }
    } else if (curve == "slack-abeyaratne") {
        const ScalarProfile psi = to_psi_profile(energy);
        header = "I,slack";
        for (double i : cfg.invariant_grid()) {
            const double p1 = psi.deriv1(i);
            const double p2 = psi.deriv2(i);
            rows.emplace_back(i, std::min(p1, p1 + 2.0 * (i - 2.0) * p2));
        }
    } else if (curve == "slack-h") {
        const IsochoricEnergy iso = make_isochoric(energy, cfg.eps_det);
        const auto xs = cfg.t_grid.make();
        std::vector<double> fs;
        for (double x : xs)
            fs.push_back(iso.h.value(x));
        header = "t,slack";
        for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
            const double left = (fs[i] - fs[i - 1]) / (xs[i] - xs[i - 1]);
            const double right = (fs[i + 1] - fs[i]) / (xs[i + 1] - xs[i]);
            const double second = 2.0 * (right - left) / (xs[i + 1] - xs[i - 1]);
            rows.emplace_back(xs[i], std::min(right, second));
        }
    } else {
        throw DomainError("unknown curve '" + curve + "'");
    }

    write_output(out_path, format_csv(rows, header));
    return 0;
}

int run_catalog(bool as_json, const std::string& name_filter, const std::string& out_path)
{
    auto verdict_str = [](const std::optional<bool>& v) {
        return !v.has_value() ? std::string("-") : (*v ? std::string("yes") : std::string("no"));
    };

    std::vector<const EnergySpec*> entries;
    for (const EnergySpec& e : catalog()) {
        if (name_filter.empty() || e.name == name_filter)
            entries.push_back(&e);
    }
    if (!name_filter.empty() && entries.empty())
        throw DomainError("no catalog energy named '" + name_filter + "'");

    std::ostringstream os;
    if (as_json) {
        Json j = Json::array();
        for (const EnergySpec* e : entries) {
            Json entry;
            entry["name"] = e->name;
            entry["representation"] = to_string(e->representation);
            entry["claimed_domain"] = to_string(e->claimed_domain);
            entry["expression"] = e->expression;
            entry["expected"] = Json{{"sl2_rank_one_convex", verdict_str(e->expected.sl2_rank_one_convex)},
                                     {"sl2_polyconvex", verdict_str(e->expected.sl2_polyconvex)},
                                     {"glplus2_rank_one_convex", verdict_str(e->expected.glp_rank_one_convex)}};
            j.push_back(entry);
        }
        os << dump_document(j);
    } else {
        os << "name                 repr      domain    sl2-rc  sl2-poly  glp-rc  expression\n";
        for (const EnergySpec* e : entries) {
            os.width(21);
            os << std::left << e->name;
            os.width(10);
            os << std::left << to_string(e->representation);
            os.width(10);
            os << std::left << to_string(e->claimed_domain);
            os.width(8);
            os << std::left << verdict_str(e->expected.sl2_rank_one_convex);
            os.width(10);
            os << std::left << verdict_str(e->expected.sl2_polyconvex);
            os.width(8);
            os << std::left << verdict_str(e->expected.glp_rank_one_convex);
            os << e->expression << "\n";
        }
    }
    write_output(out_path, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convexity analysis for objective, isotropic planar elastic energies"};
    app.require_subcommand(1);

    EnergySource source;
    std::string domain_name = "sl2";
    std::string out_path;
    std::string config_path;
    std::string curve = "phi";
    bool catalog_json = false;
    std::string catalog_name;
    std::uint64_t seed = default_seed();
    int n_f = -1, n_eta = -1, threads = -1;
    bool seed_given = false;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--energy-expr", source.expr,
                        "inline definition '<phi|psi|h|g>: <expr>' with variables "
                        "gamma / I / t / l1,l2");
        cmd->add_option("--energy-file", source.file, "definition file (same format)");
        cmd->add_option("--catalog", source.catalog_name, "builtin catalog entry by name");
    };
    auto add_run_opts = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "sampling seed (default: SLCONVEX_SEED or 12345)")
            ->each([&](const std::string&) { seed_given = true; });
        cmd->add_option("--samples-f", n_f, "matrix samples for the rank-one oracle");
        cmd->add_option("--samples-eta", n_eta, "directions per matrix sample");
        cmd->add_option("--threads", threads,
                        "oracle worker threads; 0 = serial reference path, -1 = all");
        cmd->add_option("--out", out_path, "write the document here (stdout stays silent)");
        cmd->add_option("--config", config_path,
                        "JSON config (or a report echoing one) to reproduce a run");
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "run all applicable criteria");
    add_source(analyze_cmd);
    analyze_cmd->add_option("--domain", domain_name, "sl2 or glplus2")->required();
    add_run_opts(analyze_cmd);

    CLI::App* ce_cmd = app.add_subcommand("counterexample",
                                          "verify the isochoric counterexample suite");
    add_run_opts(ce_cmd);

    CLI::App* profile_cmd = app.add_subcommand(
        "profile", "dump a CSV curve; columns are '<x>,<y>' per the chosen curve:\n"
                   "  phi              gamma,phi(gamma)\n"
                   "  psi              I,psi(I)\n"
                   "  h                t,h(t)\n"
                   "  slack-dfz        gamma,min(slope, curvature) divided differences\n"
                   "  slack-abeyaratne I,min(psi', psi' + 2(I-2) psi'')\n"
                   "  slack-h          t,min(slope, curvature) divided differences");
    add_source(profile_cmd);
    profile_cmd->add_option("--curve", curve,
                            "phi | psi | h | slack-dfz | slack-abeyaratne | slack-h");
    add_run_opts(profile_cmd);

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "list builtin energies");
    catalog_cmd->add_flag("--json", catalog_json, "machine-readable listing");
    catalog_cmd->add_option("--name", catalog_name, "show a single entry");
    catalog_cmd->add_option("--out", out_path, "write the listing here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Config cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw DomainError("cannot open config file '" + config_path + "'");
            Json j;
            in >> j;
            cfg = config_from_json(j);
        }
        if (seed_given || config_path.empty())
            cfg.seed = seed;
        if (n_f > 0)
            cfg.oracle.n_f = n_f;
        if (n_eta > 0)
            cfg.oracle.n_eta = n_eta;
        if (config_path.empty())
            cfg.oracle.threads = threads;

        if (analyze_cmd->parsed())
            return run_analyze(source, domain_name, cfg, out_path);
        if (ce_cmd->parsed())
            return run_counterexample(cfg, out_path);
        if (profile_cmd->parsed())
            return run_profile(source, curve, cfg, out_path);
        return run_catalog(catalog_json, catalog_name, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
