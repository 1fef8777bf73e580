#include "slconvex/report_json.hpp"

namespace slconvex {

namespace {

Json grid_to_json(const GridSpec& g)
{
    return Json{{"lo", g.lo}, {"hi", g.hi}, {"points", g.points}, {"log_spaced", g.log_spaced}};
}

GridSpec grid_from_json(const Json& j)
{
    GridSpec g;
    g.lo = j.at("lo").get<double>();
    g.hi = j.at("hi").get<double>();
    g.points = j.at("points").get<int>();
    g.log_spaced = j.at("log_spaced").get<bool>();
    return g;
}

Json mat_to_json(const Mat2& m)
{
    return Json::array({Json::array({m.a11, m.a12}), Json::array({m.a21, m.a22})});
}

Json vec_to_json(Vec2 v) { return Json::array({v.x, v.y}); }

} // namespace

Json config_to_json(const Config& cfg)
{
    Json j;
    j["eps_det"] = cfg.eps_det;
    j["tau"] = cfg.tau;
    j["boundary_factor"] = cfg.boundary_factor;
    j["gamma_grid"] = grid_to_json(cfg.gamma_grid);
    j["t_grid"] = grid_to_json(cfg.t_grid);
    j["lambda_grid"] = grid_to_json(cfg.lambda_grid);
    j["lambda_axis_grid"] = grid_to_json(cfg.lambda_axis_grid);
    j["log_lambda_range"] = cfg.log_lambda_range;
    j["seed"] = cfg.seed;
    j["oracle"] = Json{{"n_f", cfg.oracle.n_f},     {"n_eta", cfg.oracle.n_eta},
                       {"n_t", cfg.oracle.n_t},     {"t_min", cfg.oracle.t_min},
                       {"t_max", cfg.oracle.t_max}, {"tau", cfg.oracle.tau},
                       {"threads", cfg.oracle.threads}};
    return j;
}

Config config_from_json(const Json& j)
{
    const Json& src = j.contains("config") ? j.at("config") : j;
    Config cfg;
    cfg.eps_det = src.at("eps_det").get<double>();
    cfg.tau = src.at("tau").get<double>();
    cfg.boundary_factor = src.at("boundary_factor").get<double>();
    cfg.gamma_grid = grid_from_json(src.at("gamma_grid"));
    cfg.t_grid = grid_from_json(src.at("t_grid"));
    cfg.lambda_grid = grid_from_json(src.at("lambda_grid"));
    cfg.lambda_axis_grid = grid_from_json(src.at("lambda_axis_grid"));
    cfg.log_lambda_range = src.at("log_lambda_range").get<double>();
    cfg.seed = src.at("seed").get<std::uint64_t>();
    const Json& o = src.at("oracle");
    cfg.oracle.n_f = o.at("n_f").get<int>();
    cfg.oracle.n_eta = o.at("n_eta").get<int>();
    cfg.oracle.n_t = o.at("n_t").get<int>();
    cfg.oracle.t_min = o.at("t_min").get<double>();
    cfg.oracle.t_max = o.at("t_max").get<double>();
    cfg.oracle.tau = o.at("tau").get<double>();
    cfg.oracle.threads = o.at("threads").get<int>();
    return cfg;
}

Json witness_to_json(const Witness& w)
{
    Json j;
    j["f"] = mat_to_json(w.f);
    j["xi"] = vec_to_json(w.xi);
    j["eta"] = vec_to_json(w.eta);
    j["t_center"] = w.t_center;
    j["t_step"] = w.t_step;
    j["margin"] = w.margin;
    j["sample_index"] = w.sample_index;
    return j;
}

Json criterion_to_json(const CriterionResult& c)
{
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["boundary"] = c.boundary;
    Json slacks = Json::array();
    for (const NamedSlack& s : c.slacks)
        slacks.push_back(Json{{"label", s.label}, {"min", s.min_value}, {"at", s.at}});
    j["slacks"] = slacks;
    if (!c.note.empty())
        j["note"] = c.note;
    return j;
}

Json analyze_document(const ConvexityReport& report, const EnergySpec& energy,
                      const Config& cfg, double elapsed_ms)
{
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["kind"] = "analyze";
    doc["energy"] = Json{{"name", energy.name},
                         {"representation", to_string(energy.representation)},
                         {"claimed_domain", to_string(energy.claimed_domain)},
                         {"expression", energy.expression}};
    doc["domain"] = to_string(report.domain);
    doc["config"] = config_to_json(cfg);
    Json verdicts;
    for (const CriterionResult& c : report.criteria)
        verdicts[c.criterion] = criterion_to_json(c);
    doc["verdicts"] = verdicts;
    Json witnesses = Json::array();
    for (const Witness& w : report.witnesses)
        witnesses.push_back(witness_to_json(w));
    doc["witnesses"] = witnesses;
    doc["diagnostics"] = report.diagnostics;
    doc["all_hold"] = report.all_applicable_hold();
    doc["timing"] = Json{{"total_ms", elapsed_ms}};
    return doc;
}

Json counterexample_document(const CounterexampleReport& report, const Config& cfg,
                             double elapsed_ms)
{
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["kind"] = "counterexample";
    doc["config"] = config_to_json(cfg);
    Json claims = Json::array();
    for (const ClaimResult* claim :
         {&report.invariance, &report.not_rank_one_glp, &report.restriction_polyconvex}) {
        claims.push_back(
            Json{{"claim", claim->claim}, {"pass", claim->pass}, {"detail", claim->detail}});
    }
    doc["claims"] = claims;
    doc["h_second_at_2"] =
        Json{{"fd", report.h_second_at_2_fd}, {"formula", report.h_second_at_2_formula}};
    doc["witness"] = witness_to_json(report.glp_witness);
    doc["witness_margin"] = report.glp_witness_margin;
    doc["phi_identity_max_err"] = report.phi_identity_max_err;
    doc["all_pass"] = report.all_pass();
    doc["timing"] = Json{{"total_ms", elapsed_ms}};
    return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace slconvex
