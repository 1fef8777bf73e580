// Benchmark: serial reference vs OpenMP-parallel rank-one oracle.
// Verifies that both paths produce identical results (deterministic merge)
// and reports wall time and speedup per catalog energy.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slconvex/convexity.hpp"
#include "slconvex/energy.hpp"

using namespace slconvex;

namespace {

double run_ms(const EnergySpec& e, SegmentMode mode, Config cfg, int threads,
              OracleResult& out)
{
    cfg.oracle.threads = threads;
    const auto start = std::chrono::steady_clock::now();
    out = rank_one_oracle(e, mode, cfg);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool same_result(const OracleResult& a, const OracleResult& b)
{
    if (a.violations != b.violations || a.triples_tested != b.triples_tested)
        return false;
    if (a.result.min_slack() != b.result.min_slack())
        return false;
    if (a.witnesses.size() != b.witnesses.size())
        return false;
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
        const Witness& wa = a.witnesses[i];
        const Witness& wb = b.witnesses[i];
        if (wa.sample_index != wb.sample_index || wa.margin != wb.margin ||
            wa.t_center != wb.t_center || wa.t_step != wb.t_step)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    int n_f = 4000;
    if (argc > 1)
        n_f = std::atoi(argv[1]);

    Config cfg;
    cfg.oracle.n_f = n_f;

#ifdef _OPENMP
    const int hw = omp_get_max_threads();
#else
    const int hw = 1;
#endif
    std::printf("rank-one oracle benchmark: n_f=%d, n_eta=%d, n_t=%d, %d thread(s)\n",
                cfg.oracle.n_f, cfg.oracle.n_eta, cfg.oracle.n_t, hw);
    std::printf("%-20s %-10s %12s %12s %8s  %s\n", "energy", "mode", "serial[ms]",
                "parallel[ms]", "speedup", "identical");

    const std::vector<std::pair<std::string, SegmentMode>> cases = {
        {"neo-hooke-inc", SegmentMode::Sl2Tangent},
        {"phi-poly", SegmentMode::Sl2Tangent},
        {"phi-sqrt", SegmentMode::Sl2Tangent},
        {"counterexample-iso", SegmentMode::GlpUnconstrained},
        {"isochoric-quad", SegmentMode::GlpUnconstrained},
    };

    bool all_identical = true;
    for (const auto& [name, mode] : cases) {
        const EnergySpec& e = catalog_entry(name);
        OracleResult serial, parallel;
        const double t_serial = run_ms(e, mode, cfg, 0, serial);
        const double t_parallel = run_ms(e, mode, cfg, -1, parallel);
        const bool identical = same_result(serial, parallel);
        all_identical = all_identical && identical;
        std::printf("%-20s %-10s %12.1f %12.1f %7.2fx  %s\n", name.c_str(),
                    mode == SegmentMode::Sl2Tangent ? "sl2" : "glplus2", t_serial, t_parallel,
                    t_serial / t_parallel, identical ? "yes" : "NO");
    }

    if (!all_identical) {
        std::printf("FAILURE: serial and parallel paths disagree\n");
        return 1;
    }
    return 0;
}
