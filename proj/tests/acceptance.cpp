// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "rsos/json_io.hpp"
#include "rsos/paths.hpp"

namespace {

checks::Result fixture_matches_golden()
{
    checks::Result r = checks::golden_path();
    rsos::Path h = rsos::load_path(std::string(RSOS_FIXTURE_DIR) + "/fig1.json");
    r.cases += 1;
    if (rsos::weight_wt(h) != 24) r.fail("fixture weight");
    return r;
}

checks::Result bijections()
{
    checks::Result r;
    r.merge(checks::b_bijection(6, 8), "b");
    r.merge(checks::bd_bijection(8, 8), "bd");
    return r;
}

checks::Result fermionic_modified()
{
    return checks::fermionic_modified_vs_classical(8, 12);
}

}  // namespace

int main()
{
    const checks::Sweep full{8, 10, 3, 4, 6};
    struct Criterion {
        int id;
        const char* what;
        std::function<checks::Result()> run;
    };
    const std::vector<Criterion> all = {
        {1, "golden path weight and scoring vertices", fixture_matches_golden},
        {2, "golden continued-fraction and matrix tables", checks::golden_tables},
        {3, "bosonic equals enumeration, p'<=8, L<=12", [] { return checks::bosonic_vs_enumeration(8, 12); }},
        {4, "classical fermionic equals bosonic, p'<=8, L<=12", [] { return checks::fermionic_classical_vs_bosonic(8, 12); }},
        {5, "modified fermionic equals classical, p'<=8, L<=12", fermionic_modified},
        {6, "B and BD bijection identities", bijections},
        {7, "path, transform and table properties, p'<=8, L<=10, k<=3", [&] { return checks::all_path_properties(full); }},
        {8, "gaussian against box partitions and inversion laws, A<=12", [] { return checks::gaussian_laws(12); }},
        {9, "limit stabilization, L=12..18", [] { return checks::limit_stabilization(12, 18); }},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        checks::Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!r.pass) ++failures;
        std::printf("%s criterion %d: %s [%ld cases, %.2fs]%s%s\n", r.pass ? "PASS" : "FAIL", c.id, c.what, r.cases, secs,
                    r.detail.empty() ? "" : " ", r.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
