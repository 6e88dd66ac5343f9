#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>

#include "json.hpp"

#include "kroncoeff/kron.hpp"
#include "kroncoeff/partition.hpp"
#include "kroncoeff/report.hpp"
#include "kroncoeff/verify.hpp"

using namespace kroncoeff;

TEST_CASE("report envelope and round trip") {
    const Partition lam{2, 1}, mu{2, 1}, nu{2, 1};
    const BigCount g = compute(lam, mu, nu);
    nlohmann::ordered_json input{{"lambda", lam.str()}, {"mu", mu.str()}, {"nu", nu.str()}};
    const auto report = make_report(input, g.get_str(), "auto", 7);

    CHECK(report["result"] == "1");
    CHECK(report["method"] == "auto");
    CHECK(report["millis"] == 7);

    // parsing the emitted inputs and recomputing reproduces the result
    const Partition lam2 = Partition::parse(report["input"]["lambda"].get<std::string>());
    const Partition mu2 = Partition::parse(report["input"]["mu"].get<std::string>());
    const Partition nu2 = Partition::parse(report["input"]["nu"].get<std::string>());
    CHECK(compute(lam2, mu2, nu2).get_str() == report["result"].get<std::string>());

    // field order is fixed by construction
    CHECK(report.dump().rfind("{\"input\"", 0) == 0);
}

TEST_CASE("values do not depend on the thread count") {
    const Partition a{4, 3, 2}, b{4, 3, 2}, c{5, 2, 2};
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const BigCount one = kron_via_tables(a, b, c);
    const GappPair gp1 = gapp_decomposition(a, b, c);
    omp_set_num_threads(saved > 1 ? saved : 2);
    const BigCount many = kron_via_tables(a, b, c);
    const GappPair gp2 = gapp_decomposition(a, b, c);
    omp_set_num_threads(saved);
    CHECK(one == many);
    CHECK(gp1.pos == gp2.pos);
    CHECK(gp1.neg == gp2.neg);
}

TEST_CASE("verify runs clean at desk scale") {
    for (const SuiteResult& r : run_verify(3)) {
        INFO(r.name, ": ", r.counterexample);
        CHECK(r.passed);
        CHECK(r.cases >= 0);
    }
}
