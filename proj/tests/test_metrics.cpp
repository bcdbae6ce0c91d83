#include "permgen/metrics.hpp"

#include <doctest.h>

#include <sstream>

using namespace permgen;

TEST_CASE("run_bench alg1 n=4 j=4") {
    const BenchRun r = run_bench({"alg1", 4, 4, 2});
    CHECK(r.perms == 24);
    CHECK(r.stores >= 2 * 23);
    CHECK(r.decision_free == 23);
    CHECK(static_cast<double>(r.stores) / 24.0 >= 2.0);
}

TEST_CASE("run_bench johnson-trotter n=1") {
    const BenchRun r = run_bench({"johnson-trotter", 1});
    CHECK(r.perms == 1);
    CHECK(r.stores == 0);
}

TEST_CASE("checksum equality across generators") {
    const BenchRun heap8 = run_bench({"heap", 8});
    const BenchRun alg1 = run_bench({"alg1", 8, 6});
    CHECK(heap8.perms == 40320);
    CHECK(alg1.perms == 40320);
    CHECK(heap8.checksum == alg1.checksum);
    const BenchRun sc = run_bench({"shift-cursor", 8});
    const BenchRun lex = run_bench({"lex", 8});
    CHECK(sc.checksum == lex.checksum);
    CHECK(sc.checksum == heap8.checksum);
}

TEST_CASE("counter determinism across repetitions") {
    const BenchRun a = run_bench({"shift-cursor", 6, std::nullopt, 1});
    const BenchRun b = run_bench({"shift-cursor", 6, std::nullopt, 3});
    CHECK(a.stores == b.stores);
    CHECK(a.decisions == b.decisions);
    CHECK(a.checksum == b.checksum);
}

TEST_CASE("monotone convergence of decisions per permutation") {
    double prev = 1e18;
    for (int j = 2; j <= 7; ++j) {
        const BenchRun r = run_bench({"alg1", 7, j});
        const double dpp = static_cast<double>(r.decisions) / static_cast<double>(r.perms);
        CHECK(dpp < prev);
        prev = dpp;
    }
}

TEST_CASE("run_bench rejects bad specs") {
    CHECK_THROWS_AS(run_bench({"nope", 4}), std::invalid_argument);
    CHECK_THROWS_AS(run_bench({"heap", 13}), std::invalid_argument);
    CHECK_THROWS_AS(run_bench({"heap", 0}), std::invalid_argument);
    CHECK_THROWS_AS(run_bench({"alg1", 4}), std::invalid_argument);
}

TEST_CASE("emit_csv format") {
    CHECK(emit_csv({}) ==
          "generator,n,j,perms,stores,decisions,stores_per_perm,"
          "decisions_per_perm,wall_ns\n");

    BenchRun r = run_bench({"alg1", 4, 4});
    const std::string csv = emit_csv({r});
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(row.rfind("alg1,4,4,24,", 0) == 0);

    BenchRun h = run_bench({"heap", 3});
    const std::string two = emit_csv({r, h});
    std::istringstream in2(two);
    std::getline(in2, header);
    std::getline(in2, row);
    CHECK(row.rfind("alg1,", 0) == 0);
    std::getline(in2, row);
    CHECK(row.rfind("heap,3,,6,", 0) == 0);  // j empty when absent
}
