#include <doctest.h>

#include "cluster_forge/corpus.hpp"

#include <iostream>

using namespace cf;

namespace {
void require_pass(const CorpusReport& r) {
    for (auto& c : r.checks)
        if (!c.pass) std::cerr << r.name << ": " << c.where << " -- " << c.witness << "\n";
    CHECK(r.pass());
    CHECK(!r.checks.empty());
}
}  // namespace

TEST_CASE("corpus: A2 tables") {
    for (auto& r : run_a2_tables()) require_pass(r);
}

TEST_CASE("corpus: Gr(2,5)") { require_pass(run_gr25()); }

TEST_CASE("corpus: dP5") { require_pass(run_dp5()); }

TEST_CASE("corpus: fixtures") {
    for (auto& n : fixture_names()) CHECK_NOTHROW(fixture(n).validate());
    CHECK(fixture("gr25").m == 5);
    CHECK(fixture_frozen("a3-frozen") == std::vector<int>{0});
    CHECK_THROWS_AS(fixture("nope"), InputError);
}
