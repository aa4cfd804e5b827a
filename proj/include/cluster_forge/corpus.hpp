#pragma once

#include "cluster_forge/report.hpp"
#include "cluster_forge/seeds.hpp"

#include <string>
#include <vector>

namespace cf {

struct CorpusReport {
    std::string name;
    std::vector<CheckResult> checks;
    std::string text;  // human-readable table, deterministic
    bool pass() const { return all_pass(checks); }
};

// Y-pattern with coefficients in type A2, checked at several points of Trop
CorpusReport run_a2_table();
// principal-coefficient family along the A2 pentagon
CorpusReport run_a2_principal_table();
std::vector<CorpusReport> run_a2_tables();

CorpusReport run_gr25();
CorpusReport run_dp5();

// named exchange data shipped with the corpus (fixtures/*.json mirror these)
std::vector<std::string> fixture_names();
ExchangeData fixture(const std::string& name);  // InputError if unknown
// directions frozen in the g-fan for the fixture (0-based), empty for most
std::vector<int> fixture_frozen(const std::string& name);

}  // namespace cf
