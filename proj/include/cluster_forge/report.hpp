#pragma once

#include <string>
#include <vector>

namespace cf {

// one verification outcome; witness is filled on failure
struct CheckResult {
    std::string check;
    std::string where;
    bool pass = true;
    std::string witness;
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace cf
