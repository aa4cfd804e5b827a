#pragma once

#include "cluster_forge/gfan.hpp"

#include <json.hpp>

#include <string>

namespace cf {

using json = nlohmann::json;

// {"n","m","d","B","coeff_rank","p"}; p rows are exponent vectors of the initial coefficients
struct SeedFile {
    ExchangeData ex;
    int coeff_rank = 0;
    std::vector<TropMonomial> p;  // length n+m, or empty when the file has no "p"
    std::string source;
};

// text is a seed JSON document; source names it in error messages
SeedFile parse_seed(const std::string& text, const std::string& source);
// a file path, or "fixture:NAME" for the built-in fixtures
SeedFile read_seed(const std::string& where);
json seed_to_json(const ExchangeData& ex, const std::vector<TropMonomial>& p);

// rays / maximal_cones / dual_rays / paths (1-based) plus the data to replay it
json fan_to_json(const GFanAtlas& atlas);
// rebuilds the atlas from the stored exchange data and checks it against the stored cones
GFanAtlas fan_from_json(const json& j, const std::string& source);
GFanAtlas read_fan(const std::string& path);

std::string read_text_file(const std::string& path);  // InputError if unreadable

}  // namespace cf
