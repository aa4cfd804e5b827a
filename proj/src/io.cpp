#include "cluster_forge/io.hpp"

#include "cluster_forge/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cf {

namespace {

[[noreturn]] void bad(const std::string& source, const std::string& what) { throw InputError(source + ": " + what); }

const json& field(const json& j, const char* key, const std::string& source) {
    if (!j.is_object()) bad(source, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) bad(source, std::string("missing field '") + key + "'");
    return *it;
}

long long as_int(const json& v, const std::string& source, const std::string& what) {
    if (!v.is_number_integer()) bad(source, what + " must be an integer");
    return v.get<long long>();
}

std::vector<long long> int_row(const json& v, const std::string& source, const std::string& what) {
    if (!v.is_array()) bad(source, what + " must be an array of integers");
    std::vector<long long> out;
    for (auto& x : v) out.push_back(as_int(x, source, what));
    return out;
}

std::vector<std::vector<long long>> int_rows(const json& v, const std::string& source, const std::string& what) {
    if (!v.is_array()) bad(source, what + " must be an array of arrays");
    std::vector<std::vector<long long>> out;
    for (size_t i = 0; i < v.size(); ++i) out.push_back(int_row(v[i], source, what + "[" + std::to_string(i) + "]"));
    return out;
}

int small_int(long long v, const std::string& source, const std::string& what) {
    if (v < -1000000 || v > 1000000) bad(source, what + " out of range");
    return int(v);
}

json matrix_json(const IntMatrix& m) { return m.to_rows(); }

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int k : v) out.push_back(k + 1);
    return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SeedFile parse_seed(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(source, std::string("malformed JSON: ") + e.what());
    }
    SeedFile s;
    s.source = source;
    int n = small_int(as_int(field(j, "n", source), source, "'n'"), source, "'n'");
    int m = j.contains("m") ? small_int(as_int(j["m"], source, "'m'"), source, "'m'") : 0;
    if (n < 0 || m < 0) bad(source, "'n' and 'm' must be nonnegative");
    int N = n + m;
    auto rows = int_rows(field(j, "B", source), source, "'B'");
    if (int(rows.size()) != N) bad(source, "'B' must have n+m = " + std::to_string(N) + " rows");
    for (auto& r : rows)
        if (int(r.size()) != N) bad(source, "'B' must be square of size n+m = " + std::to_string(N));
    std::vector<int> d(size_t(N), 1);
    if (j.contains("d")) {
        auto dv = int_row(j["d"], source, "'d'");
        if (int(dv.size()) != N) bad(source, "'d' must have length n+m = " + std::to_string(N));
        for (int i = 0; i < N; ++i) d[i] = small_int(dv[i], source, "'d'");
    }
    s.ex.n = n;
    s.ex.m = m;
    s.ex.B = N ? IntMatrix::from_rows(rows) : IntMatrix(0, 0);
    s.ex.d = d;
    try {
        s.ex.validate();
    } catch (const InputError& e) {
        bad(source, e.what());
    }
    s.coeff_rank = j.contains("coeff_rank") ? small_int(as_int(j["coeff_rank"], source, "'coeff_rank'"), source, "'coeff_rank'") : 0;
    if (s.coeff_rank < 0) bad(source, "'coeff_rank' must be nonnegative");
    if (j.contains("p")) {
        auto pr = int_rows(j["p"], source, "'p'");
        if (int(pr.size()) != N) bad(source, "'p' must have n+m = " + std::to_string(N) + " rows");
        for (auto& r : pr) {
            if (int(r.size()) != s.coeff_rank) bad(source, "'p' rows must have length coeff_rank = " + std::to_string(s.coeff_rank));
            std::vector<int> e;
            for (auto v : r) e.push_back(small_int(v, source, "'p'"));
            s.p.emplace_back(e);
        }
    }
    return s;
}

SeedFile read_seed(const std::string& where) {
    const std::string pre = "fixture:";
    if (where.rfind(pre, 0) == 0) {
        SeedFile s;
        s.ex = fixture(where.substr(pre.size()));
        s.source = where;
        return s;
    }
    return parse_seed(read_text_file(where), where);
}

json seed_to_json(const ExchangeData& ex, const std::vector<TropMonomial>& p) {
    json j;
    j["n"] = ex.n;
    j["m"] = ex.m;
    j["d"] = ex.d;
    j["B"] = matrix_json(ex.B);
    j["coeff_rank"] = p.empty() ? 0 : p[0].rank();
    if (!p.empty()) {
        json rows = json::array();
        for (auto& q : p) rows.push_back(q.exps);
        j["p"] = rows;
    }
    return j;
}

json fan_to_json(const GFanAtlas& a) {
    json j;
    j["n"] = a.ex.n;
    j["m"] = a.ex.m;
    j["d"] = a.ex.d;
    j["B"] = matrix_json(a.ex.B);
    j["frozen"] = one_based(a.frozen);
    j["depth_cap"] = a.depth_cap;
    j["finite"] = a.finite;
    auto rays = a.rays();
    j["rays"] = rays;
    std::set<IntVec> dual_set;
    for (auto& v : a.cones)
        for (int i = 0; i < a.n(); ++i) dual_set.insert(v.C.column(i));
    std::vector<IntVec> dual(dual_set.begin(), dual_set.end());
    j["dual_rays"] = dual;
    json cones = json::array(), duals = json::array(), paths = json::object();
    for (size_t c = 0; c < a.cones.size(); ++c) {
        auto& v = a.cones[c];
        std::vector<int> idx, didx;
        for (int i = 0; i < a.n(); ++i) {
            idx.push_back(int(std::lower_bound(rays.begin(), rays.end(), v.cone.gens.column(i)) - rays.begin()));
            didx.push_back(int(std::lower_bound(dual.begin(), dual.end(), v.C.column(i)) - dual.begin()));
        }
        cones.push_back(idx);
        duals.push_back(didx);
        paths[std::to_string(c)] = one_based(v.path);
    }
    j["maximal_cones"] = cones;
    j["dual_cones"] = duals;
    j["paths"] = paths;
    return j;
}

GFanAtlas fan_from_json(const json& j, const std::string& source) {
    SeedFile s = parse_seed(j.dump(), source);
    std::vector<int> frozen;
    if (j.contains("frozen"))
        for (auto v : int_row(j["frozen"], source, "'frozen'")) {
            if (v < 1 || v > s.ex.n) bad(source, "'frozen' entries must lie in 1..n");
            frozen.push_back(int(v - 1));
        }
    int cap = j.contains("depth_cap") ? small_int(as_int(j["depth_cap"], source, "'depth_cap'"), source, "'depth_cap'") : 64;
    if (cap < 1) bad(source, "'depth_cap' must be at least 1");
    GFanAtlas a = enumerate_gfan(s.ex, frozen, cap);
    json again = fan_to_json(a);
    for (const char* key : {"rays", "maximal_cones", "paths", "finite"})
        if (j.contains(key) && j[key] != again[key])
            bad(source, std::string("'") + key + "' does not match the enumeration of the stored exchange data");
    return a;
}

GFanAtlas read_fan(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        bad(path, std::string("malformed JSON: ") + e.what());
    }
    return fan_from_json(j, path);
}

}  // namespace cf
