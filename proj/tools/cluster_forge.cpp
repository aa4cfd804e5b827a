#include "cluster_forge/batches.hpp"
#include "cluster_forge/corpus.hpp"
#include "cluster_forge/degeneration.hpp"
#include "cluster_forge/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cf;

namespace {

// exit codes
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

long long parse_int(const std::string& raw, const std::string& what) {
    std::string s = trim(raw);
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw InputError(what + ": '" + raw + "' is not an integer");
    return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    for (auto& part : split(s, ',')) out.push_back(int(parse_int(part, what)));
    return out;
}

BigRat parse_rational(const std::string& raw, const std::string& what) {
    auto parts = split(trim(raw), '/');
    if (parts.empty() || parts.size() > 2) throw InputError(what + ": '" + raw + "' is not a rational number");
    auto integer = [&](const std::string& t) {
        std::string u = trim(t);
        BigInt z;
        if (u.empty() || z.set_str(u[0] == '+' ? u.substr(1) : u, 10) != 0)
            throw InputError(what + ": '" + raw + "' is not a rational number");
        return z;
    };
    BigInt num = integer(parts[0]), den = parts.size() == 2 ? integer(parts[1]) : BigInt(1);
    if (den == 0) throw InputError(what + ": '" + raw + "' has zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

// 1-based directions in 1..size; frozen ones are rejected by the caller's mutation
Path parse_path(const std::string& s, const ExchangeData& ex) {
    Path p;
    for (int k : parse_int_list(s, "--path")) {
        if (k < 1 || k > ex.size())
            throw InputError("--path: direction " + std::to_string(k) + " out of range 1.." + std::to_string(ex.size()));
        if (k > ex.n)
            throw InputError("--path: direction " + std::to_string(k) + " is frozen (mutable directions are 1.." +
                             std::to_string(ex.n) + ")");
        p.push_back(k - 1);
    }
    return p;
}

std::vector<int> parse_frozen(const std::string& s, const ExchangeData& ex) {
    std::vector<int> out;
    for (int k : parse_int_list(s, "--freeze")) {
        if (k < 1 || k > ex.n)
            throw InputError("--freeze: direction " + std::to_string(k) + " out of range 1.." + std::to_string(ex.n));
        out.push_back(k - 1);
    }
    return out;
}

std::string mat_str(const IntMatrix& M) {
    std::ostringstream os;
    for (int i = 0; i < M.rows(); ++i) {
        os << "  ";
        for (int j = 0; j < M.cols(); ++j) os << (j ? " " : "") << std::setw(3) << M(i, j);
        os << "\n";
    }
    return os.str();
}

std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

json matrix_json(const IntMatrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
    return rows;
}

json check_json(const CheckResult& r) {
    return {{"check", r.check}, {"where", r.where}, {"pass", r.pass}, {"witness", r.witness}};
}

void warn_truncated(const GFanAtlas& a) {
    if (!a.finite)
        std::cerr << "warning: g-fan truncated at depth " << a.depth_cap << " (" << a.cones.size()
                  << " cones enumerated); downstream checks are restricted to these cones\n";
}

struct Options {
    bool json = false;
    std::string seed, fan, path, coeffs, freeze, out, at, tau, check, table, paths = "random:100";
    int depth = 64, max_len = 8;
    std::uint64_t rng_seed = 1;
};

int cmd_mutate(const Options& o) {
    SeedFile sf = read_seed(o.seed);
    const ExchangeData& ex = sf.ex;
    std::string mode = o.coeffs.empty() ? (sf.p.empty() ? "none" : "file") : o.coeffs;
    std::vector<TropMonomial> p0;
    bool echo_p = true;
    if (mode == "none") {
        p0 = trivial_coefficients(ex.size());
        echo_p = false;
    } else if (mode == "principal") {
        p0 = principal_coefficients(ex.size());
    } else if (mode == "file") {
        p0 = sf.p;
    } else if (mode.rfind("trop:", 0) == 0) {
        long long r = parse_int(mode.substr(5), "--with-coeffs");
        if (sf.p.empty()) throw InputError("--with-coeffs " + mode + ": " + sf.source + " has no 'p'");
        if (r != sf.coeff_rank)
            throw InputError("--with-coeffs " + mode + ": " + sf.source + " has coeff_rank " +
                             std::to_string(sf.coeff_rank));
        p0 = sf.p;
    } else {
        throw InputError("--with-coeffs: expected principal, trop:r or none, got '" + mode + "'");
    }
    Path path = parse_path(o.path, ex);

    auto y = mutate_y_seed_along(initial_y_seed(ex, p0), path);
    auto x = mutate_cluster_seed_along(initial_cluster_seed(ex, p0), path);
    std::vector<TropMonomial> p_end = echo_p ? y.p : std::vector<TropMonomial>{};

    if (o.json) {
        json j;
        j["path"] = parse_int_list(o.path, "--path");
        j["seed"] = seed_to_json(y.ex, p_end);
        json ys = json::array(), xs = json::array();
        for (auto& f : y.y) ys.push_back(f.str());
        for (auto& f : x.x) xs.push_back(f.str());
        j["y"] = ys;
        j["x"] = xs;
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    std::cout << "seed " << sf.source << " after path (" << path_str(path) << ")\n";
    std::cout << "n = " << ex.n << ", m = " << ex.m << "\nB =\n" << mat_str(y.ex.B);
    if (echo_p)
        for (size_t i = 0; i < y.p.size(); ++i) std::cout << "p" << i + 1 << " = " << y.p[i].str() << "\n";
    for (size_t i = 0; i < y.y.size(); ++i) std::cout << "y" << i + 1 << " = " << y.y[i].str() << "\n";
    for (size_t i = 0; i < x.x.size(); ++i) std::cout << "x" << i + 1 << " = " << x.x[i].str() << "\n";
    return kPass;
}

int cmd_fan(const Options& o) {
    SeedFile sf = read_seed(o.seed);
    auto atlas = enumerate_gfan(sf.ex, parse_frozen(o.freeze, sf.ex), o.depth);
    warn_truncated(atlas);
    json j = fan_to_json(atlas);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw InputError("--out: cannot write " + o.out);
        f << j.dump(2) << "\n";
    }
    if (o.json) {
        if (o.out.empty()) std::cout << j.dump(2) << "\n";
        return kPass;
    }
    std::cout << "g-fan of " << sf.source << ": " << atlas.cones.size() << " maximal cones, " << atlas.rays().size()
              << " rays, " << (atlas.finite ? "complete" : "truncated") << "\n";
    if (!o.out.empty()) std::cout << "written to " << o.out << "\n";
    return kPass;
}

struct Outcome {
    std::string check;
    long long items = 0;
    std::string unit;
    std::vector<CheckResult> results;
};

// runs body(i) for i < count in parallel, keeps the lowest failing index
CheckResult first_failure(const std::string& name, size_t count, const std::function<CheckResult(size_t)>& body) {
    std::vector<CheckResult> rs(count);
    parallel_for(count, [&](size_t i) { rs[i] = body(i); });
    for (auto& r : rs)
        if (!r.pass) return r;
    return CheckResult{name, "", true, ""};
}

int cmd_verify(const Options& o) {
    const std::string& c = o.check;
    static const std::vector<std::string> atlas_checks{"duality", "signcoherence"};
    static const std::vector<std::string> family_checks{"cocycle", "degree", "limit", "strata", "glue"};
    static const std::vector<std::string> batch_checks{"separation", "involution", "laurent"};
    auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), c) != v.end(); };

    ExchangeData ex;
    std::vector<int> frozen;
    int depth = o.depth;
    std::optional<GFanAtlas> stored;
    if (!o.fan.empty()) {
        stored = read_fan(o.fan);
        ex = stored->ex;
        frozen = stored->frozen;
        depth = stored->depth_cap;
    } else {
        SeedFile sf = read_seed(o.seed);
        ex = sf.ex;
        frozen = parse_frozen(o.freeze, ex);
    }

    Outcome out;
    out.check = c;
    if (in(batch_checks)) {
        const std::string prefix = "random:";
        if (o.paths.rfind(prefix, 0) != 0) throw InputError("--paths: expected random:N, got '" + o.paths + "'");
        long long count = parse_int(o.paths.substr(prefix.size()), "--paths");
        if (count < 1) throw InputError("--paths: N must be positive");
        if (o.max_len < 1) throw InputError("--max-len must be positive");
        out.items = count;
        out.unit = "paths";
        if (c == "separation")
            out.results.push_back(separation_batch(ex, int(count), o.max_len, o.rng_seed));
        else if (c == "involution")
            out.results.push_back(involution_batch(ex, int(count), o.max_len, o.rng_seed));
        else
            out.results.push_back(laurent_batch(ex, int(count), o.max_len, o.rng_seed));
    } else if (in(atlas_checks)) {
        GFanAtlas atlas = stored ? *stored : enumerate_gfan(ex, frozen, depth);
        warn_truncated(atlas);
        out.items = long(atlas.cones.size());
        out.unit = "cones";
        out.results.push_back(c == "duality" ? duality_sweep(atlas) : sign_coherence_sweep(atlas));
    } else if (in(family_checks)) {
        if (ex.m != 0)
            throw InputError("verify " + c + ": the degeneration checks need a seed without frozen rows (m = " +
                             std::to_string(ex.m) + ")");
        Family fam = make_family(ex, frozen, depth);
        warn_truncated(fam.atlas);
        if (!fam.atlas.finite && (c == "cocycle" || c == "strata"))
            throw InputError("verify " + c + ": needs a complete atlas, enumeration stopped at depth " +
                             std::to_string(depth));
        const int n = fam.n();
        const size_t cones = fam.atlas.cones.size();
        if (c == "cocycle") {
            long long loops = 0;
            out.results.push_back(cocycle_sweep(fam, o.max_len, &loops));
            out.items = loops;
            out.unit = "loops";
        } else if (c == "degree") {
            out.results.push_back(degree_sweep(fam));
            out.items = long(cones) * n;
            out.unit = "coordinates";
        } else if (c == "limit") {
            out.results.push_back(limit_sweep(fam));
            out.results.push_back(central_fiber_toric_check(fam));
            out.items = long(cones) * n;
            out.unit = "coordinates";
        } else if (c == "strata") {
            auto rays = fam.atlas.rays();
            out.results.push_back(strata_consistency_check(fam, {}));
            out.results.back().check = "strata at the zero cone";
            out.results.push_back(first_failure("strata at every ray", rays.size(), [&](size_t r) {
                auto res = strata_consistency_check(fam, {rays[r]});
                if (!res.pass) res.where = "ray " + vec_str(rays[r]) + (res.where.empty() ? "" : ": " + res.where);
                return res;
            }));
            out.items = long(rays.size()) + 1;
            out.unit = "cones tau";
        } else {
            std::vector<std::pair<int, int>> walls;
            for (size_t v = 0; v < cones; ++v)
                for (int k = 0; k < n; ++k)
                    if (fam.atlas.cones[v].nbr[k] >= 0) walls.push_back({int(v), k});
            for (bool coeffs : {true, false})
                out.results.push_back(first_failure(coeffs ? "glue" : "glue without coefficients", walls.size(),
                                                    [&](size_t w) {
                                                        return glue_ring_check(fam, walls[w].first, walls[w].second,
                                                                               coeffs);
                                                    }));
            out.items = long(walls.size());
            out.unit = "walls";
        }
    } else {
        throw InputError("verify: unknown check '" + c + "'");
    }

    bool pass = all_pass(out.results);
    if (o.json) {
        json j{{"check", c}, {"pass", pass}, {"items", out.items}, {"unit", out.unit}};
        json rs = json::array();
        for (auto& r : out.results) rs.push_back(check_json(r));
        j["results"] = rs;
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& r : out.results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << (r.check.empty() ? c : r.check);
            if (!r.pass) std::cout << " at " << r.where << ": " << r.witness;
            std::cout << "\n";
        }
        std::cout << c << ": " << (pass ? "pass" : "FAIL") << " over " << out.items << " " << out.unit << "\n";
    }
    return pass ? kPass : kFail;
}

int cmd_degenerate(const Options& o) {
    SeedFile sf = read_seed(o.seed);
    if (sf.ex.m != 0)
        throw InputError("degenerate: the family needs a seed without frozen rows (m = " + std::to_string(sf.ex.m) +
                         ")");
    std::vector<BigRat> u;
    for (auto& part : split(o.at, ',')) u.push_back(parse_rational(part, "--at"));
    if (int(u.size()) != sf.ex.n)
        throw InputError("--at: expected " + std::to_string(sf.ex.n) + " values, got " + std::to_string(u.size()));
    Family fam = make_family(sf.ex, parse_frozen(o.freeze, sf.ex), o.depth);
    warn_truncated(fam.atlas);
    bool toric = std::all_of(u.begin(), u.end(), [](const BigRat& q) { return q == 0; });

    json maps = json::array();
    std::ostringstream txt;
    txt << (toric ? "toric gluing (t = 0)" : "fiber at t = (" + o.at + ")") << ", " << fam.atlas.cones.size()
        << " patches\n";
    for (size_t v = 0; v < fam.atlas.cones.size(); ++v)
        for (int k = 0; k < fam.n(); ++k) {
            int w = fam.atlas.cones[v].nbr[k];
            if (w < 0) continue;
            auto fm = specialize_fiber(fam, transition(fam, int(v), w, k), u);
            txt << "patch " << v << " -> patch " << w << " across direction " << k + 1 << "\n";
            json images = json::array();
            for (size_t i = 0; i < fm.pullback.size(); ++i) {
                txt << "  X" << i + 1 << "' = " << fm.pullback[i].str() << "\n";
                images.push_back(fm.pullback[i].str());
            }
            maps.push_back({{"source", v}, {"target", w}, {"direction", k + 1}, {"pullback", images}});
        }
    if (o.json) {
        json at = json::array();
        for (auto& q : u) at.push_back(q.get_str());
        std::cout << json{{"at", at}, {"toric", toric}, {"patches", fam.atlas.cones.size()}, {"maps", maps}}.dump(2)
                  << "\n";
    } else {
        std::cout << txt.str();
    }
    return kPass;
}

int cmd_table(const Options& o) {
    CorpusReport rep;
    if (o.table == "a2")
        rep = run_a2_table();
    else if (o.table == "a2-principal")
        rep = run_a2_principal_table();
    else if (o.table == "gr25")
        rep = run_gr25();
    else if (o.table == "dp5")
        rep = run_dp5();
    else
        throw InputError("table: unknown table '" + o.table + "' (a2, a2-principal, gr25, dp5)");
    if (o.json) {
        json rs = json::array();
        for (auto& r : rep.checks) rs.push_back(check_json(r));
        std::cout << json{{"table", rep.name}, {"pass", rep.pass()}, {"checks", rs}}.dump(2) << "\n";
    } else {
        std::cout << rep.text;
    }
    return rep.pass() ? kPass : kFail;
}

int cmd_star(const Options& o) {
    GFanAtlas atlas = read_fan(o.fan);
    if (!atlas.finite) throw InputError(o.fan + ": fan is truncated; star needs a complete atlas");
    auto rays = atlas.rays();
    std::vector<IntVec> tau;
    auto ray_at = [&](const std::string& s) {
        long long i = parse_int(s, "--tau");
        if (i < 0 || i >= (long long)rays.size())
            throw InputError("--tau: ray index " + s + " out of range 0.." + std::to_string(rays.size() - 1));
        return rays[size_t(i)];
    };
    if (o.tau == "zero") {
    } else if (o.tau.rfind("ray:", 0) == 0) {
        tau.push_back(ray_at(o.tau.substr(4)));
    } else if (o.tau.rfind("face:", 0) == 0) {
        for (auto& s : split(o.tau.substr(5), ',')) tau.push_back(ray_at(s));
    } else {
        throw InputError("--tau: expected ray:i, face:i,j,... or zero, got '" + o.tau + "'");
    }
    StarData st = star(atlas, tau);

    std::vector<int> I1, labels1;
    for (int i : st.I) I1.push_back(i + 1);
    for (int i : st.tau_labels) labels1.push_back(i + 1);
    if (o.json) {
        json proj = json::array();
        for (auto& c : st.projected) proj.push_back(matrix_json(c.gens));
        std::cout << json{{"tau", tau},
                          {"ref_cone", st.ref_cone},
                          {"I", I1},
                          {"tau_labels", labels1},
                          {"cones", st.cones},
                          {"projected", proj},
                          {"restricted", seed_to_json(st.restricted, {})}}
                         .dump(2)
                  << "\n";
        return kPass;
    }
    std::cout << "tau = {";
    for (size_t i = 0; i < tau.size(); ++i) std::cout << (i ? ", " : "") << vec_str(tau[i]);
    std::cout << "}\nreference cone " << st.ref_cone << ", tau labels " << path_str(st.tau_labels)
              << ", star labels I = " << path_str(st.I) << "\n";
    std::cout << st.cones.size() << " maximal cones contain tau:";
    for (int c : st.cones) std::cout << " " << c;
    std::cout << "\nrestricted exchange matrix (n = " << st.restricted.n << "):\n" << mat_str(st.restricted.B);
    std::cout << "projected cones (generators as columns):\n";
    for (auto& c : st.projected) std::cout << mat_str(c.gens) << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster-forge: Y-patterns, g-fans and toric degenerations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");

    auto seed_opt = [&](CLI::App* s) {
        return s->add_option("--seed", o.seed, "seed JSON file or fixture:NAME");
    };

    auto* mutate = app.add_subcommand("mutate", "mutate a seed along a path");
    seed_opt(mutate)->required();
    mutate->add_option("--path", o.path, "comma-separated 1-based directions");
    mutate->add_option("--with-coeffs", o.coeffs, "principal | trop:r | none (default: the file's p)");

    auto* fan = app.add_subcommand("fan", "enumerate the g-fan");
    seed_opt(fan)->required();
    fan->add_option("--freeze", o.freeze, "1-based directions never mutated");
    fan->add_option("--depth", o.depth, "BFS depth cap")->capture_default_str();
    fan->add_option("--out", o.out, "write the fan JSON here");

    auto* verify = app.add_subcommand("verify", "run a verification check");
    verify->add_option("check", o.check,
                       "separation | duality | signcoherence | cocycle | degree | limit | strata | glue | "
                       "involution | laurent")
        ->required();
    auto* vseed = seed_opt(verify);
    auto* vfan = verify->add_option("--fan", o.fan, "fan JSON written by 'fan'");
    vseed->excludes(vfan);
    verify->add_option("--freeze", o.freeze, "1-based directions never mutated");
    verify->add_option("--depth", o.depth, "BFS depth cap")->capture_default_str();
    verify->add_option("--paths", o.paths, "random:N")->capture_default_str();
    verify->add_option("--max-len", o.max_len, "maximum path or loop length")->capture_default_str();
    verify->add_option("--rng-seed", o.rng_seed, "random seed")->capture_default_str();

    auto* degen = app.add_subcommand("degenerate", "specialized transition maps of the family");
    seed_opt(degen)->required();
    degen->add_option("--at", o.at, "u1,...,un (rationals); all zeros gives the toric gluing")->required();
    degen->add_option("--freeze", o.freeze, "1-based directions never mutated");
    degen->add_option("--depth", o.depth, "BFS depth cap")->capture_default_str();

    auto* table = app.add_subcommand("table", "reproduce a stored table");
    table->add_option("name", o.table, "a2 | a2-principal | gr25 | dp5")->required();

    auto* star_cmd = app.add_subcommand("star", "Star(tau) data of a fan");
    star_cmd->add_option("--fan", o.fan, "fan JSON written by 'fan'")->required();
    star_cmd->add_option("--tau", o.tau, "ray:i | face:i,j,... (0-based indices into \"rays\") | zero")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*mutate) return cmd_mutate(o);
        if (*fan) return cmd_fan(o);
        if (*verify) {
            if (o.seed.empty() && o.fan.empty()) throw InputError("verify: one of --seed or --fan is required");
            return cmd_verify(o);
        }
        if (*degen) return cmd_degenerate(o);
        if (*table) return cmd_table(o);
        if (*star_cmd) return cmd_star(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInput;
}
