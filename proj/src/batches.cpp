#include "cluster_forge/batches.hpp"

#include "cluster_forge/invariants.hpp"

#include <functional>

namespace cf {

namespace {

// run item i -> (ok, where, witness) over all items, keep the first failure by index
CheckResult run_items(const std::string& name, size_t count,
                      const std::function<CheckResult(size_t)>& item, Exec mode) {
    std::vector<CheckResult> out(count);
    parallel_for(
        count,
        [&](size_t i) {
            try {
                out[i] = item(i);
            } catch (const std::exception& e) {
                out[i] = {name, "item " + std::to_string(i), false, e.what()};
            }
        },
        mode);
    CheckResult res{name, std::to_string(count) + " items", true, ""};
    for (auto& r : out)
        if (!r.pass) {
            res.pass = false;
            res.where = r.where;
            res.witness = r.witness;
            break;
        }
    return res;
}

struct Draw {
    Path path;
    std::vector<TropMonomial> p0;
    int k = 0;
};

std::vector<Draw> draws(const ExchangeData& ex, int count, int max_len, std::uint64_t seed, int rank) {
    if (ex.n < 1) throw InputError("no mutable directions");
    if (max_len < 0) throw InputError("path length must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<Draw> d(size_t(std::max(count, 0)));
    for (auto& x : d) {
        int len = max_len == 0 ? 0 : std::uniform_int_distribution<int>(1, max_len)(rng);
        x.path = random_path(rng, ex.n, len);
        x.p0 = random_tropical(rng, ex.size(), rank);
        x.k = std::uniform_int_distribution<int>(0, ex.n - 1)(rng);
    }
    return d;
}

}  // namespace

Path random_path(std::mt19937_64& rng, int n, int len) {
    Path p;
    std::uniform_int_distribution<int> dir(0, n - 1);
    while (int(p.size()) < len) {
        int k = dir(rng);
        if (n > 1 && !p.empty() && p.back() == k) continue;
        p.push_back(k);
    }
    return p;
}

std::vector<TropMonomial> random_tropical(std::mt19937_64& rng, int count, int rank, int lo, int hi) {
    std::uniform_int_distribution<int> e(lo, hi);
    std::vector<TropMonomial> p;
    for (int i = 0; i < count; ++i) {
        std::vector<int> v(size_t(rank), 0);
        for (auto& x : v) x = e(rng);
        p.emplace_back(v);
    }
    return p;
}

CheckResult separation_batch(const ExchangeData& ex, int count, int max_len, std::uint64_t seed, Exec mode) {
    auto d = draws(ex, count, max_len, seed, 3);
    return run_items(
        "separation", d.size(), [&](size_t i) { return separation_check(ex, d[i].p0, d[i].path); }, mode);
}

CheckResult involution_batch(const ExchangeData& ex, int count, int max_len, std::uint64_t seed, Exec mode) {
    auto d = draws(ex, count, max_len, seed, 2);
    return run_items(
        "involution", d.size(),
        [&](size_t i) {
            CheckResult r{"involution", "path " + path_str(d[i].path) + " then k=" + std::to_string(d[i].k + 1), true, ""};
            int k = d[i].k;
            auto c = mutate_cluster_seed_along(initial_cluster_seed(ex, d[i].p0), d[i].path);
            auto y = mutate_y_seed_along(initial_y_seed(ex, d[i].p0), d[i].path);
            if (!seeds_equal(mutate_cluster_seed(mutate_cluster_seed(c, k), k), c)) r.witness = "cluster seed";
            else if (!seeds_equal(mutate_y_seed(mutate_y_seed(y, k), k), y)) r.witness = "Y-seed";
            else if (!(mutate_matrix(mutate_matrix(c.ex, k), k) == c.ex)) r.witness = "exchange matrix";
            r.pass = r.witness.empty();
            return r;
        },
        mode);
}

CheckResult laurent_batch(const ExchangeData& ex, int count, int max_len, std::uint64_t seed, Exec mode) {
    auto d = draws(ex, count, max_len, seed, 2);
    return run_items(
        "laurent", d.size(),
        [&](size_t i) {
            CheckResult r{"laurent", "path " + path_str(d[i].path), true, ""};
            auto s = mutate_cluster_seed_along(initial_cluster_seed(ex, d[i].p0), d[i].path);
            for (int j = 0; j < ex.n && r.pass; ++j) {
                auto den = s.x[j].expand().second;
                if (!den.is_monomial()) {
                    r.pass = false;
                    r.witness = "x" + std::to_string(j + 1) + " = " + s.x[j].str();
                }
            }
            return r;
        },
        mode);
}

CheckResult duality_sweep(const GFanAtlas& atlas, Exec mode) {
    ExchangeData dual = langlands_dual(atlas.ex);
    return run_items(
        "duality", atlas.cones.size(),
        [&](size_t i) {
            auto& v = atlas.cones[i];
            CheckResult r{"duality", "cone " + std::to_string(i) + " (path " + path_str(v.path) + ")", true, ""};
            IntMatrix G = g_matrix_by_degree(atlas.ex, v.path);
            IntMatrix Cd = c_matrix(dual, v.path);
            if (G != v.G) r.witness = "atlas G differs from degrees: " + G.str();
            else if (G.transpose() * Cd != IntMatrix::identity(atlas.n())) r.witness = "G^T C^{-B^T} = " + (G.transpose() * Cd).str();
            else if (abs(G.det()) != 1) r.witness = "det G = " + G.det().get_str();
            r.pass = r.witness.empty();
            return r;
        },
        mode);
}

CheckResult sign_coherence_sweep(const GFanAtlas& atlas, Exec mode) {
    ExchangeData dual = langlands_dual(atlas.ex);
    return run_items(
        "signcoherence", atlas.cones.size(),
        [&](size_t i) {
            auto& v = atlas.cones[i];
            CheckResult r{"signcoherence", "cone " + std::to_string(i) + " (path " + path_str(v.path) + ")", true, ""};
            IntMatrix C = c_matrix_tropical(atlas.ex, v.path);
            if (!check_sign_coherence(C)) r.witness = "C = " + C.str();
            else if (!check_sign_coherence(c_matrix(dual, v.path))) r.witness = "dual C";
            r.pass = r.witness.empty();
            return r;
        },
        mode);
}

}  // namespace cf
