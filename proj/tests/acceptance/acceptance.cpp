// One line per acceptance criterion. Exit status is the number of failing criteria.
#include "cluster_forge/batches.hpp"
#include "cluster_forge/corpus.hpp"
#include "cluster_forge/degeneration.hpp"
#include "cluster_forge/invariants.hpp"
#include "cluster_forge/io.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

using namespace cf;

namespace {

constexpr std::uint64_t kRngSeed = 20240611;

struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0: no runtime bound
    std::function<std::string()> body;  // empty string on success, else the reason
};

// collects the first failure of a criterion
struct Fail {
    std::string reason;
    void need(bool ok, const std::string& what) {
        if (!ok && reason.empty()) reason = what;
    }
    void need(const CheckResult& r, const std::string& what) {
        if (!r.pass && reason.empty()) reason = what + ": " + r.check + " at " + r.where + ": " + r.witness;
    }
};

std::string golden(const std::string& name) {
    return read_text_file(std::string(CF_SOURCE_DIR) + "/fixtures/golden/" + name + ".txt");
}

int count_lines(const std::string& text, const std::regex& re) {
    int k = 0;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (std::regex_search(line, re)) ++k;
    return k;
}

int count_where(const CorpusReport& r, const std::regex& re) {
    int k = 0;
    for (auto& c : r.checks)
        if (c.pass && std::regex_search(c.where, re)) ++k;
    return k;
}

ExchangeData A2() { return fixture("a2"); }
ExchangeData A3() { return fixture("a3"); }

std::string c1_tables() {
    Fail f;
    static const std::regex row("^[sv]=[0-9]");
    for (auto rep : {run_a2_table(), run_a2_principal_table()}) {
        f.need(rep.pass(), rep.name + " has failing entries");
        f.need(count_lines(rep.text, row) == 6, rep.name + " does not list 6 rows");
        f.need(rep.text == golden(rep.name.substr(6)), rep.name + " differs from the golden file");
    }
    // row 5 is row 0 with the labels exchanged, with generic tropical coefficients
    auto p0 = principal_coefficients(2);
    f.need(detect_period(A2(), {1, 0, 1, 0, 1}, p0) == std::optional<std::vector<int>>(std::vector<int>{1, 0}),
           "pentagon does not close with the swap");
    return f.reason;
}

std::string c2_separation() {
    Fail f;
    for (auto name : {"a2", "b2", "a3"})
        f.need(separation_batch(fixture(name), 200, 8, kRngSeed), std::string(name));
    return f.reason;
}

std::string c3_duality() {
    Fail f;
    std::pair<const char*, size_t> cases[] = {{"a2", 5}, {"a3", 14}, {"b2", 6}};
    for (auto [name, cones] : cases) {
        auto atlas = enumerate_gfan(fixture(name));
        f.need(atlas.finite && atlas.cones.size() == cones,
               std::string(name) + ": " + std::to_string(atlas.cones.size()) + " cones");
        f.need(duality_sweep(atlas), name);
        f.need(sign_coherence_sweep(atlas), name);
        for (auto& v : atlas.cones) {
            BigInt det = v.G.det();
            f.need(det == 1 || det == -1, std::string(name) + ": |det G| != 1 at " + path_str(v.path));
        }
    }
    return f.reason;
}

// z^{c_{i;target}} in the coordinates z^{c_{j;source}} of the source cone
RatFunc toric_monomial(const Family& fam, int source, int target, int i) {
    IntMatrix Cinv = fam.C(source).unimodular_inverse();
    auto e = (Cinv * IntMatrix::from_columns({fam.C(target).column(i)}, fam.n())).column(0);
    RatFunc r = RatFunc::constant(fam.vars, 1);
    for (int j = 0; j < fam.n(); ++j) r = r * RatFunc::from_pos(fam.X(j)).pow(int(e[j]));
    return r;
}

std::string c4_degeneration() {
    Fail f;
    for (auto name : {"a2", "a3", "b2"}) {
        auto fam = make_family(fixture(name));
        f.need(degree_sweep(fam), name);
        f.need(limit_sweep(fam), name);
        long long loops = 0;
        f.need(cocycle_sweep(fam, 8, &loops), name);
        f.need(loops > 0, std::string(name) + ": no loops found");
        f.need(central_fiber_toric_check(fam), name);
    }
    // A2 at t = 0: every transition is the monomial map of the toric chart change
    auto fam = make_family(A2());
    for (size_t v = 0; v < fam.atlas.cones.size(); ++v)
        for (int k = 0; k < 2; ++k) {
            int w = fam.atlas.cones[v].nbr[k];
            auto at0 = specialize_fiber(fam, transition(fam, int(v), w, k), {0, 0});
            for (int i = 0; i < 2; ++i)
                f.need(rat_equal(at0.pullback[i], toric_monomial(fam, int(v), w, i)),
                       "A2 t=0 map " + std::to_string(v) + "->" + std::to_string(w) + " not monomial");
        }
    // the first wall of the example: X2' -> 1/X2, X1' -> X1
    int s1 = fam.atlas.cones[0].nbr[1];
    auto& perm = fam.atlas.cones[0].perm[1];
    auto at0 = specialize_fiber(fam, transition(fam, 0, s1, 1), {0, 0});
    f.need(rat_equal(at0.pullback[perm[1]], RatFunc::from_pos(fam.X(1).inverse())), "X2' -> 1/X2 at t=0");
    f.need(rat_equal(at0.pullback[perm[0]], RatFunc::from_pos(fam.X(0))), "X1' -> X1 at t=0");
    return f.reason;
}

std::string c5_fibers() {
    Fail f;
    auto a2 = make_family(A2());
    f.need(fiber_iso_check(a2, {1, 1}, {2, 3}), "A2 u'=(2,3)");
    f.need(fiber_iso_check(a2, {1, 1}, {5, 7}), "A2 u'=(5,7)");
    auto a3 = make_family(A3());
    std::mt19937_64 rng(kRngSeed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
    auto draw = [&] {
        std::vector<BigRat> u;
        for (int i = 0; i < 3; ++i) {
            BigRat q(sign(rng) ? -num(rng) : num(rng), den(rng));
            q.canonicalize();
            u.push_back(q);
        }
        return u;
    };
    for (int r = 0; r < 3; ++r) {
        auto u = draw(), u2 = draw();
        f.need(fiber_iso_check(a3, u, u2), "A3 random pair " + std::to_string(r));
    }
    return f.reason;
}

std::string c6_glue() {
    Fail f;
    for (auto name : {"a2", "a3"}) {
        auto fam = make_family(fixture(name));
        int walls = 0;
        for (size_t v = 0; v < fam.atlas.cones.size(); ++v)
            for (int k = 0; k < fam.n(); ++k) {
                if (fam.atlas.cones[v].nbr[k] < 0) continue;
                ++walls;
                f.need(glue_ring_check(fam, int(v), k, true), name);
                f.need(glue_ring_check(fam, int(v), k, false), name);
            }
        f.need(walls == int(fam.atlas.cones.size()) * fam.n(), std::string(name) + ": missing walls");
    }
    return f.reason;
}

std::string c7_strata() {
    Fail f;
    for (auto name : {"a2", "a3"}) {
        auto fam = make_family(fixture(name));
        for (auto& r : fam.atlas.rays()) f.need(strata_consistency_check(fam, {r}), name);
    }
    // each A2 ray: the stratum is the A1 family, two patches glued by X -> 1/X at t = 0
    auto fam = make_family(A2());
    for (auto& r : fam.atlas.rays()) {
        auto st = star(fam.atlas, {r});
        f.need(st.restricted.n == 1 && st.restricted.B(0, 0) == 0, "A2 ray stratum is not A1");
        auto a1 = make_family(st.restricted);
        f.need(a1.atlas.cones.size() == 2 && st.cones.size() == 2, "A2 ray stratum does not have 2 patches");
        auto at0 = specialize_fiber(a1, transition(a1, 0, a1.atlas.cones[0].nbr[0], 0), {0});
        f.need(rat_equal(at0.pullback[0], RatFunc::from_pos(a1.X(0).inverse())), "A1 gluing is not X -> 1/X");
    }
    return f.reason;
}

std::string c8_gr25() {
    Fail f;
    auto rep = run_gr25();
    f.need(rep.pass(), "gr25 has failing checks");
    f.need(count_where(rep, std::regex("^flow\\(p[1-5][1-5]\\) = ")) == 10, "not all 10 flow polynomials verified");
    f.need(count_where(rep, std::regex("^p\\*\\(theta[1-5][1-5]\\) = ")) == 5, "p*-pullbacks of the thetas");
    f.need(count_where(rep, std::regex("homogeneous, c-vector")) == 3, "three extensions with degrees");
    f.need(rep.text == golden("gr25"), "gr25 differs from the golden file");
    return f.reason;
}

std::string c9_dp5() {
    Fail f;
    auto rep = run_dp5();
    f.need(rep.pass(), "dp5 has failing checks");
    f.need(count_where(rep, std::regex("^th[1-5]\\*th[1-5] = ")) == 5, "five homogenized relations");
    f.need(count_where(rep, std::regex("holds with theta0 = 1")) == 5, "relations as identities");
    f.need(rep.text == golden("dp5"), "dp5 differs from the golden file");
    auto P = polytope_P(enumerate_gfan(fixture("a2-flipped")));
    f.need(P.convex && P.vertices.size() == 5, "P does not have 5 vertices");
    f.need(P.interior_points == std::vector<IntVec>{{0, 0}}, "P has interior points other than 0");
    f.need(P.reflexive && P.polar_vertices.size() == 5, "polar dual does not have 5 vertices");
    f.need(P.normal_fan_matches, "normal fan of the polar dual differs from the g-fan");
    return f.reason;
}

std::string c10_properties() {
    Fail f;
    f.need(involution_batch(A3(), 500, 8, kRngSeed), "involution");
    f.need(laurent_batch(A3(), 100, 8, kRngSeed), "laurent A3");
    f.need(laurent_batch(fixture("markov"), 100, 8, kRngSeed), "laurent markov");
    return f.reason;
}

}  // namespace

int main() {
    std::vector<Criterion> cs{
        {1, "golden tables a2, a2-principal", 1, c1_tables},
        {2, "separation, 200 random paths per seed", 60, c2_separation},
        {3, "duality and sign coherence on A2, A3, B2", 5, c3_duality},
        {4, "degree, limit, cocycle, central fiber", 120, c4_degeneration},
        {5, "fiber isomorphisms", 30, c5_fibers},
        {6, "special-completion gluing", 0, c6_glue},
        {7, "strata of every ray", 0, c7_strata},
        {8, "Gr(2,5) flows, pullbacks, extensions", 0, c8_gr25},
        {9, "dP5 relations and polytope", 0, c9_dp5},
        {10, "involution and Laurent properties", 60, c10_properties},
    };
    int failed = 0;
    for (auto& c : cs) {
        auto t0 = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.body();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (reason.empty() && c.limit_s > 0 && s >= c.limit_s) reason = "runtime over the bound";
        std::ostringstream line;
        line << (reason.empty() ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << "  " << std::left
             << std::setw(44) << c.name << std::right << std::fixed << std::setprecision(2) << std::setw(8) << s
             << " s";
        if (c.limit_s > 0) line << " (bound " << c.limit_s << " s)";
        if (!reason.empty()) line << "  " << reason;
        std::cout << line.str() << std::endl;
        if (!reason.empty()) ++failed;
    }
    std::cout << (failed ? "FAILED " : "passed ") << (10 - failed) << "/10 criteria\n";
    return failed;
}
