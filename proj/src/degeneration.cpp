#include "cluster_forge/degeneration.hpp"

#include "cluster_forge/invariants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <set>

namespace cf {

namespace {

int sgn(long long v) { return (v > 0) - (v < 0); }

void fail(CheckResult& r, const std::string& where, const std::string& witness) {
    if (!r.pass) return;
    r.pass = false;
    r.where = where;
    r.witness = witness;
}

// thread-safe first-failure recorder
struct Failures {
    std::mutex mu;
    CheckResult res;
    void add(const std::string& where, const std::string& witness) {
        std::lock_guard<std::mutex> lock(mu);
        fail(res, where, witness);
    }
};

std::string cone_str(const Family& fam, int cone) {
    return "cone " + std::to_string(cone) + " (path " + path_str(fam.atlas.cones.at(cone).path) + ")";
}

ExchangeData at(const Family& fam, const IntMatrix& B) { return ExchangeData{fam.n(), 0, B, fam.ex.d}; }

std::vector<PosRatFunc> with_t(const Family& fam, std::vector<PosRatFunc> xs) {
    for (int l = 0; l < fam.n(); ++l) xs.push_back(fam.t(l));
    return xs;
}

std::vector<PosRatFunc> compose(const Family& fam, const std::vector<PosRatFunc>& outer,
                                const std::vector<PosRatFunc>& inner) {
    auto imgs = with_t(fam, inner);
    std::vector<PosRatFunc> out;
    for (auto& f : outer) out.push_back(f.substitute(imgs));
    return out;
}

// t^{[s c]_+} as an exponent vector over the family variables
Exp t_part(const Family& fam, const IntMatrix& C, int k, int s, bool with_coeffs) {
    Exp e(fam.vars->size(), 0);
    if (!with_coeffs) return e;
    for (int l = 0; l < fam.n(); ++l) e[fam.n() + l] = std::max(s * int(C(l, k)), 0);
    return e;
}

// the wall binomial t^{[s c_k]+} + t^{[-s c_k]+} X_k^{-s}
PosRatFunc wall_binomial(const Family& fam, const IntMatrix& C, int k, int s, bool with_coeffs) {
    Exp plus = t_part(fam, C, k, s, with_coeffs);
    Exp minus = t_part(fam, C, k, -s, with_coeffs);
    minus[k] = -s;
    return PosRatFunc::monomial(fam.vars, plus) + PosRatFunc::monomial(fam.vars, minus);
}

std::vector<int> sigma_of(const IntMatrix& Cend, const IntMatrix& Cstart) {
    int n = Cend.cols();
    std::vector<int> s(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (Cend.column(i) == Cstart.column(j)) s[i] = j;
    return s;
}

bool same_cone(const IntMatrix& a, const IntMatrix& b) {
    auto s = sigma_of(a, b);
    return std::find(s.begin(), s.end(), -1) == s.end();
}

std::optional<std::vector<int>> close_loop(const Family& fam, const IntMatrix& B0, const IntMatrix& C0,
                                           const IntMatrix& B, const IntMatrix& C,
                                           const std::vector<PosRatFunc>& comp) {
    auto s = sigma_of(C, C0);
    if (std::find(s.begin(), s.end(), -1) != s.end()) return std::nullopt;
    int n = fam.n();
    for (int i = 0; i < n; ++i) {
        if (!rat_equal(comp[i], fam.X(s[i]))) return std::nullopt;
        for (int j = 0; j < n; ++j)
            if (B(i, j) != B0(s[i], s[j])) return std::nullopt;
    }
    return s;
}

std::vector<BigRat> coords(const IntMatrix& basis_cols, const std::vector<int>& which, const IntVec& v) {
    int n = basis_cols.rows();
    int m = int(which.size());
    std::vector<std::vector<BigRat>> M(n, std::vector<BigRat>(m));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a) M[i][a] = BigRat(BigInt(std::to_string(basis_cols(i, which[a]))));
    // choose m independent rows greedily
    std::vector<std::vector<BigRat>> S;
    std::vector<BigRat> rhs;
    for (int i = 0; i < n && int(S.size()) < m; ++i) {
        auto trial = S;
        trial.push_back(M[i]);
        if (rank_of(trial) == int(trial.size())) {
            S = trial;
            rhs.push_back(BigRat(BigInt(std::to_string(v[i]))));
        }
    }
    std::vector<BigRat> a;
    if (int(S.size()) != m || !solve_rational(S, rhs, a)) throw AlgebraError("basis is not independent");
    for (int i = 0; i < n; ++i) {
        BigRat s = 0;
        for (int b = 0; b < m; ++b) s += M[i][b] * a[b];
        if (s != BigRat(BigInt(std::to_string(v[i])))) throw AlgebraError("vector outside the span");
    }
    return a;
}

bool integral(const std::vector<BigRat>& v) {
    return std::all_of(v.begin(), v.end(), [](const BigRat& x) { return x.get_den() == 1; });
}

BigRat power(const BigRat& u, long long e) {
    BigRat r = 1;
    BigRat b = e >= 0 ? u : BigRat(1) / u;
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
    r.canonicalize();
    return r;
}

BigRat u_pow(const std::vector<BigRat>& u, const IntMatrix& C, int i) {
    BigRat r = 1;
    for (int l = 0; l < C.rows(); ++l) r *= power(u[l], C(l, i));
    r.canonicalize();
    return r;
}

void check_u(const Family& fam, const std::vector<BigRat>& u) {
    if (int(u.size()) != fam.n()) throw InputError("fiber point has wrong dimension");
}

}  // namespace

IntMatrix Family::B(int cone) const { return -atlas.cones.at(cone).ex.B.transpose(); }

std::vector<size_t> Family::t_vars() const {
    std::vector<size_t> v;
    for (int l = 0; l < n(); ++l) v.push_back(size_t(n() + l));
    return v;
}

std::vector<PosRatFunc> Family::identity() const {
    std::vector<PosRatFunc> v;
    for (int i = 0; i < n(); ++i) v.push_back(X(i));
    return with_t(*this, v);
}

Family make_family(const ExchangeData& ex, const std::vector<int>& frozen, int depth_cap, Exec mode) {
    ex.validate();
    if (ex.m != 0) throw InputError("the family takes principal coefficients; drop frozen rows first");
    Family f;
    f.ex = ex;
    f.atlas = enumerate_gfan(langlands_dual(ex), frozen, depth_cap, mode);
    f.vars = make_vars(concat(numbered("X", ex.n), numbered("t", ex.n)));
    return f;
}

std::vector<PosRatFunc> wall_pullback(const Family& fam, const IntMatrix& B, const IntMatrix& C, int k,
                                      bool with_coeffs) {
    int n = fam.n();
    if (k < 0 || k >= n) throw InputError("direction out of range");
    std::vector<PosRatFunc> out;
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            out.push_back(fam.X(k).inverse());
            continue;
        }
        long long e = B(k, i);  // eps_ik
        if (e == 0) {
            out.push_back(fam.X(i));
            continue;
        }
        out.push_back(fam.X(i) * wall_binomial(fam, C, k, sgn(e), with_coeffs).pow(int(-e)));
    }
    return out;
}

TransitionMap transition(const Family& fam, int source, int target, int k) {
    const auto& cones = fam.atlas.cones;
    if (source < 0 || source >= int(cones.size())) throw InputError("source cone out of range");
    if (!fam.atlas.is_mutable(k)) throw InputError("direction " + std::to_string(k + 1) + " is frozen or invalid");
    const auto& v = cones[source];
    if (v.nbr[k] != target || target < 0)
        throw InputError("cones " + std::to_string(source) + " and " + std::to_string(target) +
                         " are not adjacent across direction " + std::to_string(k + 1));
    auto raw = wall_pullback(fam, fam.B(source), fam.C(source), k);
    TransitionMap m{source, target, k, std::vector<PosRatFunc>(raw.size())};
    for (size_t j = 0; j < raw.size(); ++j) m.pullback[v.perm[k][j]] = raw[j];
    return m;
}

namespace {

std::vector<PosRatFunc> seed_pullbacks(const Family& fam, int cone) {
    YSeedCoeff s;
    s.ex = fam.ex;
    s.p = principal_coefficients(fam.n());
    s.gen_offset = fam.n();
    for (int i = 0; i < fam.n(); ++i) s.y.push_back(fam.X(i));
    return mutate_y_seed_along(s, fam.atlas.cones.at(cone).path).y;
}

}  // namespace

PosRatFunc pullback_to_initial(const Family& fam, int cone, int i) { return seed_pullbacks(fam, cone).at(i); }

std::vector<PosRatFunc> pullback_by_transitions(const Family& fam, int cone) {
    std::vector<PosRatFunc> comp;
    for (int i = 0; i < fam.n(); ++i) comp.push_back(fam.X(i));
    int cur = 0;
    for (int k : fam.atlas.cones.at(cone).path) {
        int tgt = fam.atlas.cones[cur].nbr[k];
        comp = compose(fam, transition(fam, cur, tgt, k).pullback, comp);
        cur = tgt;
    }
    if (cur != cone) throw AlgebraError("representative path does not end at its cone");
    return comp;
}

bool degree_check(const Family& fam, int cone, int i) {
    const auto& v = fam.atlas.cones.at(cone);
    auto deg = degree_of(pullback_to_initial(fam, cone, i), Grading::family(fam.n()));
    IntMatrix C = c_matrix(fam.ex, v.path);
    for (int l = 0; l < fam.n(); ++l)
        if (deg[l] != C(l, i) || C(l, i) != v.C(l, i)) return false;
    return true;
}

bool limit_check(const Family& fam, int cone, int i) {
    const auto& v = fam.atlas.cones.at(cone);
    auto lim = limit_t_zero(pullback_to_initial(fam, cone, i), fam.t_vars());
    if (lim.coef != 1) return false;
    for (int l = 0; l < fam.n(); ++l)
        if (lim.exps[l] != v.C(l, i) || lim.exps[fam.n() + l] != 0) return false;
    return true;
}

namespace {

CheckResult sweep(const Family& fam, Exec mode, const std::string& name,
                  bool (*per_index)(const Family&, const std::vector<PosRatFunc>&, int, int)) {
    Failures f;
    f.res.check = name;
    size_t count = fam.atlas.cones.size();
    parallel_for(
        count,
        [&](size_t c) {
            auto pbs = seed_pullbacks(fam, int(c));
            for (int i = 0; i < fam.n(); ++i) {
                bool ok = false;
                std::string why;
                try {
                    ok = per_index(fam, pbs, int(c), i);
                } catch (const AlgebraError& e) {
                    why = e.what();
                }
                if (!ok)
                    f.add(cone_str(fam, int(c)) + ", index " + std::to_string(i + 1),
                          why.empty() ? pbs[i].str() : why);
            }
        },
        mode);
    return f.res;
}

bool degree_at(const Family& fam, const std::vector<PosRatFunc>& pbs, int cone, int i) {
    auto deg = degree_of(pbs[i], Grading::family(fam.n()));
    for (int l = 0; l < fam.n(); ++l)
        if (deg[l] != fam.C(cone)(l, i)) return false;
    return true;
}

bool limit_at(const Family& fam, const std::vector<PosRatFunc>& pbs, int cone, int i) {
    auto lim = limit_t_zero(pbs[i], fam.t_vars());
    if (lim.coef != 1) return false;
    for (int l = 0; l < fam.n(); ++l)
        if (lim.exps[l] != fam.C(cone)(l, i) || lim.exps[fam.n() + l] != 0) return false;
    return true;
}

}  // namespace

CheckResult degree_sweep(const Family& fam, Exec mode) { return sweep(fam, mode, "degree", degree_at); }
CheckResult limit_sweep(const Family& fam, Exec mode) { return sweep(fam, mode, "limit", limit_at); }

std::optional<std::vector<int>> cocycle_check(const Family& fam, const Path& loop, int start) {
    if (start < 0 || start >= int(fam.atlas.cones.size())) throw InputError("start cone out of range");
    IntMatrix B0 = fam.B(start), C0 = fam.C(start);
    IntMatrix B = B0, C = C0;
    std::vector<PosRatFunc> comp;
    for (int i = 0; i < fam.n(); ++i) comp.push_back(fam.X(i));
    for (int k : loop) {
        if (!fam.atlas.is_mutable(k)) throw InputError("direction " + std::to_string(k + 1) + " is frozen or invalid");
        comp = compose(fam, wall_pullback(fam, B, C, k), comp);
        C = mutate_c_matrix(C, B, k);
        B = mutate_matrix(at(fam, B), k).B;
    }
    return close_loop(fam, B0, C0, B, C, comp);
}

CheckResult cocycle_sweep(const Family& fam, int max_len, long long* loops_checked, Exec mode) {
    if (!fam.atlas.finite) throw InputError("cocycle sweep needs a finite atlas");
    Failures f;
    f.res.check = "cocycle";
    std::vector<long long> counts(fam.atlas.cones.size(), 0);
    parallel_for(
        fam.atlas.cones.size(),
        [&](size_t s) {
            IntMatrix B0 = fam.B(int(s)), C0 = fam.C(int(s));
            Path word;
            std::vector<PosRatFunc> id;
            for (int i = 0; i < fam.n(); ++i) id.push_back(fam.X(i));
            auto dfs = [&](auto&& self, const IntMatrix& B, const IntMatrix& C,
                           const std::vector<PosRatFunc>& comp) -> void {
                if (!word.empty() && same_cone(C, C0)) {
                    ++counts[s];
                    if (!close_loop(fam, B0, C0, B, C, comp))
                        f.add(cone_str(fam, int(s)) + ", loop " + path_str(word), "composite is not a relabeling");
                }
                if (int(word.size()) >= max_len) return;
                for (int k = 0; k < fam.n(); ++k) {
                    if (!fam.atlas.is_mutable(k) || (!word.empty() && word.back() == k)) continue;
                    auto next = compose(fam, wall_pullback(fam, B, C, k), comp);
                    IntMatrix C2 = mutate_c_matrix(C, B, k);
                    IntMatrix B2 = mutate_matrix(at(fam, B), k).B;
                    word.push_back(k);
                    self(self, B2, C2, next);
                    word.pop_back();
                }
            };
            dfs(dfs, B0, C0, id);
        },
        mode);
    if (loops_checked) {
        *loops_checked = 0;
        for (auto c : counts) *loops_checked += c;
    }
    return f.res;
}

FiberMap specialize_fiber(const Family& fam, const TransitionMap& map, const std::vector<BigRat>& u) {
    check_u(fam, u);
    std::vector<std::pair<size_t, BigRat>> vals;
    for (int l = 0; l < fam.n(); ++l) vals.emplace_back(size_t(fam.n() + l), u[l]);
    FiberMap out{map.source, map.target, map.k, {}};
    for (auto& f : map.pullback) out.pullback.push_back(RatFunc::from_pos(f).specialize(vals));
    return out;
}

CheckResult fiber_iso_check(const Family& fam, const std::vector<BigRat>& u, const std::vector<BigRat>& u2) {
    check_u(fam, u);
    check_u(fam, u2);
    for (int l = 0; l < fam.n(); ++l)
        if (u[l] == 0 || u2[l] == 0) throw InputError("fiber isomorphism needs nonzero coordinates");
    CheckResult r{"fiber-iso", "", true, ""};
    int n = fam.n();
    for (size_t s = 0; s < fam.atlas.cones.size(); ++s) {
        const auto& v = fam.atlas.cones[s];
        std::vector<std::pair<size_t, BigRat>> lam;
        for (int j = 0; j < n; ++j) lam.emplace_back(size_t(j), u_pow(u2, v.C, j) / u_pow(u, v.C, j));
        for (int k = 0; k < n; ++k) {
            if (!fam.atlas.is_mutable(k) || v.nbr[k] < 0) continue;
            int tg = v.nbr[k];
            auto map = transition(fam, int(s), tg, k);
            auto fu = specialize_fiber(fam, map, u);
            auto fu2 = specialize_fiber(fam, map, u2);
            for (int i = 0; i < n; ++i) {
                RatFunc lhs = fu.pullback[i].rescale(lam);
                BigRat li = u_pow(u2, fam.C(tg), i) / u_pow(u, fam.C(tg), i);
                RatFunc rhs = RatFunc::constant(fam.vars, li) * fu2.pullback[i];
                if (!rat_equal(lhs, rhs))
                    fail(r, cone_str(fam, int(s)) + ", direction " + std::to_string(k + 1),
                         lhs.str() + " vs " + rhs.str());
            }
        }
    }
    return r;
}

CheckResult fiber_one_check(const Family& fam) {
    CheckResult r{"fiber-one", "", true, ""};
    int n = fam.n();
    std::vector<BigRat> one(n, 1);
    for (size_t s = 0; s < fam.atlas.cones.size(); ++s) {
        const auto& v = fam.atlas.cones[s];
        YSeedCoeff ys = initial_y_seed(at(fam, fam.B(int(s))), trivial_coefficients(n), "X", "t");
        for (int k = 0; k < n; ++k) {
            if (!fam.atlas.is_mutable(k) || v.nbr[k] < 0) continue;
            auto fm = specialize_fiber(fam, transition(fam, int(s), v.nbr[k], k), one);
            auto ym = mutate_y_seed(ys, k);
            for (int j = 0; j < n; ++j) {
                auto [num, den] = ym.y[j].expand();
                RatFunc want(num.embed(fam.vars), den.embed(fam.vars));
                const RatFunc& got = fm.pullback[v.perm[k][j]];
                if (!rat_equal(got, want))
                    fail(r, cone_str(fam, int(s)) + ", direction " + std::to_string(k + 1),
                         got.str() + " vs " + want.str());
            }
        }
    }
    return r;
}

CheckResult central_fiber_toric_check(const Family& fam) {
    CheckResult r{"central-fiber", "", true, ""};
    int n = fam.n();
    std::vector<std::pair<size_t, BigRat>> zero;
    for (size_t t : fam.t_vars()) zero.emplace_back(t, BigRat(0));
    for (size_t s = 0; s < fam.atlas.cones.size(); ++s) {
        const auto& v = fam.atlas.cones[s];
        IntMatrix B = fam.B(int(s));
        for (int k = 0; k < n; ++k) {
            if (!fam.atlas.is_mutable(k) || v.nbr[k] < 0) continue;
            std::string where = cone_str(fam, int(s)) + ", direction " + std::to_string(k + 1);
            // (i) each removed binomial is a monomial in X_k at t = 0
            for (int i = 0; i < n; ++i) {
                if (i == k || B(k, i) == 0) continue;
                auto [num, den] = wall_binomial(fam, v.C, k, sgn(B(k, i)), true).expand();
                BigInt d;
                LaurentPoly b0 = num.specialize(zero, d);
                auto sup = b0.support();
                bool ok = b0.is_monomial();
                for (size_t x = 0; x < sup.size(); ++x) ok = ok && (!sup[x] || int(x) == k);
                if (!ok) fail(r, where, "binomial at t=0 is " + b0.str());
            }
            // (ii) the limit map is the monomial map of the dual cones
            int tg = v.nbr[k];
            auto map = transition(fam, int(s), tg, k);
            for (int i = 0; i < n; ++i) {
                MonomialLimit lim;
                try {
                    lim = limit_t_zero(map.pullback[i], fam.t_vars());
                } catch (const AlgebraError& e) {
                    fail(r, where, e.what());
                    continue;
                }
                bool ok = lim.coef == 1;
                for (int l = 0; l < n; ++l) {
                    long long acc = 0;
                    for (int j = 0; j < n; ++j) acc += v.C(l, j) * lim.exps[j];
                    ok = ok && acc == fam.C(tg)(l, i) && lim.exps[n + l] == 0;
                }
                if (!ok) fail(r, where, "limit of coordinate " + std::to_string(i + 1) + " is not the dual-cone monomial");
            }
        }
    }
    return r;
}

namespace {

struct Ring {
    int k;
    std::set<LaurentPoly> inverted;  // factor keys allowed in denominators
};

Ring ring_at(const Family& fam, const IntMatrix& B, const IntMatrix& C, int k, bool with_coeffs,
             std::vector<PosRatFunc>& gens) {
    Ring R{k, {}};
    gens.clear();
    gens.push_back(fam.X(k));
    gens.push_back(fam.X(k).inverse());
    for (int i = 0; i < fam.n(); ++i) {
        if (i == k) continue;
        gens.push_back(fam.X(i));
        if (B(k, i) == 0) continue;
        PosRatFunc b = wall_binomial(fam, C, k, sgn(B(k, i)), with_coeffs);
        for (auto& [key, e] : b.factors()) R.inverted.insert(key);
        gens.push_back(b.inverse());
    }
    for (int l = 0; l < fam.n(); ++l) gens.push_back(fam.t(l));
    return R;
}

bool member(const Ring& R, PosRatFunc f) {
    f.simplify();
    for (size_t x = 0; x < f.unit().size(); ++x)
        if (int(x) != R.k && f.unit()[x] < 0) return false;
    for (auto& [key, e] : f.factors())
        if (e < 0 && !R.inverted.count(key)) return false;
    return true;
}

}  // namespace

CheckResult glue_ring_check(const Family& fam, int cone, int k, bool with_coeffs) {
    if (cone < 0 || cone >= int(fam.atlas.cones.size())) throw InputError("cone out of range");
    if (!fam.atlas.is_mutable(k)) throw InputError("direction " + std::to_string(k + 1) + " is frozen or invalid");
    CheckResult r{with_coeffs ? "glue-ring" : "glue-ring-free", cone_str(fam, cone), true, ""};
    r.where.clear();
    IntMatrix B = fam.B(cone), C = fam.C(cone);
    IntMatrix B2 = mutate_matrix(at(fam, B), k).B;
    IntMatrix C2 = mutate_c_matrix(C, B, k);
    auto fwd = wall_pullback(fam, B, C, k, with_coeffs);
    auto back = wall_pullback(fam, B2, C2, k, with_coeffs);
    std::vector<PosRatFunc> g1, g2;
    Ring R1 = ring_at(fam, B, C, k, with_coeffs, g1);
    Ring R2 = ring_at(fam, B2, C2, k, with_coeffs, g2);
    std::string where = cone_str(fam, cone) + ", direction " + std::to_string(k + 1);
    auto fwd_t = with_t(fam, fwd), back_t = with_t(fam, back);
    for (auto& g : g2) {
        auto img = g.substitute(fwd_t);
        if (!member(R1, img)) fail(r, where, "image " + img.str() + " of " + g.str() + " leaves A_G");
    }
    for (auto& g : g1) {
        auto img = g.substitute(back_t);
        if (!member(R2, img)) fail(r, where, "inverse image " + img.str() + " of " + g.str() + " leaves A_G'");
    }
    auto round = compose(fam, back, fwd);
    for (int i = 0; i < fam.n(); ++i)
        if (!rat_equal(round[i], fam.X(i))) fail(r, where, "round trip sends X" + std::to_string(i + 1) + " to " + round[i].str());
    return r;
}

CheckResult strata_consistency_check(const Family& fam, const std::vector<IntVec>& tau) {
    CheckResult r{"strata", "", true, ""};
    StarData st = star(fam.atlas, tau);
    int n = fam.n();
    std::set<int> in_star(st.cones.begin(), st.cones.end());
    auto J_of = [&](int cone) {
        std::set<int> J;
        const IntMatrix& G = fam.atlas.cones[cone].G;
        for (int l = 0; l < n; ++l)
            if (std::find(tau.begin(), tau.end(), G.column(l)) != tau.end()) J.insert(l);
        return J;
    };
    int g0 = st.ref_cone;
    const IntMatrix& C0 = fam.C(g0);
    std::set<Cone> projected(st.projected.begin(), st.projected.end());

    for (int c : st.cones) {
        const auto& v = fam.atlas.cones[c];
        auto J = J_of(c);
        std::vector<int> I;
        for (int l = 0; l < n; ++l)
            if (!J.count(l)) I.push_back(l);
        std::string cw = cone_str(fam, c);

        // dual generators of the projected cone, in the basis c_{I;G0}
        std::vector<IntVec> gbar;
        for (int j : I) {
            IntVec g = v.G.column(j), p;
            for (int l : st.I) {
                long long s = 0;
                for (int x = 0; x < n; ++x) s += C0(x, l) * g[x];
                p.push_back(s);
            }
            gbar.push_back(p);
        }
        if (!I.empty() && !projected.count(Cone::from_generators(IntMatrix::from_columns(gbar, int(st.I.size())))))
            fail(r, cw, "projected cone missing from the star");
        for (size_t a = 0; a < I.size(); ++a) {
            std::vector<BigRat> co;
            try {
                co = coords(C0, st.I, v.C.column(I[a]));
            } catch (const AlgebraError& e) {
                fail(r, cw, std::string("c-vector outside tau-perp: ") + e.what());
                continue;
            }
            if (!integral(co)) fail(r, cw, "c-vector not integral in the reference basis");
            for (size_t b = 0; b < I.size(); ++b) {
                BigRat s = 0;
                for (size_t l = 0; l < co.size(); ++l) s += co[l] * BigRat(BigInt(std::to_string(gbar[b][l])));
                if (s != BigRat(a == b ? 1 : 0)) fail(r, cw, "projected pairing is not the identity");
            }
        }

        for (int k : I) {
            if (!fam.atlas.is_mutable(k)) continue;
            int tg = v.nbr[k];
            if (tg < 0) continue;
            std::string where = cw + ", direction " + std::to_string(k + 1);
            if (!in_star.count(tg)) {
                fail(r, where, "wall leaves the star");
                continue;
            }
            auto Jt = J_of(tg);
            std::set<int> Jimg;
            for (int j : J) Jimg.insert(v.perm[k][j]);
            if (Jimg != Jt) fail(r, where, "labels of tau not carried to labels of tau");
            auto map = transition(fam, c, tg, k);
            for (int j = 0; j < n; ++j) {
                int i = v.perm[k][j];
                const PosRatFunc& pb = map.pullback[i];
                // (1) X_j for j in J pulls back to X_j times a unit free of X_J
                // (2) other coordinates do not see X_J
                std::vector<bool> fsup(pb.vars()->size(), false);
                for (auto& [key, e] : pb.factors()) {
                    auto s = key.support();
                    for (size_t x = 0; x < s.size(); ++x) fsup[x] = fsup[x] || s[x];
                }
                for (int x : J) {
                    int want = (x == j) ? 1 : 0;
                    if (pb.unit()[x] != want || fsup[x])
                        fail(r, where, "coordinate " + std::to_string(i + 1) + " mixes stratum variables: " + pb.str());
                }
                // (4) t -> 0 is the toric gluing of the star
                if (J.count(j)) continue;
                MonomialLimit lim;
                try {
                    lim = limit_t_zero(pb, fam.t_vars());
                } catch (const AlgebraError& e) {
                    fail(r, where, e.what());
                    continue;
                }
                for (int l = 0; l < n; ++l) {
                    long long acc = 0;
                    for (int y : I) acc += v.C(l, y) * lim.exps[y];
                    if (acc != fam.C(tg)(l, i)) fail(r, where, "limit is not the star's monomial map");
                }
            }
        }
    }

    // (3) the restricted family from star(tau)'s data with t'_l = t^{c_{l;G0}}
    int m = int(st.I.size());
    if (m == 0) return r;
    IntMatrix Br = -st.restricted.B.transpose();
    if (Br != fam.B(g0).submatrix(st.I, st.I)) fail(r, cone_str(fam, g0), "restricted data is not the restricted B");
    ExchangeData exr{m, 0, Br, {}};
    for (int l : st.I) exr.d.push_back(fam.ex.d.empty() ? 1 : fam.ex.d[l]);
    std::vector<TropMonomial> p0;
    for (int l : st.I) {
        std::vector<int> e;
        for (int x = 0; x < n; ++x) e.push_back(int(C0(x, l)));
        p0.push_back(TropMonomial(e));
    }
    struct Node {
        ExchangeData ex;
        std::vector<TropMonomial> p;
        std::vector<int> lab;
    };
    std::map<int, Node> seen;
    std::queue<int> q;
    seen[g0] = Node{exr, p0, st.I};
    q.push(g0);
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        Node nd = seen[c];
        const auto& v = fam.atlas.cones[c];
        IntMatrix Bc = fam.B(c);
        std::string cw = cone_str(fam, c);
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b)
                if (nd.ex.B(a, b) != Bc(nd.lab[a], nd.lab[b])) fail(r, cw, "restricted matrix disagrees");
            for (int x = 0; x < n; ++x)
                if (nd.p[a].exps[x] != fam.C(c)(x, nd.lab[a])) fail(r, cw, "restricted coefficients disagree");
        }
        YSeedCoeff ys;
        ys.ex = nd.ex;
        ys.p = nd.p;
        ys.gen_offset = n;
        for (int a = 0; a < m; ++a) ys.y.push_back(fam.X(nd.lab[a]));
        for (int a = 0; a < m; ++a) {
            int k = nd.lab[a];
            if (!fam.atlas.is_mutable(k) || v.nbr[k] < 0) continue;
            int tg = v.nbr[k];
            auto map = transition(fam, c, tg, k);
            auto ym = mutate_y_seed(ys, a);
            std::vector<int> lab2;
            for (int b = 0; b < m; ++b) {
                lab2.push_back(v.perm[k][nd.lab[b]]);
                if (!rat_equal(ym.y[b], map.pullback[lab2.back()]))
                    fail(r, cw + ", direction " + std::to_string(k + 1), "restricted transition disagrees");
            }
            if (!seen.count(tg)) {
                seen[tg] = Node{ym.ex, ym.p, lab2};
                q.push(tg);
            }
        }
    }
    std::set<int> reached;
    for (auto& [c, nd] : seen) reached.insert(c);
    if (reached != in_star) fail(r, "star", "restricted mutations do not reach every cone containing tau");
    return r;
}

}  // namespace cf
