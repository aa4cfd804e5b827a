#include "cluster_forge/gfan.hpp"

#include "cluster_forge/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cf {

namespace {

std::vector<IntVec> columns(const IntMatrix& m) {
    std::vector<IntVec> out;
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
    return out;
}

std::vector<std::vector<BigRat>> rational_inverse(const IntMatrix& m) {
    int n = m.rows();
    auto q = to_rational(m);
    std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<BigRat> e(n, 0), x;
        e[j] = 1;
        if (!solve_rational(q, e, x)) throw AlgebraError("singular cone generators " + m.str());
        for (int i = 0; i < n; ++i) inv[i][j] = x[i];
    }
    return inv;
}

BigRat dot(const std::vector<BigRat>& a, const IntVec& v) {
    BigRat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * BigRat(BigInt(std::to_string(v[i])));
    s.canonicalize();
    return s;
}

std::vector<BigRat> apply_rows(const std::vector<std::vector<BigRat>>& M, const IntVec& v) {
    std::vector<BigRat> out;
    for (auto& row : M) out.push_back(dot(row, v));
    return out;
}

// all k-subsets of [0, n)
void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

struct Child {
    IntMatrix G, C;
    ExchangeData ex;
    Cone cone;
};

Child make_child(const GFanVertex& v, int k) {
    Child c;
    IntMatrix Bd = -v.ex.principal_part().transpose();
    c.C = mutate_c_matrix(v.C, Bd, k);
    c.G = c.C.unimodular_inverse().transpose();
    c.ex = mutate_matrix(v.ex, k);
    c.cone = Cone::from_generators(c.G);
    return c;
}

std::vector<int> label_perm(const IntMatrix& from, const IntMatrix& to) {
    std::vector<int> p(from.cols(), -1);
    for (int j = 0; j < from.cols(); ++j) {
        auto col = from.column(j);
        for (int i = 0; i < to.cols(); ++i)
            if (to.column(i) == col) p[j] = i;
        if (p[j] < 0) throw AlgebraError("label permutation: column not found");
    }
    return p;
}

}  // namespace

Cone Cone::from_generators(const IntMatrix& gens) {
    auto cols = columns(gens);
    for (auto& c : cols) c = primitive(c);
    std::sort(cols.begin(), cols.end());
    return Cone{IntMatrix::from_columns(cols, gens.rows())};
}

int GFanAtlas::find(const Cone& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
}

std::vector<IntVec> GFanAtlas::rays() const {
    std::set<IntVec> s;
    for (auto& v : cones)
        for (auto& c : columns(v.cone.gens)) s.insert(c);
    return {s.begin(), s.end()};
}

bool GFanAtlas::is_mutable(int k) const {
    return k >= 0 && k < ex.n && std::find(frozen.begin(), frozen.end(), k) == frozen.end();
}

GFanAtlas enumerate_gfan(const ExchangeData& ex, const std::vector<int>& frozen, int depth_cap, Exec mode) {
    ex.validate();
    if (depth_cap < 1) throw InputError("depth cap must be at least 1");
    for (int f : frozen)
        if (f < 0 || f >= ex.n) throw InputError("frozen set entry " + std::to_string(f + 1) + " out of range");
    GFanAtlas a;
    a.ex = ex;
    a.frozen = frozen;
    std::sort(a.frozen.begin(), a.frozen.end());
    a.depth_cap = depth_cap;
    int n = ex.n;

    GFanVertex root;
    root.G = IntMatrix::identity(n);
    root.C = IntMatrix::identity(n);
    root.ex = ex;
    root.cone = Cone::from_generators(root.G);
    root.nbr.assign(n, -1);
    root.perm.assign(n, {});
    a.cones.push_back(root);
    a.index[root.cone] = 0;

    std::vector<int> frontier{0};
    int depth = 0;
    while (!frontier.empty()) {
        std::vector<std::pair<int, int>> jobs;
        for (int v : frontier)
            for (int k = 0; k < n; ++k)
                if (a.is_mutable(k)) jobs.push_back({v, k});
        std::vector<Child> kids(jobs.size());
        parallel_for(jobs.size(), [&](size_t i) { kids[i] = make_child(a.cones[jobs[i].first], jobs[i].second); },
                     mode);
        std::vector<int> next;
        for (size_t i = 0; i < jobs.size(); ++i) {
            auto [v, k] = jobs[i];
            Child& c = kids[i];
            int id = a.find(c.cone);
            if (id < 0) {
                if (depth + 1 > depth_cap) {
                    a.finite = false;
                    continue;
                }
                GFanVertex nv;
                nv.path = a.cones[v].path;
                nv.path.push_back(k);
                nv.G = c.G;
                nv.C = c.C;
                nv.ex = c.ex;
                nv.cone = c.cone;
                nv.nbr.assign(n, -1);
                nv.perm.assign(n, {});
                id = int(a.cones.size());
                a.index[nv.cone] = id;
                a.cones.push_back(std::move(nv));
                next.push_back(id);
            }
            a.cones[v].nbr[k] = id;
            a.cones[v].perm[k] = label_perm(c.G, a.cones[id].G);
        }
        frontier = std::move(next);
        ++depth;
    }
    return a;
}

std::vector<IntVec> extreme_rays(const std::vector<std::vector<BigRat>>& rows, int dim) {
    std::vector<std::vector<int>> subs;
    subsets(int(rows.size()), dim - 1, subs);
    std::set<IntVec> out;
    for (auto& s : subs) {
        std::vector<std::vector<BigRat>> M;
        for (int i : s) M.push_back(rows[i]);
        auto ns = null_space(M, dim);
        if (ns.size() != 1) continue;
        IntVec v = primitive(ns[0]);
        for (int sign : {1, -1}) {
            IntVec w = v;
            for (auto& x : w) x *= sign;
            bool ok = true;
            for (auto& r : rows)
                if (dot(r, w) < 0) {
                    ok = false;
                    break;
                }
            if (ok) out.insert(w);
        }
    }
    return {out.begin(), out.end()};
}

CheckResult check_fan_cones(const std::vector<IntMatrix>& cones) {
    CheckResult res{"fan", "", true, ""};
    std::vector<std::vector<std::vector<BigRat>>> inv;
    for (auto& g : cones) inv.push_back(rational_inverse(g));
    for (size_t a = 0; a < cones.size(); ++a)
        for (size_t b = a + 1; b < cones.size(); ++b) {
            int n = cones[a].rows();
            auto rows = inv[a];
            rows.insert(rows.end(), inv[b].begin(), inv[b].end());
            auto ca = columns(cones[a]), cb = columns(cones[b]);
            std::vector<bool> shared(ca.size());
            for (size_t j = 0; j < ca.size(); ++j) shared[j] = std::find(cb.begin(), cb.end(), ca[j]) != cb.end();
            for (auto& r : extreme_rays(rows, n)) {
                auto lam = apply_rows(inv[a], r);
                for (size_t j = 0; j < lam.size(); ++j)
                    if (!shared[j] && lam[j] != 0) {
                        res.pass = false;
                        std::string w;
                        for (auto x : r) w += (w.empty() ? "" : ",") + std::to_string(x);
                        res.where = cones[a].str() + " & " + cones[b].str();
                        res.witness = "intersection ray (" + w + ") is not in a common face";
                        return res;
                    }
            }
        }
    return res;
}

CheckResult check_fan(const GFanAtlas& atlas) {
    if (!atlas.finite) throw InputError("check_fan refuses a truncated atlas");
    if (atlas.n() > 3) throw InputError("check_fan is limited to rank <= 3");
    std::vector<IntMatrix> gens;
    for (auto& v : atlas.cones) gens.push_back(v.cone.gens);
    auto r = check_fan_cones(gens);
    for (auto& v : atlas.cones)
        if (abs(v.G.det()) != 1) {
            r.pass = false;
            r.where = "path " + path_str(v.path);
            r.witness = "non-unimodular cone " + v.G.str();
        }
    return r;
}

StarData star(const GFanAtlas& atlas, const std::vector<IntVec>& tau) {
    StarData s;
    s.tau = tau;
    for (auto& r : tau)
        if (int(r.size()) != atlas.n()) throw InputError("tau ray has wrong dimension");
    for (size_t id = 0; id < atlas.cones.size(); ++id) {
        auto cols = columns(atlas.cones[id].G);
        bool all = true;
        for (auto& r : tau) all = all && std::find(cols.begin(), cols.end(), r) != cols.end();
        if (all) s.cones.push_back(int(id));
    }
    if (s.cones.empty()) throw InputError("no cone of the atlas has tau as a face");
    s.ref_cone = s.cones.front();
    const GFanVertex& g0 = atlas.cones[s.ref_cone];
    auto cols0 = columns(g0.G);
    for (int l = 0; l < atlas.n(); ++l) {
        if (std::find(tau.begin(), tau.end(), cols0[l]) != tau.end())
            s.tau_labels.push_back(l);
        else
            s.I.push_back(l);
    }
    int m = int(s.I.size());
    for (int id : s.cones) {
        std::vector<IntVec> proj;
        for (auto& g : columns(atlas.cones[id].G)) {
            if (std::find(tau.begin(), tau.end(), g) != tau.end()) continue;
            IntVec p(m, 0);
            for (int a = 0; a < m; ++a)
                for (int i = 0; i < atlas.n(); ++i) p[a] = checked_add(p[a], checked_mul(g0.C(i, s.I[a]), g[i]));
            proj.push_back(p);
        }
        s.projected.push_back(Cone::from_generators(IntMatrix::from_columns(proj, m)));
    }
    IntMatrix sub = g0.ex.B.submatrix(s.I, s.I);
    std::vector<int> d;
    int g = 0;
    for (int l : s.I) {
        d.push_back(g0.ex.d[l]);
        g = std::gcd(g, g0.ex.d[l]);
    }
    if (g > 1)
        for (auto& x : d) x /= g;
    s.restricted = m ? ExchangeData::make(sub, d) : ExchangeData{};
    return s;
}

std::optional<IntMatrix> fan_isomorphism(const std::vector<Cone>& a, const std::vector<Cone>& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.empty()) return IntMatrix();
    int n = a.front().gens.rows();
    if (n == 0 || a.front().gens.cols() != n) return std::nullopt;
    std::set<Cone> target(b.begin(), b.end());
    if (target.size() != b.size()) return std::nullopt;
    const IntMatrix& A = a.front().gens;
    if (abs(A.det()) != 1) return std::nullopt;
    IntMatrix Ainv = A.unimodular_inverse();
    for (auto& cb : b) {
        if (cb.gens.rows() != n || cb.gens.cols() != n) return std::nullopt;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            IntMatrix P(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) P(i, j) = cb.gens(i, perm[j]);
            IntMatrix M = P * Ainv;
            bool ok = true;
            for (auto& ca : a) {
                if (!target.count(Cone::from_generators(M * ca.gens))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return M;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

PolytopeReport polytope_P(const GFanAtlas& atlas) {
    if (!atlas.finite) throw InputError("polytope_P needs a finite atlas");
    PolytopeReport rep;
    int n = atlas.n();
    auto rays = atlas.rays();
    std::vector<std::vector<std::vector<BigRat>>> inv;
    std::vector<std::vector<BigRat>> h;
    for (auto& v : atlas.cones) {
        inv.push_back(rational_inverse(v.cone.gens));
        std::vector<BigRat> hs(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) hs[i] += inv.back()[j][i];
        for (auto& x : hs) x.canonicalize();
        h.push_back(hs);
    }
    rep.convex = true;
    for (auto& hs : h)
        for (auto& r : rays)
            if (dot(hs, r) > 1) rep.convex = false;

    for (auto& r : rays) {
        std::vector<std::vector<BigRat>> tight;
        for (auto& hs : h)
            if (dot(hs, r) == 1) tight.push_back(hs);
        if (rank_of(tight) == n) rep.vertices.push_back(r);
    }
    if (!rep.convex) rep.vertices = rays;

    IntVec lo(n, 0), hi(n, 0);
    for (auto& r : rays)
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], r[i]);
            hi[i] = std::max(hi[i], r[i]);
        }
    IntVec v = lo;
    while (true) {
        bool in = false;
        for (auto& iv : inv) {
            auto lam = apply_rows(iv, v);
            BigRat sum = 0;
            bool pos = true;
            for (auto& x : lam) {
                pos = pos && x >= 0;
                sum += x;
            }
            if (pos && sum <= 1) {
                in = true;
                break;
            }
        }
        if (in) {
            rep.lattice_points.push_back(v);
            if (rep.convex) {
                bool interior = true;
                for (auto& hs : h) interior = interior && dot(hs, v) < 1;
                if (interior) rep.interior_points.push_back(v);
            }
        }
        int i = 0;
        while (i < n && v[i] == hi[i]) {
            v[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++v[i];
    }

    bool integral = true;
    for (auto& hs : h)
        for (auto& x : hs) integral = integral && x.get_den() == 1;
    rep.reflexive = rep.convex && integral && rep.interior_points.size() >= 1 &&
                    std::find(rep.interior_points.begin(), rep.interior_points.end(), IntVec(n, 0)) !=
                        rep.interior_points.end();
    if (integral) {
        std::set<IntVec> pv;
        for (auto& hs : h) {
            IntVec w;
            for (auto& x : hs) w.push_back(x.get_num().get_si());
            pv.insert(w);
        }
        rep.polar_vertices.assign(pv.begin(), pv.end());
    }

    rep.normal_fan_matches = rep.convex && h.size() == rep.polar_vertices.size();
    for (size_t a = 0; a < h.size() && rep.normal_fan_matches; ++a) {
        std::vector<std::vector<BigRat>> rows;
        for (size_t b = 0; b < h.size(); ++b) {
            if (a == b) continue;
            std::vector<BigRat> r(n);
            for (int i = 0; i < n; ++i) r[i] = h[a][i] - h[b][i];
            rows.push_back(r);
        }
        auto er = extreme_rays(rows, n);
        auto g = columns(atlas.cones[a].cone.gens);
        std::sort(g.begin(), g.end());
        if (er != g) rep.normal_fan_matches = false;
    }
    return rep;
}

}  // namespace cf
