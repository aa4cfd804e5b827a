#include "cluster_forge/seeds.hpp"

#include <numeric>

namespace cf {

Path path_1based(const std::vector<int>& dirs) {
    Path p;
    for (int k : dirs) p.push_back(k - 1);
    return p;
}

std::string path_str(const Path& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i] + 1);
    }
    return s;
}

static int sgn_ll(long long v) { return (v > 0) - (v < 0); }

void ExchangeData::validate() const {
    int N = n + m;
    if (n < 0 || m < 0) throw InputError("negative n or m");
    if (B.rows() != N || B.cols() != N) throw InputError("B must be " + std::to_string(N) + "x" + std::to_string(N));
    if (int(d.size()) != N) throw InputError("d must have length " + std::to_string(N));
    int g = 0;
    for (int v : d) {
        if (v <= 0) throw InputError("d must be positive");
        g = std::gcd(g, v);
    }
    if (N > 0 && g != 1) throw InputError("gcd(d) must be 1");
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (checked_mul(d[i], B(i, j)) != -checked_mul(d[j], B(j, i)))
                throw InputError("B is not skew-symmetrizable by d at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
}

IntMatrix ExchangeData::principal_part() const {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return B.submatrix(idx, idx);
}

ExchangeData ExchangeData::unfrozen() const {
    ExchangeData e;
    e.n = n;
    e.m = 0;
    e.B = principal_part();
    e.d.assign(d.begin(), d.begin() + n);
    int g = 0;
    for (int v : e.d) g = std::gcd(g, v);
    if (g > 1)
        for (auto& v : e.d) v /= g;
    return e;
}

ExchangeData ExchangeData::make(const IntMatrix& B, std::vector<int> d, int m) {
    ExchangeData e;
    e.B = B;
    e.m = m;
    e.n = B.rows() - m;
    e.d = d.empty() ? std::vector<int>(B.rows(), 1) : std::move(d);
    e.validate();
    return e;
}

ExchangeData mutate_matrix(const ExchangeData& ex, int k) {
    if (k < 0 || k >= ex.size()) throw InputError("mutation direction " + std::to_string(k + 1) + " out of range");
    if (k >= ex.n) throw InputError("mutation at frozen direction " + std::to_string(k + 1));
    ExchangeData r = ex;
    int N = ex.size();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            long long b = ex.B(i, j);
            if (i == k || j == k) {
                r.B(i, j) = -b;
                continue;
            }
            long long prod = checked_mul(ex.B(i, k), ex.B(k, j));
            if (prod > 0) b = checked_add(b, sgn_ll(ex.B(i, k)) * prod);
            r.B(i, j) = b;
        }
    return r;
}

ExchangeData mutate_along(ExchangeData ex, const Path& path) {
    for (int k : path) ex = mutate_matrix(ex, k);
    return ex;
}

ExchangeData langlands_dual(const ExchangeData& ex) {
    ExchangeData r = ex;
    r.B = -ex.B.transpose();
    int l = 1;
    for (int v : ex.d) l = std::lcm(l, v);
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = l / ex.d[i];
    return r;
}

PatternData dual_pattern_data(const std::vector<TropMonomial>& p0, const ExchangeData& ex) {
    return {p0, langlands_dual(ex)};
}

std::vector<TropMonomial> mutate_coefficients(const std::vector<TropMonomial>& p, const ExchangeData& ex, int k) {
    if (k < 0 || k >= ex.n) throw InputError("mutation at frozen or invalid direction " + std::to_string(k + 1));
    std::vector<TropMonomial> r = p;
    int rank = p[k].rank();
    TropMonomial one = TropMonomial::one(rank);
    for (int j = 0; j < int(p.size()); ++j) {
        if (j == k) {
            r[j] = p[k].inverse();
            continue;
        }
        long long b = ex.B(k, j);
        if (b == 0) continue;
        TropMonomial base = trop_add(one, p[k].pow(-sgn_ll(b)));
        r[j] = p[j] * base.pow(int(-b));
    }
    return r;
}

std::vector<TropMonomial> principal_coefficients(int count) {
    std::vector<TropMonomial> p;
    for (int i = 0; i < count; ++i) p.push_back(TropMonomial::generator(count, i));
    return p;
}

std::vector<TropMonomial> trivial_coefficients(int count) {
    return std::vector<TropMonomial>(count, TropMonomial::one(0));
}

static void check_coeffs(const ExchangeData& ex, const std::vector<TropMonomial>& p0) {
    if (int(p0.size()) != ex.size()) throw InputError("coefficient tuple must have length n+m");
    for (auto& q : p0)
        if (q.rank() != p0[0].rank()) throw InputError("coefficients of different tropical rank");
}

YSeedCoeff initial_y_seed(const ExchangeData& ex, const std::vector<TropMonomial>& p0, const std::string& yname,
                          const std::string& pname) {
    ex.validate();
    check_coeffs(ex, p0);
    int r = p0.empty() ? 0 : p0[0].rank();
    Vars v = make_vars(concat(numbered(yname, ex.size()), numbered(pname, r)));
    YSeedCoeff s;
    s.ex = ex;
    s.p = p0;
    s.gen_offset = ex.size();
    for (int i = 0; i < ex.size(); ++i) s.y.push_back(PosRatFunc::variable(v, i));
    return s;
}

YSeedCoeff mutate_y_seed(const YSeedCoeff& s, int k) {
    if (k < 0 || k >= s.ex.n) throw InputError("mutation at frozen or invalid direction " + std::to_string(k + 1));
    YSeedCoeff r = s;
    const Vars& v = s.vars();
    for (int j = 0; j < int(s.y.size()); ++j) {
        if (j == k) {
            r.y[j] = s.y[k].inverse();
            continue;
        }
        long long b = s.ex.B(k, j);
        if (b == 0) continue;
        PosRatFunc a1 = trop_to_func(bracket(s.p[k], b), v, s.gen_offset);
        PosRatFunc a2 = trop_to_func(bracket(s.p[k], -b), v, s.gen_offset) * s.y[k].pow(-sgn_ll(b));
        r.y[j] = s.y[j] * (a1 + a2).pow(int(-b));
    }
    r.p = mutate_coefficients(s.p, s.ex, k);
    r.ex = mutate_matrix(s.ex, k);
    return r;
}

YSeedCoeff mutate_y_seed_along(YSeedCoeff s, const Path& path) {
    for (int k : path) s = mutate_y_seed(s, k);
    return s;
}

ClusterSeedCoeff initial_cluster_seed(const ExchangeData& ex, const std::vector<TropMonomial>& p0,
                                      const std::string& xname, const std::string& pname) {
    ex.validate();
    check_coeffs(ex, p0);
    int r = p0.empty() ? 0 : p0[0].rank();
    Vars v = make_vars(concat(numbered(xname, ex.size()), numbered(pname, r)));
    ClusterSeedCoeff s;
    s.ex = ex;
    s.p = p0;
    s.gen_offset = ex.size();
    for (int i = 0; i < ex.size(); ++i) s.x.push_back(PosRatFunc::variable(v, i));
    return s;
}

ClusterSeedCoeff mutate_cluster_seed(const ClusterSeedCoeff& s, int k) {
    if (k < 0 || k >= s.ex.n) throw InputError("mutation at frozen or invalid direction " + std::to_string(k + 1));
    ClusterSeedCoeff r = s;
    const Vars& v = s.vars();
    PlusMinus pm = p_plus_minus(s.p[k]);
    PosRatFunc pos = trop_to_func(pm.plus, v, s.gen_offset);
    PosRatFunc neg = trop_to_func(pm.minus, v, s.gen_offset);
    for (int i = 0; i < s.ex.size(); ++i) {
        long long b = s.ex.B(i, k);
        if (b > 0) pos *= s.x[i].pow(int(b));
        if (b < 0) neg *= s.x[i].pow(int(-b));
    }
    r.x[k] = (neg + pos) / s.x[k];
    r.p = mutate_coefficients(s.p, s.ex, k);
    r.ex = mutate_matrix(s.ex, k);
    return r;
}

ClusterSeedCoeff mutate_cluster_seed_along(ClusterSeedCoeff s, const Path& path) {
    for (int k : path) s = mutate_cluster_seed(s, k);
    return s;
}

ClusterSeedCoeff build_extended_seed(const ClusterSeedCoeff& s) {
    if (s.ex.m != 0) throw InputError("build_extended_seed expects a seed without frozen directions");
    int n = s.ex.n;
    int r = s.p.empty() ? 0 : s.p[0].rank();
    int N = n + r;
    int L = 1;
    for (int v : s.ex.d) L = std::lcm(L, v);
    IntMatrix B(N, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B(i, j) = s.ex.B(i, j);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            long long a = s.p[j].exps[i];
            B(n + i, j) = a;
            B(j, n + i) = -checked_mul(a, L / s.ex.d[j]);
        }
    std::vector<int> d = s.ex.d;
    for (int i = 0; i < r; ++i) d.push_back(L);
    ExchangeData ex = ExchangeData::make(B, d, r);
    // x1..xn keep their names; the generators p1..pr become the frozen variables
    ClusterSeedCoeff e;
    e.ex = ex;
    e.p = trivial_coefficients(N);
    e.gen_offset = N;
    Vars v = s.vars();
    for (int i = 0; i < N; ++i) e.x.push_back(PosRatFunc::variable(v, i));
    return e;
}

std::vector<PosRatFunc> y_tilde(const ClusterSeedCoeff& s) {
    std::vector<PosRatFunc> out;
    int N = s.ex.size();
    for (int j = 0; j < N; ++j) {
        PosRatFunc f = PosRatFunc::one(s.vars());
        for (int i = 0; i < N; ++i)
            if (s.ex.B(i, j) != 0) f *= s.x[i].pow(int(s.ex.B(i, j)));
        out.push_back(f);
    }
    return out;
}

std::vector<PosRatFunc> y_hat(const ClusterSeedCoeff& s) {
    auto yt = y_tilde(s);
    for (size_t j = 0; j < yt.size(); ++j) yt[j] = trop_to_func(s.p[j], s.vars(), s.gen_offset) * yt[j];
    return yt;
}

PosRatFunc p_star_pullback(const ClusterSeedCoeff& s, int i) { return y_hat(s).at(i); }

NSeedCoords NSeedCoords::initial(int size) { return {IntMatrix::identity(size), IntMatrix::identity(size)}; }

NSeedCoords mutate_n_seed(const NSeedCoords& c, const ExchangeData& ex, int k) {
    if (k < 0 || k >= ex.n) throw InputError("mutation at frozen or invalid direction " + std::to_string(k + 1));
    int N = ex.size();
    NSeedCoords r = c;
    // eps_ij = b_ji
    for (int i = 0; i < N; ++i) {
        if (i == k) continue;
        long long e = std::max<long long>(ex.B(k, i), 0);
        for (int a = 0; a < N; ++a) r.E(i, a) = checked_add(c.E(i, a), checked_mul(e, c.E(k, a)));
    }
    for (int a = 0; a < N; ++a) r.E(k, a) = -c.E(k, a);
    for (int a = 0; a < N; ++a) {
        long long v = -c.Fm(k, a);
        for (int j = 0; j < N; ++j) {
            long long e = std::max<long long>(-ex.B(j, k), 0);
            if (e) v = checked_add(v, checked_mul(e, c.Fm(j, a)));
        }
        r.Fm(k, a) = v;
    }
    return r;
}

std::vector<int> n_seed_multipliers(const ExchangeData& ex) { return langlands_dual(ex).d; }

IntMatrix n_seed_epsilon(const NSeedCoords& c, const ExchangeData& ex0) {
    auto d = n_seed_multipliers(ex0);
    int N = ex0.size();
    // {e_a, e_b} = eps_ab / d_b, eps = B^T
    IntMatrix eps(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            BigRat s = 0;
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    long long w = checked_mul(checked_mul(c.E(i, a), c.E(j, b)), ex0.B(b, a));
                    if (w == 0) continue;
                    BigRat t(BigInt(std::to_string(w)), d[b]);
                    t.canonicalize();
                    s += t;
                }
            s *= d[j];
            s.canonicalize();
            if (s.get_den() != 1) throw AlgebraError("non-integral epsilon entry");
            eps(i, j) = s.get_num().get_si();
        }
    return eps;
}

bool n_seed_pairing_ok(const NSeedCoords& c, const ExchangeData& ex) {
    auto d = n_seed_multipliers(ex);
    int N = c.E.rows();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            BigRat s = 0;
            for (int a = 0; a < N; ++a) {
                BigRat t(BigInt(std::to_string(checked_mul(c.E(i, a), c.Fm(j, a)))), d[a]);
                t.canonicalize();
                s += t;
            }
            s *= d[i];
            s.canonicalize();
            if (s != (i == j ? 1 : 0)) return false;
        }
    return true;
}

std::optional<std::vector<int>> unlabeled_match(const YSeedCoeff& a, const YSeedCoeff& b) {
    int N = int(a.y.size());
    if (N != int(b.y.size())) return std::nullopt;
    std::vector<int> s(N, -1);
    std::vector<bool> used(N, false);
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < N; ++i) {
            if (used[i]) continue;
            if (a.p[j] == b.p[i] && rat_equal(a.y[j], b.y[i])) {
                s[j] = i;
                used[i] = true;
                break;
            }
        }
        if (s[j] < 0) return std::nullopt;
    }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (a.ex.B(i, j) != b.ex.B(s[i], s[j])) return std::nullopt;
    return s;
}

bool seeds_equal(const YSeedCoeff& a, const YSeedCoeff& b) {
    if (!(a.ex == b.ex) || a.p != b.p) return false;
    for (size_t i = 0; i < a.y.size(); ++i)
        if (!rat_equal(a.y[i], b.y[i])) return false;
    return true;
}

bool seeds_equal(const ClusterSeedCoeff& a, const ClusterSeedCoeff& b) {
    if (!(a.ex == b.ex) || a.p != b.p) return false;
    for (size_t i = 0; i < a.x.size(); ++i)
        if (!rat_equal(a.x[i], b.x[i])) return false;
    return true;
}

}  // namespace cf
