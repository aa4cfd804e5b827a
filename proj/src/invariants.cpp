#include "cluster_forge/invariants.hpp"

namespace cf {

namespace {

void check_path(const ExchangeData& ex, const Path& path) {
    for (int k : path)
        if (k < 0 || k >= ex.n) throw InputError("path touches frozen or invalid direction " + std::to_string(k + 1));
}

int column_sign(const IntMatrix& C, int k) {
    bool pos = false, neg = false;
    for (int i = 0; i < C.rows(); ++i) {
        pos = pos || C(i, k) > 0;
        neg = neg || C(i, k) < 0;
    }
    if (pos && neg) throw AlgebraError("c-vector " + std::to_string(k + 1) + " is not sign-coherent");
    if (!pos && !neg) throw AlgebraError("c-vector " + std::to_string(k + 1) + " is zero");
    return pos ? 1 : -1;
}

}  // namespace

IntMatrix mutate_c_matrix(const IntMatrix& C, const IntMatrix& B, int k) {
    int s = column_sign(C, k);
    IntMatrix r = C;
    for (int j = 0; j < C.cols(); ++j) {
        if (j == k) {
            for (int i = 0; i < C.rows(); ++i) r(i, j) = -C(i, k);
            continue;
        }
        long long a = std::max<long long>(s * B(k, j), 0);
        if (a == 0) continue;
        for (int i = 0; i < C.rows(); ++i) r(i, j) = checked_add(C(i, j), checked_mul(a, C(i, k)));
    }
    return r;
}

IntMatrix c_matrix(const ExchangeData& ex, const Path& path) {
    check_path(ex, path);
    ExchangeData cur = ex.unfrozen();
    IntMatrix C = IntMatrix::identity(ex.n);
    for (int k : path) {
        C = mutate_c_matrix(C, cur.B, k);
        cur = mutate_matrix(cur, k);
    }
    return C;
}

IntMatrix c_matrix_tropical(const ExchangeData& ex, const Path& path) {
    check_path(ex, path);
    int n = ex.n;
    auto s = mutate_y_seed_along(initial_y_seed(ex.unfrozen(), trivial_coefficients(n)), path);
    std::vector<TropMonomial> gens;
    for (int i = 0; i < n; ++i) gens.push_back(TropMonomial::generator(n, i));
    IntMatrix C(n, n);
    for (int j = 0; j < n; ++j) {
        auto t = tropicalize(s.y[j], gens);
        for (int i = 0; i < n; ++i) C(i, j) = t.exps[i];
    }
    return C;
}

IntMatrix g_matrix(const ExchangeData& ex, const Path& path) {
    IntMatrix Cd = c_matrix(langlands_dual(ex.unfrozen()), path);
    return Cd.unimodular_inverse().transpose();
}

IntMatrix g_matrix_by_degree(const ExchangeData& ex, const Path& path) {
    check_path(ex, path);
    int n = ex.n;
    ExchangeData u = ex.unfrozen();
    auto s = mutate_cluster_seed_along(initial_cluster_seed(u, principal_coefficients(n)), path);
    Grading g;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        g.deg.push_back(e);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = int(-u.B(i, j));
        g.deg.push_back(e);
    }
    IntMatrix G(n, n);
    for (int j = 0; j < n; ++j) {
        auto d = degree_of(s.x[j], g);
        for (int i = 0; i < n; ++i) G(i, j) = d[i];
    }
    return G;
}

std::vector<LaurentPoly> f_polynomials(const ExchangeData& ex, const Path& path) {
    check_path(ex, path);
    int n = ex.n;
    auto s = mutate_cluster_seed_along(initial_cluster_seed(ex.unfrozen(), principal_coefficients(n)), path);
    Vars pv = make_vars(numbered("p", n));
    std::vector<PosRatFunc> images;
    for (int i = 0; i < n; ++i) images.push_back(PosRatFunc::one(pv));
    for (int j = 0; j < n; ++j) images.push_back(PosRatFunc::variable(pv, j));
    std::vector<LaurentPoly> out;
    for (auto& x : s.x) {
        auto [num, den] = x.substitute(images).expand();
        out.push_back(num.exact_div(den));
    }
    return out;
}

bool check_sign_coherence(const IntMatrix& C) {
    for (int k = 0; k < C.cols(); ++k) {
        try {
            column_sign(C, k);
        } catch (const AlgebraError&) {
            return false;
        }
    }
    return true;
}

CheckResult separation_check(const ExchangeData& ex, const std::vector<TropMonomial>& p0, const Path& path) {
    CheckResult res{"separation", path_str(path), true, ""};
    check_path(ex, path);
    int n = ex.n;
    ExchangeData u = ex.unfrozen();
    auto with = mutate_y_seed_along(initial_y_seed(u, p0), path);
    auto free = mutate_y_seed_along(initial_y_seed(u, trivial_coefficients(n)), path);
    const Vars& v = with.vars();

    std::vector<PosRatFunc> py;  // p_i y_i
    for (int i = 0; i < n; ++i) py.push_back(trop_to_func(p0[i], v, with.gen_offset) * PosRatFunc::variable(v, i));

    IntMatrix C = c_matrix(u, path);
    auto F = f_polynomials(u, path);
    const IntMatrix& Bv = with.ex.B;

    for (int j = 0; j < n; ++j) {
        PosRatFunc lhs = with.y[j];
        PosRatFunc ratio = free.y[j].substitute(py) / trop_to_func(with.p[j], v, with.gen_offset);
        if (!rat_equal(lhs, ratio)) {
            res.pass = false;
            res.witness = "j=" + std::to_string(j + 1) + ": " + lhs.str() + " vs " + ratio.str();
            return res;
        }
        PosRatFunc sep = PosRatFunc::one(v);
        TropMonomial trop = TropMonomial::one(p0.empty() ? 0 : p0[0].rank());
        for (int i = 0; i < n; ++i) {
            long long b = Bv(i, j);
            if (b == 0) continue;
            PosRatFunc Fi = PosRatFunc::from_poly(F[i]);
            trop = trop * tropicalize(Fi, p0).pow(int(-b));
            sep *= Fi.substitute(py).pow(int(b));
        }
        Exp ce(v->size(), 0);
        for (int i = 0; i < n; ++i) ce[i] = int(C(i, j));
        sep = trop_to_func(trop, v, with.gen_offset) * sep * PosRatFunc::monomial(v, ce);
        if (!rat_equal(lhs, sep)) {
            res.pass = false;
            res.witness = "j=" + std::to_string(j + 1) + " (F-form): " + lhs.str() + " vs " + sep.str();
            return res;
        }
    }
    return res;
}

std::optional<std::vector<int>> detect_period(const ExchangeData& ex, const Path& path,
                                              const std::optional<std::vector<TropMonomial>>& p0) {
    check_path(ex, path);
    auto coeffs = p0 ? *p0 : trivial_coefficients(ex.size());
    auto s0 = initial_y_seed(ex, coeffs);
    auto s = mutate_y_seed_along(s0, path);
    return unlabeled_match(s, s0);
}

}  // namespace cf
