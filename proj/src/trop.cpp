#include "cluster_forge/trop.hpp"

#include <algorithm>

namespace cf {

TropMonomial TropMonomial::generator(int r, int i) {
    TropMonomial t = one(r);
    t.exps.at(i) = 1;
    return t;
}

bool TropMonomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int v) { return v == 0; });
}

static void check_rank(const TropMonomial& a, const TropMonomial& b) {
    if (a.rank() != b.rank()) throw AlgebraError("tropical rank mismatch");
}

TropMonomial TropMonomial::operator*(const TropMonomial& o) const {
    check_rank(*this, o);
    return TropMonomial(add_exps(exps, o.exps));
}

TropMonomial TropMonomial::operator/(const TropMonomial& o) const {
    check_rank(*this, o);
    return TropMonomial(sub_exps(exps, o.exps));
}

TropMonomial TropMonomial::inverse() const { return TropMonomial(scale_exps(exps, -1)); }

TropMonomial TropMonomial::pow(int k) const { return TropMonomial(scale_exps(exps, k)); }

std::string TropMonomial::str(const std::string& prefix) const {
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += prefix + std::to_string(i + 1);
        if (exps[i] != 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b) {
    check_rank(a, b);
    TropMonomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
    return r;
}

PlusMinus p_plus_minus(const TropMonomial& p) {
    PlusMinus pm{TropMonomial::one(p.rank()), TropMonomial::one(p.rank())};
    for (size_t i = 0; i < p.exps.size(); ++i) {
        pm.plus.exps[i] = std::max(p.exps[i], 0);
        pm.minus.exps[i] = std::max(-p.exps[i], 0);
    }
    return pm;
}

TropMonomial bracket(const TropMonomial& p, long long x) {
    if (x == 0) return TropMonomial::one(p.rank());
    PlusMinus pm = p_plus_minus(p);
    return x > 0 ? pm.plus : pm.minus;
}

PosRatFunc trop_to_func(const TropMonomial& p, const Vars& vars, int gen_offset) {
    Exp e(vars->size(), 0);
    for (int i = 0; i < p.rank(); ++i) e.at(gen_offset + i) = p.exps[i];
    return PosRatFunc::monomial(vars, e);
}

namespace {

TropMonomial eval_exp(const Exp& e, const std::vector<TropMonomial>& assign, int r) {
    TropMonomial t = TropMonomial::one(r);
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) t = t * assign[i].pow(e[i]);
    return t;
}

}  // namespace

TropMonomial tropicalize_poly(const LaurentPoly& p, const std::vector<TropMonomial>& assign) {
    if (p.is_zero()) throw AlgebraError("tropicalize of zero");
    if (!p.all_positive()) throw AlgebraError("tropicalize needs a subtraction-free polynomial");
    if (assign.size() != p.nvars()) throw AlgebraError("tropicalize: assignment size mismatch");
    int r = assign.empty() ? 0 : assign[0].rank();
    bool first = true;
    TropMonomial acc;
    for (auto& [e, c] : p.terms()) {
        TropMonomial t = eval_exp(e, assign, r);
        acc = first ? t : trop_add(acc, t);
        first = false;
    }
    return acc;
}

TropMonomial tropicalize(const PosRatFunc& f, const std::vector<TropMonomial>& assign) {
    if (assign.size() != f.unit().size()) throw AlgebraError("tropicalize: assignment size mismatch");
    int r = assign.empty() ? 0 : assign[0].rank();
    TropMonomial acc = eval_exp(f.unit(), assign, r);
    for (auto& [k, e] : f.factors()) acc = acc * tropicalize_poly(k, assign).pow(e);
    return acc;
}

}  // namespace cf
