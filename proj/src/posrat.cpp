#include "cluster_forge/posrat.hpp"

#include <algorithm>

namespace cf {

PosRatFunc::PosRatFunc(Vars vars) : vars_(std::move(vars)), unit_(vars_->size(), 0) {}

PosRatFunc PosRatFunc::monomial(Vars vars, const Exp& e) {
    PosRatFunc f(std::move(vars));
    if (e.size() != f.unit_.size()) throw AlgebraError("exponent length mismatch");
    f.unit_ = e;
    return f;
}

PosRatFunc PosRatFunc::variable(Vars vars, size_t i) {
    Exp e(vars->size(), 0);
    e.at(i) = 1;
    return monomial(std::move(vars), e);
}

PosRatFunc PosRatFunc::constant(Vars vars, const BigRat& c) {
    if (sgn(c) <= 0) throw AlgebraError("PosRatFunc constant must be positive");
    PosRatFunc f(std::move(vars));
    f.scale_ = c;
    f.scale_.canonicalize();
    return f;
}

PosRatFunc PosRatFunc::from_poly(const LaurentPoly& p) {
    if (p.is_zero()) throw AlgebraError("PosRatFunc from zero polynomial");
    if (!p.all_positive()) throw AlgebraError("PosRatFunc from polynomial with nonpositive coefficient: " + p.str());
    PosRatFunc f(p.vars());
    Exp m = p.min_exps();
    f.unit_ = m;
    LaurentPoly key = p.shifted(scale_exps(m, -1));
    BigInt c = key.content();
    if (c != 1) key = key.divide_content(c);
    f.scale_ = c;
    if (!key.is_constant()) f.factors_.emplace(std::move(key), 1);
    return f;
}

void PosRatFunc::check_same(const PosRatFunc& o) const {
    if (!same_vars(vars_, o.vars_)) throw AlgebraError("variable-set mismatch");
}

void PosRatFunc::mul_factor(const LaurentPoly& key, int e) {
    if (e == 0) return;
    auto it = factors_.find(key);
    if (it == factors_.end()) {
        factors_.emplace(key, e);
        return;
    }
    it->second = add_exp(it->second, e);
    if (it->second == 0) factors_.erase(it);
}

void PosRatFunc::mul_raw(const PosRatFunc& o) {
    check_same(o);
    scale_ *= o.scale_;
    unit_ = add_exps(unit_, o.unit_);
    for (auto& [k, e] : o.factors_) mul_factor(k, e);
}

PosRatFunc& PosRatFunc::operator*=(const PosRatFunc& o) {
    mul_raw(o);
    bool pos = false, neg = false;
    for (auto& [k, e] : factors_) (e > 0 ? pos : neg) = true;
    if (pos && neg && !o.factors_.empty()) simplify();
    return *this;
}

PosRatFunc PosRatFunc::operator*(const PosRatFunc& o) const {
    PosRatFunc r = *this;
    r *= o;
    return r;
}

PosRatFunc PosRatFunc::inverse() const {
    PosRatFunc r(vars_);
    r.scale_ = 1 / scale_;
    r.unit_ = scale_exps(unit_, -1);
    for (auto& [k, e] : factors_) r.factors_.emplace(k, mul_exp(e, -1));
    return r;
}

PosRatFunc PosRatFunc::operator/(const PosRatFunc& o) const { return *this * o.inverse(); }

PosRatFunc PosRatFunc::pow(int k) const {
    PosRatFunc r(vars_);
    if (k == 0) return r;
    BigRat base = k > 0 ? scale_ : 1 / scale_;
    BigRat s = 1;
    for (int i = 0; i < std::abs(k); ++i) s *= base;
    r.scale_ = s;
    r.unit_ = scale_exps(unit_, k);
    for (auto& [key, e] : factors_) r.factors_.emplace(key, mul_exp(e, k));
    return r;
}

namespace {

LaurentPoly key_power(const LaurentPoly& key, int e) { return key.pow(unsigned(e)); }

}  // namespace

PosRatFunc PosRatFunc::operator+(const PosRatFunc& o) const {
    check_same(o);
    // common positive factors and the common denominator
    std::map<LaurentPoly, int> common, dexp;
    for (auto& [k, e] : factors_) {
        if (e < 0) dexp[k] = -e;
        auto it = o.factors_.find(k);
        if (e > 0 && it != o.factors_.end() && it->second > 0) common[k] = std::min(e, it->second);
    }
    for (auto& [k, e] : o.factors_)
        if (e < 0) dexp[k] = std::max(dexp[k], -e);
    Exp umin(unit_.size());
    for (size_t i = 0; i < umin.size(); ++i) umin[i] = std::min(unit_[i], o.unit_[i]);
    BigInt L;
    mpz_lcm(L.get_mpz_t(), scale_.get_den_mpz_t(), o.scale_.get_den_mpz_t());

    auto part = [&](const PosRatFunc& f) {
        BigRat s = f.scale_ * L;
        s.canonicalize();
        LaurentPoly p = LaurentPoly::monomial(vars_, sub_exps(f.unit_, umin), s.get_num());
        for (auto& [k, e] : f.factors_) {
            if (e > 0) {
                auto c = common.find(k);
                int use = e - (c == common.end() ? 0 : c->second);
                if (use > 0) p *= key_power(k, use);
            }
        }
        for (auto& [k, d] : dexp) {
            auto it = f.factors_.find(k);
            int have = (it != f.factors_.end() && it->second < 0) ? -it->second : 0;
            if (d - have > 0) p *= key_power(k, d - have);
        }
        return p;
    };
    LaurentPoly sum = part(*this) + part(o);
    PosRatFunc r = from_poly(sum);
    r.unit_ = add_exps(r.unit_, umin);
    r.scale_ /= L;
    r.scale_.canonicalize();
    for (auto& [k, e] : common) r.mul_factor(k, e);
    for (auto& [k, d] : dexp) r.mul_factor(k, -d);
    r.simplify();
    return r;
}

void PosRatFunc::simplify() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [n, a] : factors_) {
            if (a <= 0) continue;
            for (auto& [d, b] : factors_) {
                if (b >= 0) continue;
                LaurentPoly q;
                if (n.try_exact_div(d, q) && q.all_positive()) {
                    // n^a d^-b' = q^a d^(a-b')
                    LaurentPoly nk = n, dk = d;
                    int ea = a;
                    factors_.erase(nk);
                    mul_factor(dk, ea);
                    mul_raw(from_poly(q).pow(ea));
                    changed = true;
                    break;
                }
                if (d.try_exact_div(n, q) && q.all_positive()) {
                    LaurentPoly nk = n, dk = d;
                    int eb = -b;
                    factors_.erase(dk);
                    mul_factor(nk, -eb);
                    mul_raw(from_poly(q).pow(-eb));
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
}

std::pair<LaurentPoly, LaurentPoly> PosRatFunc::expand() const {
    Exp up(unit_.size()), un(unit_.size());
    for (size_t i = 0; i < unit_.size(); ++i) {
        up[i] = std::max(unit_[i], 0);
        un[i] = std::max(-unit_[i], 0);
    }
    BigRat s = scale_;
    s.canonicalize();
    LaurentPoly num = LaurentPoly::monomial(vars_, up, s.get_num());
    LaurentPoly den = LaurentPoly::monomial(vars_, un, s.get_den());
    for (auto& [k, e] : factors_) {
        if (e > 0)
            num *= key_power(k, e);
        else
            den *= key_power(k, -e);
    }
    return {num, den};
}

PosRatFunc PosRatFunc::substitute(const std::vector<PosRatFunc>& images) const {
    if (images.size() != unit_.size()) throw AlgebraError("substitute: image count mismatch");
    const Vars& tv = images.front().vars();
    for (auto& g : images) {
        if (!same_vars(g.vars(), tv)) throw AlgebraError("substitute: images over different variable sets");
    }
    PosRatFunc r(tv);
    r.scale_ = scale_;
    for (size_t i = 0; i < unit_.size(); ++i)
        if (unit_[i] != 0) r *= images[i].pow(unit_[i]);
    if (factors_.empty()) return r;

    std::vector<std::pair<LaurentPoly, LaurentPoly>> nd(images.size());
    std::vector<PosRatFunc> dpart(images.size());
    std::vector<bool> ready(images.size(), false);
    auto prepare = [&](size_t i) {
        if (ready[i]) return;
        nd[i] = images[i].expand();
        const PosRatFunc& g = images[i];
        PosRatFunc d(tv);
        for (size_t v = 0; v < g.unit_.size(); ++v) d.unit_[v] = std::max(-g.unit_[v], 0);
        d.scale_ = g.scale_.get_den();
        for (auto& [k, e] : g.factors_)
            if (e < 0) d.factors_.emplace(k, -e);
        dpart[i] = d;
        ready[i] = true;
    };

    for (auto& [key, e] : factors_) {
        Exp m = key.max_exps();
        std::vector<std::vector<LaurentPoly>> npow(m.size()), dpow(m.size());
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            prepare(i);
            npow[i].push_back(LaurentPoly::constant(tv, 1));
            dpow[i].push_back(LaurentPoly::constant(tv, 1));
            for (int j = 1; j <= m[i]; ++j) {
                npow[i].push_back(npow[i].back() * nd[i].first);
                dpow[i].push_back(dpow[i].back() * nd[i].second);
            }
        }
        LaurentPoly acc(tv);
        for (auto& [alpha, c] : key.terms()) {
            LaurentPoly t = LaurentPoly::constant(tv, c);
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                t *= npow[i][alpha[i]];
                t *= dpow[i][m[i] - alpha[i]];
            }
            acc += t;
        }
        PosRatFunc val = from_poly(acc);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) val = val / dpart[i].pow(m[i]);
        r *= val.pow(e);
    }
    r.simplify();
    return r;
}

std::vector<bool> PosRatFunc::support() const {
    std::vector<bool> s(unit_.size(), false);
    for (size_t i = 0; i < unit_.size(); ++i) s[i] = unit_[i] != 0;
    for (auto& [k, e] : factors_) {
        auto ks = k.support();
        for (size_t i = 0; i < s.size(); ++i) s[i] = s[i] || ks[i];
    }
    return s;
}

std::string PosRatFunc::str() const {
    std::vector<std::string> parts;
    BigRat s = scale_;
    s.canonicalize();
    if (s != 1) parts.push_back(s.get_str());
    std::string mono = monomial_str(*vars_, unit_);
    if (!mono.empty()) parts.push_back(mono);
    for (auto& [k, e] : factors_) {
        std::string p = "(" + k.str() + ")";
        if (e != 1) p += "^" + std::to_string(e);
        parts.push_back(p);
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

bool rat_equal(const PosRatFunc& f, const PosRatFunc& g) {
    if (!same_vars(f.vars(), g.vars())) throw AlgebraError("variable-set mismatch");
    PosRatFunc h = f / g;
    if (h.factors().empty()) {
        for (int v : h.unit())
            if (v != 0) return false;
        return h.scale() == 1;
    }
    auto [n, d] = h.expand();
    return n == d;
}

Grading Grading::family(int n) {
    Grading g;
    for (int i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        g.deg.push_back(v);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = -1;
        g.deg.push_back(v);
    }
    return g;
}

std::optional<std::vector<int>> poly_degree(const LaurentPoly& p, const Grading& g) {
    if (p.is_zero()) return std::nullopt;
    if (g.deg.size() != p.nvars()) throw AlgebraError("grading size mismatch");
    size_t r = g.deg.empty() ? 0 : g.deg[0].size();
    std::optional<std::vector<int>> out;
    for (auto& [e, c] : p.terms()) {
        std::vector<int> d(r, 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                for (size_t j = 0; j < r; ++j) d[j] = add_exp(d[j], mul_exp(e[i], g.deg[i][j]));
        if (!out)
            out = d;
        else if (*out != d)
            return std::nullopt;
    }
    return out;
}

std::vector<int> degree_of(const PosRatFunc& f, const Grading& g) {
    auto [n, d] = f.expand();
    auto dn = poly_degree(n, g);
    auto dd = poly_degree(d, g);
    if (!dn || !dd) throw AlgebraError("inhomogeneous: " + f.str());
    std::vector<int> r(dn->size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (*dn)[i] - (*dd)[i];
    return r;
}

MonomialLimit limit_t_zero(const PosRatFunc& f, const std::vector<size_t>& t_vars) {
    auto [num, den] = f.expand();
    Exp mn = num.min_exps(), md = den.min_exps();
    Exp shn(mn.size(), 0), shd(md.size(), 0);
    for (size_t t : t_vars) {
        if (mn[t] != md[t]) throw AlgebraError("nonzero net t-content, limit is 0 or infinite: " + f.str());
        shn[t] = -mn[t];
        shd[t] = -md[t];
    }
    std::vector<std::pair<size_t, BigRat>> zero;
    for (size_t t : t_vars) zero.emplace_back(t, BigRat(0));
    BigInt a, b;
    LaurentPoly n0 = num.shifted(shn).specialize(zero, a);
    LaurentPoly d0 = den.shifted(shd).specialize(zero, b);
    if (d0.is_zero()) throw AlgebraError("denominator vanishes at t=0: " + f.str());
    if (n0.is_zero()) throw AlgebraError("numerator vanishes at t=0: " + f.str());
    MonomialLimit out;
    if (n0.is_monomial() && d0.is_monomial()) {
        out.exps = sub_exps(n0.leading_exp(), d0.leading_exp());
        out.coef = BigRat(n0.leading_coef(), d0.leading_coef());
        out.coef.canonicalize();
        return out;
    }
    LaurentPoly q;
    if (n0.try_exact_div(d0, q) && q.is_monomial()) {
        out.exps = q.leading_exp();
        out.coef = q.leading_coef();
        return out;
    }
    throw AlgebraError("limit at t=0 is not a monomial: " + f.str());
}

}  // namespace cf
