#include "cluster_forge/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace cf {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw AlgebraError("duplicate variable name " + names_[i]);
}

int VarSet::index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : int(it - names_.begin());
}

Vars make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

std::vector<std::string> numbered(const std::string& prefix, int count, int first) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool same_vars(const Vars& a, const Vars& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

int add_exp(int a, int b) {
    int r;
    if (__builtin_add_overflow(a, b, &r)) throw AlgebraError("exponent overflow");
    return r;
}

int mul_exp(int a, int b) {
    int r;
    if (__builtin_mul_overflow(a, b, &r)) throw AlgebraError("exponent overflow");
    return r;
}

Exp add_exps(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = add_exp(a[i], b[i]);
    return r;
}

Exp sub_exps(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (b[i] == INT_MIN) throw AlgebraError("exponent overflow");
        r[i] = add_exp(a[i], -b[i]);
    }
    return r;
}

Exp scale_exps(const Exp& a, int k) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul_exp(a[i], k);
    return r;
}

bool GrLexGreater::operator()(const Exp& a, const Exp& b) const {
    long long da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da > db;
    return a > b;
}

LaurentPoly::LaurentPoly(Vars vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(Vars vars, const BigInt& c) {
    LaurentPoly p(vars);
    p.add_term(Exp(vars->size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Vars vars, const Exp& e, const BigInt& c) {
    if (e.size() != vars->size()) throw AlgebraError("exponent length mismatch");
    LaurentPoly p(vars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(Vars vars, size_t i) {
    Exp e(vars->size(), 0);
    e.at(i) = 1;
    return monomial(vars, e);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int v : terms_.begin()->first)
        if (v != 0) return false;
    return true;
}

bool LaurentPoly::all_positive() const {
    for (auto& [e, c] : terms_)
        if (sgn(c) <= 0) return false;
    return true;
}

bool LaurentPoly::all_nonnegative_exps() const {
    for (auto& [e, c] : terms_)
        for (int v : e)
            if (v < 0) return false;
    return true;
}

Exp LaurentPoly::min_exps() const {
    if (terms_.empty()) throw AlgebraError("min_exps of zero polynomial");
    Exp m = terms_.begin()->first;
    for (auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Exp LaurentPoly::max_exps() const {
    if (terms_.empty()) throw AlgebraError("max_exps of zero polynomial");
    Exp m = terms_.begin()->first;
    for (auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void LaurentPoly::add_term(const Exp& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!same_vars(vars_, o.vars_)) throw AlgebraError("variable-set mismatch");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same(o);
    LaurentPoly r(vars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(add_exps(e1, e2), c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly r(vars_);
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& s) const {
    LaurentPoly r(vars_);
    for (auto& [e, v] : terms_) r.terms_.emplace(add_exps(e, s), v);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = constant(vars_, 1);
    LaurentPoly b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::divide_content(const BigInt& c) const {
    LaurentPoly r(vars_);
    for (auto& [e, v] : terms_) {
        if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) throw AlgebraError("inexact content division");
        BigInt q = v / c;
        r.terms_.emplace(e, q);
    }
    return r;
}

bool LaurentPoly::try_exact_div(const LaurentPoly& b, LaurentPoly& q) const {
    check_same(b);
    if (b.is_zero()) throw AlgebraError("division by zero polynomial");
    q = LaurentPoly(vars_);
    if (is_zero()) return true;
    Exp ma = min_exps(), mb = b.min_exps();
    for (size_t i = 0; i < ma.size(); ++i) {
        ma[i] = -ma[i];
        mb[i] = -mb[i];
    }
    LaurentPoly r = shifted(ma);
    LaurentPoly bs = b.shifted(mb);
    const Exp& lb = bs.leading_exp();
    const BigInt& lc = bs.leading_coef();
    while (!r.is_zero()) {
        const Exp& lr = r.leading_exp();
        Exp d(lr.size());
        for (size_t i = 0; i < lr.size(); ++i) {
            d[i] = lr[i] - lb[i];
            if (d[i] < 0) return false;
        }
        if (!mpz_divisible_p(r.leading_coef().get_mpz_t(), lc.get_mpz_t())) return false;
        BigInt c = r.leading_coef() / lc;
        q.add_term(d, c);
        r += bs.shifted(d).scaled(-c);
    }
    q = q.shifted(sub_exps(mb, ma));
    return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
    LaurentPoly q;
    if (!try_exact_div(b, q)) throw AlgebraError("inexact division: (" + str() + ") / (" + b.str() + ")");
    return q;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_same(o);
    return terms_ == o.terms_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    GrLexGreater g;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (a->first != b->first) return g(a->first, b->first);
        if (a->second != b->second) return a->second < b->second;
    }
    return false;
}

std::vector<bool> LaurentPoly::support() const {
    std::vector<bool> s(nvars(), false);
    for (auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) s[i] = true;
    return s;
}

LaurentPoly LaurentPoly::specialize(const std::vector<std::pair<size_t, BigRat>>& values, BigInt& den) const {
    std::map<Exp, BigRat, GrLexGreater> acc;
    for (auto& [e, c] : terms_) {
        BigRat v = c;
        Exp ne = e;
        bool vanish = false;
        for (auto& [idx, val] : values) {
            int k = e.at(idx);
            ne[idx] = 0;
            if (k == 0) continue;
            if (val == 0) {
                if (k < 0) throw AlgebraError("pole when specializing " + vars_->name(idx) + " = 0");
                vanish = true;
                break;
            }
            BigRat base = k > 0 ? val : BigRat(1) / val;
            BigRat pw = 1;
            for (int t = 0; t < std::abs(k); ++t) pw *= base;
            v *= pw;
        }
        if (vanish) continue;
        acc[ne] += v;
    }
    den = 1;
    for (auto& [e, v] : acc) {
        v.canonicalize();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    LaurentPoly r(vars_);
    for (auto& [e, v] : acc) {
        if (v == 0) continue;
        BigRat s = v * den;
        s.canonicalize();
        r.terms_.emplace(e, s.get_num());
    }
    return r;
}

LaurentPoly LaurentPoly::embed(const Vars& target) const {
    std::vector<int> map(nvars());
    for (size_t i = 0; i < nvars(); ++i) map[i] = target->index(vars_->name(i));
    LaurentPoly r(target);
    for (auto& [e, c] : terms_) {
        Exp ne(target->size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0) throw AlgebraError("variable " + vars_->name(i) + " missing from target set");
            ne[map[i]] = e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

std::string monomial_str(const VarSet& vars, const Exp& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.name(i);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::string mono = monomial_str(*vars_, e);
        BigInt a = abs(c);
        if (sgn(c) < 0)
            out += "-";
        else if (!first)
            out += "+";
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
        first = false;
    }
    return out;
}

}  // namespace cf
