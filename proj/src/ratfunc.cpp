#include "cluster_forge/ratfunc.hpp"

namespace cf {

RatFunc::RatFunc(LaurentPoly num) : num_(num), den_(LaurentPoly::constant(num.vars(), 1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw AlgebraError("RatFunc with zero denominator");
    reduce_monomials();
}

RatFunc RatFunc::constant(Vars vars, const BigRat& c) {
    BigRat q = c;
    q.canonicalize();
    return RatFunc(LaurentPoly::constant(vars, q.get_num()), LaurentPoly::constant(vars, q.get_den()));
}

RatFunc RatFunc::variable(Vars vars, size_t i) { return RatFunc(LaurentPoly::variable(vars, i)); }

RatFunc RatFunc::from_pos(const PosRatFunc& f) {
    auto [n, d] = f.expand();
    return RatFunc(n, d);
}

// keep the denominator a polynomial whose monomial part is moved to the numerator
void RatFunc::reduce_monomials() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.vars(), 1);
        return;
    }
    if (den_.is_monomial()) {
        Exp e = den_.leading_exp();
        BigInt c = den_.leading_coef();
        num_ = num_.shifted(scale_exps(e, -1));
        den_ = LaurentPoly::constant(num_.vars(), c);
    }
    LaurentPoly q;
    if (!den_.is_constant() && num_.try_exact_div(den_, q)) {
        num_ = q;
        den_ = LaurentPoly::constant(num_.vars(), 1);
    }
    if (den_.is_constant() && sgn(den_.leading_coef()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw AlgebraError("RatFunc division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(int k) const {
    if (k >= 0) return RatFunc(num_.pow(unsigned(k)), den_.pow(unsigned(k)));
    if (is_zero()) throw AlgebraError("RatFunc negative power of zero");
    return RatFunc(den_.pow(unsigned(-k)), num_.pow(unsigned(-k)));
}

namespace {

RatFunc eval_poly(const LaurentPoly& p, const std::vector<RatFunc>& images, const Vars& tv) {
    RatFunc acc(LaurentPoly::zero(tv));
    for (auto& [e, c] : p.terms()) {
        RatFunc t(LaurentPoly::constant(tv, c));
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * images[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

}  // namespace

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
    if (images.size() != num_.nvars()) throw AlgebraError("substitute: image count mismatch");
    const Vars& tv = images.front().vars();
    return eval_poly(num_, images, tv) / eval_poly(den_, images, tv);
}

RatFunc RatFunc::specialize(const std::vector<std::pair<size_t, BigRat>>& values) const {
    BigInt a, b;
    LaurentPoly n = num_.specialize(values, a);
    LaurentPoly d = den_.specialize(values, b);
    if (d.is_zero()) throw AlgebraError("denominator vanishes under specialization");
    return RatFunc(n.scaled(b), d.scaled(a));
}

RatFunc RatFunc::rescale(const std::vector<std::pair<size_t, BigRat>>& lambdas) const {
    std::vector<RatFunc> images;
    const Vars& v = vars();
    for (size_t i = 0; i < num_.nvars(); ++i) images.push_back(variable(v, i));
    for (auto& [i, l] : lambdas) images[i] = constant(v, l) * variable(v, i);
    return substitute(images);
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.leading_coef() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool rat_equal(const RatFunc& a, const RatFunc& b) { return a.num() * b.den() == b.num() * a.den(); }

}  // namespace cf
