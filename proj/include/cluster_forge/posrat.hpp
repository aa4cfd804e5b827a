#pragma once

#include "cluster_forge/laurent.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cf {

// Subtraction-free rational function kept as scale * x^unit * prod factor^exp.
// Factor keys are positive polynomials with monomial content 1 and integer content 1.
class PosRatFunc {
public:
    using Factors = std::map<LaurentPoly, int>;

    PosRatFunc() = default;
    explicit PosRatFunc(Vars vars);  // the constant 1

    static PosRatFunc one(Vars vars) { return PosRatFunc(std::move(vars)); }
    static PosRatFunc monomial(Vars vars, const Exp& e);
    static PosRatFunc variable(Vars vars, size_t i);
    static PosRatFunc constant(Vars vars, const BigRat& c);
    // p must be nonzero with positive coefficients
    static PosRatFunc from_poly(const LaurentPoly& p);

    const Vars& vars() const { return vars_; }
    const BigRat& scale() const { return scale_; }
    const Exp& unit() const { return unit_; }
    const Factors& factors() const { return factors_; }
    bool is_monomial() const { return factors_.empty(); }

    PosRatFunc operator*(const PosRatFunc& o) const;
    PosRatFunc operator/(const PosRatFunc& o) const;
    PosRatFunc operator+(const PosRatFunc& o) const;
    PosRatFunc& operator*=(const PosRatFunc& o);
    PosRatFunc inverse() const;
    PosRatFunc pow(int k) const;

    // (num, den): positive polynomials with nonnegative exponents; den carries the
    // negative part of the unit monomial and the negative-exponent factors
    std::pair<LaurentPoly, LaurentPoly> expand() const;

    // images[i] replaces variable i; images live over a common target variable set
    PosRatFunc substitute(const std::vector<PosRatFunc>& images) const;

    // variables actually occurring
    std::vector<bool> support() const;

    // cancels factor pairs that divide exactly
    void simplify();

    std::string str() const;

private:
    void check_same(const PosRatFunc& o) const;
    void mul_factor(const LaurentPoly& key, int e);
    void mul_raw(const PosRatFunc& o);
    Vars vars_;
    BigRat scale_ = 1;
    Exp unit_;
    Factors factors_;
};

bool rat_equal(const PosRatFunc& f, const PosRatFunc& g);

// Grading: one degree vector per variable
struct Grading {
    std::vector<std::vector<int>> deg;
    static Grading family(int n);  // X1..Xn,t1..tn with deg Xi=ei, deg ti=-ei
};

// homogeneous degree of a polynomial; nullopt if inhomogeneous
std::optional<std::vector<int>> poly_degree(const LaurentPoly& p, const Grading& g);
// throws AlgebraError on inhomogeneous input
std::vector<int> degree_of(const PosRatFunc& f, const Grading& g);

struct MonomialLimit {
    Exp exps;
    BigRat coef;
};

// limit as all listed variables go to 0 along the content-factored route
MonomialLimit limit_t_zero(const PosRatFunc& f, const std::vector<size_t>& t_vars);

}  // namespace cf
