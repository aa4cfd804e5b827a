#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cf {

using BigInt = mpz_class;
using BigRat = mpq_class;
using Exp = std::vector<int>;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered, named variable set. Values built over different sets never mix.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& name) const;  // -1 if absent

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using Vars = std::shared_ptr<const VarSet>;

Vars make_vars(std::vector<std::string> names);
// x1..xn style helper
std::vector<std::string> numbered(const std::string& prefix, int count, int first = 1);
std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b);

bool same_vars(const Vars& a, const Vars& b);

// checked exponent arithmetic
int add_exp(int a, int b);
int mul_exp(int a, int b);
Exp add_exps(const Exp& a, const Exp& b);
Exp sub_exps(const Exp& a, const Exp& b);
Exp scale_exps(const Exp& a, int k);

// graded lex: higher total degree first, ties broken lexicographically (larger first)
struct GrLexGreater {
    bool operator()(const Exp& a, const Exp& b) const;
};

class LaurentPoly {
public:
    using Terms = std::map<Exp, BigInt, GrLexGreater>;

    LaurentPoly() = default;
    explicit LaurentPoly(Vars vars);

    static LaurentPoly zero(Vars vars) { return LaurentPoly(std::move(vars)); }
    static LaurentPoly constant(Vars vars, const BigInt& c);
    static LaurentPoly monomial(Vars vars, const Exp& e, const BigInt& c = 1);
    static LaurentPoly variable(Vars vars, size_t i);

    const Vars& vars() const { return vars_; }
    size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    bool all_positive() const;
    bool all_nonnegative_exps() const;

    const Exp& leading_exp() const { return terms_.begin()->first; }
    const BigInt& leading_coef() const { return terms_.begin()->second; }

    // componentwise minimum / maximum exponents; poly must be nonzero
    Exp min_exps() const;
    Exp max_exps() const;
    BigInt content() const;  // gcd of coefficients (positive)

    void add_term(const Exp& e, const BigInt& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(const Exp& e) const;  // multiply by monomial x^e
    LaurentPoly pow(unsigned k) const;
    LaurentPoly divide_content(const BigInt& c) const;  // exact integer division of all coefficients

    // throws AlgebraError when the division leaves a remainder
    LaurentPoly exact_div(const LaurentPoly& b) const;
    // empty result instead of throwing
    bool try_exact_div(const LaurentPoly& b, LaurentPoly& q) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;  // arbitrary total order for map keys

    // variables that occur with a nonzero exponent in some term
    std::vector<bool> support() const;

    // substitute the listed variables by constants; other variables untouched.
    // returns value*den where den is the returned positive integer; exponents of
    // replaced variables must be nonnegative where the value is zero.
    LaurentPoly specialize(const std::vector<std::pair<size_t, BigRat>>& values, BigInt& den) const;

    // re-express over a larger/different variable set, mapping by name
    LaurentPoly embed(const Vars& target) const;

    std::string str() const;

private:
    void check_same(const LaurentPoly& o) const;
    Vars vars_;
    Terms terms_;
};

std::string monomial_str(const VarSet& vars, const Exp& e);

}  // namespace cf
