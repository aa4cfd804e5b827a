#pragma once

#include "cluster_forge/posrat.hpp"

namespace cf {

// Signed rational function num/den without normalization. Equality by cross-multiplication.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(LaurentPoly num);
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc constant(Vars vars, const BigRat& c);
    static RatFunc variable(Vars vars, size_t i);
    static RatFunc from_pos(const PosRatFunc& f);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const Vars& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc pow(int k) const;

    RatFunc substitute(const std::vector<RatFunc>& images) const;
    // replace the listed variables by rational constants
    RatFunc specialize(const std::vector<std::pair<size_t, BigRat>>& values) const;
    // x_i -> lambda_i x_i for the listed variables
    RatFunc rescale(const std::vector<std::pair<size_t, BigRat>>& lambdas) const;

    std::string str() const;

private:
    void reduce_monomials();
    LaurentPoly num_, den_;
};

bool rat_equal(const RatFunc& a, const RatFunc& b);

}  // namespace cf
