#pragma once

#include "cluster_forge/posrat.hpp"

#include <string>
#include <vector>

namespace cf {

// element of Trop(p1..pr): a Laurent monomial stored as its exponent vector
struct TropMonomial {
    std::vector<int> exps;

    TropMonomial() = default;
    explicit TropMonomial(std::vector<int> e) : exps(std::move(e)) {}
    static TropMonomial one(int r) { return TropMonomial(std::vector<int>(r, 0)); }
    static TropMonomial generator(int r, int i);

    int rank() const { return int(exps.size()); }
    bool is_one() const;

    TropMonomial operator*(const TropMonomial& o) const;
    TropMonomial operator/(const TropMonomial& o) const;
    TropMonomial inverse() const;
    TropMonomial pow(int k) const;
    bool operator==(const TropMonomial& o) const { return exps == o.exps; }
    bool operator!=(const TropMonomial& o) const { return exps != o.exps; }
    bool operator<(const TropMonomial& o) const { return exps < o.exps; }

    std::string str(const std::string& prefix = "p") const;
};

TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b);

struct PlusMinus {
    TropMonomial plus, minus;
};
PlusMinus p_plus_minus(const TropMonomial& p);

// p^[[x]]: p^- for x<0, 1 for x=0, p^+ for x>0
TropMonomial bracket(const TropMonomial& p, long long x);

// the monomial p as a PosRatFunc over vars, generator i placed at variable gen_offset+i
PosRatFunc trop_to_func(const TropMonomial& p, const Vars& vars, int gen_offset);

// semifield morphism sending variable i to assign[i]
TropMonomial tropicalize(const PosRatFunc& f, const std::vector<TropMonomial>& assign);
TropMonomial tropicalize_poly(const LaurentPoly& p, const std::vector<TropMonomial>& assign);

}  // namespace cf
