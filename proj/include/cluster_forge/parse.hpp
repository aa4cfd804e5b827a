#pragma once

#include "cluster_forge/posrat.hpp"

#include <string>
#include <vector>

namespace cf {

// Expression syntax: integers, identifiers, + - * / ^ and parentheses. "⊕" is a
// separate additive operator kept in the tree for callers that evaluate it in a semifield.
// Exponents are signed integers: x^-1, x^(-2). Products need an explicit '*'.
struct Expr {
    enum class Kind { Num, Var, Add, Sub, OPlus, Mul, Div, Pow };
    Kind kind = Kind::Num;
    BigInt num;
    std::string name;
    int exp = 0;
    std::vector<Expr> args;
};

Expr parse_expr(const std::string& text);  // throws AlgebraError with the offending position

// evaluate in Q_sf(vars); unknown names, '-' and '⊕' are errors
PosRatFunc to_posrat(const Expr& e, const Vars& vars);
PosRatFunc parse_posrat(const std::string& text, const Vars& vars);

}  // namespace cf
