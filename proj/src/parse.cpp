#include "cluster_forge/parse.hpp"

#include <cctype>

namespace cf {

namespace {

const std::string kOPlus = "\xE2\x8A\x95";  // ⊕

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Expr run() {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) error("unexpected character");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        throw AlgebraError("parse error at " + std::to_string(pos_) + " in '" + s_ + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    Expr binary(Expr::Kind k, Expr a, Expr b) {
        Expr e;
        e.kind = k;
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            if (eat("+"))
                e = binary(Expr::Kind::Add, std::move(e), product());
            else if (eat("-"))
                e = binary(Expr::Kind::Sub, std::move(e), product());
            else if (eat(kOPlus))
                e = binary(Expr::Kind::OPlus, std::move(e), product());
            else
                return e;
        }
    }

    Expr product() {
        Expr e = power();
        for (;;) {
            if (eat("*"))
                e = binary(Expr::Kind::Mul, std::move(e), power());
            else if (eat("/"))
                e = binary(Expr::Kind::Div, std::move(e), power());
            else
                return e;
        }
    }

    int signed_int() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected integer exponent");
        long long v = std::stoll(s_.substr(start, pos_ - start));
        if (v > 1000000) error("exponent too large");
        return int(neg ? -v : v);
    }

    Expr power() {
        Expr base = atom();
        if (!eat("^")) return base;
        Expr e;
        e.kind = Expr::Kind::Pow;
        if (eat("(")) {
            e.exp = signed_int();
            if (!eat(")")) error("expected ')'");
        } else {
            e.exp = signed_int();
        }
        e.args.push_back(std::move(base));
        return e;
    }

    Expr atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = sum();
            if (!eat(")")) error("expected ')'");
            return e;
        }
        Expr e;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            e.kind = Expr::Kind::Num;
            e.num = BigInt(s_.substr(start, pos_ - start));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            e.kind = Expr::Kind::Var;
            e.name = s_.substr(start, pos_ - start);
            return e;
        }
        error("unexpected character");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).run(); }

PosRatFunc to_posrat(const Expr& e, const Vars& vars) {
    switch (e.kind) {
        case Expr::Kind::Num:
            if (e.num == 0) throw AlgebraError("zero is not subtraction-free");
            return PosRatFunc::constant(vars, BigRat(e.num));
        case Expr::Kind::Var: {
            int i = vars->index(e.name);
            if (i < 0) throw AlgebraError("unknown variable '" + e.name + "'");
            return PosRatFunc::variable(vars, size_t(i));
        }
        case Expr::Kind::Add: return to_posrat(e.args[0], vars) + to_posrat(e.args[1], vars);
        case Expr::Kind::Mul: return to_posrat(e.args[0], vars) * to_posrat(e.args[1], vars);
        case Expr::Kind::Div: return to_posrat(e.args[0], vars) / to_posrat(e.args[1], vars);
        case Expr::Kind::Pow: return to_posrat(e.args[0], vars).pow(e.exp);
        case Expr::Kind::Sub: throw AlgebraError("subtraction in a subtraction-free expression");
        case Expr::Kind::OPlus: throw AlgebraError("semifield sum outside a semifield evaluation");
    }
    throw AlgebraError("bad expression");
}

PosRatFunc parse_posrat(const std::string& text, const Vars& vars) { return to_posrat(parse_expr(text), vars); }

}  // namespace cf
