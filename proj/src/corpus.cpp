#include "cluster_forge/corpus.hpp"

#include "cluster_forge/degeneration.hpp"
#include "cluster_forge/invariants.hpp"
#include "cluster_forge/parse.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace cf {

namespace {

std::string mat_str(const IntMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < m.cols(); ++j) s += (j ? "," : "") + std::to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

std::string vec_str(const std::vector<long long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string vec_str(const std::vector<int>& v) { return vec_str(std::vector<long long>(v.begin(), v.end())); }

// collects checks and the printed table side by side
class Log {
public:
    explicit Log(std::string name) { rep_.name = std::move(name); }

    bool check(const std::string& what, bool ok, const std::string& witness = "") {
        rep_.checks.push_back({rep_.name, what, ok, ok ? "" : witness});
        return ok;
    }
    // one printed line ending with the verdict
    void line(const std::string& text, bool ok, const std::string& witness = "") {
        check(text, ok, witness);
        size_t width = 0;  // code points, not bytes
        for (unsigned char c : text) width += (c & 0xC0) != 0x80;
        out_ << "  " << text << std::string(width < 62 ? 62 - width : 1, ' ') << (ok ? "ok" : "FAIL") << "\n";
    }
    void say(const std::string& text) { out_ << text << "\n"; }

    CorpusReport done() {
        out_ << (rep_.pass() ? "all checks passed" : "FAILED") << " (" << rep_.checks.size() << " checks)\n";
        rep_.text = out_.str();
        return rep_;
    }

private:
    CorpusReport rep_;
    std::ostringstream out_;
};

// ---- semifield evaluation of stored table entries ----
// pure-coefficient subterms stay in Trop; anything touching a y becomes a function
struct SfValue {
    bool trop = true;
    TropMonomial t;
    PosRatFunc f;
};

struct SfContext {
    std::map<std::string, TropMonomial> coeff;  // p1 -> P1, ...
    Vars vars;
    int gen_offset = 0;
    int rank = 0;

    PosRatFunc as_func(const SfValue& v) const { return v.trop ? trop_to_func(v.t, vars, gen_offset) : v.f; }

    SfValue eval(const Expr& e) const {
        using K = Expr::Kind;
        auto fn = [](PosRatFunc f) { return SfValue{false, {}, std::move(f)}; };
        auto tr = [](TropMonomial t) { return SfValue{true, std::move(t), {}}; };
        switch (e.kind) {
            case K::Num:
                if (e.num == 1) return tr(TropMonomial::one(rank));
                return fn(PosRatFunc::constant(vars, BigRat(e.num)));
            case K::Var: {
                auto it = coeff.find(e.name);
                if (it != coeff.end()) return tr(it->second);
                int i = vars->index(e.name);
                if (i < 0) throw AlgebraError("unknown variable '" + e.name + "'");
                return fn(PosRatFunc::variable(vars, size_t(i)));
            }
            case K::OPlus: {
                auto a = eval(e.args[0]), b = eval(e.args[1]);
                if (!a.trop || !b.trop) throw AlgebraError("semifield sum of non-coefficients");
                return tr(trop_add(a.t, b.t));
            }
            case K::Add: return fn(as_func(eval(e.args[0])) + as_func(eval(e.args[1])));
            case K::Mul:
            case K::Div: {
                auto a = eval(e.args[0]), b = eval(e.args[1]);
                bool mul = e.kind == K::Mul;
                if (a.trop && b.trop) return tr(mul ? a.t * b.t : a.t / b.t);
                return fn(mul ? as_func(a) * as_func(b) : as_func(a) / as_func(b));
            }
            case K::Pow: {
                auto a = eval(e.args[0]);
                if (a.trop) return tr(a.t.pow(e.exp));
                return fn(a.f.pow(e.exp));
            }
            case K::Sub: throw AlgebraError("subtraction in a semifield expression");
        }
        throw AlgebraError("bad expression");
    }
};

ExchangeData a2() { return ExchangeData::make(IntMatrix{{0, 1}, {-1, 0}}); }
ExchangeData a2_flipped() { return ExchangeData::make(IntMatrix{{0, -1}, {1, 0}}); }

const Path kPentagon{1, 0, 1, 0, 1};  // mu_2 mu_1 mu_2 mu_1 mu_2

}  // namespace

// ---------------------------------------------------------------- A2, general coefficients

CorpusReport run_a2_table() {
    struct Row {
        IntMatrix B;
        const char* p[2];
        const char* y[2];
    };
    const IntMatrix B0{{0, 1}, {-1, 0}}, B1{{0, -1}, {1, 0}};
    const std::vector<Row> rows = {
        {B0, {"p1", "p2"}, {"y1", "y2"}},
        {B1, {"p1*(p2⊕1)", "1/p2"}, {"y1*(p2*y2+1)/(p2⊕1)", "1/y2"}},
        {B0,
         {"1/(p1*(p2⊕1))", "(p1*p2⊕p1⊕1)/p2"},
         {"(p2⊕1)/(y1*(p2*y2+1))", "(p1*p2*y1*y2+p1*y1+1)/(y2*(p1*p2⊕p1⊕1))"}},
        {B1,
         {"(p1⊕1)/(p1*p2)", "p2/(p1*p2⊕p1⊕1)"},
         {"(p1*y1+1)/(y1*y2*(p1⊕1))", "y2*(p1*p2⊕p1⊕1)/(p1*p2*y1*y2+p1*y1+1)"}},
        {B0, {"p1*p2/(p1⊕1)", "1/p1"}, {"y1*y2*(p1⊕1)/(p1*y1+1)", "1/y1"}},
        {B1, {"p2", "p1"}, {"y2", "y1"}},
    };

    // generators, then random points of Trop(q1,q2,q3)
    std::vector<std::vector<TropMonomial>> points{principal_coefficients(2)};
    std::mt19937 rng(20190);
    std::uniform_int_distribution<int> ex(-2, 2);
    for (int k = 0; k < 6; ++k) {
        std::vector<TropMonomial> pt;
        for (int j = 0; j < 2; ++j) pt.emplace_back(std::vector<int>{ex(rng), ex(rng), ex(rng)});
        points.push_back(pt);
    }

    Log log("table a2");
    log.say("Y-pattern with coefficients, type A2, B0 = " + mat_str(B0) + ", path mu_2 mu_1 mu_2 mu_1 mu_2");
    log.say("entries evaluated in Trop at the generators and " + std::to_string(points.size() - 1) +
            " random points of Trop(q1,q2,q3) (rng seed 20190)");

    std::vector<YSeedCoeff> seeds;
    for (auto& pt : points) seeds.push_back(initial_y_seed(a2(), pt, "y", "q"));
    std::vector<YSeedCoeff> first = seeds;
    for (size_t r = 0; r < rows.size(); ++r) {
        log.say(r == 0 ? "v=0" : "v=" + std::to_string(r) + " (mu_" + std::to_string(kPentagon[r - 1] + 1) + ")");
        log.line("B = " + mat_str(rows[r].B), seeds[0].ex.B == rows[r].B, mat_str(seeds[0].ex.B));
        for (int col = 0; col < 4; ++col) {
            int j = col % 2;
            const char* text = col < 2 ? rows[r].p[j] : rows[r].y[j];
            Expr e = parse_expr(text);
            bool ok = true;
            std::string witness;
            for (size_t q = 0; q < points.size(); ++q) {
                SfContext ctx;
                ctx.vars = seeds[q].vars();
                ctx.gen_offset = seeds[q].gen_offset;
                ctx.rank = points[q][0].rank();
                ctx.coeff = {{"p1", points[q][0]}, {"p2", points[q][1]}};
                SfValue v = ctx.eval(e);
                bool hit = col < 2 ? (v.trop && v.t == seeds[q].p[j]) : rat_equal(ctx.as_func(v), seeds[q].y[j]);
                if (!hit && ok) {
                    ok = false;
                    witness = "point " + std::to_string(q) + ": engine " +
                              (col < 2 ? seeds[q].p[j].str("q") : seeds[q].y[j].str());
                }
            }
            std::string label = (col < 2 ? "p_" : "Y_") + std::to_string(j + 1) + " = " + text;
            log.line(label, ok, witness);
        }
        if (r + 1 < rows.size())
            for (auto& s : seeds) s = mutate_y_seed(s, kPentagon[r]);
    }
    bool swapped = true;
    for (size_t q = 0; q < points.size(); ++q) {
        auto m = unlabeled_match(seeds[q], first[q]);
        swapped = swapped && m && *m == std::vector<int>{1, 0};
    }
    log.line("v=5 is v=0 with the two labels exchanged", swapped);
    return log.done();
}

// ---------------------------------------------------------------- A2, principal coefficients

CorpusReport run_a2_principal_table() {
    struct Row {
        IntMatrix eps, C;
        const char* t[2];
        const char* X[2];
    };
    const IntMatrix E0{{0, -1}, {1, 0}}, E1{{0, 1}, {-1, 0}};
    const std::vector<Row> rows = {
        {E0, IntMatrix{{1, 0}, {0, 1}}, {"t1", "t2"}, {"X1", "X2"}},
        {E1, IntMatrix{{1, 0}, {0, -1}}, {"t1", "1/t2"}, {"X1*(t2*X2+1)", "1/X2"}},
        {E0, IntMatrix{{-1, 0}, {0, -1}}, {"1/t1", "1/t2"}, {"1/(X1*(t2*X2+1))", "(t1*t2*X1*X2+t1*X1+1)/X2"}},
        {E1, IntMatrix{{-1, 0}, {-1, 1}}, {"1/(t1*t2)", "t2"}, {"(t1*X1+1)/(X1*X2)", "X2/(t1*t2*X1*X2+t1*X1+1)"}},
        {E0, IntMatrix{{1, -1}, {1, 0}}, {"t1*t2", "1/t1"}, {"X1*X2/(t1*X1+1)", "1/X1"}},
        {E1, IntMatrix{{0, 1}, {1, 0}}, {"t2", "t1"}, {"X2", "X1"}},
    };

    Log log("table a2-principal");
    auto fam = make_family(a2(), {}, 64, Exec::Serial);
    YSeedCoeff s;
    s.ex = fam.ex;
    s.p = principal_coefficients(2);
    s.gen_offset = 2;
    for (int j = 0; j < 2; ++j) s.y.push_back(fam.X(j));
    const Vars& v = fam.vars;
    Grading grad = Grading::family(2);
    log.say("principal-coefficient family, type A2, eps_s = B_s^T, path mu_2 mu_1 mu_2 mu_1 mu_2");
    log.say("atlas: " + std::to_string(fam.atlas.cones.size()) + " cones");

    Path path;
    for (size_t r = 0; r < rows.size(); ++r) {
        log.say(r == 0 ? "s=0" : "s=" + std::to_string(r) + " (mu_" + std::to_string(kPentagon[r - 1] + 1) + ")");
        log.line("eps = " + mat_str(rows[r].eps), s.ex.B.transpose() == rows[r].eps, mat_str(s.ex.B.transpose()));
        IntMatrix C = c_matrix(fam.ex, path);
        log.line("C = " + mat_str(rows[r].C), C == rows[r].C, mat_str(C));

        // the atlas cone with the same c-vectors, matched label by label
        int cone = -1;
        std::vector<int> lab(2, -1);
        for (size_t c = 0; c < fam.atlas.cones.size() && cone < 0; ++c) {
            for (int i = 0; i < 2; ++i) {
                lab[i] = -1;
                for (int j = 0; j < 2; ++j)
                    if (fam.C(int(c)).column(j) == C.column(i)) lab[i] = j;
            }
            if (lab[0] >= 0 && lab[1] >= 0) cone = int(c);
        }
        log.line("cone of the atlas with these c-vectors", cone >= 0);

        for (int i = 0; i < 2; ++i) {
            auto t = trop_to_func(s.p[i], v, s.gen_offset);
            log.line(std::string("t_") + std::to_string(i + 1) + " = " + rows[r].t[i],
                     rat_equal(t, parse_posrat(rows[r].t[i], v)), t.str());
        }
        for (int i = 0; i < 2; ++i) {
            PosRatFunc want = parse_posrat(rows[r].X[i], v);
            bool ok = rat_equal(s.y[i], want);
            if (cone >= 0) ok = ok && rat_equal(pullback_to_initial(fam, cone, lab[i]), want);
            auto deg = degree_of(want, grad);
            auto col = C.column(i);
            ok = ok && std::vector<long long>(deg.begin(), deg.end()) == col;
            log.line(std::string("X_") + std::to_string(i + 1) + " = " + rows[r].X[i] + "  deg " + vec_str(col), ok,
                     s.y[i].str());
        }
        if (r + 1 < rows.size()) {
            s = mutate_y_seed(s, kPentagon[r]);
            path.push_back(kPentagon[r]);
        }
    }
    return log.done();
}

std::vector<CorpusReport> run_a2_tables() { return {run_a2_table(), run_a2_principal_table()}; }

// ---------------------------------------------------------------- Gr(2,5)

namespace {

// vertex order of the seed: mutable 13, 14, then frozen
const std::vector<std::string> kGrLabels{"13", "14", "12", "23", "34", "45", "15"};

int gr_index(const std::string& l) {
    auto it = std::find(kGrLabels.begin(), kGrLabels.end(), l);
    return int(it - kGrLabels.begin());
}

// the quiver is read as eps (eps_ij = #(i->j) - #(j->i)), B = eps^T
ExchangeData gr25_exchange() {
    const std::vector<std::pair<std::string, std::string>> arrows{{"13", "12"}, {"14", "13"}, {"15", "14"}, {"23", "13"},
                                                                  {"34", "14"}, {"13", "34"}, {"14", "45"}};
    IntMatrix eps(7, 7);
    for (auto& [a, b] : arrows) {
        eps(gr_index(a), gr_index(b)) += 1;
        eps(gr_index(b), gr_index(a)) -= 1;
    }
    return ExchangeData::make(eps.transpose(), {}, 5);
}

}  // namespace

CorpusReport run_gr25() {
    Log log("table gr25");
    ExchangeData ex = gr25_exchange();

    // A side: Plucker coordinates
    std::vector<std::string> pl;
    for (auto& l : kGrLabels) pl.push_back("p" + l);
    Vars A = make_vars(pl);
    ClusterSeedCoeff seed;
    seed.ex = ex;
    seed.p = trivial_coefficients(7);
    seed.gen_offset = 7;
    for (int i = 0; i < 7; ++i) seed.x.push_back(PosRatFunc::variable(A, size_t(i)));
    auto P = [&](const char* s) { return parse_posrat(s, A); };

    log.say("Gr(2,5): A2 seed with frozen p12 p23 p34 p45 p15, quiver read as eps, B = eps^T");
    log.say("B = " + mat_str(ex.B));

    // Plucker coordinates outside the seed, by mutation
    auto s13 = mutate_cluster_seed(seed, 0);
    auto s14 = mutate_cluster_seed(seed, 1);
    auto s1314 = mutate_cluster_seed(s13, 1);
    std::map<std::string, PosRatFunc> plucker;
    for (int i = 0; i < 7; ++i) plucker.emplace(kGrLabels[i], seed.x[i]);
    plucker.emplace("24", s13.x[0]);
    plucker.emplace("35", s14.x[1]);
    plucker.emplace("25", s1314.x[1]);
    log.line("mu_13: p13*p24 = p12*p34 + p14*p23", rat_equal(plucker.at("24"), P("(p12*p34+p14*p23)/p13")));
    log.line("mu_14: p14*p35 = p13*p45 + p15*p34", rat_equal(plucker.at("35"), P("(p13*p45+p15*p34)/p14")));
    log.line("mu_14 mu_13: p14*p25 = p12*p45 + p15*p24",
             rat_equal(plucker.at("25") * plucker.at("14"), P("p12*p45") + P("p15") * plucker.at("24")));

    // flow polynomials
    Vars M = make_vars({"x1", "x2", "x3", "x11", "x22", "x33", "x0"});
    auto F = [&](const std::string& s) { return parse_posrat(s, M); };
    const std::vector<std::pair<std::string, std::string>> flows{
        {"12", "1"},
        {"13", "x33"},
        {"14", "x22*x33"},
        {"15", "x11*x22*x33"},
        {"23", "x3*x33"},
        {"24", "x3*x22*x33*(1+x2)"},
        {"25", "x3*x11*x22*x33*(1+x2+x1*x2)"},
        {"34", "x2*x3*x22*x33^2"},
        {"35", "x2*x3*x11*x22*x33^2*(1+x1)"},
        {"45", "x1*x2*x3*x11*x22^2*x33^2"},
    };
    std::vector<PosRatFunc> flow_of_seed(7);
    for (auto& [l, s] : flows)
        if (gr_index(l) < 7) flow_of_seed[gr_index(l)] = F(s);
    auto flow = [&](const PosRatFunc& f) { return f.substitute(flow_of_seed); };
    log.say("flow polynomials = engine Plucker coordinates under the monomial flows of the seed");
    for (auto& [l, s] : flows) log.line("flow(p" + l + ") = " + s, rat_equal(flow(plucker.at(l)), F(s)));

    // p-map: eps part from the engine, frozen lift fixed so that p*(theta_{i+1,i+2}) = W_i
    const std::map<std::string, std::string> lift{
        {"12", "p12"}, {"23", "p23/(p12*p34)"}, {"34", "p34/p45"}, {"45", "p45"}, {"15", "p15/(p12*p45)"}};
    std::vector<PosRatFunc> pstar(7);
    for (int i = 0; i < 7; ++i) {
        pstar[i] = p_star_pullback(seed, i);
        if (i >= 2) pstar[i] = pstar[i] * P(lift.at(kGrLabels[i]).c_str());
    }
    log.say("p-map (frozen rows lifted by a monomial in frozen Pluckers)");
    log.line("p*(X13) = p12*p34/(p14*p23)", rat_equal(pstar[0], P("p12*p34/(p14*p23)")), pstar[0].str());
    log.line("p*(X14) = p13*p45/(p15*p34)", rat_equal(pstar[1], P("p13*p45/(p15*p34)")), pstar[1].str());
    log.line("flow(p*(X13)) = x2", rat_equal(flow(pstar[0]), F("x2")));
    log.line("flow(p*(X14)) = x1", rat_equal(flow(pstar[1]), F("x1")));
    {
        PosRatFunc prod = PosRatFunc::one(A);
        bool deg0 = true;
        for (auto& f : pstar) {
            prod = prod * f;
            int tot = 0;
            for (int e : f.unit()) tot += e;
            deg0 = deg0 && f.is_monomial() && tot == 0;
        }
        log.line("p*(X_ij) are degree-0 monomials with product 1", deg0 && rat_equal(prod, PosRatFunc::one(A)));
    }

    // theta functions of the frozen directions and the superpotential summands
    std::vector<std::string> xn;
    for (auto& l : kGrLabels) xn.push_back("X" + l);
    Vars X = make_vars(xn);
    struct Theta {
        std::string label, theta, W, flowW;
    };
    const std::vector<Theta> thetas{
        {"12", "X12^-1", "p13/p12", "x33"},
        {"23", "X23^-1 + X23^-1*X13^-1", "p24/p23", "x22*(1+x2)"},
        {"34", "X34^-1 + X34^-1*X14^-1", "p35/p34", "x11*(1+x1)"},
        {"45", "X45^-1", "p14/p45", "(x1*x2*x3*x11*x22*x33)^-1"},
        {"15", "X15^-1 + X15^-1*X14^-1 + X15^-1*X14^-1*X13^-1", "p25/p15", "x3*(1+x2+x1*x2)"},
    };
    auto ratio = [&](const std::string& w) {
        auto slash = w.find('/');
        return plucker.at(w.substr(1, 2)) / plucker.at(w.substr(slash + 2, 2));
    };
    log.say("theta functions of frozen directions pulled back by p");
    for (auto& th : thetas) {
        PosRatFunc pulled = parse_posrat(th.theta, X).substitute(pstar);
        log.line("p*(theta" + th.label + ") = " + th.W, rat_equal(pulled, ratio(th.W)), pulled.str());
        log.line("flow(" + th.W + ") = " + th.flowW, rat_equal(flow(pulled), F(th.flowW)));
    }

    // identifications x_mu <-> monomials in x_ij = flow(p*(X_ij))
    std::vector<std::string> xij;
    for (auto& l : kGrLabels) xij.push_back("x" + l);
    xij.push_back("t13");
    xij.push_back("t14");
    Vars XI = make_vars(xij);
    const std::vector<std::pair<std::string, std::string>> ident{
        {"x2", "x13"},           {"x1", "x14"},
        {"x33", "x12^-1"},       {"x22", "x23^-1*x13^-1"},
        {"x11", "x34^-1*x14^-1"}, {"x3", "x15^-1*x14^-1*x13^-1"},
        {"x0", "x45^-1"},
    };
    std::vector<PosRatFunc> xij_in_mu;  // x_ij = flow(p*(X_ij)), then t13, t14 -> 1
    for (auto& f : pstar) xij_in_mu.push_back(flow(f));
    xij_in_mu.push_back(PosRatFunc::one(M));
    xij_in_mu.push_back(PosRatFunc::one(M));
    log.say("identifications, with x0*x1*x2*x3*x11*x22*x33 = 1");
    const PosRatFunc x0_rel = F("(x1*x2*x3*x11*x22*x33)^-1");
    std::vector<PosRatFunc> mu_in_ij(7);  // images of x1,x2,x3,x11,x22,x33,x0
    std::vector<IntVec> cvec(7);
    for (auto& [mu, s] : ident) {
        PosRatFunc target = mu == "x0" ? x0_rel : F(mu);
        PosRatFunc got = parse_posrat(s, XI).substitute(xij_in_mu);
        log.line(mu + " = " + s, rat_equal(got, target), got.str());
        int k = M->index(mu);
        mu_in_ij[k] = parse_posrat(s, XI);
        auto u = mu_in_ij[k].unit();
        cvec[k] = IntVec(u.begin(), u.begin() + 7);
    }

    // extensions to the family: binomials come from the principal-coefficient A2 family on 13, 14
    auto fam = make_family(ex.unfrozen(), {}, 64, Exec::Serial);
    std::vector<PosRatFunc> to_xi{PosRatFunc::variable(XI, 0), PosRatFunc::variable(XI, 1),
                                  PosRatFunc::variable(XI, 7), PosRatFunc::variable(XI, 8)};
    std::vector<PosRatFunc> at_one{PosRatFunc::variable(XI, 0), PosRatFunc::variable(XI, 1), PosRatFunc::one(XI),
                                   PosRatFunc::one(XI)};
    std::vector<std::pair<PosRatFunc, PosRatFunc>> binomials;  // (t = 1, with t)
    for (size_t c = 0; c < fam.atlas.cones.size(); ++c)
        for (int i = 0; i < fam.n(); ++i) {
            PosRatFunc x = pullback_to_initial(fam, int(c), i);
            for (auto& [key, e] : x.factors()) {
                auto f = PosRatFunc::from_poly(key);
                binomials.emplace_back(f.substitute(at_one), f.substitute(to_xi));
            }
        }
    auto extend = [&](const PosRatFunc& f) {
        PosRatFunc out = f;
        for (auto& [key, e] : f.factors()) {
            auto k = PosRatFunc::from_poly(key);
            auto it = std::find_if(binomials.begin(), binomials.end(),
                                   [&](auto& b) { return rat_equal(b.first, k); });
            if (it == binomials.end()) throw AlgebraError("no family binomial for " + key.str());
            out = out * (it->second / k).pow(e);
        }
        return out;
    };
    Grading gij;
    for (int i = 0; i < 7; ++i) {
        std::vector<int> d(7, 0);
        d[i] = 1;
        gij.deg.push_back(d);
    }
    gij.deg.push_back({-1, 0, 0, 0, 0, 0, 0});
    gij.deg.push_back({0, -1, 0, 0, 0, 0, 0});
    Vars MT = make_vars({"x1", "x2", "x3", "x11", "x22", "x33", "x0", "t1", "t2"});
    Grading gmu;
    for (auto& c : cvec) gmu.deg.push_back(std::vector<int>(c.begin(), c.end()));
    gmu.deg.push_back(gij.deg[8]);  // t_(1) = t14
    gmu.deg.push_back(gij.deg[7]);  // t_(2) = t13
    std::vector<PosRatFunc> mu_to_ij = mu_in_ij;
    mu_to_ij.push_back(PosRatFunc::variable(XI, 8));
    mu_to_ij.push_back(PosRatFunc::variable(XI, 7));
    std::vector<PosRatFunc> mu_at_one;  // drop the t's
    for (int i = 0; i < 7; ++i) mu_at_one.push_back(PosRatFunc::variable(M, size_t(i)));
    mu_at_one.push_back(PosRatFunc::one(M));
    mu_at_one.push_back(PosRatFunc::one(M));
    PosRatFunc all_x = PosRatFunc::one(XI);
    for (int i = 0; i < 7; ++i) all_x = all_x * PosRatFunc::variable(XI, size_t(i));
    // f / g a power of prod x_ij
    auto equal_mod_one = [&](const PosRatFunc& f, const PosRatFunc& g) {
        PosRatFunc q = f / g;
        q.simplify();
        if (!q.is_monomial() || q.scale() != 1) return false;
        auto u = q.unit();
        for (int i = 0; i < 7; ++i)
            if (u[i] != u[0]) return false;
        return u[7] == 0 && u[8] == 0;
    };

    struct Ext {
        std::string label, ij, mu;
    };
    const std::vector<Ext> exts{
        {"24", "x34*x45*(1+t13*x13)/x13", "x3*x22*x33*(1+t2*x2)"},
        {"25", "x45*(1+t13*x13+t13*t14*x13*x14)/(x13*x14)", "x3*x11*x22*x33*(1+t2*x2+t1*t2*x1*x2)"},
        {"35", "x45*(1+t14*x14)/(x12*x14)", "x2*x3*x11*x22*x33^2*(1+t1*x1)"},
    };
    log.say("extensions to the family (equalities modulo prod x_ij = 1); degree = c-vector in (x13,x14,x12,x23,x34,x45,x15)");
    for (auto& e : exts) {
        PosRatFunc ij = parse_posrat(e.ij, XI), mu = parse_posrat(e.mu, MT);
        PosRatFunc flowp = flow(plucker.at(e.label));
        // engine route: flow in x_mu, rewritten in x_ij, binomials replaced by the family's
        PosRatFunc engine = extend(flowp.substitute(mu_in_ij));
        log.line("flow(p" + e.label + ")~ = " + e.ij, equal_mod_one(engine, ij), engine.str());
        log.line("  = " + e.mu, equal_mod_one(mu.substitute(mu_to_ij), ij));
        log.line("  at t = 1 both are flow(p" + e.label + ")",
                 rat_equal(ij.substitute(xij_in_mu), flowp) && rat_equal(mu.substitute(mu_at_one), flowp));
        bool homog = true;
        std::vector<int> dij, dmu;
        try {
            dij = degree_of(ij, gij);
            dmu = degree_of(mu, gmu);
        } catch (const AlgebraError&) {
            homog = false;
        }
        bool agree = homog;
        if (homog)
            for (int i = 0; i < 7; ++i) agree = agree && dij[i] - dmu[i] == dij[0] - dmu[0];
        log.line("  homogeneous, c-vector " + (homog ? vec_str(dij) : std::string("-")) + ", same mod (1,...,1)", agree);
    }
    return log.done();
}

// ---------------------------------------------------------------- dP5

CorpusReport run_dp5() {
    Log log("table dp5");
    ExchangeData ex = a2_flipped();
    log.say("del Pezzo of degree 5: flipped A2, B = " + mat_str(ex.B) + ", theta_i = principal-coefficient cluster variables");

    // theta labels along mu_1 mu_2 mu_1 mu_2 mu_1
    const Path path{0, 1, 0, 1, 0};
    Vars R = make_vars({"th0", "th1", "th2", "th3", "th4", "th5", "t1", "t2"});
    auto s = initial_cluster_seed(ex, principal_coefficients(2), "x", "t");
    std::vector<PosRatFunc> theta{PosRatFunc::one(s.vars()), s.x[0], s.x[1]};
    std::vector<int> label{1, 2};
    struct Rel {
        int a, b;
        PosRatFunc rhs;  // engine, homogenized
    };
    std::vector<Rel> engine_rels;
    std::vector<IntVec> gvec(6);
    {
        IntMatrix G = g_matrix_by_degree(ex, {});
        gvec[1] = G.column(0);
        gvec[2] = G.column(1);
    }
    Path done;
    for (int k : path) {
        // x_k' x_k = P+ prod x^[b_ik]+ + P- prod x^[-b_ik]+, written in theta labels
        auto pm = p_plus_minus(s.p[k]);
        std::vector<int> eplus(8, 0), eminus(8, 0);
        for (int j = 0; j < 2; ++j) {
            eplus[6 + j] = pm.plus.exps[j];
            eminus[6 + j] = pm.minus.exps[j];
        }
        for (int i = 0; i < 2; ++i) {
            long long b = s.ex.B(i, k);
            if (b > 0) eplus[label[i]] += int(b);
            if (b < 0) eminus[label[i]] -= int(b);
        }
        auto homog = [](std::vector<int> e) {
            int d = 0;
            for (int i = 1; i <= 5; ++i) d += e[i];
            e[0] = 2 - d;
            return e;
        };
        PosRatFunc rhs = PosRatFunc::monomial(R, homog(eplus)) + PosRatFunc::monomial(R, homog(eminus));
        int old = label[k];
        s = mutate_cluster_seed(s, k);
        done.push_back(k);
        int fresh = -1;
        for (int l = 1; l < int(theta.size()); ++l)
            if (rat_equal(theta[l], s.x[k])) fresh = l;
        if (fresh < 0) {
            fresh = int(theta.size());
            theta.push_back(s.x[k]);
            gvec[fresh] = g_matrix_by_degree(ex, done).column(k);
        }
        label[k] = fresh;
        engine_rels.push_back({old, fresh, rhs});
    }
    log.line("five mutations give five theta functions and close up", theta.size() == 6 && label == std::vector<int>{2, 1});

    const std::vector<IntVec> g_expected{{}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, -1}};
    for (int i = 1; i <= 5; ++i)
        log.line("g(theta" + std::to_string(i) + ") = " + vec_str(g_expected[i]), gvec[i] == g_expected[i],
                 vec_str(gvec[i]));

    struct Stored {
        int a, b;
        const char* lhs;
        const char* rhs;
        int mid;  // A_{mid-1} A_{mid+1} = A_mid + 1
    };
    const std::vector<Stored> stored{
        {1, 3, "th1*th3", "t1*th0*th2 + th0^2", 2},
        {2, 4, "th2*th4", "t2*th0*th3 + th0^2", 3},
        {3, 5, "th3*th5", "th0*th4 + t1*th0^2", 4},
        {4, 1, "th4*th1", "th0*th5 + t1*t2*th0^2", 5},
        {5, 2, "th5*th2", "th0*th1 + t2*th0^2", 1},
    };
    // degrees: theta_i -> g_i, th0 -> 0, t_j -> minus column j of B
    Grading g;
    g.deg.push_back({0, 0});
    for (int i = 1; i <= 5; ++i) g.deg.push_back(std::vector<int>(gvec[i].begin(), gvec[i].end()));
    for (int j = 0; j < 2; ++j) g.deg.push_back({int(-ex.B(0, j)), int(-ex.B(1, j))});
    std::vector<PosRatFunc> dehom(theta.begin(), theta.end());
    dehom.push_back(PosRatFunc::variable(s.vars(), 2));
    dehom.push_back(PosRatFunc::variable(s.vars(), 3));

    auto cf_seed = initial_cluster_seed(ex, trivial_coefficients(2), "x", "p");
    std::vector<PosRatFunc> A{PosRatFunc::one(cf_seed.vars()), cf_seed.x[0], cf_seed.x[1]};
    for (int k : path) {
        cf_seed = mutate_cluster_seed(cf_seed, k);
        A.push_back(cf_seed.x[k]);
    }
    A.resize(6);
    std::vector<PosRatFunc> at_t1;
    Vars R0 = make_vars({"th0", "th1", "th2", "th3", "th4", "th5"});
    for (int i = 0; i < 6; ++i) at_t1.push_back(i == 0 ? PosRatFunc::one(R0) : PosRatFunc::variable(R0, size_t(i)));
    at_t1.push_back(PosRatFunc::one(R0));
    at_t1.push_back(PosRatFunc::one(R0));

    log.say("relations between degree-1 generators (theta0 homogenizes)");
    for (size_t r = 0; r < stored.size(); ++r) {
        auto& st = stored[r];
        PosRatFunc lhs = parse_posrat(st.lhs, R), rhs = parse_posrat(st.rhs, R);
        std::string rel = std::string(st.lhs) + " = " + st.rhs;
        auto& er = engine_rels[r];
        bool same_pair = (er.a == st.a && er.b == st.b) || (er.a == st.b && er.b == st.a);
        log.line(rel, same_pair && rat_equal(er.rhs, rhs), er.rhs.str());
        log.line("  holds with theta0 = 1 on the engine's thetas",
                 rat_equal(lhs.substitute(dehom), rhs.substitute(dehom)));
        bool homog = true;
        try {
            homog = degree_of(lhs, g) == degree_of(rhs, g);
        } catch (const AlgebraError&) {
            homog = false;
        }
        log.line("  homogeneous in the g-grading", homog);
        int lo = (st.mid + 3) % 5 + 1, hi = st.mid % 5 + 1;
        std::string cf = "A" + std::to_string(lo) + "*A" + std::to_string(hi) + " = A" + std::to_string(st.mid) + " + 1";
        PosRatFunc want = PosRatFunc::variable(R0, size_t(st.mid)) + PosRatFunc::one(R0);
        bool ok = (std::min(st.a, st.b) == std::min(lo, hi) && std::max(st.a, st.b) == std::max(lo, hi)) &&
                  rat_equal(rhs.substitute(at_t1), want) && rat_equal(A[lo] * A[hi], A[st.mid] + PosRatFunc::one(cf_seed.vars()));
        log.line("  t = (1,1): " + cf, ok);
    }

    log.say("polytope P of the g-fan");
    auto atlas = enumerate_gfan(ex, {}, 64, Exec::Serial);
    auto P = polytope_P(atlas);
    std::vector<IntVec> vexp{{-1, 0}, {0, -1}, {0, 1}, {1, -1}, {1, 0}};
    auto verts = P.vertices;
    std::sort(verts.begin(), verts.end());
    log.line("convex with vertices (1,0),(0,1),(-1,0),(0,-1),(1,-1)", P.convex && verts == vexp);
    auto rays = atlas.rays();
    log.line("g-fan rays are the theta g-vectors", rays == vexp);
    log.line("interior lattice points = {0}", P.interior_points == std::vector<IntVec>{{0, 0}});
    log.line("reflexive, polar dual has 5 vertices", P.reflexive && P.polar_vertices.size() == 5);
    log.line("g-fan is the face fan of P", P.normal_fan_matches);
    return log.done();
}

// ---------------------------------------------------------------- named fixtures

std::vector<std::string> fixture_names() { return {"a1", "a2", "a2-flipped", "a3", "a3-frozen", "b2", "markov", "gr25"}; }

ExchangeData fixture(const std::string& name) {
    if (name == "a1") return ExchangeData::make(IntMatrix{{0}});
    if (name == "a2") return a2();
    if (name == "a2-flipped") return a2_flipped();
    if (name == "a3" || name == "a3-frozen") return ExchangeData::make(IntMatrix{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}});
    if (name == "b2") return ExchangeData::make(IntMatrix{{0, -1}, {2, 0}}, {2, 1});
    if (name == "markov") return ExchangeData::make(IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
    if (name == "gr25") return gr25_exchange();
    throw InputError("unknown fixture '" + name + "'");
}

std::vector<int> fixture_frozen(const std::string& name) {
    if (name == "a3-frozen") return {0};
    fixture(name);
    return {};
}

}  // namespace cf
