#pragma once

#include "cluster_forge/gfan.hpp"
#include "cluster_forge/ratfunc.hpp"

#include <optional>

namespace cf {

// The principal-coefficient family over R = Q[t1..tn]. Patches are the cones of the
// g-fan of the Langlands dual data, so each vertex's C holds the c-vectors of ex.
struct Family {
    ExchangeData ex;  // initial data, no frozen rows
    GFanAtlas atlas;
    Vars vars;        // X1..Xn, t1..tn

    int n() const { return ex.n; }
    IntMatrix B(int cone) const;  // exchange matrix at the cone, FZ convention (eps = B^T)
    const IntMatrix& C(int cone) const { return atlas.cones.at(cone).C; }
    PosRatFunc X(int i) const { return PosRatFunc::variable(vars, size_t(i)); }
    PosRatFunc t(int i) const { return PosRatFunc::variable(vars, size_t(n() + i)); }
    std::vector<size_t> t_vars() const;
    std::vector<PosRatFunc> identity() const;  // X's then t's
};

Family make_family(const ExchangeData& ex, const std::vector<int>& frozen = {}, int depth_cap = 64,
                   Exec mode = Exec::Parallel);

// pullback of the coordinates of the seed mu_k(G) in the coordinates of G, seed labels
std::vector<PosRatFunc> wall_pullback(const Family& fam, const IntMatrix& B, const IntMatrix& C, int k,
                                      bool with_coeffs = true);

struct TransitionMap {
    int source = -1;
    int target = -1;
    int k = -1;
    // pullback[i]: target coordinate i (target labels) in source coordinates and t
    std::vector<PosRatFunc> pullback;
};

// target must be the neighbor of source across direction k; throws InputError otherwise
TransitionMap transition(const Family& fam, int source, int target, int k);

// X_{i;G} in the initial coordinates, from principal-coefficient Y-seed mutation along the cone's path
PosRatFunc pullback_to_initial(const Family& fam, int cone, int i);
// same, by composing transitions cone by cone
std::vector<PosRatFunc> pullback_by_transitions(const Family& fam, int cone);

bool degree_check(const Family& fam, int cone, int i);
bool limit_check(const Family& fam, int cone, int i);
// every cone and index, run in parallel
CheckResult degree_sweep(const Family& fam, Exec mode = Exec::Parallel);
CheckResult limit_sweep(const Family& fam, Exec mode = Exec::Parallel);

// compose seed mutations along loop from the given cone; returns sigma with
// X_{i;end} = X_{sigma(i);start}, c_{i;end} = c_{sigma(i);start}, B_end(i,j) = B_start(sigma i, sigma j)
std::optional<std::vector<int>> cocycle_check(const Family& fam, const Path& loop, int start = 0);
// all reduced direction words of length <= max_len from every cone that return to their cone
CheckResult cocycle_sweep(const Family& fam, int max_len, long long* loops_checked = nullptr,
                          Exec mode = Exec::Parallel);

struct FiberMap {
    int source = -1;
    int target = -1;
    int k = -1;
    std::vector<RatFunc> pullback;  // over the family variables, t already replaced
};

FiberMap specialize_fiber(const Family& fam, const TransitionMap& map, const std::vector<BigRat>& u);
// psi*_G o mu_k*|u = mu_k*|u' o psi*_G' on every wall; nonzero u, u' only
CheckResult fiber_iso_check(const Family& fam, const std::vector<BigRat>& u, const std::vector<BigRat>& u2);
// u = 1 matches coefficient-free Y-seed mutation of the cone's seed, every wall
CheckResult fiber_one_check(const Family& fam);

// (i) removed loci reduce to {X_k = 0} at t = 0; (ii) limit maps are the monomial maps of the dual cones
CheckResult central_fiber_toric_check(const Family& fam);

// mu_k* carries generators of A_{G'} into A_G and back
CheckResult glue_ring_check(const Family& fam, int cone, int k, bool with_coeffs);

CheckResult strata_consistency_check(const Family& fam, const std::vector<IntVec>& tau);

}  // namespace cf
