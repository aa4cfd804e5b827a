#pragma once

#include "cluster_forge/parallel.hpp"
#include "cluster_forge/report.hpp"
#include "cluster_forge/seeds.hpp"

#include <map>
#include <optional>

namespace cf {

using IntVec = std::vector<long long>;

// simplicial cone; columns primitive and sorted
struct Cone {
    IntMatrix gens;
    static Cone from_generators(const IntMatrix& gens);
    bool operator==(const Cone& o) const { return gens == o.gens; }
    bool operator<(const Cone& o) const { return gens < o.gens; }
};

struct GFanVertex {
    Path path;         // representative path from the initial seed
    IntMatrix G;       // g-vectors, labeled along path
    IntMatrix C;       // dual c-vectors, G^T C = I
    ExchangeData ex;   // exchange data at the vertex
    Cone cone;
    std::vector<int> nbr;                // cone reached by mutating direction k, -1 if not taken
    std::vector<std::vector<int>> perm;  // label j of that mutation lands on label perm[k][j] of the neighbor
};

struct GFanAtlas {
    ExchangeData ex;
    std::vector<int> frozen;  // directions never mutated
    int depth_cap = 64;
    bool finite = true;
    std::vector<GFanVertex> cones;
    std::map<Cone, int> index;

    int n() const { return ex.n; }
    int find(const Cone& c) const;
    std::vector<IntVec> rays() const;  // sorted, distinct
    bool is_mutable(int k) const;
};

GFanAtlas enumerate_gfan(const ExchangeData& ex, const std::vector<int>& frozen = {}, int depth_cap = 64,
                         Exec mode = Exec::Parallel);

// extreme rays of {v : A v >= 0}, A given by rows, assuming the cone is pointed
std::vector<IntVec> extreme_rays(const std::vector<std::vector<BigRat>>& rows, int dim);

// pairwise intersections are common faces; rank <= 3 and finite atlases only
CheckResult check_fan(const GFanAtlas& atlas);
CheckResult check_fan_cones(const std::vector<IntMatrix>& cones);

struct StarData {
    std::vector<IntVec> tau;
    int ref_cone = -1;
    std::vector<int> I;       // labels of the reference cone whose c-vector is orthogonal to tau
    std::vector<int> tau_labels;
    std::vector<int> cones;   // atlas cones containing tau
    std::vector<Cone> projected;
    ExchangeData restricted;
};

// tau given by its rays (empty for the zero cone); throws InputError if no cone contains tau
StarData star(const GFanAtlas& atlas, const std::vector<IntVec>& tau);

// unimodular M with {M a_i} == {b_j} as sets of cones; full-dimensional unimodular cones only
std::optional<IntMatrix> fan_isomorphism(const std::vector<Cone>& a, const std::vector<Cone>& b);

struct PolytopeReport {
    bool convex = false;
    std::vector<IntVec> vertices;
    std::vector<IntVec> lattice_points;
    std::vector<IntVec> interior_points;
    bool reflexive = false;
    std::vector<IntVec> polar_vertices;
    bool normal_fan_matches = false;
};

PolytopeReport polytope_P(const GFanAtlas& atlas);

}  // namespace cf
