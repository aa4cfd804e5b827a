#pragma once

#include "cluster_forge/matrix.hpp"
#include "cluster_forge/trop.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cf {

// bad user input: malformed data, frozen-direction mutation
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// directions are 0-based internally
using Path = std::vector<int>;
Path path_1based(const std::vector<int>& dirs);
std::string path_str(const Path& p);  // 1-based, comma separated

struct ExchangeData {
    int n = 0;  // unfrozen
    int m = 0;  // frozen
    IntMatrix B;
    std::vector<int> d;

    int size() const { return n + m; }
    long long b(int i, int j) const { return B(i, j); }
    void validate() const;
    IntMatrix principal_part() const;  // n x n upper-left block
    ExchangeData unfrozen() const;
    bool operator==(const ExchangeData& o) const { return n == o.n && m == o.m && B == o.B && d == o.d; }

    static ExchangeData make(const IntMatrix& B, std::vector<int> d = {}, int m = 0);
};

ExchangeData mutate_matrix(const ExchangeData& ex, int k);
ExchangeData mutate_along(ExchangeData ex, const Path& path);

ExchangeData langlands_dual(const ExchangeData& ex);
struct PatternData {
    std::vector<TropMonomial> p;
    ExchangeData ex;
};
PatternData dual_pattern_data(const std::vector<TropMonomial>& p0, const ExchangeData& ex);

// coefficient mutation in Trop: p'_k = p_k^-1, p'_j = p_j (1 (+) p_k^(-sgn b_kj))^(-b_kj)
std::vector<TropMonomial> mutate_coefficients(const std::vector<TropMonomial>& p, const ExchangeData& ex, int k);

std::vector<TropMonomial> principal_coefficients(int count);
std::vector<TropMonomial> trivial_coefficients(int count);

struct YSeedCoeff {
    std::vector<PosRatFunc> y;
    std::vector<TropMonomial> p;
    ExchangeData ex;
    int gen_offset = 0;  // variable index of the first tropical generator
    const Vars& vars() const { return y.front().vars(); }
};

// variables y1..y_{n+m}, then generators p1..p_r (r = rank of p0)
YSeedCoeff initial_y_seed(const ExchangeData& ex, const std::vector<TropMonomial>& p0,
                          const std::string& yname = "y", const std::string& pname = "p");
YSeedCoeff mutate_y_seed(const YSeedCoeff& s, int k);
YSeedCoeff mutate_y_seed_along(YSeedCoeff s, const Path& path);

struct ClusterSeedCoeff {
    std::vector<PosRatFunc> x;
    std::vector<TropMonomial> p;
    ExchangeData ex;
    int gen_offset = 0;
    const Vars& vars() const { return x.front().vars(); }
};

ClusterSeedCoeff initial_cluster_seed(const ExchangeData& ex, const std::vector<TropMonomial>& p0,
                                      const std::string& xname = "x", const std::string& pname = "p");
ClusterSeedCoeff mutate_cluster_seed(const ClusterSeedCoeff& s, int k);
ClusterSeedCoeff mutate_cluster_seed_along(ClusterSeedCoeff s, const Path& path);

// geometric coefficients of rank r become r frozen directions; the extended cluster is (x, p)
ClusterSeedCoeff build_extended_seed(const ClusterSeedCoeff& s);

std::vector<PosRatFunc> y_tilde(const ClusterSeedCoeff& s);
std::vector<PosRatFunc> y_hat(const ClusterSeedCoeff& s);
PosRatFunc p_star_pullback(const ClusterSeedCoeff& s, int i);

struct NSeedCoords {
    IntMatrix E;   // rows: e'_i in the initial basis
    IntMatrix Fm;  // rows: f'_i in the initial basis
    static NSeedCoords initial(int size);
};
NSeedCoords mutate_n_seed(const NSeedCoords& c, const ExchangeData& ex, int k);
// multipliers of the N-side form: d_i eps_ij = -d_j eps_ji with eps = B^T, i.e. the dual d
std::vector<int> n_seed_multipliers(const ExchangeData& ex);
// eps_ij = {e'_i, e'_j} d_j, evaluated through the initial form
IntMatrix n_seed_epsilon(const NSeedCoords& c, const ExchangeData& ex0);
// <d_i e'_i, f'_j> = delta_ij with <e_a, f_b> = delta_ab / d_b
bool n_seed_pairing_ok(const NSeedCoords& c, const ExchangeData& ex);

// permutation s with a.y[j] == b.y[s[j]], a.B(i,j) == b.B(s[i],s[j]), a.p[j] == b.p[s[j]]
std::optional<std::vector<int>> unlabeled_match(const YSeedCoeff& a, const YSeedCoeff& b);

bool seeds_equal(const YSeedCoeff& a, const YSeedCoeff& b);
bool seeds_equal(const ClusterSeedCoeff& a, const ClusterSeedCoeff& b);

}  // namespace cf
