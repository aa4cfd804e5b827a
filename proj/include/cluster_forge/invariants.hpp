#pragma once

#include "cluster_forge/report.hpp"
#include "cluster_forge/seeds.hpp"

#include <optional>

namespace cf {

// columns are c-vectors, computed by the sign-coherent recurrence; throws if coherence fails midway
IntMatrix c_matrix(const ExchangeData& ex, const Path& path);
// same data from the tropicalized coefficient-free Y-pattern
IntMatrix c_matrix_tropical(const ExchangeData& ex, const Path& path);
// one step of the recurrence, on an n x n c-matrix with matrix B at the current vertex
IntMatrix mutate_c_matrix(const IntMatrix& C, const IntMatrix& B, int k);

// G^T = (C^{-B^T})^{-1}
IntMatrix g_matrix(const ExchangeData& ex, const Path& path);
// degrees of principal-coefficient cluster variables (deg x_i = e_i, deg p_j = -column j of B)
IntMatrix g_matrix_by_degree(const ExchangeData& ex, const Path& path);

// principal-coefficient cluster variables at x = 1, over variables p1..pn
std::vector<LaurentPoly> f_polynomials(const ExchangeData& ex, const Path& path);

bool check_sign_coherence(const IntMatrix& C);

// both the ratio form and the F-polynomial form
CheckResult separation_check(const ExchangeData& ex, const std::vector<TropMonomial>& p0, const Path& path);

// permutation relating the seed at the end of path to the initial one as unlabeled seeds
std::optional<std::vector<int>> detect_period(const ExchangeData& ex, const Path& path,
                                              const std::optional<std::vector<TropMonomial>>& p0 = std::nullopt);

}  // namespace cf
