#pragma once

#include "cluster_forge/gfan.hpp"

#include <cstdint>
#include <random>

namespace cf {

// Randomized verification batches. Inputs are drawn serially from the seed, then
// checked in parallel; the reported failure is the lowest failing item.

Path random_path(std::mt19937_64& rng, int n, int len);  // no immediate repeats
std::vector<TropMonomial> random_tropical(std::mt19937_64& rng, int count, int rank, int lo = -2, int hi = 2);

// separation_check on `count` paths of length 1..max_len, p0 random of rank 3
CheckResult separation_batch(const ExchangeData& ex, int count, int max_len, std::uint64_t seed,
                             Exec mode = Exec::Parallel);
// mu_k mu_k = id on cluster seeds, Y-seeds and matrices, from random vertices
CheckResult involution_batch(const ExchangeData& ex, int count, int max_len, std::uint64_t seed,
                             Exec mode = Exec::Parallel);
// every cluster variable at the end of a random path has a monomial denominator
CheckResult laurent_batch(const ExchangeData& ex, int count, int max_len, std::uint64_t seed,
                          Exec mode = Exec::Parallel);

// per atlas vertex: G (by principal-coefficient degrees) against c-vectors of the dual data
CheckResult duality_sweep(const GFanAtlas& atlas, Exec mode = Exec::Parallel);
CheckResult sign_coherence_sweep(const GFanAtlas& atlas, Exec mode = Exec::Parallel);

}  // namespace cf
