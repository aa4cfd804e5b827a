#include <doctest.h>

#include "cluster_forge/batches.hpp"

using namespace cf;

namespace {
ExchangeData A2() { return ExchangeData::make(IntMatrix{{0, 1}, {-1, 0}}); }
ExchangeData A3() { return ExchangeData::make(IntMatrix{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}); }
ExchangeData B2() { return ExchangeData::make(IntMatrix{{0, -1}, {2, 0}}, {2, 1}); }
}  // namespace

TEST_CASE("random batches") {
    for (auto ex : {A2(), A3(), B2()}) {
        CHECK(separation_batch(ex, 6, 5, 1).pass);
        CHECK(involution_batch(ex, 10, 6, 2).pass);
        CHECK(laurent_batch(ex, 6, 6, 3).pass);
    }
    // reproducible draws, no immediate repeats
    std::mt19937_64 a(9), b(9);
    auto p = random_path(a, 3, 8);
    CHECK(p == random_path(b, 3, 8));
    for (size_t i = 1; i < p.size(); ++i) CHECK(p[i] != p[i - 1]);
    // serial and parallel report the same thing
    auto s = involution_batch(A3(), 12, 6, 5, Exec::Serial);
    auto q = involution_batch(A3(), 12, 6, 5, Exec::Parallel);
    CHECK(s.pass == q.pass);
    CHECK(s.where == q.where);
    CHECK_THROWS_AS(separation_batch(ExchangeData::make(IntMatrix(0, 0)), 1, 1, 0), InputError);
}

TEST_CASE("atlas sweeps") {
    for (auto ex : {A2(), A3(), B2()}) {
        auto a = enumerate_gfan(ex);
        CHECK(duality_sweep(a).pass);
        CHECK(sign_coherence_sweep(a).pass);
    }
    // negative control: a wrong g-matrix on one vertex
    auto a = enumerate_gfan(A3());
    a.cones[3].G(0, 0) += 1;
    auto r = duality_sweep(a);
    CHECK_FALSE(r.pass);
    CHECK(r.where.find("cone 3") == 0);
}
