#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <stdexcept>

#include "lrcex/bigint.hpp"
#include "lrcex/lr.hpp"
#include "lrcex/quiver.hpp"
#include "oracles.hpp"

using namespace lrcex;

namespace {

// Independent route: no box pruning, every tuple of partitions with the right
// total size, squared brute-force multi-LR against the rectangular target.
BigInt si_dim_brute(long long l, long long n, long long m) {
    Partition target(std::vector<long long>(static_cast<std::size_t>(m), n));
    std::vector<Partition> pool;
    for (long long s = 0; s <= n * m; ++s)
        for (const auto& p : oracles::partitions_of(s)) pool.push_back(p);
    BigInt acc = 0;
    std::vector<Partition> tuple;
    std::function<void(long long)> rec = [&](long long remaining) {
        if (remaining < 0) return;
        if (static_cast<long long>(tuple.size()) == l) {
            if (remaining != 0) return;
            BigInt c = oracles::multi_lr_brute(target, tuple);
            acc += c * c;
            return;
        }
        for (const auto& p : pool) {
            tuple.push_back(p);
            rec(remaining - p.size());
            tuple.pop_back();
        }
    };
    rec(n * m);
    return acc;
}

DimVector unit(std::size_t n, std::size_t x) {
    DimVector e(n, 0);
    e[x] = 1;
    return e;
}

}  // namespace

TEST_CASE("construction validates the quiver") {
    CHECK_NOTHROW(Quiver(3, {{0, 1}, {1, 2}}));
    CHECK_NOTHROW(Quiver(1, {}));
    CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), std::invalid_argument);  // 2-cycle
    CHECK_THROWS_AS(Quiver(1, {{0, 0}}), std::invalid_argument);          // loop
    CHECK_THROWS_AS(Quiver(2, {{0, 2}}), std::invalid_argument);          // out of range
    CHECK_THROWS_AS(Quiver(2, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(kronecker_quiver(0), std::invalid_argument);
}

TEST_CASE("Euler form on the Kronecker quiver") {
    Quiver q = kronecker_quiver(3);
    CHECK(q.vertex_count() == 2);
    CHECK(euler_form(q, {1, 2}, {1, 2}) == -1);
    CHECK(euler_form(q, {0, 1}, {1, 0}) == -3);
    CHECK(euler_form(q, {1, 0}, {0, 1}) == 0);
    CHECK(euler_form(q, {1, 0}, {1, 0}) == 1);
    CHECK(euler_form(q, {0, 1}, {0, 1}) == 1);
    CHECK_THROWS_AS(euler_form(q, {1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(euler_form(q, {1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("Euler form is bilinear and the weights are its partial maps") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long long> entry(-5, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int it = 0; it < 40; ++it) {
        std::size_t nv = 2 + static_cast<std::size_t>(it % 4);
        std::vector<std::pair<int, int>> arrows;
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = i + 1; j < nv; ++j)
                if (coin(rng)) arrows.emplace_back(static_cast<int>(i), static_cast<int>(j));
        Quiver q(nv, arrows);
        DimVector a(nv), b(nv), c(nv), ab(nv);
        for (std::size_t x = 0; x < nv; ++x) {
            a[x] = entry(rng);
            b[x] = entry(rng);
            c[x] = entry(rng);
            ab[x] = a[x] + b[x];
        }
        CHECK(euler_form(q, ab, c) == euler_form(q, a, c) + euler_form(q, b, c));
        CHECK(euler_form(q, c, ab) == euler_form(q, c, a) + euler_form(q, c, b));
        Weight left = weight_of(q, WeightSide::Left, a);
        Weight right = weight_of(q, WeightSide::Right, a);
        for (std::size_t x = 0; x < nv; ++x) {
            CHECK(left[x] == euler_form(q, a, unit(nv, x)));
            CHECK(right[x] == euler_form(q, unit(nv, x), a));
        }
    }
}

TEST_CASE("weights on the Kronecker quiver") {
    Quiver q = kronecker_quiver(3);
    for (long long n = 1; n <= 4; ++n) {
        Weight w = weight_of(q, WeightSide::Left, {n, n});
        CHECK(w == Weight{-2 * n, n});
    }
    CHECK(weight_of(q, WeightSide::Right, {1, 2}) == Weight{1, -1});
    CHECK_THROWS_AS(weight_of(q, WeightSide::Left, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("semi-invariant dimensions for theta(3)") {
    CHECK_THROWS_AS(kronecker_si_dim(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(kronecker_si_dim(3, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(kronecker_si_dim(3, 1, -1), std::invalid_argument);

    CHECK(kronecker_si_dim(3, 1, 1) == 3);
    CHECK(kronecker_si_dim(3, 0, 2) == 1);
    CHECK(kronecker_si_dim(3, 2, 0) == 1);

    for (long long n = 0; n <= 8; ++n)
        CHECK(kronecker_si_dim(3, n, 1) == binomial(n + 2, 2));
    for (long long n = 0; n <= 4; ++n)
        CHECK(kronecker_si_dim(3, n, 2) == binomial(n + 5, 5));

    CHECK(kronecker_si_dim(3, 2, 2, 4) == kronecker_si_dim(3, 2, 2, 1));
    CHECK(kronecker_si_dim(3, 3, 2, 4) == binomial(8, 5));
}

TEST_CASE("semi-invariant dimensions match the unpruned brute force") {
    for (long long l = 1; l <= 3; ++l)
        for (long long n = 0; n <= 2; ++n)
            for (long long m = 0; m <= 2; ++m)
                CHECK(kronecker_si_dim(l, n, m) == si_dim_brute(l, n, m));
    CHECK(kronecker_si_dim(4, 2, 1) == si_dim_brute(4, 2, 1));
}

TEST_CASE("general weights") {
    CHECK(kronecker_si_dim_general(3, {1, 2}, {-2, 1}) == 3);
    CHECK(kronecker_si_dim_general(3, {1, 2}, {-2, 2}) == 0);  // sigma . beta != 0
    CHECK(kronecker_si_dim_general(3, {1, 2}, {2, -1}) == 0);  // wrong signs
    CHECK(kronecker_si_dim_general(3, {1, 2}, {0, 0}) == 1);   // invariants of weight 0
    CHECK_THROWS_AS(kronecker_si_dim_general(0, {1, 2}, {-2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(kronecker_si_dim_general(3, {-1, 2}, {-2, 1}), std::invalid_argument);
}

TEST_CASE("reciprocity between the (n,n) and (m,2m) sides") {
    Quiver q = kronecker_quiver(3);
    for (auto [n, m] : std::vector<std::pair<long long, long long>>{{1, 1}, {2, 1}, {1, 2}}) {
        Weight sigma = weight_of(q, WeightSide::Left, {n, n});
        BigInt lhs = kronecker_si_dim(3, n, m);
        BigInt rhs = kronecker_si_dim_general(3, {m, 2 * m}, {sigma[0], sigma[1]});
        CHECK(lhs == rhs);
    }
    CHECK(kronecker_si_dim(3, 1, 1) == 3);
    CHECK(kronecker_si_dim(3, 2, 1) == 6);
    CHECK(kronecker_si_dim(3, 1, 2) == 6);
}

TEST_CASE("exceptional pairs") {
    auto t434 = t434_quiver_pair();
    CHECK(t434.quiver.vertex_count() == 9);
    CHECK(t434.pair.l == 3);
    CHECK(t434.pair.eps1 == DimVector{4, 3, 2, 1, 3, 0, 3, 2, 1});
    CHECK(t434.pair.eps2 == DimVector{0, 0, 0, 0, 0, 1, 0, 0, 0});
    CHECK(euler_form(t434.quiver, t434.pair.eps1, t434.pair.eps1) == 1);
    CHECK(euler_form(t434.quiver, t434.pair.eps2, t434.pair.eps1) == -3);

    auto k4 = k4_star_quiver_pair();
    CHECK(k4.quiver.vertex_count() == 7);
    CHECK(k4.pair.l == 3);
    CHECK(k4.pair.eps1 == DimVector{0, 3, 4, 1, 1, 1, 1});
    CHECK(k4.pair.eps2 == DimVector{1, 0, 0, 0, 0, 0, 0});
    CHECK(euler_form(k4.quiver, k4.pair.eps1, k4.pair.eps1) == 1);
    CHECK(euler_form(k4.quiver, k4.pair.eps2, k4.pair.eps1) == -3);

    Quiver theta = kronecker_quiver(3);
    CHECK_THROWS_AS(make_exceptional_pair(theta, {1, 1}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_exceptional_pair(theta, {1, 0}, {1, 0}), std::invalid_argument);
    CHECK_NOTHROW(make_exceptional_pair(theta, {1, 0}, {0, 1}));
}

TEST_CASE("embedding dimension vectors along a pair") {
    auto t434 = t434_quiver_pair();
    CHECK(embed(t434.pair, {1, 1}) == DimVector{4, 3, 2, 1, 3, 1, 3, 2, 1});
    CHECK(embed(t434.pair, {1, 2}) == DimVector{4, 3, 2, 1, 3, 2, 3, 2, 1});
    CHECK(embed(t434.pair, {0, 0}) == DimVector(9, 0));
    auto k4 = k4_star_quiver_pair();
    CHECK(embed(k4.pair, {1, 1}) == DimVector{1, 3, 4, 1, 1, 1, 1});
    CHECK(embed(k4.pair, {2, 3}) == DimVector{3, 6, 8, 2, 2, 2, 2});
}
