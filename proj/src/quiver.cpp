#include "lrcex/quiver.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "lrcex/lr.hpp"

namespace lrcex {

Quiver::Quiver(std::size_t vertex_count, std::vector<std::pair<int, int>> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
    std::vector<int> indegree(n_, 0);
    for (auto [t, h] : arrows_) {
        if (t < 0 || h < 0 || static_cast<std::size_t>(t) >= n_ || static_cast<std::size_t>(h) >= n_)
            throw std::invalid_argument("quiver: arrow endpoint out of range");
        ++indegree[static_cast<std::size_t>(h)];
    }
    // Kahn's algorithm; anything left over lies on an oriented cycle
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < n_; ++x)
        if (indegree[x] == 0) queue.push_back(x);
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::size_t x = queue.back();
        queue.pop_back();
        ++seen;
        for (auto [t, h] : arrows_)
            if (static_cast<std::size_t>(t) == x && --indegree[static_cast<std::size_t>(h)] == 0)
                queue.push_back(static_cast<std::size_t>(h));
    }
    if (seen != n_) throw std::invalid_argument("quiver: oriented cycle");
}

namespace {

void check_size(const Quiver& q, const std::vector<long long>& v, const char* what) {
    if (v.size() != q.vertex_count())
        throw std::invalid_argument(std::string(what) + ": size does not match quiver");
}

}  // namespace

long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    check_size(q, a, "euler_form");
    check_size(q, b, "euler_form");
    long long s = 0;
    for (std::size_t x = 0; x < q.vertex_count(); ++x) s += a[x] * b[x];
    for (auto [t, h] : q.arrows())
        s -= a[static_cast<std::size_t>(t)] * b[static_cast<std::size_t>(h)];
    return s;
}

Weight weight_of(const Quiver& q, WeightSide side, const DimVector& gamma) {
    check_size(q, gamma, "weight_of");
    Weight w(gamma);
    for (auto [t, h] : q.arrows()) {
        if (side == WeightSide::Left)
            w[static_cast<std::size_t>(h)] -= gamma[static_cast<std::size_t>(t)];
        else
            w[static_cast<std::size_t>(t)] -= gamma[static_cast<std::size_t>(h)];
    }
    return w;
}

Quiver kronecker_quiver(long long arrow_count) {
    if (arrow_count < 1)
        throw std::invalid_argument("kronecker_quiver: need at least one arrow");
    std::vector<std::pair<int, int>> arrows(static_cast<std::size_t>(arrow_count), {1, 0});
    return Quiver(2, std::move(arrows));
}

namespace {

// Sum of term(tuple) over ordered l-tuples drawn from box_parts whose sizes
// add up to total_size. The first slot is split across threads; the term
// must be pure.
BigInt tuple_sum(const std::vector<Partition>& box_parts, long long slots, long long total_size,
                 const std::function<BigInt(const std::vector<Partition>&)>& term, int threads) {
    long long max_size = 0;
    for (const auto& p : box_parts) max_size = std::max(max_size, p.size());

    std::function<void(std::vector<Partition>&, long long, BigInt&)> rec =
        [&](std::vector<Partition>& tuple, long long remaining, BigInt& acc) {
            long long left = slots - static_cast<long long>(tuple.size());
            if (remaining < 0 || remaining > left * max_size) return;
            if (left == 0) {
                acc += term(tuple);
                return;
            }
            for (const auto& p : box_parts) {
                tuple.push_back(p);
                rec(tuple, remaining - p.size(), acc);
                tuple.pop_back();
            }
        };

    threads = std::max(threads, 1);
    if (threads == 1 || box_parts.size() < 2) {
        BigInt acc = 0;
        std::vector<Partition> tuple;
        rec(tuple, total_size, acc);
        return acc;
    }

    std::vector<BigInt> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < box_parts.size();
                 i += static_cast<std::size_t>(threads)) {
                std::vector<Partition> tuple{box_parts[i]};
                rec(tuple, total_size - box_parts[i].size(), partial[static_cast<std::size_t>(t)]);
            }
        });
    }
    for (auto& th : pool) th.join();
    BigInt acc = 0;
    for (const auto& p : partial) acc += p;
    return acc;
}

}  // namespace

BigInt kronecker_si_dim(long long l, long long n, long long m, int threads) {
    if (l < 1) throw std::invalid_argument("kronecker_si_dim: l must be >= 1");
    if (n < 0 || m < 0) throw std::invalid_argument("kronecker_si_dim: n, m must be >= 0");
    Partition target(std::vector<long long>(static_cast<std::size_t>(m), n));
    auto box = partitions_in_box(m, n);
    auto term = [&](const std::vector<Partition>& tuple) {
        BigInt c = multi_lr_coefficient(target, tuple);
        return c * c;
    };
    return tuple_sum(box, l, n * m, term, threads);
}

BigInt kronecker_si_dim_general(long long l, std::pair<long long, long long> beta,
                                std::pair<long long, long long> sigma, int threads) {
    if (l < 1) throw std::invalid_argument("kronecker_si_dim_general: l must be >= 1");
    auto [b1, b2] = beta;
    auto [s1, s2] = sigma;
    if (b1 < 0 || b2 < 0)
        throw std::invalid_argument("kronecker_si_dim_general: dimension vector must be >= 0");
    if (s1 * b1 + s2 * b2 != 0) return 0;
    if (s1 > 0 || s2 < 0) return 0;
    long long a = -s1, b = s2;
    Partition target1(std::vector<long long>(static_cast<std::size_t>(b1), a));
    Partition target2(std::vector<long long>(static_cast<std::size_t>(b2), b));
    auto box = partitions_in_box(std::min(b1, b2), std::min(a, b));
    auto term = [&](const std::vector<Partition>& tuple) {
        BigInt c1 = multi_lr_coefficient(target1, tuple);
        if (c1 == 0) return BigInt(0);
        return c1 * multi_lr_coefficient(target2, tuple);
    };
    return tuple_sum(box, l, a * b1, term, threads);
}

ExceptionalPair make_exceptional_pair(const Quiver& q, DimVector eps1, DimVector eps2) {
    check_size(q, eps1, "make_exceptional_pair");
    check_size(q, eps2, "make_exceptional_pair");
    if (euler_form(q, eps1, eps1) != 1 || euler_form(q, eps2, eps2) != 1)
        throw std::invalid_argument("exceptional pair: <eps,eps> must be 1");
    long long cross = euler_form(q, eps2, eps1);
    if (cross > 0)
        throw std::invalid_argument("exceptional pair: <eps2,eps1> must be <= 0");
    return ExceptionalPair{std::move(eps1), std::move(eps2), -cross};
}

DimVector embed(const ExceptionalPair& pair, std::pair<long long, long long> beta) {
    DimVector out(pair.eps1.size(), 0);
    for (std::size_t x = 0; x < out.size(); ++x)
        out[x] = beta.first * pair.eps1[x] + beta.second * pair.eps2[x];
    return out;
}

QuiverWithPair t434_quiver_pair() {
    // 0 center; 1,2,3 top arm outward; 4 inner / 5 outer on the middle arm
    // feeding in; 6,7,8 bottom arm outward
    Quiver q(9, {{0, 1}, {1, 2}, {2, 3}, {5, 4}, {4, 0}, {0, 6}, {6, 7}, {7, 8}});
    DimVector eps1{4, 3, 2, 1, 3, 0, 3, 2, 1};
    DimVector eps2{0, 0, 0, 0, 0, 1, 0, 0, 0};
    auto pair = make_exceptional_pair(q, std::move(eps1), std::move(eps2));
    return QuiverWithPair{std::move(q), std::move(pair)};
}

QuiverWithPair k4_star_quiver_pair() {
    // 0 -> 1 -> 2 (center), leaves 3,4,5,6 out of the center
    Quiver q(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}});
    DimVector eps1{0, 3, 4, 1, 1, 1, 1};
    DimVector eps2{1, 0, 0, 0, 0, 0, 0};
    auto pair = make_exceptional_pair(q, std::move(eps1), std::move(eps2));
    return QuiverWithPair{std::move(q), std::move(pair)};
}

}  // namespace lrcex
