#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lrcex/bigint.hpp"

namespace lrcex {

/// One entry per vertex; dimension vectors are nonnegative, weights may not be.
using DimVector = std::vector<long long>;
using Weight = std::vector<long long>;

/// Finite quiver without oriented cycles. Arrows are (tail, head) pairs of
/// 0-based vertex indices.
class Quiver {
public:
    /// Throws std::invalid_argument on out-of-range endpoints or an
    /// oriented cycle.
    Quiver(std::size_t vertex_count, std::vector<std::pair<int, int>> arrows);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

private:
    std::size_t n_;
    std::vector<std::pair<int, int>> arrows_;
};

/// Euler form: sum_x a(x)b(x) - sum_{arrows} a(tail)b(head).
long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

enum class WeightSide { Left, Right };

/// Left: x -> <gamma, e_x>; Right: x -> <e_x, gamma>.
Weight weight_of(const Quiver& q, WeightSide side, const DimVector& gamma);

/// theta(l): two vertices, l arrows from vertex 2 (index 1) to vertex 1 (index 0).
Quiver kronecker_quiver(long long arrow_count);

/// dim SI(theta(l), (n,n)) at weight (-m, m): the sum over l-tuples of
/// partitions inside the m x n box, of total size n*m, of the squared
/// multi-LR coefficient against (n^m).
BigInt kronecker_si_dim(long long l, long long n, long long m, int threads = 1);

/// dim SI(theta(l), (b1,b2)) at weight (s1,s2). Zero unless s1*b1+s2*b2 = 0
/// and s1 <= 0 <= s2; otherwise the sum over l-tuples of partitions of the
/// product of multi-LR coefficients against ((-s1)^b1) and (s2^b2).
BigInt kronecker_si_dim_general(long long l, std::pair<long long, long long> beta,
                                std::pair<long long, long long> sigma, int threads = 1);

/// Real Schur pair: <eps1,eps1> = <eps2,eps2> = 1, <eps2,eps1> = -l <= 0.
struct ExceptionalPair {
    DimVector eps1, eps2;
    long long l;
};

/// Validates the Euler conditions above; throws std::invalid_argument.
ExceptionalPair make_exceptional_pair(const Quiver& q, DimVector eps1, DimVector eps2);

/// beta1 * eps1 + beta2 * eps2.
DimVector embed(const ExceptionalPair& pair, std::pair<long long, long long> beta);

struct QuiverWithPair {
    Quiver quiver;
    ExceptionalPair pair;
};

/// Star with arm lengths 4,3,4 (center counted in each arm): top and bottom
/// arms directed away from the center, middle arm feeding in. eps2 is the
/// indicator of the middle arm's outer vertex; <eps2,eps1> = -3.
QuiverWithPair t434_quiver_pair();

/// Two-step path into a center with four outgoing leaves. eps2 is the
/// indicator of the path's outer vertex; <eps2,eps1> = -3.
QuiverWithPair k4_star_quiver_pair();

}  // namespace lrcex
