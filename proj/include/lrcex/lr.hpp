#pragma once

#include <string>
#include <vector>

#include "lrcex/bigint.hpp"
#include "lrcex/partition.hpp"

namespace lrcex {

/// Filling of a skew shape, rows[r] listing row r left to right.
struct LRFilling {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    /// Right-to-left within each row, top row first.
    std::vector<int> reading_word() const;
    /// Rows concatenated left to right, top row first (enumeration sort key).
    std::vector<int> row_word() const;
    /// ASCII diagram, '.' for boxes of the inner shape.
    std::string render() const;

    bool operator==(const LRFilling& o) const {
        return shape == o.shape && rows == o.rows;
    }
};

/// Every prefix contains at least as many i as i+1, for all i >= 1.
bool is_lattice_word(const std::vector<int>& word);

/// Semistandard (rows weakly increase, columns strictly increase), content
/// equal to the given partition, lattice reverse reading word.
bool is_lr_filling(const LRFilling& f, const Partition& content);

/// All fillings certifying the coefficient, in lexicographic order of the
/// row-concatenated word. Empty when |shape| != |content|.
std::vector<LRFilling> enumerate_lr_fillings(const SkewShape& shape, const Partition& content);

/// c^lambda_{mu,nu}, counted without materializing fillings.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Multi-factor coefficient: multiplicity of gamma in the product of the
/// Schur functions of the factors. Throws std::invalid_argument when
/// factors is empty.
BigInt multi_lr_coefficient(const Partition& gamma, const std::vector<Partition>& factors);

struct StretchTable {
    Partition lambda, mu, nu;
    std::vector<BigInt> values;  // values[N] = coefficient of the N-stretched triple
};

/// values[N] for N = 0..n_max; values[0] = 1.
StretchTable stretched_values(const Partition& lambda, const Partition& mu,
                              const Partition& nu, long long n_max);

/// Partitions with at most max_parts parts, each at most max_part,
/// in lexicographically increasing order of their part vectors.
std::vector<Partition> partitions_in_box(long long max_parts, long long max_part);

}  // namespace lrcex
