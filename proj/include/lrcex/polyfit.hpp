#pragma once

#include <optional>
#include <vector>

#include "lrcex/bigint.hpp"

namespace lrcex {

struct PolynomialFit {
    long long degree;
    std::vector<BigRational> coefficients;  // c[0] + c[1] X + ... + c[degree] X^degree
    BigRational constant_term() const { return coefficients.empty() ? BigRational(0) : coefficients[0]; }
};

/// Newton forward-difference fit of values[0..], interpreted at X = 0, 1, ...
/// Confirms the minimal degree d whose (d+1)-th differences all vanish,
/// which requires at least d+2 points (one surplus vanishing difference).
/// Returns nullopt when no degree can be confirmed from the given points;
/// throws std::invalid_argument on fewer than 2 points.
std::optional<PolynomialFit> fit_polynomial(const std::vector<BigInt>& values);

}  // namespace lrcex
