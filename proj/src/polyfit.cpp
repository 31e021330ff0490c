#include "lrcex/polyfit.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrcex {

std::optional<PolynomialFit> fit_polynomial(const std::vector<BigInt>& values) {
    if (values.size() < 2)
        throw std::invalid_argument("fit_polynomial: need at least 2 points");
    const long long npts = static_cast<long long>(values.size());

    // leading[k] = k-th forward difference at 0; diff shrinks by one per level
    std::vector<BigInt> leading;
    std::vector<BigInt> diff = values;
    leading.push_back(diff[0]);
    long long degree = -1;
    for (long long k = 1; k <= npts - 1; ++k) {
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
        if (std::all_of(diff.begin(), diff.end(), [](const BigInt& x) { return x == 0; })) {
            degree = k - 1;
            break;
        }
        leading.push_back(diff[0]);
    }
    if (degree < 0 || npts < degree + 2) return std::nullopt;

    // P(X) = sum_k leading[k] * binom(X, k); expand binom(X, k) exactly
    std::vector<BigRational> coeffs(static_cast<std::size_t>(degree) + 1, BigRational(0));
    std::vector<BigRational> basis{BigRational(1)};  // binom(X, 0)
    BigInt k_factorial = 1;
    for (long long k = 0; k <= degree; ++k) {
        if (k > 0) {
            // multiply by (X - (k-1)) and divide by k
            k_factorial *= k;
            std::vector<BigRational> next(basis.size() + 1, BigRational(0));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= basis[i] * (k - 1);
            }
            basis = std::move(next);
        }
        BigRational scale(leading[static_cast<std::size_t>(k)], k_factorial);
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += scale * basis[i];
    }
    return PolynomialFit{degree, std::move(coeffs)};
}

}  // namespace lrcex
