#include "lrcex/bigint.hpp"

namespace lrcex {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral: after multiplying by (n-k+i) the product of i
    // consecutive integers is divisible by i!
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace lrcex
