#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lrcex {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace lrcex
