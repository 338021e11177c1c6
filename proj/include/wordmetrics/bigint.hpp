#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wordmetrics {

/// Exact arbitrary-precision count. Sphere cardinalities contain an
/// N^(j-k) factor, so fixed-width integers are not enough in general.
using BigInt = boost::multiprecision::cpp_int;

/// base^exp, exact.
inline BigInt ipow(BigInt base, unsigned long exp)
{
    BigInt result = 1;
    while (exp != 0) {
        if (exp & 1)
            result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

/// Binomial coefficient with C(n, k) = 0 for k < 0 or k > n.
inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;
    }
    return result;
}

} // namespace wordmetrics
