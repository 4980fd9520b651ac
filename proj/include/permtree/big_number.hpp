#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace permtree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x)
{
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n (n >= 0).
inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

} // namespace permtree
