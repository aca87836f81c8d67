#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace prestable {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" with q omitted when 1; exact, no decimals.
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline Rat binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= (n - i);
    Int den = 1;
    for (long i = 2; i <= k; ++i) den *= i;
    return Rat(num, den);
}

// 1/k!
inline Rat inv_factorial(long k) {
    Int f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return Rat(1, f);
}

} // namespace prestable
