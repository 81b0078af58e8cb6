#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyckodd {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Coefficients below this power of z are computed unless a caller asks
// for a different window (32 powers of Z under z^2 = Z).
inline constexpr std::int64_t default_precision = 64;

inline bool is_integer(const rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

}  // namespace dyckodd
