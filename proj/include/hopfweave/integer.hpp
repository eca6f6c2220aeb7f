#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfweave {

/// Arbitrary-precision integer used for every matrix entry and invariant.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Least nonnegative residue; modulus must be positive.
inline Integer mod_floor(const Integer& v, const Integer& m) {
    Integer r = v % m;
    if (r < 0) r += m;
    return r;
}

inline int sign(const Integer& v) { return v.sign(); }

inline bool fits_int64(const Integer& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Integer& v) {
    if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace hopfweave
