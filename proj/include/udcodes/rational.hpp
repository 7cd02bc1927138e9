#ifndef UDCODES_RATIONAL_HPP
#define UDCODES_RATIONAL_HPP

#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace udc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, always reduced, denominator > 0.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt acc = 1;
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

inline BigRational rational_pow(const BigRational& base, unsigned exp) {
    BigRational acc = 1;
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

/// r^(-len): the Kraft weight of one word of the given length.
inline BigRational kraft_weight(unsigned alphabet_size, std::size_t len) {
    return BigRational(1, ipow(BigInt(alphabet_size), static_cast<unsigned>(len)));
}

/// Serialize as "num/den" (always with the slash, e.g. "1/1").
inline std::string to_fraction_string(const BigRational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// 12-significant-digit decimal approximation; exactness lives in the fraction form.
inline std::string to_decimal_string(const BigRational& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", q.convert_to<double>());
    return buf;
}

} // namespace udc

#endif
