// Exact rational scalars used throughout: coefficients, exponents, matrix
// entries. Backed by boost::multiprecision (arbitrary precision, always
// reduced, denominator > 0).

#ifndef GGS_RATIONAL_HPP
#define GGS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ggs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) { return r.str(); }

} // namespace ggs

#endif
