#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace alcove {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar: always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rational& r);

// Accepts "p" and "p/q"; throws on malformed input or zero denominator.
Rational rat_from_string(const std::string& s);

}  // namespace alcove
