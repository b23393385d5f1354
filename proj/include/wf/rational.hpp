#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wf {

using Int = boost::multiprecision::cpp_int;

/// Exact rational coefficient; always kept in canonical form
/// (reduced, positive denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "a" or "a/b" with optional sign. Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& text);

Int factorial(unsigned n);

inline Rational rational_pow(const Rational& q, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace wf
