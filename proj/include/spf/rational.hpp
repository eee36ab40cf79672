#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace spf {

/// Exact rational number backed by GMP; always stored in lowest terms with
/// a positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_one(const Rat& r) { return r == 1; }

inline Integer num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rat& r) { return boost::multiprecision::denominator(r); }

namespace detail {
// Reaches the free is_zero from inside classes whose member is_zero hides it.
template <class F>
bool coeff_is_zero(const F& c) {
  return is_zero(c);
}
}  // namespace detail

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// and DivisionByZero for a zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical "p" or "p/q" rendering.
inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace spf
