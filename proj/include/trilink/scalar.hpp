#pragma once

// Exact rational scalars. Every coordinate in the library is a Scalar; there
// is no floating point anywhere in the geometry.

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace trilink {

// GMP rationals are kept canonical (gcd(num, den) = 1, den > 0) by every
// arithmetic operation, so equality is structural. Expression templates are
// disabled so that `auto` always binds to a value.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Scalar& v) {
  const int s = v.sign();
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline Scalar make_rational(const Integer& num, const Integer& den) {
  return Scalar(num) / Scalar(den);
}

inline Integer numerator_of(const Scalar& v) {
  return Integer(boost::multiprecision::numerator(v));
}

inline Integer denominator_of(const Scalar& v) {
  return Integer(boost::multiprecision::denominator(v));
}

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Scalar& v) {
  const Integer den = denominator_of(v);
  if (den == 1) return numerator_of(v).str();
  return numerator_of(v).str() + "/" + den.str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses an integer or fraction literal: [+-]?digits or [+-]?digits/digits.
/// Decimals, exponents and zero denominators are rejected.
inline std::optional<Scalar> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!detail::all_digits(num_text)) return std::nullopt;
  Integer num{std::string(num_text)};
  Integer den(1);
  if (slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text)) return std::nullopt;
    den = Integer{std::string(den_text)};
    if (den == 0) return std::nullopt;
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

inline double to_double(const Scalar& v) { return v.convert_to<double>(); }

}  // namespace trilink
