#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "odolab/error.hpp"

namespace odolab {

using Natural = std::uint64_t;
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Tolerance for comparisons derived from binary64 transforms and norms.
inline constexpr double kDerivedTolerance = 1e-9;
/// Tolerance for a single character evaluation or orthogonality identity.
inline constexpr double kPrimitiveTolerance = 1e-12;

namespace detail {

inline bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digit_run(s))
    fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). No whitespace.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
  Integer num = detail::parse_integer(text.substr(0, slash), text);
  Integer den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Reduced "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Exact Gaussian rational re + i*im.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational real) : re(std::move(real)) {}  // NOLINT
  ExactComplex(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  ExactComplex(int real) : re(real) {}  // NOLINT

  ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
  ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
};

inline ExactComplex conj(const ExactComplex& z) { return {z.re, -z.im}; }

/// Division by a nonzero rational scalar.
inline ExactComplex divide(const ExactComplex& z, const Rational& d) { return {z.re / d, z.im / d}; }
inline Complex divide(const Complex& z, const Rational& d) { return z / to_double(d); }

inline ExactComplex multiply(const ExactComplex& z, const Rational& c) { return {z.re * c, z.im * c}; }
inline Complex multiply(const Complex& z, const Rational& c) { return z * to_double(c); }

inline Complex to_complex(const ExactComplex& z) { return {to_double(z.re), to_double(z.im)}; }
inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(std::int64_t v) { return {static_cast<double>(v), 0.0}; }

inline double magnitude(const ExactComplex& z) { return std::abs(to_complex(z)); }
inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(std::int64_t v) { return std::abs(static_cast<double>(v)); }

}  // namespace odolab
