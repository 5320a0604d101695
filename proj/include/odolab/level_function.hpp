#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "odolab/error.hpp"
#include "odolab/rational.hpp"
#include "odolab/supernatural.hpp"

namespace odolab {

/// Largest level size materialized as a value vector.
inline constexpr Natural kMaxMaterialized = Natural{1} << 24;

/// A locally constant function on Z_S that factors through Z/s_m Z:
/// f(x) = values[x mod s_m]. T is ExactComplex, Complex or std::int64_t.
template <class T>
class LevelFunction {
 public:
  using value_type = T;

  LevelFunction() : values_(1) {}

  LevelFunction(Scale scale, std::size_t level, std::vector<T> values)
      : scale_(std::move(scale)), level_(level), values_(std::move(values)) {
    const Natural size = checked_size(scale_, level_);
    if (values_.size() != size)
      fail(ErrorKind::OutOfRange, "level " + std::to_string(level_) + " needs " + std::to_string(size) +
                                      " values, got " + std::to_string(values_.size()));
  }

  static LevelFunction constant(Scale scale, std::size_t level, const T& value) {
    const Natural size = checked_size(scale, level);
    return LevelFunction(std::move(scale), level, std::vector<T>(size, value));
  }

  /// Samples `fn(x)` for x in [0, s_level).
  template <class Fn>
  static LevelFunction generate(Scale scale, std::size_t level, Fn&& fn) {
    const Natural size = checked_size(scale, level);
    std::vector<T> values;
    values.reserve(size);
    for (Natural x = 0; x < size; ++x) values.push_back(fn(x));
    return LevelFunction(std::move(scale), level, std::move(values));
  }

  const Scale& scale() const { return scale_; }
  std::size_t level() const { return level_; }
  Natural size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }

  /// Value at any nonnegative integer point of Z_S.
  const T& operator()(Natural x) const { return values_[x % values_.size()]; }

  /// The same function materialized at a finer level.
  LevelFunction promoted(std::size_t finer) const {
    if (finer < level_) fail(ErrorKind::LevelMismatch, "promotion must go to a finer level");
    if (finer == level_) return *this;
    return generate(scale_, finer, [this](Natural x) { return (*this)(x); });
  }

  /// Pointwise image under `fn`.
  template <class Fn>
  auto map(Fn&& fn) const {
    using U = std::decay_t<decltype(fn(values_.front()))>;
    std::vector<U> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(fn(v));
    return LevelFunction<U>(scale_, level_, std::move(out));
  }

  friend bool operator==(const LevelFunction&, const LevelFunction&) = default;

 private:
  static Natural checked_size(const Scale& scale, std::size_t level) {
    const Natural size = scale.s(level);
    if (size > kMaxMaterialized)
      fail(ErrorKind::LevelOverflow, "s_" + std::to_string(level) + " = " + std::to_string(size) + " is too large to materialize");
    return size;
  }

  Scale scale_;
  std::size_t level_ = 0;
  std::vector<T> values_;
};

using ExactFunction = LevelFunction<ExactComplex>;
using FloatFunction = LevelFunction<Complex>;
using IntFunction = LevelFunction<std::int64_t>;

template <class T>
FloatFunction to_float(const LevelFunction<T>& f) {
  return f.map([](const T& v) { return to_complex(v); });
}

inline ExactFunction to_exact(const IntFunction& f) {
  return f.map([](std::int64_t v) { return ExactComplex(Rational(v)); });
}

/// Integer-valued view of an exact function; NonIntegerValues otherwise.
inline IntFunction to_integer(const ExactFunction& f) {
  return f.map([](const ExactComplex& v) {
    if (!v.is_real() || !is_integer(v.re) || abs(v.re) > Rational(INT64_MAX))
      fail(ErrorKind::NonIntegerValues, "value " + to_string(v.re) + (v.is_real() ? "" : " + i*" + to_string(v.im)) + " is not an integer");
    return numerator(v.re).convert_to<std::int64_t>();
  });
}

/// Both operands at their common (finer) level; scales must coincide.
template <class T>
std::pair<LevelFunction<T>, LevelFunction<T>> common_level(const LevelFunction<T>& f, const LevelFunction<T>& g) {
  if (!(f.scale() == g.scale())) fail(ErrorKind::ScaleMismatch, "operands live on different scales");
  const std::size_t level = std::max(f.level(), g.level());
  return {f.promoted(level), g.promoted(level)};
}

template <class T, class Op>
LevelFunction<T> zip_with(const LevelFunction<T>& f, const LevelFunction<T>& g, Op op) {
  auto [a, b] = common_level(f, g);
  std::vector<T> out;
  out.reserve(a.size());
  for (Natural x = 0; x < a.size(); ++x) out.push_back(op(a(x), b(x)));
  return LevelFunction<T>(a.scale(), a.level(), std::move(out));
}

template <class T>
LevelFunction<T> add(const LevelFunction<T>& f, const LevelFunction<T>& g) {
  return zip_with(f, g, [](const T& a, const T& b) { return a + b; });
}

template <class T>
LevelFunction<T> subtract(const LevelFunction<T>& f, const LevelFunction<T>& g) {
  return zip_with(f, g, [](const T& a, const T& b) { return a - b; });
}

template <class T>
LevelFunction<T> multiply(const LevelFunction<T>& f, const LevelFunction<T>& g) {
  return zip_with(f, g, [](const T& a, const T& b) { return a * b; });
}

template <class T>
LevelFunction<T> scaled(const LevelFunction<T>& f, const T& c) {
  return f.map([&c](const T& v) { return c * v; });
}

template <class T>
LevelFunction<T> conjugate(const LevelFunction<T>& f) {
  using std::conj;
  return f.map([](const T& v) { return T(conj(v)); });
}

template <class T>
LevelFunction<T> operator+(const LevelFunction<T>& f, const LevelFunction<T>& g) { return add(f, g); }
template <class T>
LevelFunction<T> operator-(const LevelFunction<T>& f, const LevelFunction<T>& g) { return subtract(f, g); }
template <class T>
LevelFunction<T> operator*(const LevelFunction<T>& f, const LevelFunction<T>& g) { return multiply(f, g); }

/// max_x |f(x)|
template <class T>
double sup_norm(const LevelFunction<T>& f) {
  double best = 0.0;
  for (const auto& v : f.values()) best = std::max(best, magnitude(v));
  return best;
}

/// sup-norm distance after promotion to a common level.
template <class T, class U>
double sup_distance(const LevelFunction<T>& f, const LevelFunction<U>& g) {
  return sup_norm(subtract(to_float(f), to_float(g)));
}

}  // namespace odolab
