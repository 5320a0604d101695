#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "odolab/error.hpp"
#include "odolab/rational.hpp"

namespace odolab {

/// Trial-division factorization into prime -> exponent.
inline std::map<Natural, unsigned> factorize(Natural n) {
  std::map<Natural, unsigned> out;
  for (Natural p = 2; p <= n / p; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline bool is_prime(Natural n) {
  if (n < 2) return false;
  for (Natural p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Formal product of prime powers with exponents in {0, 1, ..., inf}, stored
/// fully factored. Finite exponents are >= 1; a prime never appears in both maps.
class SupernaturalNumber {
 public:
  SupernaturalNumber() = default;

  static SupernaturalNumber from_natural(Natural n) {
    if (n == 0) fail(ErrorKind::OutOfRange, "0 is not a supernatural number");
    SupernaturalNumber s;
    s.finite_ = factorize(n);
    return s;
  }

  /// Builds from explicit exponent data; validates primality and disjointness.
  static SupernaturalNumber from_parts(std::map<Natural, unsigned> finite, std::set<Natural> infinite) {
    SupernaturalNumber s;
    for (auto& [p, e] : finite) {
      if (!is_prime(p)) fail(ErrorKind::ParseError, std::to_string(p) + " is not prime");
      if (e == 0) continue;
      if (infinite.count(p)) fail(ErrorKind::ParseError, "prime " + std::to_string(p) + " listed as finite and infinite");
      s.finite_[p] = e;
    }
    for (Natural p : infinite)
      if (!is_prime(p)) fail(ErrorKind::ParseError, std::to_string(p) + " is not prime");
    s.infinite_ = std::move(infinite);
    return s;
  }

  const std::map<Natural, unsigned>& finite_exponents() const { return finite_; }
  const std::set<Natural>& infinite_primes() const { return infinite_; }

  bool is_finite() const { return infinite_.empty(); }

  /// Exponent of p; nullopt encodes infinity.
  std::optional<unsigned> exponent(Natural p) const {
    if (infinite_.count(p)) return std::nullopt;
    auto it = finite_.find(p);
    return it == finite_.end() ? 0u : it->second;
  }

  /// The ordinary integer value, when finite and representable.
  std::optional<Natural> value() const {
    if (!is_finite()) return std::nullopt;
    Natural v = 1;
    for (auto [p, e] : finite_)
      for (unsigned i = 0; i < e; ++i) {
        if (v > UINT64_MAX / p) return std::nullopt;
        v *= p;
      }
    return v;
  }

  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

 private:
  std::map<Natural, unsigned> finite_;
  std::set<Natural> infinite_;
};

enum class CombineMode { lcm, gcd, mul };

/// Exponent-wise max (lcm), min (gcd) or sum (mul); infinity absorbs max and sum.
inline SupernaturalNumber combine(const SupernaturalNumber& a, const SupernaturalNumber& b, CombineMode mode) {
  std::set<Natural> primes(a.infinite_primes());
  primes.insert(b.infinite_primes().begin(), b.infinite_primes().end());
  for (auto& [p, e] : a.finite_exponents()) primes.insert(p);
  for (auto& [p, e] : b.finite_exponents()) primes.insert(p);

  std::map<Natural, unsigned> finite;
  std::set<Natural> infinite;
  for (Natural p : primes) {
    const auto ea = a.exponent(p);
    const auto eb = b.exponent(p);
    std::optional<unsigned> e;
    switch (mode) {
      case CombineMode::lcm:
        e = (!ea || !eb) ? std::nullopt : std::optional<unsigned>(std::max(*ea, *eb));
        break;
      case CombineMode::mul:
        e = (!ea || !eb) ? std::nullopt : std::optional<unsigned>(*ea + *eb);
        break;
      case CombineMode::gcd:
        if (!ea && !eb) e = std::nullopt;
        else if (!ea) e = *eb;
        else if (!eb) e = *ea;
        else e = std::min(*ea, *eb);
        break;
    }
    if (!e) infinite.insert(p);
    else if (*e > 0) finite[p] = *e;
  }
  return SupernaturalNumber::from_parts(std::move(finite), std::move(infinite));
}

inline SupernaturalNumber lcm(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  return combine(a, b, CombineMode::lcm);
}
inline SupernaturalNumber gcd(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  return combine(a, b, CombineMode::gcd);
}

/// a | b iff every exponent of a is <= the matching exponent of b (inf only <= inf).
inline bool divides(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  for (Natural p : a.infinite_primes())
    if (b.exponent(p).has_value()) return false;
  for (auto& [p, e] : a.finite_exponents()) {
    const auto eb = b.exponent(p);
    if (eb && *eb < e) return false;
  }
  return true;
}

/// Literal syntax: factors joined by '*', each "p", "p^k" or "p^inf"; "1" is the unit.
inline SupernaturalNumber parse_supernatural(std::string_view text) {
  if (text == "1") return {};
  std::map<Natural, unsigned> finite;
  std::set<Natural> infinite;
  auto parse_nat = [&](std::string_view s) -> Natural {
    if (!detail::is_digit_run(s) || s.size() > 18)
      fail(ErrorKind::ParseError, "malformed supernatural literal '" + std::string(text) + "'");
    return std::stoull(std::string(s));
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = std::min(text.find('*', start), text.size());
    const std::string_view factor = text.substr(start, stop - start);
    const auto caret = factor.find('^');
    const Natural base = parse_nat(factor.substr(0, caret));
    if (base == 1 && caret == std::string_view::npos) {
      start = stop + 1;
      continue;
    }
    if (!is_prime(base)) fail(ErrorKind::ParseError, std::to_string(base) + " is not prime");
    if (caret == std::string_view::npos) {
      if (!infinite.count(base)) ++finite[base];
    } else if (factor.substr(caret + 1) == "inf") {
      infinite.insert(base);
      finite.erase(base);
    } else if (!infinite.count(base)) {
      finite[base] += static_cast<unsigned>(parse_nat(factor.substr(caret + 1)));
    }
    start = stop + 1;
  }
  return SupernaturalNumber::from_parts(std::move(finite), std::move(infinite));
}

inline std::string to_string(const SupernaturalNumber& s) {
  std::map<Natural, std::string> parts;
  for (auto [p, e] : s.finite_exponents())
    parts[p] = e == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(e);
  for (Natural p : s.infinite_primes()) parts[p] = std::to_string(p) + "^inf";
  if (parts.empty()) return "1";
  std::string out;
  for (auto& [p, text] : parts) {
    if (!out.empty()) out += '*';
    out += text;
  }
  return out;
}

/// Finite prefix (s_1, ..., s_M) of a divisibility chain; s_0 = 1 is implicit.
/// Depth 0 (only s_0) is the trivial scale, produced by classifying the trivial group.
class Scale {
 public:
  Scale() = default;

  std::size_t depth() const { return entries_.size(); }
  /// s_m for 0 <= m <= depth().
  Natural s(std::size_t m) const {
    if (m > depth()) fail(ErrorKind::ScaleTooShallow, "level " + std::to_string(m) + " exceeds scale depth " + std::to_string(depth()));
    return m == 0 ? 1 : entries_[m - 1];
  }
  /// s_M, the order of the deepest finite quotient.
  Natural top() const { return s(depth()); }
  /// s_m / s_{m-1} for m >= 1.
  Natural radix(std::size_t m) const { return s(m) / s(m - 1); }
  const std::vector<Natural>& entries() const { return entries_; }

  /// First `m` entries as a scale of its own.
  Scale truncated(std::size_t m) const {
    if (m > depth()) fail(ErrorKind::ScaleTooShallow, "cannot truncate to a deeper level");
    Scale out;
    out.entries_.assign(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(m));
    return out;
  }

  /// True when both scales agree on s_0..s_m.
  bool agrees_through(const Scale& other, std::size_t m) const {
    if (m > depth() || m > other.depth()) return false;
    return std::equal(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(m), other.entries_.begin());
  }

  friend bool operator==(const Scale&, const Scale&) = default;

 private:
  friend Scale validate_scale(std::span<const std::int64_t> seq);
  std::vector<Natural> entries_;
};

/// Checks s_1 >= 2, strict increase and s_m | s_{m+1}.
inline Scale validate_scale(std::span<const std::int64_t> seq) {
  if (seq.empty()) fail(ErrorKind::EmptyScale, "a scale needs at least one entry");
  if (seq[0] < 2) fail(ErrorKind::BadFirstEntry, "s_1 = " + std::to_string(seq[0]) + " must be at least 2");
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] <= seq[i - 1])
      fail(ErrorKind::NotIncreasing, "s_" + std::to_string(i) + " = " + std::to_string(seq[i - 1]) +
                                         " is not below s_" + std::to_string(i + 1) + " = " + std::to_string(seq[i]));
    if (seq[i] % seq[i - 1] != 0)
      fail(ErrorKind::DivisibilityViolation, std::to_string(seq[i - 1]) + " does not divide " + std::to_string(seq[i]));
  }
  Scale out;
  out.entries_.assign(seq.begin(), seq.end());
  return out;
}

inline Scale validate_scale(std::initializer_list<std::int64_t> seq) {
  return validate_scale(std::span<const std::int64_t>(seq.begin(), seq.size()));
}

inline Scale validate_scale(const std::vector<Natural>& seq) {
  std::vector<std::int64_t> signed_seq;
  for (Natural v : seq) {
    if (v > static_cast<Natural>(INT64_MAX)) fail(ErrorKind::OutOfRange, "scale entry too large");
    signed_seq.push_back(static_cast<std::int64_t>(v));
  }
  return validate_scale(std::span<const std::int64_t>(signed_seq));
}

/// lcm of the finite prefix; a lower bound (divisor) of the full supernatural number.
inline SupernaturalNumber scale_lcm(const Scale& scale) {
  SupernaturalNumber acc;
  for (Natural v : scale.entries()) acc = lcm(acc, SupernaturalNumber::from_natural(v));
  return acc;
}

}  // namespace odolab
