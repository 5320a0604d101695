#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "odolab/dual_group.hpp"
#include "odolab/error.hpp"
#include "odolab/harmonic.hpp"
#include "odolab/ktheory.hpp"
#include "odolab/length.hpp"
#include "odolab/level_function.hpp"
#include "odolab/odometer.hpp"
#include "odolab/supernatural.hpp"

namespace odolab::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Canonical text form: compact, keys sorted, binary64 with 17 significant digits.

namespace detail {

inline void write_canonical(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::null: out += "null"; break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
    case json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
    case json::value_t::number_float: {
      double v = j.get<double>();
      if (v == 0.0) v = 0.0;
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    case json::value_t::string: out += j.dump(); break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        write_canonical(item, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        write_canonical(it.value(), out);
      }
      out += '}';
      break;
    }
    default: out += j.dump(); break;
  }
}

[[noreturn]] inline void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) bad(std::string(what) + " is too large");
  return j.get<std::int64_t>();
}

inline Natural as_natural(const json& j, const char* what) {
  const std::int64_t v = as_int(j, what);
  if (v < 0) bad(std::string(what) + " must be nonnegative");
  return static_cast<Natural>(v);
}

inline Natural parse_natural_key(const std::string& key) {
  if (!odolab::detail::is_digit_run(key) || key.size() > 18) bad("coefficient key '" + key + "' is not a natural number");
  return std::stoull(key);
}

}  // namespace detail

inline std::string canonical(const json& j) {
  std::string out;
  detail::write_canonical(j, out);
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Scalars

inline json rational_to_json(const Rational& r) { return to_string(r); }

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(detail::as_int(j, "rational"));
  detail::bad("expected a rational string or an integer, got " + j.dump());
}

// ---------------------------------------------------------------------------
// Scale / supernatural

inline json scale_to_json(const Scale& s) { return json{{"scale", s.entries()}}; }

inline Scale scale_from_json(const json& j) {
  const json& arr = detail::field(j, "scale");
  if (!arr.is_array()) detail::bad("'scale' must be an array");
  std::vector<std::int64_t> seq;
  for (const auto& v : arr) seq.push_back(detail::as_int(v, "scale entry"));
  return validate_scale(std::span<const std::int64_t>(seq));
}

// ---------------------------------------------------------------------------
// Odometer points and dual elements

inline json point_to_json(const OdometerPoint& p) { return json{{"level", p.level}, {"residue", p.residue}}; }

inline OdometerPoint point_from_json(const json& j, const Scale& scale) {
  return make_point(scale, detail::as_natural(detail::field(j, "level"), "level"),
                    detail::as_natural(detail::field(j, "residue"), "residue"));
}

inline json dual_to_json(const DualElement& z) { return json{{"k", z.numerator()}, {"s", z.denominator()}}; }

inline DualElement dual_from_json(const json& j) {
  const Natural s = detail::as_natural(detail::field(j, "s"), "s");
  if (s == 0) detail::bad("'s' must be positive");
  return make_root(detail::as_int(detail::field(j, "k"), "k"), s);
}

// ---------------------------------------------------------------------------
// Length functions

inline json spec_to_json(const LengthSpec& spec) {
  json l = json::array();
  for (const auto& v : spec.values()) l.push_back(rational_to_json(v));
  return json{{"scale", spec.scale().entries()}, {"l", l}};
}

inline LengthSpec spec_from_json(const json& j) {
  Scale scale = scale_from_json(j);
  const json& arr = detail::field(j, "l");
  if (!arr.is_array()) detail::bad("'l' must be an array");
  std::vector<Rational> l;
  for (const auto& v : arr) l.push_back(rational_from_json(v));
  return make_length_spec(std::move(scale), std::move(l));
}

inline json table_to_json(const LengthTable& t) {
  json out = json::array();
  for (const auto& [z, v] : t) out.push_back({{"k", z.numerator()}, {"s", z.denominator()}, {"value", rational_to_json(v)}});
  return out;
}

inline LengthTable table_from_json(const json& j) {
  if (!j.is_array()) detail::bad("a length table is a list of {k, s, value}");
  LengthTable t;
  for (const auto& entry : j) {
    const DualElement z = dual_from_json(entry);
    if (!t.emplace(z, rational_from_json(detail::field(entry, "value"))).second)
      detail::bad("duplicate table entry for " + std::to_string(z.numerator()) + "/" + std::to_string(z.denominator()));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Level functions

enum class NumericMode { automatic, exact, floating };

using AnyFunction = std::variant<ExactFunction, FloatFunction>;

inline json function_to_json(const ExactFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(json::array({to_string(v.re), to_string(v.im)}));
  return json{{"level", f.level()}, {"values", values}};
}

inline json function_to_json(const FloatFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(json::array({v.real(), v.imag()}));
  return json{{"level", f.level()}, {"values", values}};
}

inline json function_to_json(const IntFunction& f) { return function_to_json(to_exact(f)); }

namespace detail {

inline bool holds_float(const json& v) {
  if (v.is_array()) {
    for (const auto& part : v)
      if (part.is_number_float()) return true;
    return false;
  }
  return v.is_number_float();
}

inline std::pair<json, json> split_value(const json& v) {
  if (v.is_array()) {
    if (v.size() != 2) bad("a function value is [re, im] or a scalar");
    return {v[0], v[1]};
  }
  return {v, json(0)};
}

inline double float_part(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
  bad("function value must be numeric, got " + v.dump());
}

}  // namespace detail

/// Function file: {"level": m, "values": [[re, im], ...]} with rational strings
/// (exact) or JSON numbers (binary64); a bare scalar is a real value.
inline AnyFunction function_from_json(const json& j, const Scale& scale, NumericMode mode = NumericMode::automatic) {
  const std::size_t level = detail::as_natural(detail::field(j, "level"), "level");
  const json& values = detail::field(j, "values");
  if (!values.is_array()) detail::bad("'values' must be an array");
  if (level > scale.depth()) fail(ErrorKind::ScaleTooShallow, "function level " + std::to_string(level) + " exceeds scale depth");
  if (values.size() != scale.s(level))
    fail(ErrorKind::OutOfRange, "level " + std::to_string(level) + " needs " + std::to_string(scale.s(level)) + " values");

  bool any_float = false;
  for (const auto& v : values) any_float = any_float || detail::holds_float(v);
  if (mode == NumericMode::exact && any_float) detail::bad("binary64 values are not allowed in exact mode");
  const bool exact = mode == NumericMode::exact || (mode == NumericMode::automatic && !any_float);

  if (exact) {
    std::vector<ExactComplex> out;
    for (const auto& v : values) {
      auto [re, im] = detail::split_value(v);
      out.emplace_back(rational_from_json(re), rational_from_json(im));
    }
    return ExactFunction(scale, level, std::move(out));
  }
  std::vector<Complex> out;
  for (const auto& v : values) {
    auto [re, im] = detail::split_value(v);
    out.emplace_back(detail::float_part(re), detail::float_part(im));
  }
  return FloatFunction(scale, level, std::move(out));
}

inline FloatFunction float_function_from_json(const json& j, const Scale& scale) {
  return std::get<FloatFunction>(function_from_json(j, scale, NumericMode::floating));
}

inline ExactFunction exact_function_from_json(const json& j, const Scale& scale) {
  return std::get<ExactFunction>(function_from_json(j, scale, NumericMode::exact));
}

/// Integer-valued function (a K_0 class); NonIntegerValues for other values.
inline K0Class k0_class_from_json(const json& j, const Scale& scale) {
  return to_integer(exact_function_from_json(j, scale));
}

// ---------------------------------------------------------------------------
// Fourier coefficients

inline json fourier_to_json(const FourierCoeffs& c) {
  json list = json::array();
  for (const auto& [z, v] : c.entries)
    list.push_back({{"k", z.numerator()}, {"s", z.denominator()}, {"re", v.real()}, {"im", v.imag()}});
  return json{{"level", c.level}, {"coeffs", list}};
}

// ---------------------------------------------------------------------------
// K-theory coefficient maps: {"coeffs": {"0": 1, "5": -2}}

namespace detail {

inline json coeff_map_to_json(const std::map<Natural, std::int64_t>& m) {
  json coeffs = json::object();
  for (const auto& [x, v] : m)
    if (v != 0) coeffs[std::to_string(x)] = v;
  return json{{"coeffs", coeffs}};
}

inline std::map<Natural, std::int64_t> coeff_map_from_json(const json& j) {
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) bad("'coeffs' must be an object");
  std::map<Natural, std::int64_t> out;
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    const std::int64_t v = as_int(it.value(), "coefficient");
    if (v != 0) out[parse_natural_key(it.key())] = v;
  }
  return out;
}

}  // namespace detail

inline json coeffs_to_json(const K0Coeffs& c) { return detail::coeff_map_to_json(c.coeffs); }
inline json coeffs_to_json(const KHomomorphism& c) { return detail::coeff_map_to_json(c.coeffs); }
inline K0Coeffs k0_coeffs_from_json(const json& j) { return {detail::coeff_map_from_json(j)}; }
inline KHomomorphism khom_from_json(const json& j) { return {detail::coeff_map_from_json(j)}; }

}  // namespace odolab::io
