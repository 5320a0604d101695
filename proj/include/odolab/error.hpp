#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace odolab {

/// Every failure the library can report. The CLI prints `error_name(kind)`
/// verbatim, so renaming an enumerator is a user-visible change.
enum class ErrorKind {
  DivisibilityViolation,
  NotIncreasing,
  BadFirstEntry,
  EmptyScale,
  OutOfRange,
  LevelMismatch,
  ScaleMismatch,
  GammaOfZero,
  NotInGroup,
  NotExactlyRepresentable,
  InvalidLengthSpec,
  DomainNotSubgroup,
  AxiomViolation,
  SublevelNotSubgroup,
  ScaleTooShallow,
  NotRealValued,
  NonzeroMean,
  LevelOverflow,
  NonIntegerValues,
  NotAProjection,
  ParseError,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::BadFirstEntry: return "BadFirstEntry";
    case ErrorKind::EmptyScale: return "EmptyScale";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::ScaleMismatch: return "ScaleMismatch";
    case ErrorKind::GammaOfZero: return "GammaOfZero";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotExactlyRepresentable: return "NotExactlyRepresentable";
    case ErrorKind::InvalidLengthSpec: return "InvalidLengthSpec";
    case ErrorKind::DomainNotSubgroup: return "DomainNotSubgroup";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::SublevelNotSubgroup: return "SublevelNotSubgroup";
    case ErrorKind::ScaleTooShallow: return "ScaleTooShallow";
    case ErrorKind::NotRealValued: return "NotRealValued";
    case ErrorKind::NonzeroMean: return "NonzeroMean";
    case ErrorKind::LevelOverflow: return "LevelOverflow";
    case ErrorKind::NonIntegerValues: return "NonIntegerValues";
    case ErrorKind::NotAProjection: return "NotAProjection";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace odolab
