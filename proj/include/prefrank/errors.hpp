#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by the prefrank library.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prefrank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Kleene star requested for a matrix whose spectral radius exceeds one.
class SpectralRadiusExceedsOne : public Error {
 public:
  explicit SpectralRadiusExceedsOne(double radius)
      : Error("spectral radius " + std::to_string(radius) + " exceeds 1"), radius_(radius) {}
  double radius() const noexcept { return radius_; }

 private:
  double radius_;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class ZeroVariance : public Error {
 public:
  using Error::Error;
};

/// A required method tag is absent from a respondent's results.
class MissingTag : public Error {
 public:
  using Error::Error;
};

/// Malformed input. `where` is a human-readable position ("line 3, column 7",
/// "/respondents/0/age", "byte 120").
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Well-formed input that violates one or more data invariants. Every
/// violation found is reported, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "validation failed";
    for (const auto& s : v) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace prefrank
