#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tww {

/// Caller broke a documented precondition.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A contraction sequence or decomposition that does not describe a valid certificate.
class CertificateError : public std::runtime_error {
public:
  CertificateError(const std::string& what, std::ptrdiff_t step = -1)
      : std::runtime_error(step >= 0 ? "step " + std::to_string(step) + ": " + what : what), step_(step) {}
  /// Offending step (0-based), or -1 when the problem is not tied to one step.
  std::ptrdiff_t step() const noexcept { return step_; }

private:
  std::ptrdiff_t step_;
};

/// A satisfying model decoded into something that does not verify. Always a bug.
class EncodingSoundnessError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tww
