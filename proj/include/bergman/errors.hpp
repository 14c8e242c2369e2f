#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bergman {

/// Base class for library errors. `kind()` is the stable machine-readable
/// tag the CLI uses when mapping failures to JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct ZeroDivisor : Error {
  explicit ZeroDivisor(const std::string& d) : Error("ZeroDivisor", d) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& d) : Error("DomainError", d) {}
};

struct SingularKernel : Error {
  explicit SingularKernel(const std::string& d) : Error("SingularKernel", d) {}
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& d) : Error("BadParameter", d) {}
};

struct NonFiniteSample : Error {
  explicit NonFiniteSample(const std::string& d) : Error("NonFiniteSample", d) {}
};

struct DivergenceSuspected : Error {
  explicit DivergenceSuspected(const std::string& d) : Error("DivergenceSuspected", d) {}
};

struct ContourTooClose : Error {
  explicit ContourTooClose(const std::string& d) : Error("ContourTooClose", d) {}
};

struct BoundaryLimitNotReal : Error {
  explicit BoundaryLimitNotReal(const std::string& d) : Error("BoundaryLimitNotReal", d) {}
};

/// Rethrows an error captured by kind across a parallel region boundary.
[[noreturn]] inline void rethrow_by_kind(const std::string& kind, const std::string& detail) {
  if (kind == "ZeroDivisor") throw ZeroDivisor(detail);
  if (kind == "DomainError") throw DomainError(detail);
  if (kind == "SingularKernel") throw SingularKernel(detail);
  if (kind == "BadParameter") throw BadParameter(detail);
  if (kind == "NonFiniteSample") throw NonFiniteSample(detail);
  if (kind == "DivergenceSuspected") throw DivergenceSuspected(detail);
  if (kind == "ContourTooClose") throw ContourTooClose(detail);
  if (kind == "BoundaryLimitNotReal") throw BoundaryLimitNotReal(detail);
  throw Error(kind, detail);
}

}  // namespace bergman
