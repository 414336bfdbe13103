#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

struct IdenticallyZeroResultant : std::runtime_error {
  explicit IdenticallyZeroResultant(const std::string& what)
      : std::runtime_error(what) {}
};

struct EmptyCurve : std::runtime_error {
  explicit EmptyCurve(const std::string& what) : std::runtime_error(what) {}
};

struct GenericityFailure : std::runtime_error {
  explicit GenericityFailure(const std::string& what)
      : std::runtime_error(what) {}
};

struct CellNotOnCurve : std::runtime_error {
  explicit CellNotOnCurve(const std::string& what)
      : std::runtime_error(what) {}
};

struct SupportOutsideS : std::runtime_error {
  explicit SupportOutsideS(const std::string& what)
      : std::runtime_error(what) {}
};

struct CyclicSubcomplexUnsupported : std::runtime_error {
  explicit CyclicSubcomplexUnsupported(const std::string& what)
      : std::runtime_error(what) {}
};

struct NoAdmissiblePairing : std::runtime_error {
  explicit NoAdmissiblePairing(const std::string& what)
      : std::runtime_error(what) {}
};

/// Parse failure with source position and the token set that was expected.
struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  std::vector<std::string> expected;

  ParseError(const std::string& what, int line_, int column_,
             std::vector<std::string> expected_ = {})
      : std::runtime_error(what + " at " + std::to_string(line_) + ":" +
                           std::to_string(column_)),
        line(line_),
        column(column_),
        expected(std::move(expected_)) {}
};

}  // namespace trop
