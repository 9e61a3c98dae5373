#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "core/report.hpp"

namespace mvalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad arguments or malformed structures: out-of-range index, kind mismatch,
/// violated construction precondition supplied by the caller.
struct UsageError : Error {
  using Error::Error;
};

/// Parse failure with the offending field path ("add[1][2]", "elements", ...).
struct ParseError : UsageError {
  ParseError(const std::string& path, const std::string& what)
      : UsageError(path.empty() ? what : path + ": " + what), path(path) {}
  std::string path;
};

/// A bridge or builder rejecting its input; carries the failing report.
struct CheckFailure : Error {
  CheckFailure(const std::string& what, Report r)
      : Error(what + "\n" + r.render()), report(std::move(r)) {}
  Report report;
};

}  // namespace mvalg
