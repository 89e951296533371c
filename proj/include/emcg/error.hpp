#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace emcg {

enum class ErrorKind {
  DimensionMismatch,
  Degenerate,
  UnsupportedSize,
  NotSymplectic,
  InvalidMatrix,
  NotMember,
  Capacity,
  InvalidAction,
  InvalidSubgroup,
  NotBlockStructured,
  OutOfDomain,
  UnsupportedFamily,
  InvalidTable,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; the kind drives the
// CLI exit code (Parse -> 2, everything else -> 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace emcg
