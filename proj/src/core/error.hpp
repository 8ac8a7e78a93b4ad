#pragma once

#include "core/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hompois {

enum class ErrorKind {
  Parse,          // malformed document or expression
  Dimension,      // shape mismatch between inputs
  Missing,        // required op, map or action absent
  Unbound,        // declared parameter without a value
  Argument,       // invalid argument value (singular matrix, n < 1, ...)
  Precondition,   // an input failed its gate check; report attached
  Postcondition,  // a builder's output failed re-verification; report attached
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Error(ErrorKind kind, const std::string& what, CheckReport report)
      : std::runtime_error(what), kind_(kind), report_(std::move(report)) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<CheckReport>& report() const { return report_; }

 private:
  ErrorKind kind_;
  std::optional<CheckReport> report_;
};

// Throws Precondition carrying `report` when it failed.
void require(const CheckReport& report, const std::string& what);
// Throws Postcondition carrying `report` when it failed.
void ensure(const CheckReport& report, const std::string& what);

}  // namespace hompois
