#pragma once

#include <stdexcept>
#include <string>

namespace pmsched {

/// Domain data violates an invariant (bad rates, non-increasing deadlines,
/// plan/window mismatch, infeasible decision vector, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance file could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance file was read but is structurally malformed (unknown key,
/// missing field, unparsable number). Messages carry line/field context.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration was refused because it would exceed the configured
/// work budget (or a hard per-operation size limit).
class WorkBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pmsched
