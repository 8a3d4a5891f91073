#pragma once

#include <stdexcept>
#include <string>

namespace residua {

// Failure kinds carried by Error so callers (notably the CLI) can map
// them onto exit codes without string matching.
enum class ErrKind {
  GroupMismatch,
  ModelMismatch,
  NotNonnegative,
  NonIdempotent,
  NotIncident,
  NotMedian,
  Unsupported,
  FactorBound,
  Parse,
  BadArgument,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace residua
