#ifndef BIFRAME_ERROR_HPP
#define BIFRAME_ERROR_HPP

#include <stdexcept>
#include <string>

namespace biframe {

enum class ErrorKind {
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  DuplicateLabel,
  NotALattice,
  NotDistributive,
  NotAHom,
  NotConstantOnBlocks,
  NotSubframe,
  NotSubbasis,
  QLNotOnto,
  ComponentNotPreserved,
  SquareDoesNotCommute,
  SizeLimitExceeded,
  NotSkeletal,
  RouteMismatch,
  BadInput,
};

const char* to_string(ErrorKind k);

/// All validation failures carry a kind plus a human-readable witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace biframe

#endif
