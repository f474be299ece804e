#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linerec {

/// Every recoverable failure the library reports. The pipeline maps these onto
/// result statuses; the CLI maps them onto exit codes.
enum class Failure {
  CoincidentEndpoints,
  Disconnected,
  InfeasibleFamily,
  DependentInput,
  NoMediumVectors,
  NoRelationsFound,
  RelationCountMismatch,
  NotGraphic,
  TooLarge,
  NotACycle,
  NotSigned,
  OrientationConflict,
  Deadlock,
  InconsistentLengths,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(Failure f);

class Error : public std::runtime_error {
 public:
  Error(Failure kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] Failure kind() const noexcept { return kind_; }

 private:
  Failure kind_;
};

}  // namespace linerec
