#include "linerec/error.hpp"

namespace linerec {

std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::CoincidentEndpoints: return "CoincidentEndpoints";
    case Failure::Disconnected: return "Disconnected";
    case Failure::InfeasibleFamily: return "InfeasibleFamily";
    case Failure::DependentInput: return "DependentInput";
    case Failure::NoMediumVectors: return "NoMediumVectors";
    case Failure::NoRelationsFound: return "NoRelationsFound";
    case Failure::RelationCountMismatch: return "RelationCountMismatch";
    case Failure::NotGraphic: return "NotGraphic";
    case Failure::TooLarge: return "TooLarge";
    case Failure::NotACycle: return "NotACycle";
    case Failure::NotSigned: return "NotSigned";
    case Failure::OrientationConflict: return "OrientationConflict";
    case Failure::Deadlock: return "Deadlock";
    case Failure::InconsistentLengths: return "InconsistentLengths";
    case Failure::ParseError: return "ParseError";
    case Failure::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace linerec
