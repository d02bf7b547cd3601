#include "symspace/error.hpp"

namespace symspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSkewHermitian: return "NotSkewHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotInSpace: return "NotInSpace";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::RootProductFailure: return "RootProductFailure";
    case ErrorCode::OddPairingFailure: return "OddPairingFailure";
    case ErrorCode::BranchViolation: return "BranchViolation";
    case ErrorCode::MembershipDrift: return "MembershipDrift";
    case ErrorCode::OddMultiplicity: return "OddMultiplicity";
    case ErrorCode::ClusterSpread: return "ClusterSpread";
    case ErrorCode::InvalidConnectivity: return "InvalidConnectivity";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace symspace
