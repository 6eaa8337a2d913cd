#include "fairdiv/error.hpp"

namespace fairdiv {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kParseError: return "ParseError";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kAlphaTooLarge: return "AlphaTooLarge";
    case Errc::kOverlapError: return "OverlapError";
    case Errc::kBadRange: return "BadRange";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kCycleFound: return "CycleFound";
    case Errc::kNotConeApex: return "NotConeApex";
    case Errc::kNotPseudoforest: return "NotPseudoforest";
    case Errc::kDisconnected: return "Disconnected";
    case Errc::kWrongArity: return "WrongArity";
    case Errc::kNoEligibleComponent: return "NoEligibleComponent";
    case Errc::kZeroMeasurePiece: return "ZeroMeasurePiece";
    case Errc::kNoCycle: return "NoCycle";
    case Errc::kInsufficientDomination: return "InsufficientDomination";
    case Errc::kNotEnvyFreePartial: return "NotEnvyFreePartial";
    case Errc::kGraphsEqual: return "GraphsEqual";
    case Errc::kNotUndirected: return "NotUndirected";
    case Errc::kKTooSmall: return "KTooSmall";
    case Errc::kInvalidSubpartition: return "InvalidSubpartition";
    case Errc::kSubpartitionTooSmall: return "SubpartitionTooSmall";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kInfeasible: return "Infeasible";
  }
  return "Unknown";
}

namespace {

std::string describe_cycle(const std::vector<int>& cycle) {
  std::string out = "directed cycle";
  for (int v : cycle) out += " " + std::to_string(v);
  return out;
}

}  // namespace

CycleFound::CycleFound(std::vector<int> cycle)
    : FairDivError(Errc::kCycleFound, describe_cycle(cycle)), cycle_(std::move(cycle)) {}

}  // namespace fairdiv
