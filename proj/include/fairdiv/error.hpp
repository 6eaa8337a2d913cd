#ifndef FAIRDIV_ERROR_HPP_
#define FAIRDIV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fairdiv {

enum class Errc {
  kParseError,
  kInvalidArgument,
  kAlphaTooLarge,
  kOverlapError,
  kBadRange,
  kSizeMismatch,
  kCycleFound,
  kNotConeApex,
  kNotPseudoforest,
  kDisconnected,
  kWrongArity,
  kNoEligibleComponent,
  kZeroMeasurePiece,
  kNoCycle,
  kInsufficientDomination,
  kNotEnvyFreePartial,
  kGraphsEqual,
  kNotUndirected,
  kKTooSmall,
  kInvalidSubpartition,
  kSubpartitionTooSmall,
  kTooLarge,
  kInfeasible,
};

std::string_view errc_name(Errc code);

class FairDivError : public std::runtime_error {
 public:
  FairDivError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by topological sorting; carries one directed cycle as a node list
// (first node not repeated at the end).
class CycleFound : public FairDivError {
 public:
  explicit CycleFound(std::vector<int> cycle);
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_ERROR_HPP_
