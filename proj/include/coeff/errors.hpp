#pragma once

#include <stdexcept>

namespace coeff {

// An error type per failure contract, all catchable as std::runtime_error.

struct DegenerateGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidDuration : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidBand : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptySeries : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidNormalization : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidWeights : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RewardOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnpulledArm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Unreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidArm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnreachableHandover : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteLog : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coeff
