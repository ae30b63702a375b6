#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A denominator or radicand that must be nonzero vanished.
struct SingularValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interpolation nodes gave an ill-conditioned evaluation system.
struct DegenerateNodes : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvalues that should separate labels collided.
struct DegenerateSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reflected coefficient requested where only the continuity convention fixes a value.
struct AmbiguousValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutsideConfigurationSpace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Angle coordinates are undefined off the patch where all z_j are nonzero.
struct OutsidePatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace alcove
