#pragma once

#include <stdexcept>
#include <string>

namespace gg2x {

/// Balancing produced a non-positive or non-integer expansion order.
struct NoIntegerBalance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A symbolic operation was asked for outside the shapes this engine models
/// (e.g. an ansatz order other than 1 or 2, or a non-monomial square root).
struct UnsupportedForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation hit (or came numerically indistinguishable from) a pole of the
/// closed-form profile.
struct SingularPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters violate the sign condition of the requested phi case
/// (trig needs lambda*mu > 0, hyperbolic lambda*mu < 0, rational mu = 0).
struct CaseMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// kappa^2 evaluated negative for the chosen parameters, so no real wave
/// speed exists for this solution set.
struct ComplexWaveSpeed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// phi vanished while the profile carries phi^{-1}/phi^{-2} terms.
struct PoleOfInverse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A verification grid with fewer than five points per axis cannot support
/// the interior finite-difference stencils.
struct DegenerateGrid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gg2x
