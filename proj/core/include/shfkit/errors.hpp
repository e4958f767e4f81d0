#ifndef SHFKIT_ERRORS_HPP
#define SHFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shfkit {

/// Base class of all shfkit exceptions. `residual` carries the measured
/// violation magnitude where one exists, NaN otherwise.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg, double residual = nan_residual())
      : std::runtime_error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  static double nan_residual();
  double residual_;
};

struct DegreeError : Error {
  using Error::Error;
};

struct VolumeError : Error {
  using Error::Error;
};

struct MetricError : Error {
  using Error::Error;
};

struct NotNegativeOrbit : Error {
  using Error::Error;
};

struct NotComplexStructure : Error {
  using Error::Error;
};

/// S_rho^2 failed to be a multiple of the identity: a broken build, never
/// valid input.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct DegenerateOmega : Error {
  using Error::Error;
};

struct CompatibilityError : Error {
  using Error::Error;
};

struct NormalizationError : Error {
  using Error::Error;
};

struct NotSHFConsistent : Error {
  using Error::Error;
};

struct TorsionDecompositionError : Error {
  using Error::Error;
};

struct NotAdmissible : Error {
  using Error::Error;
};

struct RootNormalizationError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace shfkit

#endif
