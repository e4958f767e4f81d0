#ifndef SHFKIT_SU3_STRUCTURE_HPP
#define SHFKIT_SU3_STRUCTURE_HPP

#include <map>
#include <string>
#include <vector>

#include "shfkit/forms.hpp"
#include "shfkit/stable_forms.hpp"

namespace shfkit {

/// Validated SU(3)-structure: compatible normalized pair (omega, psi) with
/// the derived complex structure J, psi_hat = J psi, metric g = omega(., J.)
/// and the volume form omega^3/6. Immutable after validation.
struct SU3Structure {
  KForm omega;
  KForm psi;
  KForm psi_hat;
  LinearMap J;
  MetricGram g;
  KForm vol;
};

/// Assemble and check a structure from the defining pair. Residuals are
/// normalized by the input magnitudes and compared against `tol`.
/// Throws, in this order of checks:
///   DegenerateOmega       omega^3 = 0
///   NotNegativeOrbit      P(psi) >= 0 w.r.t. omega^3/6
///   CompatibilityError    omega ^ psi != 0
///   NormalizationError    psi ^ psi_hat != (2/3) omega^3; the carried
///                         residual is the measured ratio (psi^psi_hat)/((2/3)omega^3)
///   MetricError           g = omega(., J.) not positive definite
SU3Structure validate_su3(const KForm& omega, const KForm& psi, double tol = 1e-9);

/// Non-throwing variant used by the CLI `verify` report.
struct ValidationReport {
  bool valid = false;
  double P = 0.0;                            // quartic invariant w.r.t. omega^3/6
  std::map<std::string, double> residuals;   // named, magnitude-normalized
  int signature_pos = 0, signature_neg = 0, signature_zero = 0;
  std::string error;                         // first failed check, empty if valid
};
ValidationReport validation_report(const KForm& omega, const KForm& psi, double tol = 1e-9);

/// Basis (always of length 8) of the primitive (1,1) 2-forms
/// { kappa : kappa ^ omega^2 = 0, kappa(J., J.) = kappa }.
std::vector<KForm> primitive11_basis(const SU3Structure& s);

/// Components of a 3-form in the splitting
/// R psi + R psi_hat + primitive (2,1)+(1,2) + Lambda^1 ^ omega.
struct Decomp3 {
  double f1 = 0.0;
  double f2 = 0.0;
  KForm primitive21 = KForm::zero(3);
  KForm oneform_wedge_omega = KForm::zero(3);
};

/// Components of a 4-form in the splitting
/// R omega^2 + primitive (1,1) ^ omega + Lambda^1 ^ psi.
struct Decomp4 {
  double f0 = 0.0;
  KForm primitive11_wedge_omega = KForm::zero(4);
  KForm oneform_wedge_psi = KForm::zero(4);
};

/// g-orthogonal projections onto the summands; the pieces always sum back to
/// the input.
Decomp3 decompose3(const KForm& phi, const SU3Structure& s);
Decomp4 decompose4(const KForm& Phi, const SU3Structure& s);

}  // namespace shfkit

#endif
