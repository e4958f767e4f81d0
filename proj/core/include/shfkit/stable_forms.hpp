#ifndef SHFKIT_STABLE_FORMS_HPP
#define SHFKIT_STABLE_FORMS_HPP

#include "shfkit/forms.hpp"

namespace shfkit {

/// Orbit classification of a 3-form in six dimensions. The two open orbits
/// are separated by the sign of the quartic invariant; everything on the
/// boundary reports NonStable.
enum class StabilityClass { PositiveOrbit, NegativeOrbit, NonStable };

/// Endomorphism S determined by  iota_v rho ^ rho ^ eta = eta(S v) * Omega
/// for all covectors eta. Quadratic in rho, scales as c^2/lambda under
/// (rho, Omega) -> (c rho, lambda Omega).
LinearMap s_endo(const KForm& rho, const KForm& omega6);

/// Scalar P with S^2 = P * Id; scales as c^4/lambda^2. Throws
/// InternalInconsistency if S^2 fails to be a multiple of the identity
/// beyond 1e-10 * max(1, |S|^2).
double quartic_invariant(const KForm& rho, const KForm& omega6);

/// Scale-invariant orbit classification with threshold
/// 1e-10 * |rho|_1^4 / |Omega|_1^2 on P.
StabilityClass stability_class(const KForm& rho, const KForm& omega6);

/// J = S / sqrt(-P) for a negative-orbit rho; J^2 = -Id. Replacing Omega by
/// lambda * Omega multiplies J by sign(lambda).
LinearMap complex_structure(const KForm& rho, const KForm& omega6);

/// rho_hat = rho(J., J., J.) = -rho(J., ., .); applying hat twice gives -rho.
KForm hat(const KForm& rho, const LinearMap& J, double tol = 1e-8);

}  // namespace shfkit

#endif
