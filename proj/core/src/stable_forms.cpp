#include "shfkit/stable_forms.hpp"

#include <cmath>

namespace shfkit {

namespace {

void require_inputs(const KForm& rho, const KForm& omega6) {
  if (rho.degree() != 3) throw DegreeError("stable-form operations expect a 3-form");
  if (omega6.degree() != kDim) throw VolumeError("reference volume must have degree 6");
  if (omega6.coeffs()[0] == 0.0) throw VolumeError("zero reference volume");
}

}  // namespace

LinearMap s_endo(const KForm& rho, const KForm& omega6) {
  require_inputs(rho, omega6);
  const double vol = omega6.coeffs()[0];
  const auto& tab = MultiIndexTable::get();
  LinearMap S;
  for (int i = 0; i < kDim; ++i) {
    Vec6 ei = Vec6::Zero();
    ei[i] = 1.0;
    KForm five = wedge(contract(ei, rho), rho);
    // (five ^ e^j) / Omega gives row j of column i.
    const auto& m5 = tab.masks(5);
    for (int j = 0; j < kDim; ++j) {
      std::uint8_t mj = static_cast<std::uint8_t>(1u << j);
      std::uint8_t compl5 = static_cast<std::uint8_t>(~mj & 0x3f);
      double c5 = five.coeffs()[tab.position(5, compl5)];
      S(j, i) = merge_sign(compl5, mj) * c5 / vol;
    }
    (void)m5;
  }
  return S;
}

double quartic_invariant(const KForm& rho, const KForm& omega6) {
  LinearMap S = s_endo(rho, omega6);
  Mat6 S2 = S * S;
  double P = S2.trace() / 6.0;
  double resid = (S2 - P * Mat6::Identity()).norm();
  double scale = std::max(1.0, S.squaredNorm());
  if (resid > 1e-10 * scale)
    throw InternalInconsistency("S^2 is not a multiple of the identity", resid);
  return P;
}

StabilityClass stability_class(const KForm& rho, const KForm& omega6) {
  require_inputs(rho, omega6);
  double P = quartic_invariant(rho, omega6);
  double n1 = rho.norm1();
  double v1 = omega6.norm1();
  double threshold = 1e-10 * (n1 * n1 * n1 * n1) / (v1 * v1);
  if (P > threshold) return StabilityClass::PositiveOrbit;
  if (P < -threshold) return StabilityClass::NegativeOrbit;
  return StabilityClass::NonStable;
}

LinearMap complex_structure(const KForm& rho, const KForm& omega6) {
  if (stability_class(rho, omega6) != StabilityClass::NegativeOrbit)
    throw NotNegativeOrbit("3-form is not in the negative stable orbit",
                           quartic_invariant(rho, omega6));
  LinearMap S = s_endo(rho, omega6);
  double P = quartic_invariant(rho, omega6);
  return S / std::sqrt(-P);
}

KForm hat(const KForm& rho, const LinearMap& J, double tol) {
  double resid = (J * J + Mat6::Identity()).norm();
  if (resid > tol * (1.0 + J.squaredNorm()))
    throw NotComplexStructure("J^2 != -Id", resid);
  if (rho.degree() != 3) throw DegreeError("hat expects a 3-form");
  return pullback(J, rho);
}

}  // namespace shfkit
