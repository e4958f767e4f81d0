#ifndef SHFKIT_TORSION_HPP
#define SHFKIT_TORSION_HPP

#include <map>
#include <string>

#include "shfkit/lie_algebra.hpp"
#include "shfkit/su3_structure.hpp"

namespace shfkit {

/// Closedness residuals |d omega| and |d psi| (coefficient norms). Both below
/// tolerance certifies the structure symplectic half-flat on the algebra.
struct ShfResiduals {
  double domega = 0.0;
  double dpsi = 0.0;
};
ShfResiduals check_shf(const SU3Structure& s, const LieAlgebraData& alg);

/// The intrinsic torsion form: the unique primitive (1,1) 2-form sigma with
/// d psi_hat = sigma ^ omega, found by a least-squares solve over the
/// 8-dimensional primitive basis. Throws NotSHFConsistent if the solve
/// residual exceeds tol * (1 + |d psi_hat|).
KForm torsion_form(const SU3Structure& s, const LieAlgebraData& alg, double tol = 1e-9);

/// Split of d sigma: the psi-coefficient and the primitive (2,1)+(1,2) part.
/// For genuine SHF input the psi_hat and Lambda^1 ^ omega components vanish;
/// nonzero forbidden components raise TorsionDecompositionError. The returned
/// coefficient always satisfies f1 = |sigma|^2 / 4.
struct DsigmaSplit {
  double coeff = 0.0;
  KForm nu = KForm::zero(3);
};
DsigmaSplit dsigma_split(const KForm& sigma, const SU3Structure& s,
                         const LieAlgebraData& alg, double tol = 1e-9);

/// Full torsion/curvature summary of an SHF structure.
struct TorsionReport {
  KForm sigma = KForm::zero(2);
  double sigma_norm2 = 0.0;
  KForm nu = KForm::zero(3);
  double scal = 0.0;                     // -sigma_norm2 / 2 by construction
  KForm ric0_plus_rep = KForm::zero(2);  // (1/4)*(sigma^sigma) + (1/12)|sigma|^2 omega
  KForm ric0_minus_rep = KForm::zero(3); // 2 nu
  bool torsion_free = false;
  bool j_hermitian_ricci = false;
  std::map<std::string, double> residuals;
};
TorsionReport ricci_report(const SU3Structure& s, const LieAlgebraData& alg,
                           double tol = 1e-9);

}  // namespace shfkit

#endif
