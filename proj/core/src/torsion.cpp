#include "shfkit/torsion.hpp"

#include <Eigen/QR>
#include <cmath>

namespace shfkit {

ShfResiduals check_shf(const SU3Structure& s, const LieAlgebraData& alg) {
  return ShfResiduals{ce_differential(s.omega, alg).norm(),
                      ce_differential(s.psi, alg).norm()};
}

KForm torsion_form(const SU3Structure& s, const LieAlgebraData& alg, double tol) {
  KForm dpsihat = ce_differential(s.psi_hat, alg);
  std::vector<KForm> prim = primitive11_basis(s);

  Eigen::MatrixXd A(dpsihat.coeffs().size(), prim.size());
  for (int j = 0; j < static_cast<int>(prim.size()); ++j)
    A.col(j) = wedge(prim[j], s.omega).coeffs();
  Eigen::VectorXd x = A.colPivHouseholderQr().solve(dpsihat.coeffs());
  double resid = (A * x - dpsihat.coeffs()).norm();
  if (resid > tol * (1.0 + dpsihat.norm()))
    throw NotSHFConsistent("d psi_hat has components outside primitive(1,1) ^ omega", resid);

  KForm sigma = KForm::zero(2);
  for (int j = 0; j < static_cast<int>(prim.size()); ++j) sigma += x[j] * prim[j];
  return sigma;
}

DsigmaSplit dsigma_split(const KForm& sigma, const SU3Structure& s,
                         const LieAlgebraData& alg, double tol) {
  if (sigma.degree() != 2) throw DegreeError("dsigma_split expects a 2-form");
  KForm dsigma = ce_differential(sigma, alg);
  Decomp3 d = decompose3(dsigma, s);
  double scale = 1.0 + dsigma.norm();
  double forbidden = std::hypot(d.f2 * s.psi_hat.norm(), d.oneform_wedge_omega.norm());
  if (forbidden > tol * scale)
    throw TorsionDecompositionError(
        "d sigma has components outside R psi + primitive(2,1)+(1,2)", forbidden);
  return DsigmaSplit{d.f1, d.primitive21};
}

TorsionReport ricci_report(const SU3Structure& s, const LieAlgebraData& alg, double tol) {
  TorsionReport rep;
  ShfResiduals shf = check_shf(s, alg);
  rep.residuals["domega"] = shf.domega;
  rep.residuals["dpsi"] = shf.dpsi;

  KForm dpsihat = ce_differential(s.psi_hat, alg);
  const double flag_tol = 1e-8 * (1.0 + dpsihat.norm());

  rep.sigma = torsion_form(s, alg, tol);
  rep.sigma_norm2 = inner(rep.sigma, rep.sigma, s.g);
  rep.residuals["sigma_solve"] = (wedge(rep.sigma, s.omega) - dpsihat).norm();

  // Coclosedness witnesses: *sigma = -sigma ^ omega and d(*sigma) = 0.
  KForm star_sigma = hodge_star(rep.sigma, s.g, s.vol);
  rep.residuals["star_sigma_identity"] = (star_sigma + wedge(rep.sigma, s.omega)).norm();
  rep.residuals["d_star_sigma"] = ce_differential(star_sigma, alg).norm();

  KForm dsigma = ce_differential(rep.sigma, alg);
  Decomp3 split = decompose3(dsigma, s);
  rep.nu = split.primitive21;
  rep.residuals["dsigma_f2"] = std::abs(split.f2);
  rep.residuals["dsigma_oneform"] = split.oneform_wedge_omega.norm();
  rep.residuals["f1_identity"] = std::abs(split.f1 - rep.sigma_norm2 / 4.0);

  rep.scal = -rep.sigma_norm2 / 2.0;
  rep.ric0_plus_rep = 0.25 * hodge_star(wedge(rep.sigma, rep.sigma), s.g, s.vol) +
                      (rep.sigma_norm2 / 12.0) * s.omega;
  rep.ric0_minus_rep = 2.0 * rep.nu;

  double sigma_norm = std::sqrt(std::max(rep.sigma_norm2, 0.0));
  rep.torsion_free = sigma_norm <= flag_tol;
  double nu_norm = std::sqrt(std::max(inner(rep.nu, rep.nu, s.g), 0.0));
  rep.j_hermitian_ricci = nu_norm <= flag_tol;
  rep.residuals["nu_norm"] = nu_norm;
  return rep;
}

}  // namespace shfkit
