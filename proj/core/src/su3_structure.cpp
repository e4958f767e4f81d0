#include "shfkit/su3_structure.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace shfkit {

namespace {

struct Checked {
  SU3Structure s;
  double P = 0.0;
  std::map<std::string, double> residuals;
  int sig_pos = 0, sig_neg = 0, sig_zero = 0;
  std::string first_error;  // empty if all checks passed
  double error_residual = 0.0;
};

Mat6 omega_matrix(const KForm& omega) {
  const auto& tab = MultiIndexTable::get();
  Mat6 W = Mat6::Zero();
  for (int p = 0; p < tab.count(2); ++p) {
    auto idx = MultiIndexTable::indices(tab.mask(2, p));
    W(idx[0] - 1, idx[1] - 1) = omega.coeffs()[p];
    W(idx[1] - 1, idx[0] - 1) = -omega.coeffs()[p];
  }
  return W;
}

Checked run_checks(const KForm& omega, const KForm& psi, double tol) {
  Checked out;
  if (omega.degree() != 2) throw DegreeError("omega must be a 2-form");
  if (psi.degree() != 3) throw DegreeError("psi must be a 3-form");

  const double omega_norm = omega.norm();
  const double psi_norm = psi.norm();

  KForm om3 = wedge(wedge(omega, omega), omega);
  double om3_scale = std::max(omega_norm * omega_norm * omega_norm, 1e-300);
  out.residuals["omega_cubed"] = om3.norm() / om3_scale;
  if (out.residuals["omega_cubed"] <= tol) {
    out.first_error = "DegenerateOmega";
    out.error_residual = out.residuals["omega_cubed"];
    return out;
  }
  KForm vol = (1.0 / 6.0) * om3;

  StabilityClass cls = stability_class(psi, vol);
  out.P = quartic_invariant(psi, vol);
  if (cls != StabilityClass::NegativeOrbit) {
    out.first_error = "NotNegativeOrbit";
    out.error_residual = out.P;
    return out;
  }
  LinearMap J = complex_structure(psi, vol);
  out.residuals["J_squared"] = (J * J + Mat6::Identity()).norm();

  double compat = wedge(omega, psi).norm() / std::max(omega_norm * psi_norm, 1e-300);
  out.residuals["compatibility"] = compat;
  if (compat > tol) {
    out.first_error = "CompatibilityError";
    out.error_residual = compat;
    return out;
  }

  KForm psi_hat = hat(psi, J);
  KForm lhs = wedge(psi, psi_hat);
  KForm rhs = (2.0 / 3.0) * om3;
  double ratio = lhs.coeffs()[0] / rhs.coeffs()[0];
  out.residuals["normalization"] = std::abs(ratio - 1.0);
  if (out.residuals["normalization"] > tol) {
    out.first_error = "NormalizationError";
    out.error_residual = ratio;
    return out;
  }

  Mat6 W = omega_matrix(omega);
  Mat6 G = W * J;
  double gsym = (G - G.transpose()).norm() / std::max(G.norm(), 1e-300);
  out.residuals["metric_symmetry"] = gsym;
  MetricGram g{0.5 * (G + G.transpose())};
  Eigen::SelfAdjointEigenSolver<Mat6> es(g.gram, Eigen::EigenvaluesOnly);
  double max_abs = es.eigenvalues().cwiseAbs().maxCoeff();
  for (int i = 0; i < kDim; ++i) {
    double ev = es.eigenvalues()[i];
    if (ev > tol * max_abs)
      ++out.sig_pos;
    else if (ev < -tol * max_abs)
      ++out.sig_neg;
    else
      ++out.sig_zero;
  }
  out.residuals["metric_min_eig"] = es.eigenvalues().minCoeff();
  if (gsym > tol || out.sig_pos != kDim) {
    out.first_error = "MetricError";
    out.error_residual = es.eigenvalues().minCoeff();
    return out;
  }

  out.s = SU3Structure{omega, psi, psi_hat, J, g, vol};
  return out;
}

}  // namespace

SU3Structure validate_su3(const KForm& omega, const KForm& psi, double tol) {
  Checked c = run_checks(omega, psi, tol);
  if (c.first_error.empty()) return c.s;
  if (c.first_error == "DegenerateOmega")
    throw DegenerateOmega("omega^3 vanishes", c.error_residual);
  if (c.first_error == "NotNegativeOrbit")
    throw NotNegativeOrbit("psi is not in the negative stable orbit (P >= 0)", c.error_residual);
  if (c.first_error == "CompatibilityError")
    throw CompatibilityError("omega ^ psi != 0", c.error_residual);
  if (c.first_error == "NormalizationError")
    throw NormalizationError("psi ^ psi_hat != (2/3) omega^3", c.error_residual);
  throw MetricError("induced bilinear form is not positive definite", c.error_residual);
}

ValidationReport validation_report(const KForm& omega, const KForm& psi, double tol) {
  ValidationReport rep;
  Checked c = run_checks(omega, psi, tol);
  rep.valid = c.first_error.empty();
  rep.P = c.P;
  rep.residuals = c.residuals;
  rep.signature_pos = c.sig_pos;
  rep.signature_neg = c.sig_neg;
  rep.signature_zero = c.sig_zero;
  rep.error = c.first_error;
  return rep;
}

std::vector<KForm> primitive11_basis(const SU3Structure& s) {
  const auto& tab = MultiIndexTable::get();
  const int n2 = tab.count(2);
  KForm om2 = wedge(s.omega, s.omega);

  // Constraints: kappa ^ omega^2 = 0 (one row) and J* kappa = kappa (15 rows).
  Eigen::MatrixXd M(1 + n2, n2);
  for (int q = 0; q < n2; ++q) {
    KForm eq = KForm::zero(2);
    eq.coeffs()[q] = 1.0;
    M(0, q) = wedge(eq, om2).coeffs()[0];
    KForm jq = pullback(s.J, eq);
    M.block(1, q, n2, 1) = jq.coeffs() - eq.coeffs();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  double smax = svd.singularValues()[0];
  std::vector<KForm> basis;
  for (int i = 0; i < n2; ++i) {
    double sv = (i < svd.singularValues().size()) ? svd.singularValues()[i] : 0.0;
    if (sv <= 1e-9 * smax) {
      basis.emplace_back(2, Eigen::VectorXd(svd.matrixV().col(i)));
    }
  }
  if (static_cast<int>(basis.size()) != 8)
    throw InternalInconsistency("primitive (1,1) space has unexpected dimension " +
                                std::to_string(basis.size()));
  return basis;
}

namespace {

/// Orthogonal projection of phi onto span(basis) w.r.t. the Lambda^k metric;
/// returns the coordinate vector.
Eigen::VectorXd project_coords(const KForm& phi, const std::vector<KForm >& basis,
                               const Eigen::MatrixXd& gram_k) {
  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXd B(phi.coeffs().size(), n);
  for (int j = 0; j < n; ++j) B.col(j) = basis[j].coeffs();
  Eigen::MatrixXd G = B.transpose() * gram_k * B;
  Eigen::VectorXd rhs = B.transpose() * (gram_k * phi.coeffs());
  return G.ldlt().solve(rhs);
}

}  // namespace

Decomp3 decompose3(const KForm& phi, const SU3Structure& s) {
  if (phi.degree() != 3) throw DegreeError("decompose3 expects a 3-form");
  Eigen::MatrixXd G3 = lambda_gram(s.g, 3);
  std::vector<KForm> basis{s.psi, s.psi_hat};
  for (int i = 1; i <= kDim; ++i) basis.push_back(wedge(KForm::basis({i}), s.omega));
  Eigen::VectorXd x = project_coords(phi, basis, G3);

  Decomp3 d;
  d.f1 = x[0];
  d.f2 = x[1];
  d.oneform_wedge_omega = KForm::zero(3);
  for (int i = 0; i < kDim; ++i) d.oneform_wedge_omega += x[2 + i] * basis[2 + i];
  d.primitive21 = phi - d.f1 * s.psi - d.f2 * s.psi_hat - d.oneform_wedge_omega;
  return d;
}

Decomp4 decompose4(const KForm& Phi, const SU3Structure& s) {
  if (Phi.degree() != 4) throw DegreeError("decompose4 expects a 4-form");
  Eigen::MatrixXd G4 = lambda_gram(s.g, 4);
  std::vector<KForm> basis{wedge(s.omega, s.omega)};
  for (int i = 1; i <= kDim; ++i) basis.push_back(wedge(KForm::basis({i}), s.psi));
  Eigen::VectorXd x = project_coords(Phi, basis, G4);

  Decomp4 d;
  d.f0 = x[0];
  d.oneform_wedge_psi = KForm::zero(4);
  for (int i = 0; i < kDim; ++i) d.oneform_wedge_psi += x[1 + i] * basis[1 + i];
  d.primitive11_wedge_omega = Phi - d.f0 * basis[0] - d.oneform_wedge_psi;
  return d;
}

}  // namespace shfkit
