#include "shfkit/forms.hpp"

#include <cmath>
#include <limits>

namespace shfkit {

double Error::nan_residual() { return std::numeric_limits<double>::quiet_NaN(); }

bool MetricGram::is_positive_definite(double tol) const {
  Eigen::SelfAdjointEigenSolver<Mat6> es(0.5 * (gram + gram.transpose()),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > tol;
}

namespace {

template <typename Scalar>
KFormT<Scalar> pullback_impl(const Eigen::Matrix<Scalar, 6, 6>& A, const KFormT<Scalar>& phi) {
  const auto& tab = MultiIndexTable::get();
  const int k = phi.degree();
  KFormT<Scalar> out = KFormT<Scalar>::zero(k);
  if (k == 0) {
    out.coeffs()[0] = phi.coeffs()[0];
    return out;
  }
  const auto& masks = tab.masks(k);
  Eigen::Matrix<Scalar, 6, Eigen::Dynamic> cols(6, k);
  for (int q = 0; q < static_cast<int>(masks.size()); ++q) {
    auto jdx = MultiIndexTable::indices(masks[q]);
    for (int c = 0; c < k; ++c) cols.col(c) = A.col(jdx[c] - 1);
    out.coeffs()[q] = eval(phi, cols);
  }
  return out;
}

}  // namespace

KForm pullback(const LinearMap& A, const KForm& phi) { return pullback_impl<double>(A, phi); }

CForm pullback_complex(const Eigen::Matrix<std::complex<double>, 6, 6>& A, const CForm& phi) {
  return pullback_impl<std::complex<double>>(A, phi);
}

Eigen::MatrixXd lambda_gram(const MetricGram& g, int degree) {
  if (degree < 0 || degree > kDim) throw DegreeError("lambda_gram degree outside 0..6");
  Mat6 ginv = g.gram.inverse();
  const auto& tab = MultiIndexTable::get();
  const auto& masks = tab.masks(degree);
  const int n = tab.count(degree);
  Eigen::MatrixXd G(n, n);
  if (degree == 0) {
    G(0, 0) = 1.0;
    return G;
  }
  Eigen::MatrixXd sub(degree, degree);
  for (int p = 0; p < n; ++p) {
    auto I = MultiIndexTable::indices(masks[p]);
    for (int q = 0; q < n; ++q) {
      auto J = MultiIndexTable::indices(masks[q]);
      for (int r = 0; r < degree; ++r)
        for (int c = 0; c < degree; ++c) sub(r, c) = ginv(I[r] - 1, J[c] - 1);
      G(p, q) = sub.determinant();
    }
  }
  return G;
}

double inner(const KForm& phi, const KForm& chi, const MetricGram& g) {
  if (phi.degree() != chi.degree())
    throw DegreeError("inner product of forms of different degree");
  Eigen::MatrixXd G = lambda_gram(g, phi.degree());
  return phi.coeffs().dot(G * chi.coeffs());
}

KForm hodge_star(const KForm& phi, const MetricGram& g, const KForm& vol) {
  if (vol.degree() != kDim) throw VolumeError("volume form must have degree 6");
  const double c = vol.coeffs()[0];
  if (c == 0.0) throw VolumeError("zero volume form");
  const double detg = g.gram.determinant();
  if (!(detg > 0.0) || !g.is_positive_definite())
    throw MetricError("Hodge star requires a positive definite metric", detg);
  // vol must agree with the metric volume up to sign.
  const double consistency = std::abs(c * c / detg - 1.0);
  if (consistency > 1e-6)
    throw VolumeError("volume form inconsistent with the metric volume", consistency);

  const auto& tab = MultiIndexTable::get();
  const int k = phi.degree();
  Eigen::MatrixXd G = lambda_gram(g, k);
  Eigen::VectorXd paired = G * phi.coeffs();

  KForm out = KForm::zero(kDim - k);
  const auto& masks = tab.masks(k);
  for (int p = 0; p < static_cast<int>(masks.size()); ++p) {
    std::uint8_t m = masks[p];
    std::uint8_t mc = static_cast<std::uint8_t>(~m & 0x3f);
    int sign = merge_sign(m, mc);
    out.coeffs()[tab.position(kDim - k, mc)] = sign * c * paired[p];
  }
  return out;
}

CForm complexify(const KForm& phi) {
  CForm out = CForm::zero(phi.degree());
  out.coeffs() = phi.coeffs().cast<std::complex<double>>();
  return out;
}

KForm real_part(const CForm& phi, double tol) {
  double imag_norm = phi.coeffs().imag().norm();
  if (imag_norm > tol * (1.0 + phi.coeffs().norm()))
    throw InternalInconsistency("form expected real has imaginary tail", imag_norm);
  return KForm(phi.degree(), phi.coeffs().real());
}

}  // namespace shfkit
