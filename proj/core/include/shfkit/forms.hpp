#ifndef SHFKIT_FORMS_HPP
#define SHFKIT_FORMS_HPP

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <vector>

#include "shfkit/errors.hpp"
#include "shfkit/multi_index.hpp"

namespace shfkit {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using CVec6 = Eigen::Matrix<std::complex<double>, 6, 1>;

/// 6x6 matrix acting on the underlying vector space (S_rho, J, ad(z)|_m, ...).
using LinearMap = Mat6;

/// Degree-k alternating form on a fixed oriented R^6 with dense coefficients
/// over the lexicographically ordered strictly increasing multi-indices:
///   phi = sum_I coeffs[I] e^I,  no 1/k! factor.
/// Values are immutable in spirit: all operations return fresh forms.
template <typename Scalar>
class KFormT {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  KFormT() : degree_(0), c_(Coeffs::Zero(1)) {}

  KFormT(int degree, Coeffs coeffs) : degree_(check_degree(degree)), c_(std::move(coeffs)) {
    if (c_.size() != MultiIndexTable::get().count(degree_))
      throw DegreeError("coefficient vector length does not match C(6, degree)");
  }

  static KFormT zero(int degree) {
    return KFormT(degree, Coeffs::Zero(MultiIndexTable::get().count(check_degree(degree))));
  }

  static KFormT scalar(Scalar v) {
    Coeffs c(1);
    c[0] = v;
    return KFormT(0, c);
  }

  /// Basis k-form e^{i1...ik} (1-based ascending indices), scaled by coeff.
  static KFormT basis(std::initializer_list<int> indices, Scalar coeff = Scalar(1)) {
    std::vector<int> idx(indices);
    std::uint8_t m = MultiIndexTable::mask_of(idx);
    int k = static_cast<int>(idx.size());
    KFormT out = zero(k);
    out.c_[MultiIndexTable::get().position(k, m)] = coeff;
    return out;
  }

  int degree() const { return degree_; }
  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }

  Scalar coeff(std::initializer_list<int> indices) const {
    std::vector<int> idx(indices);
    std::uint8_t m = MultiIndexTable::mask_of(idx);
    if (static_cast<int>(idx.size()) != degree_)
      throw DegreeError("coefficient lookup with wrong multi-index length");
    return c_[MultiIndexTable::get().position(degree_, m)];
  }

  double norm() const { return c_.norm(); }
  double norm1() const { return c_.template lpNorm<1>(); }
  bool is_zero(double tol = 1e-12) const { return c_.norm() <= tol; }

  KFormT operator-() const { return KFormT(degree_, -c_); }
  KFormT& operator+=(const KFormT& o) {
    require_same_degree(o);
    c_ += o.c_;
    return *this;
  }
  KFormT& operator-=(const KFormT& o) {
    require_same_degree(o);
    c_ -= o.c_;
    return *this;
  }
  KFormT& operator*=(Scalar s) {
    c_ *= s;
    return *this;
  }

  friend KFormT operator+(KFormT a, const KFormT& b) { return a += b; }
  friend KFormT operator-(KFormT a, const KFormT& b) { return a -= b; }
  friend KFormT operator*(Scalar s, KFormT a) { return a *= s; }
  friend KFormT operator*(KFormT a, Scalar s) { return a *= s; }

 private:
  static int check_degree(int degree) {
    if (degree < 0 || degree > kDim) throw DegreeError("form degree outside 0..6");
    return degree;
  }
  void require_same_degree(const KFormT& o) const {
    if (degree_ != o.degree_) throw DegreeError("degree mismatch in form arithmetic");
  }

  int degree_;
  Coeffs c_;
};

using KForm = KFormT<double>;
using CForm = KFormT<std::complex<double>>;

/// Symmetric Gram matrix of an inner product on the underlying vector space.
struct MetricGram {
  Mat6 gram = Mat6::Identity();

  double symmetry_residual() const { return (gram - gram.transpose()).norm(); }
  bool is_positive_definite(double tol = 0.0) const;
};

// --- exterior algebra -------------------------------------------------------

template <typename Scalar>
KFormT<Scalar> wedge(const KFormT<Scalar>& a, const KFormT<Scalar>& b) {
  if (a.degree() + b.degree() > kDim)
    throw DegreeError("wedge degree overflow: " + std::to_string(a.degree()) + " + " +
                      std::to_string(b.degree()) + " > 6");
  const auto& tab = MultiIndexTable::get();
  KFormT<Scalar> out = KFormT<Scalar>::zero(a.degree() + b.degree());
  const auto& ma = tab.masks(a.degree());
  const auto& mb = tab.masks(b.degree());
  for (int p = 0; p < static_cast<int>(ma.size()); ++p) {
    Scalar ca = a.coeffs()[p];
    if (ca == Scalar(0)) continue;
    for (int q = 0; q < static_cast<int>(mb.size()); ++q) {
      if (ma[p] & mb[q]) continue;
      Scalar cb = b.coeffs()[q];
      if (cb == Scalar(0)) continue;
      int sign = merge_sign(ma[p], mb[q]);
      out.coeffs()[tab.position(out.degree(), ma[p] | mb[q])] +=
          static_cast<double>(sign) * ca * cb;
    }
  }
  return out;
}

/// Interior product iota_v phi; degree drops by one.
template <typename Scalar, typename VScalar>
KFormT<Scalar> contract(const Eigen::Matrix<VScalar, 6, 1>& v, const KFormT<Scalar>& phi) {
  if (phi.degree() < 1) throw DegreeError("contraction of a 0-form");
  const auto& tab = MultiIndexTable::get();
  KFormT<Scalar> out = KFormT<Scalar>::zero(phi.degree() - 1);
  const auto& masks = tab.masks(phi.degree());
  for (int p = 0; p < static_cast<int>(masks.size()); ++p) {
    Scalar c = phi.coeffs()[p];
    if (c == Scalar(0)) continue;
    std::uint8_t m = masks[p];
    for (int i = 0; i < kDim; ++i) {
      if (!(m & (1u << i))) continue;
      Scalar vi = Scalar(v[i]);
      if (vi == Scalar(0)) continue;
      int sign = (rank_in_mask(m, i) % 2 == 0) ? 1 : -1;
      out.coeffs()[tab.position(out.degree(), static_cast<std::uint8_t>(m & ~(1u << i)))] +=
          static_cast<double>(sign) * vi * c;
    }
  }
  return out;
}

/// Multilinear evaluation phi(v_1, ..., v_k); columns of `vectors` are the
/// arguments.
template <typename Scalar>
Scalar eval(const KFormT<Scalar>& phi,
            const Eigen::Matrix<Scalar, 6, Eigen::Dynamic>& vectors) {
  if (vectors.cols() != phi.degree())
    throw DegreeError("eval: argument count differs from form degree");
  if (phi.degree() == 0) return phi.coeffs()[0];
  const auto& tab = MultiIndexTable::get();
  const auto& masks = tab.masks(phi.degree());
  Scalar total(0);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub(phi.degree(), phi.degree());
  for (int p = 0; p < static_cast<int>(masks.size()); ++p) {
    Scalar c = phi.coeffs()[p];
    if (c == Scalar(0)) continue;
    auto idx = MultiIndexTable::indices(masks[p]);
    for (int r = 0; r < phi.degree(); ++r) sub.row(r) = vectors.row(idx[r] - 1);
    total += c * sub.determinant();
  }
  return total;
}

/// Pullback (A* phi)(v_1..v_k) = phi(A v_1, ..., A v_k).
KForm pullback(const LinearMap& A, const KForm& phi);
CForm pullback_complex(const Eigen::Matrix<std::complex<double>, 6, 6>& A, const CForm& phi);

/// Gram matrix of the metric-induced inner product on Lambda^k:
/// entry (I, J) = det of the (i in I, j in J) minor of gram^{-1}.
Eigen::MatrixXd lambda_gram(const MetricGram& g, int degree);

/// g-induced inner product of two equal-degree forms.
double inner(const KForm& phi, const KForm& chi, const MetricGram& g);

/// Hodge star defined by alpha ^ (*phi) = <alpha, phi>_g vol for all alpha of
/// the same degree as phi. `vol` must be a nonzero 6-form consistent with the
/// g-volume up to sign (relative tolerance 1e-6); callers pass omega^3/6.
KForm hodge_star(const KForm& phi, const MetricGram& g, const KForm& vol);

CForm complexify(const KForm& phi);
/// Real part; throws InternalInconsistency if the imaginary tail exceeds
/// tol * (1 + |phi|).
KForm real_part(const CForm& phi, double tol = 1e-10);

}  // namespace shfkit

#endif
