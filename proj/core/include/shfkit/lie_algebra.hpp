#ifndef SHFKIT_LIE_ALGEBRA_HPP
#define SHFKIT_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "shfkit/forms.hpp"

namespace shfkit {

/// Structure constants of a real Lie algebra g with a distinguished reductive
/// split g = k + m, dim(m) = 6. The m basis vectors, in the order listed by
/// `m_indices`, are identified with e_1..e_6 of the forms layer.
///
/// Bracket convention: [X_i, X_j] = sum_k c(i,j,k) X_k with c(i,j,k) stored
/// as bracket[k](i,j).
struct LieAlgebraData {
  int dim = 0;
  std::vector<Eigen::MatrixXd> bracket;  // dim matrices of size dim x dim
  Eigen::MatrixXd killing;               // dim x dim, from tr(ad ad)
  std::vector<int> k_indices;
  std::vector<int> m_indices;            // length 6
  std::vector<std::string> basis_labels;

  double c(int i, int j, int k) const { return bracket[k](i, j); }

  /// Full bracket of coordinate vectors.
  Eigen::VectorXd bracket_full(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// ad(x) as a dim x dim matrix.
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

  /// m-component (in the e_1..e_6 coordinates) of [x, y] for x, y in m.
  Vec6 bracket_m(const Vec6& x, const Vec6& y) const;

  /// Restriction of ad(z) to m -> m for z given in k-coordinates
  /// (meaningful thanks to reductivity [k, m] c m).
  Mat6 ad_m(const Eigen::VectorXd& z_k_coords) const;

  /// Killing form recomputed from the structure constants.
  Eigen::MatrixXd killing_from_constants() const;
};

/// Residuals of the structural invariants: antisymmetry, Jacobi identity,
/// stored-vs-recomputed Killing form, reductivity [k, m] c m, and k being a
/// subalgebra. All should be <= ~1e-10 for valid data.
struct LieAlgebraResiduals {
  double antisymmetry = 0.0;
  double jacobi = 0.0;
  double killing = 0.0;
  double reductivity = 0.0;
  double k_subalgebra = 0.0;
  double max() const;
};
LieAlgebraResiduals check_lie_algebra(const LieAlgebraData& alg);

/// Chevalley-Eilenberg (Koszul) differential of an invariant form on m:
///   (d phi)(X_0..X_k) = sum_{i<j} (-1)^{i+j} phi([X_i,X_j]_m, X_0,..^i..^j..,X_k).
/// Contractually meaningful (d^2 = 0, invariance preserved) only for
/// Ad(K)-invariant phi; the formula is computed for any input. A 6-form maps
/// to the zero 0-form.
KForm ce_differential(const KForm& phi, const LieAlgebraData& alg);

/// Invariance defect: max over isotropy generators Z and basis arguments of
/// |sum_t phi(X_1, .., [Z, X_t]_m, .., X_k)|. Zero (up to tolerance) means
/// Ad(K)-invariant (for connected K).
double check_invariance(const KForm& phi, const LieAlgebraData& alg);

/// Basis of the space of isotropy-invariant k-forms on m (null space of the
/// k-action, singular values thresholded at 1e-9 relative).
std::vector<KForm> invariant_forms(const LieAlgebraData& alg, int degree);

/// The 6-dimensional abelian algebra with k = {}; d == 0. Used by tests and
/// as the flat reference model.
LieAlgebraData abelian_algebra();

}  // namespace shfkit

#endif
