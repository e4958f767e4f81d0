#include "shfkit/lie_algebra.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace shfkit {

Eigen::VectorXd LieAlgebraData::bracket_full(const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (int k = 0; k < dim; ++k) out[k] = x.dot(bracket[k] * y);
  return out;
}

Eigen::MatrixXd LieAlgebraData::ad(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd A(dim, dim);
  for (int k = 0; k < dim; ++k) A.row(k) = x.transpose() * bracket[k];
  return A;
}

Vec6 LieAlgebraData::bracket_m(const Vec6& x, const Vec6& y) const {
  Eigen::VectorXd xf = Eigen::VectorXd::Zero(dim), yf = Eigen::VectorXd::Zero(dim);
  for (int t = 0; t < kDim; ++t) {
    xf[m_indices[t]] = x[t];
    yf[m_indices[t]] = y[t];
  }
  Eigen::VectorXd br = bracket_full(xf, yf);
  Vec6 out;
  for (int t = 0; t < kDim; ++t) out[t] = br[m_indices[t]];
  return out;
}

Mat6 LieAlgebraData::ad_m(const Eigen::VectorXd& z_k_coords) const {
  Eigen::VectorXd z = Eigen::VectorXd::Zero(dim);
  for (int t = 0; t < static_cast<int>(k_indices.size()); ++t)
    z[k_indices[t]] = z_k_coords[t];
  Eigen::MatrixXd A = ad(z);
  Mat6 out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out(r, c) = A(m_indices[r], m_indices[c]);
  return out;
}

Eigen::MatrixXd LieAlgebraData::killing_from_constants() const {
  std::vector<Eigen::MatrixXd> ads(dim);
  for (int i = 0; i < dim; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(dim);
    ei[i] = 1.0;
    ads[i] = ad(ei);
  }
  Eigen::MatrixXd B(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) B(i, j) = B(j, i) = (ads[i] * ads[j]).trace();
  return B;
}

double LieAlgebraResiduals::max() const {
  return std::max({antisymmetry, jacobi, killing, reductivity, k_subalgebra});
}

LieAlgebraResiduals check_lie_algebra(const LieAlgebraData& alg) {
  LieAlgebraResiduals r;
  const int n = alg.dim;
  double cscale = 0.0;
  for (int k = 0; k < n; ++k) cscale = std::max(cscale, alg.bracket[k].cwiseAbs().maxCoeff());
  cscale = std::max(cscale, 1e-300);

  for (int k = 0; k < n; ++k)
    r.antisymmetry = std::max(
        r.antisymmetry, (alg.bracket[k] + alg.bracket[k].transpose()).norm() / cscale);

  // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples.
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      Eigen::VectorXd bij = alg.bracket_full(ei, ej);
      for (int k = j + 1; k < n; ++k) {
        Eigen::VectorXd ek = Eigen::VectorXd::Unit(n, k);
        Eigen::VectorXd cyc = alg.bracket_full(bij, ek) +
                              alg.bracket_full(alg.bracket_full(ej, ek), ei) +
                              alg.bracket_full(alg.bracket_full(ek, ei), ej);
        r.jacobi = std::max(r.jacobi, cyc.norm() / (cscale * cscale));
      }
    }
  }

  Eigen::MatrixXd B = alg.killing_from_constants();
  r.killing = (B - alg.killing).norm() / std::max(B.norm(), 1e-300);

  // [k, m] c m and [k, k] c k.
  for (int zk : alg.k_indices) {
    Eigen::VectorXd z = Eigen::VectorXd::Unit(n, zk);
    for (int mt : alg.m_indices) {
      Eigen::VectorXd br = alg.bracket_full(z, Eigen::VectorXd::Unit(n, mt));
      double kpart = 0.0;
      for (int ki : alg.k_indices) kpart += br[ki] * br[ki];
      r.reductivity = std::max(r.reductivity, std::sqrt(kpart) / cscale);
    }
    for (int zk2 : alg.k_indices) {
      Eigen::VectorXd br = alg.bracket_full(z, Eigen::VectorXd::Unit(n, zk2));
      double mpart = 0.0;
      for (int mi : alg.m_indices) mpart += br[mi] * br[mi];
      r.k_subalgebra = std::max(r.k_subalgebra, std::sqrt(mpart) / cscale);
    }
  }
  return r;
}

KForm ce_differential(const KForm& phi, const LieAlgebraData& alg) {
  if (phi.degree() == kDim) return KForm::zero(0);
  const auto& tab = MultiIndexTable::get();
  const int k = phi.degree();

  // iota_{[e_i, e_j]_m} phi for all basis pairs, indexed by pair mask.
  std::vector<KForm> contracted(kDim * kDim, KForm::zero(std::max(k - 1, 0)));
  if (k >= 1) {
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        contracted[i * kDim + j] =
            contract(alg.bracket_m(Vec6::Unit(i), Vec6::Unit(j)), phi);
  }

  KForm out = KForm::zero(k + 1);
  const auto& masks = tab.masks(k + 1);
  for (int p = 0; p < static_cast<int>(masks.size()); ++p) {
    auto idx = MultiIndexTable::indices(masks[p]);  // 1-based, ascending
    double total = 0.0;
    for (int a = 0; a < k + 1; ++a) {
      for (int b = a + 1; b < k + 1; ++b) {
        int sign = ((a + b) % 2 == 0) ? 1 : -1;
        std::uint8_t rest = static_cast<std::uint8_t>(
            masks[p] & ~(1u << (idx[a] - 1)) & ~(1u << (idx[b] - 1)));
        double val;
        if (k >= 1) {
          const KForm& ci = contracted[(idx[a] - 1) * kDim + (idx[b] - 1)];
          val = ci.coeffs()[tab.position(k - 1, rest)];
        } else {
          val = 0.0;  // d of a 0-form vanishes: no linear term in this calculus
        }
        total += sign * val;
      }
    }
    out.coeffs()[p] = total;
  }
  return out;
}

double check_invariance(const KForm& phi, const LieAlgebraData& alg) {
  const auto& tab = MultiIndexTable::get();
  const int k = phi.degree();
  if (k == 0 || alg.k_indices.empty()) return 0.0;

  double worst = 0.0;
  Eigen::VectorXd zk = Eigen::VectorXd::Zero(alg.k_indices.size());
  for (int z = 0; z < static_cast<int>(alg.k_indices.size()); ++z) {
    zk.setZero();
    zk[z] = 1.0;
    Mat6 A = alg.ad_m(zk);
    const auto& masks = tab.masks(k);
    Eigen::Matrix<double, 6, Eigen::Dynamic> args(6, k);
    for (int p = 0; p < static_cast<int>(masks.size()); ++p) {
      auto idx = MultiIndexTable::indices(masks[p]);
      double total = 0.0;
      for (int t = 0; t < k; ++t) {
        for (int c = 0; c < k; ++c) args.col(c) = Vec6::Unit(idx[c] - 1);
        args.col(t) = A.col(idx[t] - 1);
        total += eval(phi, args);
      }
      worst = std::max(worst, std::abs(total));
    }
  }
  return worst;
}

std::vector<KForm> invariant_forms(const LieAlgebraData& alg, int degree) {
  if (degree < 0 || degree > kDim) throw DegreeError("invariant_forms degree outside 0..6");
  const auto& tab = MultiIndexTable::get();
  const int n = tab.count(degree);
  if (degree == 0 || alg.k_indices.empty()) {
    std::vector<KForm> all;
    for (int q = 0; q < n; ++q) {
      KForm f = KForm::zero(degree);
      f.coeffs()[q] = 1.0;
      all.push_back(f);
    }
    return all;
  }

  const int nz = static_cast<int>(alg.k_indices.size());
  Eigen::MatrixXd M(nz * n, n);
  Eigen::Matrix<double, 6, Eigen::Dynamic> args(6, degree);
  for (int z = 0; z < nz; ++z) {
    Eigen::VectorXd zk = Eigen::VectorXd::Zero(nz);
    zk[z] = 1.0;
    Mat6 A = alg.ad_m(zk);
    for (int q = 0; q < n; ++q) {
      KForm eq = KForm::zero(degree);
      eq.coeffs()[q] = 1.0;
      const auto& masks = tab.masks(degree);
      for (int p = 0; p < n; ++p) {
        auto idx = MultiIndexTable::indices(masks[p]);
        double total = 0.0;
        for (int t = 0; t < degree; ++t) {
          for (int c = 0; c < degree; ++c) args.col(c) = Vec6::Unit(idx[c] - 1);
          args.col(t) = A.col(idx[t] - 1);
          total += eval(eq, args);
        }
        M(z * n + p, q) = total;
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  std::vector<KForm> basis;
  for (int i = 0; i < n; ++i) {
    double sv = (i < svd.singularValues().size()) ? svd.singularValues()[i] : 0.0;
    if (smax == 0.0 || sv <= 1e-9 * smax)
      basis.emplace_back(degree, Eigen::VectorXd(svd.matrixV().col(i)));
  }
  return basis;
}

LieAlgebraData abelian_algebra() {
  LieAlgebraData alg;
  alg.dim = kDim;
  alg.bracket.assign(kDim, Eigen::MatrixXd::Zero(kDim, kDim));
  alg.killing = Eigen::MatrixXd::Zero(kDim, kDim);
  alg.k_indices = {};
  alg.m_indices = {0, 1, 2, 3, 4, 5};
  alg.basis_labels = {"e1", "e2", "e3", "e4", "e5", "e6"};
  return alg;
}

}  // namespace shfkit
