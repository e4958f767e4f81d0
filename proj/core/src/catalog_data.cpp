#include <Eigen/QR>
#include <cmath>
#include <complex>

#include "shfkit/catalog.hpp"

// Defining matrix representations of the two catalog algebras and their
// conversion to real structure constants.
//
// Conventions, fixed once and for all:
//  * root vectors E_gamma are normalized against the Killing form,
//    B(E_gamma, E_{-gamma}) = 1, with all N_{gamma,gamma'} real;
//  * the real basis of m is v_gamma = E_gamma + conj(E_gamma),
//    w_gamma = i (E_gamma - conj(E_gamma)) for gamma in
//    {alpha, beta, alpha+beta}, ordered (v_a, w_a, v_b, w_b, v_ab, w_ab);
//  * alpha is the compact root (conj E_alpha = -E_{-alpha}); beta and
//    alpha+beta are noncompact (conj E_gamma = +E_{-gamma}).

namespace shfkit {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

template <int N>
using MatC = Eigen::Matrix<cd, N, N>;
template <int N>
using VecC = Eigen::Matrix<cd, N, 1>;

template <int N>
Eigen::VectorXd realify(const MatC<N>& X) {
  Eigen::VectorXd v(2 * N * N);
  int t = 0;
  for (int c = 0; c < N; ++c)
    for (int r = 0; r < N; ++r) {
      v[t++] = X(r, c).real();
      v[t++] = X(r, c).imag();
    }
  return v;
}

/// Expansion of matrices in a fixed real-span basis via least squares.
template <int N>
class BasisExpander {
 public:
  explicit BasisExpander(const std::vector<MatC<N>>& basis) : basis_(basis) {
    Eigen::MatrixXd M(2 * N * N, basis.size());
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) M.col(j) = realify<N>(basis[j]);
    qr_.compute(M);
    M_ = M;
  }

  Eigen::VectorXd expand(const MatC<N>& X, double tol = 1e-10) const {
    Eigen::VectorXd rhs = realify<N>(X);
    Eigen::VectorXd x = qr_.solve(rhs);
    double resid = (M_ * x - rhs).norm();
    if (resid > tol * (1.0 + rhs.norm()))
      throw InternalInconsistency("matrix does not lie in the algebra span", resid);
    return x;
  }

  const std::vector<MatC<N>>& basis() const { return basis_; }

 private:
  std::vector<MatC<N>> basis_;
  Eigen::MatrixXd M_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

template <int N>
LieAlgebraData constants_from_basis(const std::vector<MatC<N>>& basis, int k_count,
                                    std::vector<std::string> labels) {
  BasisExpander<N> ex(basis);
  const int n = static_cast<int>(basis.size());
  LieAlgebraData alg;
  alg.dim = n;
  alg.bracket.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      MatC<N> comm = basis[i] * basis[j] - basis[j] * basis[i];
      Eigen::VectorXd coords = ex.expand(comm);
      for (int k = 0; k < n; ++k) {
        alg.bracket[k](i, j) = coords[k];
        alg.bracket[k](j, i) = -coords[k];
      }
    }
  }
  alg.killing = alg.killing_from_constants();
  for (int i = 0; i < k_count; ++i) alg.k_indices.push_back(i);
  for (int i = k_count; i < n; ++i) alg.m_indices.push_back(i);
  alg.basis_labels = std::move(labels);
  return alg;
}

/// B(E_gamma, E_{-gamma}) recovered from the real Killing form:
/// -(B(v,v)+B(w,w))/4 for a compact root, +(B(v,v)+B(w,w))/4 otherwise.
void check_root_normalization(const LieAlgebraData& alg) {
  static const bool compact[3] = {true, false, false};
  for (int r = 0; r < 3; ++r) {
    int iv = alg.m_indices[2 * r];
    int iw = alg.m_indices[2 * r + 1];
    double s = alg.killing(iv, iv) + alg.killing(iw, iw);
    double val = compact[r] ? -s / 4.0 : s / 4.0;
    if (std::abs(val - 1.0) > 1e-9)
      throw RootNormalizationError(
          "B(E_gamma, E_{-gamma}) != 1 for root index " + std::to_string(r), val);
  }
}

/// Complex dual 1-forms of the root vectors in the real m-coordinates:
/// E^gamma = v^gamma + i w^gamma always; E^{-gamma} is -v^gamma + i w^gamma
/// for the compact root and v^gamma - i w^gamma for the noncompact ones.
CForm dual_root_form(int root /*0:alpha 1:beta 2:alpha+beta*/, bool negative) {
  static const bool compact[3] = {true, false, false};
  CForm v = complexify(KForm::basis({2 * root + 1}));
  CForm w = complexify(KForm::basis({2 * root + 2}));
  if (!negative) return v + I * w;
  return compact[root] ? CForm(I * w - v) : CForm(v - I * w);
}

KForm reference_volume() {
  CForm prod = CForm::scalar(I);
  for (int r = 0; r < 3; ++r)
    prod = wedge(prod, wedge(dual_root_form(r, false), dual_root_form(r, true)));
  return real_part(prod);
}

/// Map on m induced by an algebra map X -> image(X): expand images of the
/// m basis, require the k components to vanish.
template <int N>
Mat6 induced_m_map(const BasisExpander<N>& ex, const LieAlgebraData& alg,
                   const std::vector<MatC<N>>& m_images) {
  Mat6 out;
  for (int c = 0; c < kDim; ++c) {
    Eigen::VectorXd coords = ex.expand(m_images[c]);
    for (int ki : alg.k_indices)
      if (std::abs(coords[ki]) > 1e-10)
        throw InternalInconsistency("induced map does not preserve m", coords[ki]);
    for (int r = 0; r < kDim; ++r) out(r, c) = coords[alg.m_indices[r]];
  }
  return out;
}

double extract_n2(const LieAlgebraData& alg) {
  // [v_alpha, v_beta] = N_{alpha,beta} v_{alpha+beta} in both catalog algebras.
  int iva = alg.m_indices[0], ivb = alg.m_indices[2], ivab = alg.m_indices[4];
  double n = alg.c(iva, ivb, ivab);
  return n * n;
}

GeneratedFamily regenerate_su21() {
  using M3 = MatC<3>;
  auto E = [](int r, int c) {
    M3 m = M3::Zero();
    m(r, c) = 1.0;
    return m;
  };
  const double s = 1.0 / std::sqrt(6.0);
  M3 Ea = s * E(0, 1), Ema = s * E(1, 0);
  M3 Eb = s * E(1, 2), Emb = s * E(2, 1);
  M3 Eab = s * E(0, 2), Emab = s * E(2, 0);

  M3 z1 = M3::Zero(), z2 = M3::Zero();
  z1(0, 0) = I;
  z1(2, 2) = -I;
  z2(1, 1) = I;
  z2(2, 2) = -I;

  std::vector<M3> basis{
      z1, z2,
      Ea - Ema,      I * (Ea + Ema),    // v_alpha, w_alpha (compact)
      Eb + Emb,      I * (Eb - Emb),    // v_beta, w_beta
      Eab + Emab,    I * (Eab - Emab),  // v_{alpha+beta}, w_{alpha+beta}
  };
  // Real-form sanity: every basis element satisfies  X^* H + H X = 0  with
  // H = diag(1, 1, -1).
  Eigen::Matrix3d H = Eigen::Vector3d(1, 1, -1).asDiagonal();
  for (const auto& X : basis) {
    double r = (X.adjoint() * H + H * X).norm();
    if (r > 1e-12) throw InternalInconsistency("basis element not in su(2,1)", r);
  }

  GeneratedFamily fam;
  fam.alg = constants_from_basis<3>(basis, 2,
                                    {"z1", "z2", "v_alpha", "w_alpha", "v_beta", "w_beta",
                                     "v_alphabeta", "w_alphabeta"});
  check_root_normalization(fam.alg);

  fam.root.family = Family::SU21;
  fam.root.n2 = extract_n2(fam.alg);
  fam.root.omega_ref = reference_volume();

  BasisExpander<3> ex(basis);
  // theta: conjugation of sl(3,C) w.r.t. the split real form, theta(X) = conj(X).
  std::vector<M3> theta_images, swap_images;
  M3 u = M3::Zero();
  u(0, 1) = 1.0;
  u(1, 0) = 1.0;
  u(2, 2) = -1.0;
  for (int c = 0; c < kDim; ++c) {
    const M3& X = basis[2 + c];
    theta_images.push_back(X.conjugate());
    swap_images.push_back(u * X * u);  // u is an involution
  }
  fam.root.theta_m = induced_m_map<3>(ex, fam.alg, theta_images);
  fam.root.swap_m = induced_m_map<3>(ex, fam.alg, swap_images);
  return fam;
}

GeneratedFamily regenerate_so41() {
  using M5 = MatC<5>;
  using V5 = VecC<5>;
  Eigen::Matrix<double, 5, 1> qdiag;
  qdiag << 1, 1, 1, 1, -1;
  Eigen::Matrix<double, 5, 5> Q = qdiag.asDiagonal();
  auto X = [&Q](const V5& u, const V5& v) -> M5 {
    return u * (Q * v).transpose() - v * (Q * u).transpose();
  };
  V5 e1 = V5::Unit(0), e2 = V5::Unit(1), e3 = V5::Unit(2), e4 = V5::Unit(3), e5 = V5::Unit(4);
  V5 f1 = e1 - I * e2, f1b = e1 + I * e2;
  V5 f2 = e3 - I * e4, f2b = e3 + I * e4;

  const double c24 = 1.0 / std::sqrt(24.0);
  const double c12 = 1.0 / std::sqrt(12.0);
  // E_alpha = c24 X(f1, f2b),  E_{-alpha} = -c24 X(f1b, f2)        (compact)
  // E_beta = c12 X(f2, e5),    E_{-beta} = c12 X(f2b, e5)          (noncompact)
  // E_{a+b} = c12 X(f1, e5),   E_{-a-b} = c12 X(f1b, e5)           (noncompact)
  // E_{a+2b} = c24 X(f1, f2),  E_{-a-2b} = -c24 X(f1b, f2b)        (k root)
  M5 Ea = c24 * X(f1, f2b), Ema = -c24 * X(f1b, f2);
  M5 Eb = c12 * X(f2, e5), Emb = c12 * X(f2b, e5);
  M5 Eab = c12 * X(f1, e5), Emab = c12 * X(f1b, e5);
  M5 Ea2b = c24 * X(f1, f2), Ema2b = -c24 * X(f1b, f2b);

  std::vector<M5> basis{
      X(e1, e2), X(e3, e4),
      Ea2b - Ema2b, I * (Ea2b + Ema2b),  // v, w of the k root
      Ea - Ema,     I * (Ea + Ema),
      Eb + Emb,     I * (Eb - Emb),
      Eab + Emab,   I * (Eab - Emab),
  };
  for (const auto& B : basis) {
    if (B.imag().norm() > 1e-12)
      throw InternalInconsistency("so(4,1) basis element not real", B.imag().norm());
    double r = (B.transpose() * Q.cast<cd>() + Q.cast<cd>() * B).norm();
    if (r > 1e-12) throw InternalInconsistency("basis element not in so(4,1)", r);
  }

  GeneratedFamily fam;
  fam.alg = constants_from_basis<5>(basis, 4,
                                    {"z1", "z2", "v_alpha2beta", "w_alpha2beta", "v_alpha",
                                     "w_alpha", "v_beta", "w_beta", "v_alphabeta",
                                     "w_alphabeta"});
  check_root_normalization(fam.alg);

  fam.root.family = Family::SO41;
  fam.root.n2 = extract_n2(fam.alg);
  fam.root.omega_ref = reference_volume();

  // Plane swap (13)(24): inner automorphism mapping the center element z to
  // -z, hence the parameter a to -a.
  M5 h = M5::Zero();
  h(0, 2) = h(2, 0) = h(1, 3) = h(3, 1) = 1.0;
  h(4, 4) = 1.0;
  BasisExpander<5> ex(basis);
  std::vector<M5> flip_images;
  for (int c = 0; c < kDim; ++c) flip_images.push_back(h * basis[4 + c] * h);
  fam.root.flip_m = induced_m_map<5>(ex, fam.alg, flip_images);
  return fam;
}

}  // namespace

GeneratedFamily regenerate(Family family) {
  return family == Family::SU21 ? regenerate_su21() : regenerate_so41();
}

std::string family_name(Family f) { return f == Family::SU21 ? "su21" : "so41"; }

std::string family_file_name(Family f) {
  return f == Family::SU21 ? "su21_t2.json" : "so41_u2.json";
}

double data_agreement(const LieAlgebraData& x, const LieAlgebraData& y) {
  if (x.dim != y.dim || x.k_indices != y.k_indices || x.m_indices != y.m_indices ||
      x.basis_labels != y.basis_labels)
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (int k = 0; k < x.dim; ++k)
    worst = std::max(worst, (x.bracket[k] - y.bracket[k]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace shfkit
