#include "shfkit/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>

#include "shfkit/json_io.hpp"

#ifndef SHFKIT_SOURCE_DATA_DIR
#define SHFKIT_SOURCE_DATA_DIR ""
#endif
#ifndef SHFKIT_INSTALL_DATA_DIR
#define SHFKIT_INSTALL_DATA_DIR ""
#endif

namespace shfkit {

std::string data_directory() {
  if (const char* env = std::getenv("SHFKIT_DATA_DIR"); env && *env) return env;
  namespace fs = std::filesystem;
  for (const char* candidate : {SHFKIT_SOURCE_DATA_DIR, SHFKIT_INSTALL_DATA_DIR}) {
    if (*candidate && fs::exists(candidate)) return candidate;
  }
  return SHFKIT_SOURCE_DATA_DIR;
}

const GeneratedFamily& family_data(Family family) {
  static std::mutex mu;
  static std::map<Family, GeneratedFamily> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(family);
  if (it != cache.end()) return it->second;

  GeneratedFamily fam = regenerate(family);
  namespace fs = std::filesystem;
  fs::path file = fs::path(data_directory()) / family_file_name(family);
  if (fs::exists(file)) {
    LieAlgebraData loaded = load_lie_algebra(file.string());
    double diff = data_agreement(loaded, fam.alg);
    if (diff > 1e-12)
      throw Error("structure-constant file " + file.string() +
                      " disagrees with regeneration",
                  diff);
    fam.alg = std::move(loaded);
    fam.root.n2 = [&fam] {
      int iva = fam.alg.m_indices[0], ivb = fam.alg.m_indices[2],
          ivab = fam.alg.m_indices[4];
      double n = fam.alg.c(iva, ivb, ivab);
      return n * n;
    }();
  }
  return cache.emplace(family, std::move(fam)).first->second;
}

double slice_constraint(double a, double b) { return (b - a) * (a + 2 * b) * (2 * a + b); }

RegionFlags classify_region(double a, double b) {
  RegionFlags r;
  r.in_cone = (0 < -a / 2) && (-a / 2 < b) && (b < -2 * a);
  r.in_mirror_cone = (0 < a / 2) && (a / 2 > b) && (b > -2 * a);
  r.in_admissible = r.in_cone || r.in_mirror_cone;
  double constraint = slice_constraint(a, b);
  r.on_slice = r.in_cone && std::abs(constraint + 1.0) <= 1e-10;
  r.in_fundamental = r.on_slice && (0 < -a) && (-a <= b) && (b < -2 * a);
  return r;
}

namespace {

struct RootLayout {
  // m-coordinates: (v_alpha, w_alpha, v_beta, w_beta, v_ab, w_ab) = e_1..e_6.
  static CForm dual(int root, bool negative) {
    static const bool compact[3] = {true, false, false};
    std::complex<double> I{0.0, 1.0};
    CForm v = complexify(KForm::basis({2 * root + 1}));
    CForm w = complexify(KForm::basis({2 * root + 2}));
    if (!negative) return v + I * w;
    return compact[root] ? CForm(I * w - v) : CForm(v - I * w);
  }
};

KForm omega_from_z(const GeneratedFamily& fam, const Eigen::VectorXd& z_k) {
  // omega(x, y) = B(ad(z) x, y) restricted to m.
  Mat6 D = fam.alg.ad_m(z_k);
  Mat6 Bm;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c)
      Bm(r, c) = fam.alg.killing(fam.alg.m_indices[r], fam.alg.m_indices[c]);
  Mat6 W = D.transpose() * Bm;
  const auto& tab = MultiIndexTable::get();
  KForm omega = KForm::zero(2);
  for (int p = 0; p < tab.count(2); ++p) {
    auto idx = MultiIndexTable::indices(tab.mask(2, p));
    omega.coeffs()[p] = W(idx[0] - 1, idx[1] - 1);
  }
  double antisym = (W + W.transpose()).norm();
  if (antisym > 1e-10 * (1.0 + W.norm()))
    throw InternalInconsistency("B(ad(z)., .) failed to be skew", antisym);
  return omega;
}

KForm psi_from_q(double q) {
  std::complex<double> I{0.0, 1.0};
  CForm t1 = wedge(wedge(RootLayout::dual(0, false), RootLayout::dual(1, false)),
                   RootLayout::dual(2, true));
  CForm t2 = wedge(wedge(RootLayout::dual(0, true), RootLayout::dual(1, true)),
                   RootLayout::dual(2, false));
  return real_part(CForm((I * q) * (t1 + t2)));
}

FamilyBuild finish_build(Family family, const GeneratedFamily& fam, FamilyPoint point,
                         const Eigen::VectorXd& z_k, double tol) {
  KForm omega = omega_from_z(fam, z_k);
  KForm psi = psi_from_q(point.q);
  FamilyBuild fb;
  fb.family = family;
  fb.data = &fam;
  fb.structure = validate_su3(omega, psi, tol);
  fb.point = point;
  return fb;
}

}  // namespace

FamilyBuild build_su21(double a, double b, double tol) {
  RegionFlags region = classify_region(a, b);
  if (!region.in_admissible) {
    std::ostringstream msg;
    msg << "(a,b) = (" << a << ", " << b << ") is outside Q = A u (-A): ";
    if (a < 0)
      msg << "A requires 0 < -a/2 < b < -2a; failed: "
          << (!(0 < -a / 2) ? "0 < -a/2" : (!(-a / 2 < b) ? "-a/2 < b" : "b < -2a"));
    else if (a > 0)
      msg << "-A requires 0 < a/2, b < a/2, b > -2a; failed: "
          << (!(b < a / 2) ? "b < a/2" : "b > -2a");
    else
      msg << "a = 0 violates the strict inequalities on both cones";
    throw NotAdmissible(msg.str());
  }
  const GeneratedFamily& fam = family_data(Family::SU21);
  double constraint = slice_constraint(a, b);

  FamilyPoint point;
  point.family = Family::SU21;
  point.a = a;
  point.b = b;
  point.delta = constraint > 0 ? 1 : -1;
  point.q = std::sqrt(2.0 * std::abs(constraint));
  point.region = region;

  Eigen::VectorXd z(2);
  z << a, b;  // z_{a,b} = a z1 + b z2
  return finish_build(Family::SU21, fam, point, z, tol);
}

FamilyBuild build_so41(double a, double tol) {
  if (a == 0.0) throw NotAdmissible("SO(4,1) family requires a != 0");
  const GeneratedFamily& fam = family_data(Family::SO41);

  FamilyPoint point;
  point.family = Family::SO41;
  point.a = a;
  point.b = 0.0;
  point.delta = a > 0 ? 1 : -1;
  point.q = std::sqrt(point.delta * a * a * a / 2.0);
  point.region.in_admissible = true;

  // z in the center of u(2): alpha(z) = i a and (alpha+2 beta)(z) = 0.
  Eigen::VectorXd z = Eigen::VectorXd::Zero(4);
  z[0] = -a / 2.0;
  z[1] = a / 2.0;
  return finish_build(Family::SO41, fam, point, z, tol);
}

double quartic_wrt_root_volume(const FamilyBuild& fb) {
  KForm ref = static_cast<double>(fb.point.delta) * fb.data->root.omega_ref;
  return quartic_invariant(fb.structure.psi, ref);
}

SliceNormalization normalize_to_slice(double a, double b) {
  if (!classify_region(a, b).in_cone)
    throw NotAdmissible("normalize_to_slice requires (a,b) in A");
  double lambda = std::pow(std::abs(slice_constraint(a, b)), -1.0 / 3.0);
  return SliceNormalization{lambda * a, lambda * b, lambda};
}

void apply_move(const Move& m, double& a, double& b) {
  switch (m.kind) {
    case Move::Kind::Theta:
      a = -a;
      b = -b;
      break;
    case Move::Kind::Scale:
      a *= m.lambda;
      b *= m.lambda;
      break;
    case Move::Kind::Swap:
      std::swap(a, b);
      break;
  }
}

DomainMapResult fundamental_domain_map(double a, double b) {
  RegionFlags region = classify_region(a, b);
  if (!region.in_admissible)
    throw NotAdmissible("fundamental_domain_map requires (a,b) in Q");

  DomainMapResult out;
  out.a = a;
  out.b = b;
  auto push = [&out](Move m) {
    apply_move(m, out.a, out.b);
    out.moves.push_back(m);
  };

  if (region.in_mirror_cone) push({Move::Kind::Theta, 1.0});
  double lambda = std::pow(std::abs(slice_constraint(out.a, out.b)), -1.0 / 3.0);
  if (std::abs(lambda - 1.0) > 1e-14) push({Move::Kind::Scale, lambda});
  if (out.b < -out.a) {
    // The torus swap alone lands in the mirror cone; compose with theta to
    // come back to A.
    push({Move::Kind::Swap, 1.0});
    push({Move::Kind::Theta, 1.0});
  }
  if (!classify_region(out.a, out.b).in_fundamental)
    throw InternalInconsistency("fundamental_domain_map failed to land in V_SHF");
  return out;
}

double scal_formula(double a, double b, double n2) {
  return -24.0 * n2 * (a * a + a * b + b * b);
}

void v_shf_point(double t, double& a, double& b) {
  double s = std::pow((t + 1.0) * (2.0 * t - 1.0) * (2.0 - t), -1.0 / 3.0);
  a = -s;
  b = t * s;
}

CriticalPoint critical_point_check(double n2) {
  // Lagrange system for Scal = -24 n2 (a^2+ab+b^2) on the slice
  // h(a,b) = (b-a)(a+2b)(2a+b) = -1.
  const double f0 = -24.0 * n2;
  auto h = [](double a, double b) {
    return -2 * a * a * a - 3 * a * a * b + 3 * a * b * b + 2 * b * b * b;
  };
  auto h_a = [](double a, double b) { return -6 * a * a - 6 * a * b + 3 * b * b; };
  auto h_b = [](double a, double b) { return -3 * a * a + 6 * a * b + 6 * b * b; };

  double a = -0.8, b = 0.8;
  // Initial multiplier from the least-squares fit of the gradient equations.
  double mu = 0.0;
  {
    double fa = f0 * (2 * a + b), fb = f0 * (a + 2 * b);
    double ha = h_a(a, b), hb = h_b(a, b);
    mu = (fa * ha + fb * hb) / (ha * ha + hb * hb);
  }

  Eigen::Vector3d F;
  for (int iter = 0; iter < 100; ++iter) {
    double fa = f0 * (2 * a + b), fb = f0 * (a + 2 * b);
    double ha = h_a(a, b), hb = h_b(a, b);
    F << fa - mu * ha, fb - mu * hb, h(a, b) + 1.0;
    if (F.norm() <= 1e-13 * (1.0 + std::abs(f0))) break;
    Eigen::Matrix3d J;
    double h_aa = -12 * a - 6 * b, h_ab = -6 * a + 6 * b, h_bb = 6 * a + 12 * b;
    J << 2 * f0 - mu * h_aa, f0 - mu * h_ab, -ha,
         f0 - mu * h_ab, 2 * f0 - mu * h_bb, -hb,
         ha, hb, 0.0;
    Eigen::Vector3d step = J.partialPivLu().solve(F);
    a -= step[0];
    b -= step[1];
    mu -= step[2];
  }
  double fa = f0 * (2 * a + b), fb = f0 * (a + 2 * b);
  double ha = h_a(a, b), hb = h_b(a, b);
  double grad = std::hypot(fa - mu * ha, fb - mu * hb);
  double constraint = h(a, b);
  if (grad > 1e-8 * (1.0 + std::abs(f0)) || std::abs(constraint + 1.0) > 1e-9)
    throw ConvergenceError("Lagrange iteration did not converge; best iterate (" +
                               format_sig(a, 12) + ", " + format_sig(b, 12) + ")",
                           grad);
  return CriticalPoint{a, b, grad, constraint};
}

double IsoResiduals::max() const { return std::max({omega, metric, psi}); }

IsoResiduals isomorphism_check(IsoMove move, double a, double b) {
  RegionFlags region = classify_region(a, b);
  if (!region.in_admissible) throw NotAdmissible("isomorphism_check requires (a,b) in Q");
  if (move == IsoMove::Swap && !region.in_cone)
    throw NotAdmissible("the swap move is defined on A");

  const GeneratedFamily& fam = family_data(Family::SU21);
  FamilyBuild src = build_su21(a, b);
  FamilyBuild img = (move == IsoMove::Theta) ? build_su21(-a, -b) : build_su21(b, a);
  const Mat6& M = (move == IsoMove::Theta) ? fam.root.theta_m : fam.root.swap_m;

  IsoResiduals r;
  r.omega = (pullback(M, img.structure.omega) - src.structure.omega).norm() /
            (1.0 + src.structure.omega.norm());
  Mat6 gpull = M.transpose() * img.structure.g.gram * M;
  r.metric = (gpull - src.structure.g.gram).norm() / (1.0 + src.structure.g.gram.norm());
  KForm psi_pull = pullback(M, img.structure.psi);
  double plus = (psi_pull - src.structure.psi).norm();
  double minus = (psi_pull + src.structure.psi).norm();
  r.psi_sign = plus <= minus ? 1 : -1;
  r.psi = std::min(plus, minus) / (1.0 + src.structure.psi.norm());
  return r;
}

double so41_homothety_residual(double a1, double a2) {
  if (a1 == 0.0 || a2 == 0.0) throw NotAdmissible("SO(4,1) parameters must be nonzero");
  const GeneratedFamily& fam = family_data(Family::SO41);
  FamilyBuild p1 = build_so41(a1);
  FamilyBuild p2 = build_so41(a2);

  KForm omega2 = p2.structure.omega;
  KForm psi2 = p2.structure.psi;
  if (a1 * a2 < 0) {
    // Route through the plane-swap isomorphism mapping a -> -a.
    omega2 = pullback(fam.root.flip_m, omega2);
    KForm pulled = pullback(fam.root.flip_m, psi2);
    psi2 = pulled;
    a2 = -a2;
  }
  double c2 = a2 / a1;
  double c3 = std::pow(c2, 1.5);
  double r_omega =
      (omega2 - c2 * p1.structure.omega).norm() / (1.0 + omega2.norm());
  double plus = (psi2 - c3 * p1.structure.psi).norm();
  double minus = (psi2 + c3 * p1.structure.psi).norm();
  double r_psi = std::min(plus, minus) / (1.0 + psi2.norm());
  return std::max(r_omega, r_psi);
}

}  // namespace shfkit
