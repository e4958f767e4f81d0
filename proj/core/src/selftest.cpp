#include "shfkit/selftest.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "shfkit/catalog.hpp"
#include "shfkit/json_io.hpp"
#include "shfkit/torsion.hpp"

namespace shfkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

KForm random_form(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  KForm f = KForm::zero(degree);
  for (int i = 0; i < f.coeffs().size(); ++i) f.coeffs()[i] = u(rng);
  return f;
}

/// Random point of the slice V (subset of the cone A); t parametrizes b/(-a).
void random_slice_point(std::mt19937_64& rng, double& a, double& b) {
  std::uniform_real_distribution<double> u(0.55, 1.95);
  v_shf_point(u(rng), a, b);
}

void random_cone_point(std::mt19937_64& rng, double& a, double& b) {
  std::uniform_real_distribution<double> ua(0.3, 2.5), ut(0.03, 0.97);
  a = -ua(rng);
  b = -a * (0.5 + 1.5 * ut(rng));
}

SU3Structure flat_model() {
  KForm omega = KForm::basis({1, 2}) + KForm::basis({3, 4}) + KForm::basis({5, 6});
  KForm psi = KForm::basis({1, 3, 5}) - KForm::basis({1, 4, 6}) - KForm::basis({2, 3, 6}) -
              KForm::basis({2, 4, 5});
  return validate_su3(omega, psi);
}

struct Ctx {
  std::ostringstream detail;
  bool ok = true;
  double worst = 0.0;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[" << what << " failed] ";
    }
  }
  void track(double value) { worst = std::max(worst, std::abs(value)); }
  void bound(double value, double tol, const std::string& what) {
    track(value);
    if (!(std::abs(value) <= tol)) {
      ok = false;
      detail << "[" << what << " = " << format_sig(value, 6) << " > " << format_sig(tol, 3)
             << "] ";
    }
  }
};

CriterionResult finish(int id, const std::string& name, Ctx& c, Clock::time_point t0) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.passed = c.ok;
  std::string extra = c.detail.str();
  r.detail = (extra.empty() ? std::string() : extra + " ") +
             "worst residual " + format_sig(c.worst, 3);
  r.seconds = seconds_since(t0);
  return r;
}

CriterionResult criterion0_data_files() {
  auto t0 = Clock::now();
  Ctx c;
  namespace fs = std::filesystem;
  for (Family f : {Family::SU21, Family::SO41}) {
    fs::path file = fs::path(data_directory()) / family_file_name(f);
    c.require(fs::exists(file), "data file " + file.string() + " present");
    if (!fs::exists(file)) continue;
    GeneratedFamily gen = regenerate(f);
    LieAlgebraData loaded = load_lie_algebra(file.string());
    c.bound(data_agreement(loaded, gen.alg), 1e-12, family_name(f) + " shipped vs regenerated");
  }
  return finish(0, "structure-constant data files match regeneration", c, t0);
}

CriterionResult criterion1_stable_engine() {
  auto t0 = Clock::now();
  Ctx c;
  std::mt19937_64 rng(1);
  KForm vol = KForm::basis({1, 2, 3, 4, 5, 6});
  const double cs[] = {1.0, -1.0, 2.0, -2.0, 0.5, -0.5};
  const double ls[] = {1.0, -1.0, 3.0, -3.0};

  for (int n = 0; n < 1000; ++n) {
    KForm rho = random_form(3, rng);
    LinearMap S = s_endo(rho, vol);
    Mat6 S2 = S * S;
    double P = S2.trace() / 6.0;
    c.bound((S2 - P * Mat6::Identity()).norm() / std::max(1.0, S.squaredNorm()), 1e-10,
            "S^2 - P Id");

    for (double cc : cs) {
      for (double ll : ls) {
        LinearMap Ssc = s_endo(cc * rho, ll * vol);
        double scale = cc * cc / ll;
        c.bound((Ssc - scale * S).norm() / std::max(1.0, std::abs(scale) * S.norm()), 1e-10,
                "S scaling");
        double Psc = quartic_invariant(cc * rho, ll * vol);
        double pscale = std::pow(cc, 4) / (ll * ll);
        c.bound((Psc - pscale * P) / std::max(1.0, std::abs(pscale * P)), 1e-10, "P scaling");
      }
    }
    if (n < 50 && stability_class(rho, vol) == StabilityClass::NegativeOrbit) {
      LinearMap J0 = complex_structure(rho, vol);
      for (double ll : ls) {
        LinearMap Jl = complex_structure(rho, ll * vol);
        double sgn = ll > 0 ? 1.0 : -1.0;
        c.bound((Jl - sgn * J0).norm() / J0.norm(), 1e-10, "J orientation law");
      }
    }
  }
  double elapsed = seconds_since(t0);
  c.require(elapsed < 5.0, "runtime < 5 s (got " + format_sig(elapsed, 3) + ")");
  return finish(1, "stable-form engine: S^2 = P Id and the (c, lambda) scaling laws", c, t0);
}

CriterionResult criterion2_su21_family() {
  auto t0 = Clock::now();
  Ctx c;
  std::mt19937_64 rng(2);
  for (int n = 0; n < 50; ++n) {
    double a, b;
    random_slice_point(rng, a, b);
    try {
      FamilyBuild fb = build_su21(a, b);
      ShfResiduals shf = check_shf(fb.structure, fb.data->alg);
      c.bound(shf.domega, 1e-10, "d omega");
      c.bound(shf.dpsi, 1e-10, "d psi");
      TorsionReport rep = ricci_report(fb.structure, fb.data->alg);
      c.bound(rep.residuals.at("sigma_solve"), 1e-9, "sigma extraction");
      c.bound(rep.residuals.at("nu_norm"), 1e-9, "nu norm");
      double q4 = std::pow(fb.point.q, 4);
      c.bound((quartic_wrt_root_volume(fb) + q4) / q4, 1e-9, "P(psi) = -q^4");
    } catch (const Error& e) {
      c.require(false, std::string("build/validate at (") + format_sig(a, 6) + ", " +
                           format_sig(b, 6) + "): " + e.what());
    }
  }
  double elapsed = seconds_since(t0);
  c.require(elapsed < 2.0, "runtime < 2 s (got " + format_sig(elapsed, 3) + ")");
  return finish(2, "SU(2,1)/T^2 family: 50 slice points validate, SHF, J-Hermitian Ricci",
                c, t0);
}

CriterionResult criterion3_scal_formula() {
  auto t0 = Clock::now();
  Ctx c;
  std::mt19937_64 rng(2);  // same sample as criterion 2
  double n2 = family_data(Family::SU21).root.n2;
  for (int n = 0; n < 50; ++n) {
    double a, b;
    random_slice_point(rng, a, b);
    FamilyBuild fb = build_su21(a, b);
    TorsionReport rep = ricci_report(fb.structure, fb.data->alg);
    double predicted = scal_formula(a, b, n2);
    c.bound((rep.scal - predicted) / std::abs(predicted), 1e-8, "Scal vs formula");
  }
  c.detail << "N2 = " << format_sig(n2, 12) << " ";
  return finish(3, "scalar curvature: -|sigma|^2/2 = -24 N2 (a^2+ab+b^2) on the slice", c, t0);
}

CriterionResult criterion4_critical_point() {
  auto t0 = Clock::now();
  Ctx c;
  double n2 = family_data(Family::SU21).root.n2;
  const double cstar = std::pow(2.0, -1.0 / 3.0);
  try {
    CriticalPoint cp = critical_point_check(n2);
    c.bound(std::abs(cp.a + cstar) + std::abs(cp.b - cstar), 1e-6, "distance to C");
    c.bound(cp.constraint + 1.0, 1e-9, "constraint value");
    c.bound(cp.gradient_norm, 1e-8 * (1.0 + 24.0 * n2), "gradient norm");
  } catch (const Error& e) {
    c.require(false, std::string("critical_point_check: ") + e.what());
  }

  double prev = 1.0;  // Scal at C is negative, this dominates
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    double t = 1.0 + 0.96 * i / 199.0;
    double a, b;
    v_shf_point(t, a, b);
    FamilyBuild fb = build_su21(a, b);
    TorsionReport rep = ricci_report(fb.structure, fb.data->alg);
    if (!(rep.scal < prev)) ++violations;
    prev = rep.scal;
  }
  c.require(violations == 0,
            "strict decrease along V_SHF (" + std::to_string(violations) + " violations)");
  return finish(4, "unique critical point at C and monotone decay along V_SHF", c, t0);
}

CriterionResult criterion5_so41_family() {
  auto t0 = Clock::now();
  Ctx c;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(0.3, 3.0);
  std::vector<double> as;
  for (int n = 0; n < 20; ++n) as.push_back((n % 2 == 0 ? 1.0 : -1.0) * ua(rng));

  for (double a : as) {
    try {
      FamilyBuild fb = build_so41(a);
      ShfResiduals shf = check_shf(fb.structure, fb.data->alg);
      c.bound(std::max(shf.domega, shf.dpsi), 1e-10, "SHF residual");
      TorsionReport rep = ricci_report(fb.structure, fb.data->alg);
      c.bound(rep.residuals.at("nu_norm"), 1e-9, "nu norm");
      double delta = a > 0 ? 1.0 : -1.0;
      Vec6 expected;
      expected << 2 * delta * a, 2 * delta * a, delta * a, delta * a, delta * a, delta * a;
      Mat6 gexp = expected.asDiagonal();
      c.bound((fb.structure.g.gram - gexp).norm() / gexp.norm(), 1e-10, "metric diagonal");
      c.bound(fb.point.q * fb.point.q - delta * a * a * a / 2.0, 1e-10, "q^2 = delta a^3/2");
    } catch (const Error& e) {
      c.require(false, std::string("build_so41(") + format_sig(a, 6) + "): " + e.what());
    }
  }
  for (size_t i = 0; i < as.size(); ++i)
    for (size_t j = i + 1; j < as.size(); ++j)
      c.bound(so41_homothety_residual(as[i], as[j]), 1e-9, "pairwise homothety");
  return finish(5, "SO(4,1)/U(2) family: 20 points validate, metric pattern, homothety", c, t0);
}

CriterionResult criterion6_invariant_spaces() {
  auto t0 = Clock::now();
  Ctx c;
  for (Family f : {Family::SU21, Family::SO41}) {
    const GeneratedFamily& fam = family_data(f);
    std::vector<KForm> inv3 = invariant_forms(fam.alg, 3);
    c.require(inv3.size() == 2, family_name(f) + " invariant 3-forms dim 2 (got " +
                                    std::to_string(inv3.size()) + ")");
    if (inv3.size() != 2) continue;

    Eigen::MatrixXd D(MultiIndexTable::get().count(4), 2);
    for (int j = 0; j < 2; ++j) D.col(j) = ce_differential(inv3[j], fam.alg).coeffs();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(D, Eigen::ComputeFullV);
    int kernel = 0;
    for (int i = 0; i < 2; ++i)
      if (svd.singularValues()[i] <= 1e-9 * svd.singularValues()[0]) ++kernel;
    c.require(kernel == 1, family_name(f) + " d-kernel dim 1 (got " +
                               std::to_string(kernel) + ")");

    // The closed direction must be the built psi up to scale.
    Eigen::VectorXd closed_coords = svd.matrixV().col(1);
    KForm closed = closed_coords[0] * inv3[0] + closed_coords[1] * inv3[1];
    FamilyBuild fb = (f == Family::SU21) ? build_su21(-1.0, 1.0) : build_so41(1.0);
    Eigen::VectorXd u = closed.coeffs() / closed.norm();
    Eigen::VectorXd v = fb.structure.psi.coeffs() / fb.structure.psi.norm();
    c.bound(std::min((u - v).norm(), (u + v).norm()), 1e-10,
            family_name(f) + " closed direction matches psi");
  }
  c.require(invariant_forms(family_data(Family::SU21).alg, 1).empty(),
            "su21 invariant 1-forms = {0}");
  return finish(6, "invariant 3-form spaces: dim 2, closed line spanned by psi", c, t0);
}

CriterionResult criterion7_hodge_suite() {
  auto t0 = Clock::now();
  Ctx c;
  std::mt19937_64 rng(7);

  std::vector<SU3Structure> structures{flat_model()};
  for (double t : {1.1, 1.5, 1.8}) {
    double a, b;
    v_shf_point(t, a, b);
    structures.push_back(build_su21(a, b).structure);
  }
  structures.push_back(build_so41(1.0).structure);
  structures.push_back(build_so41(-2.0).structure);

  for (const SU3Structure& s : structures) {
    for (int k = 0; k <= kDim; ++k) {
      KForm phi = random_form(k, rng);
      KForm ss = hodge_star(hodge_star(phi, s.g, s.vol), s.g, s.vol);
      double sign = (k * (kDim - k)) % 2 == 0 ? 1.0 : -1.0;
      c.bound((ss - sign * phi).norm() / std::max(1.0, phi.norm()), 1e-10, "star involution");
    }
    KForm phi3 = random_form(3, rng);
    Decomp3 d3 = decompose3(phi3, s);
    KForm back3 = d3.f1 * s.psi + d3.f2 * s.psi_hat + d3.primitive21 + d3.oneform_wedge_omega;
    c.bound((back3 - phi3).norm() / std::max(1.0, phi3.norm()), 1e-10, "decompose3 round trip");
    KForm phi4 = random_form(4, rng);
    Decomp4 d4 = decompose4(phi4, s);
    KForm back4 = d4.f0 * wedge(s.omega, s.omega) + d4.primitive11_wedge_omega +
                  d4.oneform_wedge_psi;
    c.bound((back4 - phi4).norm() / std::max(1.0, phi4.norm()), 1e-10, "decompose4 round trip");
  }

  // *sigma = -sigma ^ omega for every catalog torsion form.
  std::mt19937_64 rng2(72);
  for (int n = 0; n < 10; ++n) {
    double a, b;
    random_slice_point(rng2, a, b);
    FamilyBuild fb = build_su21(a, b);
    KForm sigma = torsion_form(fb.structure, fb.data->alg);
    c.bound((hodge_star(sigma, fb.structure.g, fb.structure.vol) +
             wedge(sigma, fb.structure.omega))
                .norm(),
            1e-10, "star sigma identity (su21)");
  }
  for (double a : {0.7, -1.3, 2.2, -3.0, 1.0}) {
    FamilyBuild fb = build_so41(a);
    KForm sigma = torsion_form(fb.structure, fb.data->alg);
    c.bound((hodge_star(sigma, fb.structure.g, fb.structure.vol) +
             wedge(sigma, fb.structure.omega))
                .norm(),
            1e-10, "star sigma identity (so41)");
  }
  return finish(7, "Hodge/decomposition suite: involution, round trips, *sigma = -sigma^omega",
                c, t0);
}

CriterionResult criterion8_isomorphisms() {
  auto t0 = Clock::now();
  Ctx c;
  std::mt19937_64 rng(8);
  for (int n = 0; n < 10; ++n) {
    double a, b;
    random_cone_point(rng, a, b);
    bool mirror = (n % 2 == 1);
    IsoResiduals rt = isomorphism_check(IsoMove::Theta, mirror ? -a : a, mirror ? -b : b);
    c.bound(rt.max(), 1e-10, "theta pullback");
    IsoResiduals rs = isomorphism_check(IsoMove::Swap, a, b);
    c.bound(rs.max(), 1e-10, "swap pullback");
  }

  std::mt19937_64 rng2(82);
  for (int n = 0; n < 25; ++n) {
    double a, b;
    random_cone_point(rng2, a, b);
    if (n % 2 == 1) {
      a = -a;
      b = -b;
    }
    DomainMapResult res = fundamental_domain_map(a, b);
    c.require(classify_region(res.a, res.b).in_fundamental, "image in V_SHF");
    double ra = a, rb = b;
    for (const Move& m : res.moves) apply_move(m, ra, rb);
    c.bound(std::hypot(ra - res.a, rb - res.b), 1e-12, "move-list replay");
  }
  return finish(8, "isomorphism certificates: theta/swap pullbacks and domain reduction", c, t0);
}

CriterionResult criterion9_negative_controls() {
  auto t0 = Clock::now();
  Ctx c;

  // Perturbing psi along the invariant non-closed direction breaks d psi = 0.
  FamilyBuild fb = build_su21(-1.0, 1.0);
  std::vector<KForm> inv3 = invariant_forms(fb.data->alg, 3);
  c.require(inv3.size() == 2, "invariant 3-space dim 2");
  if (inv3.size() == 2) {
    Eigen::MatrixXd D(MultiIndexTable::get().count(4), 2);
    for (int j = 0; j < 2; ++j) D.col(j) = ce_differential(inv3[j], fb.data->alg).coeffs();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(D, Eigen::ComputeFullV);
    Eigen::VectorXd nonclosed = svd.matrixV().col(0);  // largest singular value
    KForm p_dir = nonclosed[0] * inv3[0] + nonclosed[1] * inv3[1];
    p_dir = (1.0 / p_dir.norm()) * p_dir;

    SU3Structure perturbed = fb.structure;
    perturbed.psi = fb.structure.psi + (0.1 * fb.structure.psi.norm()) * p_dir;
    ShfResiduals shf = check_shf(perturbed, fb.data->alg);
    c.require(shf.dpsi > 1e-3, "perturbed d psi residual is large (got " +
                                   format_sig(shf.dpsi, 3) + ")");
    c.bound(check_shf(fb.structure, fb.data->alg).dpsi, 1e-10, "unperturbed d psi");
  }

  SU3Structure flat = flat_model();
  LieAlgebraData abelian = abelian_algebra();
  TorsionReport rep = ricci_report(flat, abelian);
  c.require(rep.torsion_free, "flat model torsion-free");
  c.bound(rep.scal, 1e-12, "flat model Scal");
  c.bound(rep.ric0_plus_rep.norm() + rep.ric0_minus_rep.norm(), 1e-12, "flat Ric0 reps");
  return finish(9, "negative controls: non-closed perturbation detected, flat model flat", c, t0);
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.push_back(criterion0_data_files());
  out.push_back(criterion1_stable_engine());
  out.push_back(criterion2_su21_family());
  out.push_back(criterion3_scal_formula());
  out.push_back(criterion4_critical_point());
  out.push_back(criterion5_so41_family());
  out.push_back(criterion6_invariant_spaces());
  out.push_back(criterion7_hodge_suite());
  out.push_back(criterion8_isomorphisms());
  out.push_back(criterion9_negative_controls());
  return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail
       << " (" << format_sig(r.seconds, 3) << " s)\n";
  }
  return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace shfkit
