#include <cmath>
#include <random>

#include "doctest.h"
#include "shfkit/catalog.hpp"
#include "shfkit/torsion.hpp"
#include "test_helpers.hpp"

using namespace shfkit;

namespace {
constexpr double kCbrtHalf = 0.7937005259840997;  // 2^{-1/3}
}

TEST_CASE("region classification") {
  RegionFlags c = classify_region(-kCbrtHalf, kCbrtHalf);
  CHECK(c.in_cone);
  CHECK(c.on_slice);
  CHECK(c.in_fundamental);
  CHECK(slice_constraint(-kCbrtHalf, kCbrtHalf) == doctest::Approx(-1.0).epsilon(1e-12));

  RegionFlags m11 = classify_region(-1.0, 1.0);
  CHECK(m11.in_cone);
  CHECK_FALSE(m11.on_slice);
  CHECK(slice_constraint(-1.0, 1.0) == doctest::Approx(-2.0));

  CHECK_FALSE(classify_region(0.0, 1.0).in_admissible);
  CHECK_FALSE(classify_region(1.0, 1.0).in_admissible);
  CHECK(classify_region(1.0, -1.0).in_mirror_cone);
}

TEST_CASE("build_su21 at (-1,1): frozen forms and metric") {
  FamilyBuild fb = build_su21(-1.0, 1.0);
  CHECK(fb.point.q == doctest::Approx(2.0));
  CHECK(fb.point.delta == -1);

  // omega = 2(b-a) e12 + 2(a+2b) e34 + 2(2a+b) e56
  KForm omega_expected = KForm::basis({1, 2}, 4.0) + KForm::basis({3, 4}, 2.0) +
                         KForm::basis({5, 6}, -2.0);
  CHECK((fb.structure.omega - omega_expected).norm() <= 1e-12);

  // psi = 2q (e136 - e145 - e235 - e246)
  KForm psi_expected = KForm::basis({1, 3, 6}, 4.0) + KForm::basis({1, 4, 5}, -4.0) +
                       KForm::basis({2, 3, 5}, -4.0) + KForm::basis({2, 4, 6}, -4.0);
  CHECK((fb.structure.psi - psi_expected).norm() <= 1e-12);

  // psi_hat = -2 delta q (e135 + e146 + e236 - e245) with delta = -1
  KForm psihat_expected = KForm::basis({1, 3, 5}, 4.0) + KForm::basis({1, 4, 6}, 4.0) +
                          KForm::basis({2, 3, 6}, 4.0) + KForm::basis({2, 4, 5}, -4.0);
  CHECK((fb.structure.psi_hat - psihat_expected).norm() <= 1e-11);

  Vec6 diag_expected;
  diag_expected << 4, 4, 2, 2, 2, 2;
  CHECK((fb.structure.g.gram - Mat6(diag_expected.asDiagonal())).norm() <= 1e-11);

  // J pattern: J v_alpha = -delta w_alpha, J v_beta = -delta w_beta,
  // J v_{a+b} = +delta w_{a+b} (delta = -1 here).
  CHECK(fb.structure.J(1, 0) == doctest::Approx(1.0));
  CHECK(fb.structure.J(0, 1) == doctest::Approx(-1.0));
  CHECK(fb.structure.J(3, 2) == doctest::Approx(1.0));
  CHECK(fb.structure.J(5, 4) == doctest::Approx(-1.0));

  // invariance of the built forms under the full isotropy
  CHECK(check_invariance(fb.structure.omega, fb.data->alg) <= 1e-10);
  CHECK(check_invariance(fb.structure.psi, fb.data->alg) <= 1e-10);
}

TEST_CASE("build_su21 mirror point (1,-1) and admissibility errors") {
  FamilyBuild fb = build_su21(1.0, -1.0);
  CHECK(fb.point.delta == 1);
  CHECK(fb.point.q == doctest::Approx(2.0));
  CHECK(fb.structure.g.is_positive_definite());

  CHECK_THROWS_AS(build_su21(1.0, 1.0), NotAdmissible);
  CHECK_THROWS_AS(build_su21(0.0, 1.0), NotAdmissible);
  CHECK_THROWS_AS(build_su21(-1.0, 0.4), NotAdmissible);  // b <= -a/2
  CHECK_THROWS_AS(build_su21(-1.0, 2.2), NotAdmissible);  // b >= -2a
}

TEST_CASE("P(psi) = -q^4 w.r.t. the root-basis volume") {
  for (auto [a, b] : {std::pair{-1.0, 1.0}, {-0.9, 1.4}, {1.0, -1.0}}) {
    FamilyBuild fb = build_su21(a, b);
    double q4 = std::pow(fb.point.q, 4);
    CHECK(quartic_wrt_root_volume(fb) == doctest::Approx(-q4).epsilon(1e-10));
  }
  for (double a : {2.0, -2.0}) {
    FamilyBuild fb = build_so41(a);
    double q4 = std::pow(fb.point.q, 4);
    CHECK(quartic_wrt_root_volume(fb) == doctest::Approx(-q4).epsilon(1e-10));
  }
}

TEST_CASE("build_so41: frozen metric and normalization at a = 2") {
  FamilyBuild fb = build_so41(2.0);
  CHECK(fb.point.q * fb.point.q == doctest::Approx(4.0));
  Vec6 diag_expected;
  diag_expected << 4, 4, 2, 2, 2, 2;
  CHECK((fb.structure.g.gram - Mat6(diag_expected.asDiagonal())).norm() <= 1e-11);
  CHECK(check_invariance(fb.structure.omega, fb.data->alg) <= 1e-10);
  CHECK(check_invariance(fb.structure.psi, fb.data->alg) <= 1e-10);

  // omega^3 = (3/2) a^3 * Omega_ref
  KForm om3 = wedge(wedge(fb.structure.omega, fb.structure.omega), fb.structure.omega);
  KForm expected = (1.5 * 8.0) * fb.data->root.omega_ref;
  CHECK((om3 - expected).norm() <= 1e-10 * expected.norm());

  FamilyBuild neg = build_so41(-2.0);
  CHECK(neg.point.delta == -1);
  CHECK(neg.structure.g.is_positive_definite());
  CHECK_THROWS_AS(build_so41(0.0), NotAdmissible);
}

TEST_CASE("SO(4,1) homothety: a vs 4a scales forms by (c^2, c^3) with c = 2") {
  FamilyBuild p1 = build_so41(0.5);
  FamilyBuild p4 = build_so41(2.0);
  CHECK((p4.structure.omega - KForm(4.0 * p1.structure.omega)).norm() <= 1e-12);
  CHECK((p4.structure.psi - KForm(8.0 * p1.structure.psi)).norm() <= 1e-12);
  CHECK(so41_homothety_residual(0.5, 2.0) <= 1e-12);
  CHECK(so41_homothety_residual(1.0, -1.0) <= 1e-11);
  CHECK(so41_homothety_residual(-0.7, 2.4) <= 1e-11);
}

TEST_CASE("normalize_to_slice") {
  SliceNormalization s = normalize_to_slice(-1.0, 1.0);
  CHECK(s.lambda == doctest::Approx(std::pow(2.0, -1.0 / 3.0)));
  CHECK(s.a == doctest::Approx(-kCbrtHalf));
  CHECK(s.b == doctest::Approx(kCbrtHalf));
  CHECK(classify_region(s.a, s.b).on_slice);

  double a0, b0;
  v_shf_point(1.4, a0, b0);
  SliceNormalization fixed = normalize_to_slice(a0, b0);
  CHECK(fixed.lambda == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> ua(0.3, 2.5), ut(0.05, 0.95);
  for (int i = 0; i < 20; ++i) {
    double a = -ua(rng);
    double b = -a * (0.5 + 1.5 * ut(rng));
    SliceNormalization n = normalize_to_slice(a, b);
    CHECK(classify_region(n.a, n.b).on_slice);
  }
  CHECK_THROWS_AS(normalize_to_slice(1.0, -1.0), NotAdmissible);
}

TEST_CASE("fundamental_domain_map certificates") {
  DomainMapResult r1 = fundamental_domain_map(1.0, -1.0);
  REQUIRE(r1.moves.size() >= 2);
  CHECK(r1.moves[0].kind == Move::Kind::Theta);
  CHECK(r1.moves[1].kind == Move::Kind::Scale);
  CHECK(r1.a == doctest::Approx(-kCbrtHalf));
  CHECK(r1.b == doctest::Approx(kCbrtHalf));

  DomainMapResult id = fundamental_domain_map(-kCbrtHalf, kCbrtHalf);
  CHECK(id.moves.empty());

  // a slice point with b < -a needs the swap (composed with theta)
  double a, b;
  v_shf_point(1.35, a, b);
  DomainMapResult sw = fundamental_domain_map(b, a);  // t' = 1/1.35 < 1
  bool has_swap = false;
  for (const Move& m : sw.moves) has_swap |= (m.kind == Move::Kind::Swap);
  CHECK(has_swap);
  CHECK(classify_region(sw.a, sw.b).in_fundamental);
  CHECK(sw.a == doctest::Approx(a).epsilon(1e-10));
  CHECK(sw.b == doctest::Approx(b).epsilon(1e-10));

  CHECK_THROWS_AS(fundamental_domain_map(1.0, 1.0), NotAdmissible);
}

TEST_CASE("scal_formula properties and the critical point") {
  double n2 = family_data(Family::SU21).root.n2;
  CHECK(n2 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  CHECK(scal_formula(-kCbrtHalf, kCbrtHalf, n2) ==
        doctest::Approx(-4.0 * std::pow(2.0, -2.0 / 3.0)).epsilon(1e-12));
  CHECK(scal_formula(-1.0, 1.4, n2) == doctest::Approx(scal_formula(1.4, -1.0, n2)));

  CriticalPoint cp = critical_point_check(n2);
  CHECK(std::abs(cp.a + kCbrtHalf) + std::abs(cp.b - kCbrtHalf) <= 1e-8);
  CHECK(cp.constraint == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(cp.gradient_norm <= 1e-9);

  // Scal decreases monotonically along V_SHF away from C
  double prev = 1.0;
  for (int i = 0; i < 40; ++i) {
    double t = 1.0 + 0.9 * i / 39.0;
    double a, b;
    v_shf_point(t, a, b);
    double s = scal_formula(a, b, n2);
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("distinct fundamental-domain points have distinct Scal") {
  double n2 = family_data(Family::SU21).root.n2;
  std::vector<double> scals;
  double min_gap = 1e300;
  for (int i = 0; i < 30; ++i) {
    double a, b;
    v_shf_point(1.0 + 0.9 * i / 29.0, a, b);
    scals.push_back(scal_formula(a, b, n2));
  }
  for (size_t i = 0; i + 1 < scals.size(); ++i)
    min_gap = std::min(min_gap, std::abs(scals[i + 1] - scals[i]));
  CHECK(min_gap > 1e-6);
}

TEST_CASE("theta and swap isomorphism certificates") {
  IsoResiduals t = isomorphism_check(IsoMove::Theta, -1.0, 1.0);
  CHECK(t.omega <= 1e-11);
  CHECK(t.metric <= 1e-11);
  CHECK(t.psi <= 1e-11);

  IsoResiduals s = isomorphism_check(IsoMove::Swap, -1.0, 1.0);
  CHECK(s.omega <= 1e-11);
  CHECK(s.metric <= 1e-11);
  CHECK(s.psi <= 1e-11);

  // theta * theta = identity on forms
  const GeneratedFamily& fam = family_data(Family::SU21);
  CHECK((fam.root.theta_m * fam.root.theta_m - Mat6::Identity()).norm() <= 1e-13);
  CHECK((fam.root.swap_m * fam.root.swap_m - Mat6::Identity()).norm() <= 1e-13);

  CHECK_THROWS_AS(isomorphism_check(IsoMove::Swap, 1.0, -1.0), NotAdmissible);
}

TEST_CASE("50 random cone points build, certify SHF, and match the slice formula") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> ut(0.52, 1.97);
  double n2 = family_data(Family::SU21).root.n2;
  for (int i = 0; i < 50; ++i) {
    double a, b;
    v_shf_point(ut(rng), a, b);
    FamilyBuild fb = build_su21(a, b);
    ShfResiduals shf = check_shf(fb.structure, fb.data->alg);
    CHECK(shf.domega <= 1e-10);
    CHECK(shf.dpsi <= 1e-10);
    TorsionReport rep = ricci_report(fb.structure, fb.data->alg);
    CHECK(rep.residuals.at("nu_norm") <= 1e-9);
    CHECK(rep.scal == doctest::Approx(scal_formula(a, b, n2)).epsilon(1e-8));
    CHECK(quartic_wrt_root_volume(fb) ==
          doctest::Approx(-std::pow(fb.point.q, 4)).epsilon(1e-9));
  }
}

TEST_CASE("data files agree with regeneration") {
  for (Family f : {Family::SU21, Family::SO41}) {
    const GeneratedFamily& cached = family_data(f);
    GeneratedFamily fresh = regenerate(f);
    CHECK(data_agreement(cached.alg, fresh.alg) <= 1e-12);
  }
}
