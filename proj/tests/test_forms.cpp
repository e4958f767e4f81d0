#include <random>

#include "doctest.h"
#include "shfkit/forms.hpp"
#include "test_helpers.hpp"

using namespace shfkit;
using test::random_form;
using test::random_mat;
using test::random_vec;

TEST_CASE("multi-index tables enumerate lexicographically") {
  const auto& tab = MultiIndexTable::get();
  CHECK(tab.count(0) == 1);
  CHECK(tab.count(2) == 15);
  CHECK(tab.count(3) == 20);
  CHECK(MultiIndexTable::key(tab.mask(2, 0)) == "12");
  CHECK(MultiIndexTable::key(tab.mask(2, 1)) == "13");
  CHECK(MultiIndexTable::key(tab.mask(2, 5)) == "23");
  CHECK(MultiIndexTable::key(tab.mask(3, 0)) == "123");
  CHECK(MultiIndexTable::key(tab.mask(6, 0)) == "123456");
  CHECK(MultiIndexTable::mask_of_key("135") == MultiIndexTable::mask_of({1, 3, 5}));
  CHECK_THROWS_AS(MultiIndexTable::mask_of_key("153"), ParseError);
}

TEST_CASE("wedge basis cases") {
  CHECK((wedge(KForm::basis({1}), KForm::basis({2})) - KForm::basis({1, 2})).norm() == 0.0);
  CHECK(wedge(KForm::basis({1, 2}), KForm::basis({1, 3})).norm() == 0.0);
  CHECK((wedge(KForm::basis({2}), KForm::basis({1})) + KForm::basis({1, 2})).norm() == 0.0);
}

TEST_CASE("omega^3 of the standard symplectic form") {
  KForm omega = test::flat_omega();
  KForm cubed = wedge(wedge(omega, omega), omega);
  CHECK(cubed.coeff({1, 2, 3, 4, 5, 6}) == doctest::Approx(6.0));
  CHECK((cubed - KForm::basis({1, 2, 3, 4, 5, 6}, 6.0)).norm() == doctest::Approx(0.0));
  // independent gather-style expansion
  KForm oracle = test::wedge_oracle(test::wedge_oracle(omega, omega), omega);
  CHECK((cubed - oracle).norm() == doctest::Approx(0.0));
}

TEST_CASE("wedge agrees with the expansion oracle on random forms") {
  std::mt19937_64 rng(11);
  for (auto [p, q] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 4}, {0, 3}, {1, 5}}) {
    KForm a = random_form(p, rng), b = random_form(q, rng);
    CHECK((wedge(a, b) - test::wedge_oracle(a, b)).norm() <= 1e-13);
  }
}

TEST_CASE("wedge is graded anticommutative and associative") {
  std::mt19937_64 rng(12);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 6 && q <= 3; ++q) {
      KForm a = random_form(p, rng), b = random_form(q, rng);
      double sign = (p * q) % 2 == 0 ? 1.0 : -1.0;
      CHECK((wedge(a, b) - sign * wedge(b, a)).norm() <= 1e-13);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    KForm a = random_form(1, rng), b = random_form(2, rng), c = random_form(2, rng);
    KForm lhs = wedge(wedge(a, b), c), rhs = wedge(a, wedge(b, c));
    CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
  }
}

TEST_CASE("wedge degree overflow throws") {
  CHECK_THROWS_AS(wedge(KForm::zero(4), KForm::zero(3)), DegreeError);
}

TEST_CASE("contraction basis cases and derivation property") {
  CHECK((contract(Vec6(Vec6::Unit(0)), KForm::basis({1, 2, 3})) - KForm::basis({2, 3})).norm() ==
        0.0);
  CHECK(contract(Vec6(Vec6::Unit(3)), KForm::basis({1, 2, 3})).norm() == 0.0);
  CHECK((contract(Vec6(Vec6::Unit(1)), KForm::basis({1, 2, 3})) + KForm::basis({1, 3})).norm() ==
        0.0);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Vec6 v = random_vec(rng);
    KForm phi = random_form(2, rng);
    KForm lhs = contract(v, wedge(phi, phi));
    KForm rhs = 2.0 * wedge(contract(v, phi), phi);
    CHECK((lhs - rhs).norm() <= 1e-13 * (1.0 + lhs.norm()));

    KForm alpha = random_form(3, rng), beta = random_form(2, rng);
    KForm l2 = contract(v, wedge(alpha, beta));
    KForm r2 = wedge(contract(v, alpha), beta) - wedge(alpha, contract(v, beta));
    CHECK((l2 - r2).norm() <= 1e-13 * (1.0 + l2.norm()));

    CHECK(contract(v, contract(v, alpha)).norm() <= 1e-14);
  }
  CHECK_THROWS_AS(contract(Vec6(Vec6::Unit(0)), KForm::scalar(1.0)), DegreeError);
}

TEST_CASE("contraction agrees with multilinear evaluation") {
  std::mt19937_64 rng(14);
  KForm phi = random_form(3, rng);
  Vec6 v = random_vec(rng), w1 = random_vec(rng), w2 = random_vec(rng);
  Eigen::Matrix<double, 6, Eigen::Dynamic> args(6, 3);
  args.col(0) = v;
  args.col(1) = w1;
  args.col(2) = w2;
  Eigen::Matrix<double, 6, Eigen::Dynamic> rest(6, 2);
  rest.col(0) = w1;
  rest.col(1) = w2;
  CHECK(eval(contract(v, phi), rest) == doctest::Approx(eval(phi, args)).epsilon(1e-12));
}

TEST_CASE("pullback: identity, homogeneity, functoriality, composition") {
  std::mt19937_64 rng(15);
  KForm phi = random_form(3, rng);
  CHECK((pullback(Mat6(Mat6::Identity()), phi) - phi).norm() == 0.0);
  CHECK((pullback(Mat6(2.0 * Mat6::Identity()), KForm::basis({1, 2})) -
         KForm::basis({1, 2}, 4.0))
            .norm() == doctest::Approx(0.0));

  for (int trial = 0; trial < 10; ++trial) {
    Mat6 A = random_mat(rng), B = random_mat(rng);
    KForm a = random_form(2, rng), b = random_form(2, rng);
    KForm lhs = pullback(A, wedge(a, b));
    KForm rhs = wedge(pullback(A, a), pullback(A, b));
    CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));

    KForm c = random_form(3, rng);
    KForm comp = pullback(Mat6(A * B), c);
    KForm steps = pullback(B, pullback(A, c));
    CHECK((comp - steps).norm() <= 1e-11 * (1.0 + comp.norm()));
  }
}

TEST_CASE("inner product on the Euclidean metric") {
  MetricGram g;
  CHECK(inner(KForm::basis({1, 2}), KForm::basis({1, 2}), g) == doctest::Approx(1.0));
  CHECK(inner(KForm::basis({1, 2}), KForm::basis({3, 4}), g) == doctest::Approx(0.0));
  CHECK_THROWS_AS(inner(KForm::zero(2), KForm::zero(3), g), DegreeError);

  std::mt19937_64 rng(16);
  for (int k = 0; k <= 6; ++k) {
    KForm phi = random_form(k, rng);
    CHECK(inner(phi, phi, g) >= 0.0);
    CHECK(inner(phi, phi, g) == doctest::Approx(phi.coeffs().squaredNorm()));
  }
}

TEST_CASE("hodge star on the Euclidean metric") {
  MetricGram g;
  KForm vol = KForm::basis({1, 2, 3, 4, 5, 6});
  CHECK((hodge_star(KForm::scalar(1.0), g, vol) - vol).norm() == doctest::Approx(0.0));
  CHECK((hodge_star(KForm::basis({1, 2}), g, vol) - KForm::basis({3, 4, 5, 6})).norm() ==
        doctest::Approx(0.0));
  CHECK((hodge_star(KForm::basis({3, 4}), g, vol) - KForm::basis({1, 2, 5, 6})).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("hodge star involution and isometry for random SPD metrics") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Mat6 A = random_mat(rng);
    MetricGram g{A * A.transpose() + 6.0 * Mat6::Identity()};
    KForm vol = KForm::basis({1, 2, 3, 4, 5, 6}, std::sqrt(g.gram.determinant()));
    for (int k = 0; k <= 6; ++k) {
      KForm phi = random_form(k, rng);
      KForm ss = hodge_star(hodge_star(phi, g, vol), g, vol);
      double sign = (k * (6 - k)) % 2 == 0 ? 1.0 : -1.0;
      CHECK((ss - sign * phi).norm() <= 1e-10 * (1.0 + phi.norm()));

      KForm chi = random_form(k, rng);
      CHECK(inner(hodge_star(phi, g, vol), hodge_star(chi, g, vol), g) ==
            doctest::Approx(inner(phi, chi, g)).epsilon(1e-9));
    }
  }
}

TEST_CASE("hodge star input validation") {
  MetricGram g;
  KForm vol = KForm::basis({1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(hodge_star(KForm::zero(2), g, KForm::zero(6)), VolumeError);
  CHECK_THROWS_AS(hodge_star(KForm::zero(2), g, KForm::basis({1, 2, 3, 4, 5, 6}, 3.0)),
                  VolumeError);
  MetricGram bad{-Mat6::Identity()};
  CHECK_THROWS_AS(hodge_star(KForm::zero(2), bad, vol), MetricError);
}

TEST_CASE("form construction guards") {
  CHECK_THROWS_AS(KForm::zero(7), DegreeError);
  CHECK_THROWS_AS(KForm::zero(-1), DegreeError);
  CHECK_THROWS_AS(KForm::basis({1, 1}), DegreeError);
  CHECK_THROWS_AS(KForm(2, Eigen::VectorXd::Zero(10)), DegreeError);
}

TEST_CASE("eval is alternating") {
  std::mt19937_64 rng(18);
  KForm phi = random_form(3, rng);
  Eigen::Matrix<double, 6, Eigen::Dynamic> args(6, 3);
  args.col(0) = random_vec(rng);
  args.col(1) = random_vec(rng);
  args.col(2) = random_vec(rng);
  double v1 = eval(phi, args);
  args.col(0).swap(args.col(1));
  CHECK(eval(phi, args) == doctest::Approx(-v1).epsilon(1e-12));
  args.col(1) = args.col(2);
  CHECK(eval(phi, args) == doctest::Approx(0.0));
}
