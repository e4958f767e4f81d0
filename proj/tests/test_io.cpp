#include <random>

#include "doctest.h"
#include "shfkit/json_io.hpp"
#include "test_helpers.hpp"

using namespace shfkit;

TEST_CASE("form JSON round trip and schema") {
  std::mt19937_64 rng(61);
  for (int k = 0; k <= 6; ++k) {
    KForm phi = test::random_form(k, rng);
    KForm back = kform_from_json(kform_to_json(phi));
    CHECK(back.degree() == k);
    CHECK((back - phi).norm() <= 1e-15 * (1.0 + phi.norm()));
  }

  KForm sparse = kform_from_json(R"({"degree": 2, "coeffs": {"13": 2.5}})");
  CHECK(sparse.coeff({1, 3}) == 2.5);
  CHECK(sparse.norm() == 2.5);  // omitted keys are zero

  KForm scalar = kform_from_json(R"({"degree": 0, "coeffs": {"": 3.0}})");
  CHECK(scalar.coeffs()[0] == 3.0);
}

TEST_CASE("form JSON rejects malformed documents") {
  CHECK_THROWS_AS(kform_from_json("{"), ParseError);
  CHECK_THROWS_AS(kform_from_json(R"({"coeffs": {}})"), ParseError);
  CHECK_THROWS_AS(kform_from_json(R"({"degree": 9, "coeffs": {}})"), ParseError);
  CHECK_THROWS_AS(kform_from_json(R"({"degree": 2, "coeffs": {"135": 1.0}})"), ParseError);
  CHECK_THROWS_AS(kform_from_json(R"({"degree": 2, "coeffs": {"31": 1.0}})"), ParseError);
  CHECK_THROWS_AS(kform_from_json(R"({"degree": 2, "coeffs": {"12": "x"}})"), ParseError);
}

TEST_CASE("structure pair round trip") {
  std::string doc = su3_pair_to_json(test::flat_omega(), test::flat_psi());
  KForm omega, psi;
  su3_pair_from_json(doc, omega, psi);
  CHECK((omega - test::flat_omega()).norm() == 0.0);
  CHECK((psi - test::flat_psi()).norm() == 0.0);
  CHECK_THROWS_AS(su3_pair_from_json("{}", omega, psi), ParseError);
}

TEST_CASE("lie algebra JSON round trip preserves constants to 17 digits") {
  GeneratedFamily gen = regenerate(Family::SU21);
  std::string doc = lie_algebra_to_json(gen.alg);
  LieAlgebraData back = lie_algebra_from_json(doc);
  CHECK(back.dim == gen.alg.dim);
  CHECK(data_agreement(back, gen.alg) <= 1e-15);
  CHECK(back.k_indices == gen.alg.k_indices);
  CHECK(back.basis_labels == gen.alg.basis_labels);
  // Killing is recomputed on load
  CHECK((back.killing - gen.alg.killing).norm() <= 1e-12);
}

TEST_CASE("lie algebra JSON rejects invalid data") {
  CHECK_THROWS_AS(lie_algebra_from_json("{}"), ParseError);
  // a perturbed constant breaks the Jacobi identity beyond the load threshold
  GeneratedFamily gen = regenerate(Family::SU21);
  std::string doc = lie_algebra_to_json(gen.alg);
  auto pos = doc.find("0.40824829046386");
  REQUIRE(pos != std::string::npos);
  std::string broken = doc;
  broken.replace(pos, 16, "0.40834829046386");
  CHECK_THROWS_AS(lie_algebra_from_json(broken), ParseError);
}

TEST_CASE("validation report JSON carries verdict, P, signature") {
  ValidationReport rep = validation_report(test::flat_omega(), test::flat_psi());
  std::string doc = validation_report_to_json(rep);
  CHECK(doc.find("\"valid\": true") != std::string::npos);
  CHECK(doc.find("\"P\"") != std::string::npos);
  CHECK(doc.find("\"signature\"") != std::string::npos);
}

TEST_CASE("deterministic rendering") {
  FamilyBuild fb = build_su21(-1.0, 1.0);
  TorsionReport rep = ricci_report(fb.structure, fb.data->alg);
  CHECK(family_report_to_json(fb, rep) == family_report_to_json(fb, rep));
  CHECK(family_report_to_text(fb, rep) == family_report_to_text(fb, rep));
  CHECK(format_sig(0.1234567890123, 12) == "0.123456789012");
}
