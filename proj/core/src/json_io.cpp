#include "shfkit/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace shfkit {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_sig(double x, int sig) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
}

ordered_json kform_to_obj(const KForm& phi) {
  const auto& tab = MultiIndexTable::get();
  ordered_json coeffs = ordered_json::object();
  for (int p = 0; p < tab.count(phi.degree()); ++p) {
    double c = phi.coeffs()[p];
    if (c != 0.0) coeffs[MultiIndexTable::key(tab.mask(phi.degree(), p))] = c;
  }
  return ordered_json{{"degree", phi.degree()}, {"coeffs", coeffs}};
}

KForm kform_from_obj(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
    throw ParseError("form document must carry \"degree\" and \"coeffs\"");
  int degree = j.at("degree").get<int>();
  if (degree < 0 || degree > kDim) throw ParseError("form degree outside 0..6");
  KForm out = KForm::zero(degree);
  const auto& tab = MultiIndexTable::get();
  for (auto it = j.at("coeffs").begin(); it != j.at("coeffs").end(); ++it) {
    std::uint8_t mask = MultiIndexTable::mask_of_key(it.key());
    int pos = tab.position(degree, mask);
    if (pos < 0)
      throw ParseError("multi-index \"" + it.key() + "\" does not match degree " +
                       std::to_string(degree));
    if (!it.value().is_number())
      throw ParseError("coefficient of \"" + it.key() + "\" is not a number");
    out.coeffs()[pos] = it.value().get<double>();
  }
  return out;
}

ordered_json residuals_to_obj(const std::map<std::string, double>& residuals) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : residuals) obj[k] = v;
  return obj;
}

ordered_json torsion_report_to_obj(const TorsionReport& rep) {
  return ordered_json{{"sigma", kform_to_obj(rep.sigma)},
                      {"sigma_norm2", rep.sigma_norm2},
                      {"nu", kform_to_obj(rep.nu)},
                      {"scal", rep.scal},
                      {"ric0_plus_rep", kform_to_obj(rep.ric0_plus_rep)},
                      {"ric0_minus_rep", kform_to_obj(rep.ric0_minus_rep)},
                      {"torsion_free", rep.torsion_free},
                      {"j_hermitian_ricci", rep.j_hermitian_ricci},
                      {"residuals", residuals_to_obj(rep.residuals)}};
}

ordered_json region_to_obj(const RegionFlags& r) {
  return ordered_json{{"in_Q", r.in_admissible},
                      {"in_A", r.in_cone},
                      {"in_minus_A", r.in_mirror_cone},
                      {"on_V", r.on_slice},
                      {"in_V_SHF", r.in_fundamental}};
}

}  // namespace

std::string kform_to_json(const KForm& phi) { return kform_to_obj(phi).dump(2); }

KForm kform_from_json(const std::string& text) { return kform_from_obj(parse(text)); }

std::string su3_pair_to_json(const KForm& omega, const KForm& psi) {
  return ordered_json{{"omega", kform_to_obj(omega)}, {"psi", kform_to_obj(psi)}}.dump(2);
}

void su3_pair_from_json(const std::string& text, KForm& omega, KForm& psi) {
  json j = parse(text);
  if (!j.contains("omega") || !j.contains("psi"))
    throw ParseError("structure document must carry \"omega\" and \"psi\"");
  omega = kform_from_obj(j.at("omega"));
  psi = kform_from_obj(j.at("psi"));
  if (omega.degree() != 2) throw ParseError("\"omega\" must have degree 2");
  if (psi.degree() != 3) throw ParseError("\"psi\" must have degree 3");
}

std::string lie_algebra_to_json(const LieAlgebraData& alg) {
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j)
      for (int k = 0; k < alg.dim; ++k) {
        double v = alg.c(i, j, k);
        if (v != 0.0) entries.push_back(ordered_json::array({i, j, k, format_sig(v, 17)}));
      }
  ordered_json doc{{"dim", alg.dim},
                   {"bracket", entries},
                   {"k_indices", alg.k_indices},
                   {"m_indices", alg.m_indices},
                   {"basis_labels", alg.basis_labels}};
  return doc.dump(2);
}

LieAlgebraData lie_algebra_from_json(const std::string& text) {
  json j = parse(text);
  LieAlgebraData alg;
  try {
    alg.dim = j.at("dim").get<int>();
    if (alg.dim <= 0 || alg.dim > 64) throw ParseError("implausible algebra dimension");
    alg.bracket.assign(alg.dim, Eigen::MatrixXd::Zero(alg.dim, alg.dim));
    for (const auto& e : j.at("bracket")) {
      int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
      if (i < 0 || i >= alg.dim || jj < 0 || jj >= alg.dim || k < 0 || k >= alg.dim)
        throw ParseError("bracket entry index out of range");
      double v = std::stod(e.at(3).get<std::string>());
      alg.bracket[k](i, jj) = v;
      alg.bracket[k](jj, i) = -v;
    }
    alg.k_indices = j.at("k_indices").get<std::vector<int>>();
    alg.m_indices = j.at("m_indices").get<std::vector<int>>();
    alg.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("structure-constant document malformed: ") + e.what());
  }
  if (static_cast<int>(alg.m_indices.size()) != kDim)
    throw ParseError("m_indices must list exactly 6 indices");
  alg.killing = alg.killing_from_constants();

  LieAlgebraResiduals res = check_lie_algebra(alg);
  if (res.max() > 1e-8)
    throw ParseError("loaded structure constants violate the Lie-algebra invariants "
                     "(worst residual " + format_sig(res.max(), 6) + ")");
  return alg;
}

LieAlgebraData load_lie_algebra(const std::string& path) {
  return lie_algebra_from_json(read_file(path));
}

void save_lie_algebra(const LieAlgebraData& alg, const std::string& path) {
  write_file(path, lie_algebra_to_json(alg) + "\n");
}

std::string validation_report_to_json(const ValidationReport& rep) {
  ordered_json doc{{"valid", rep.valid},
                   {"residuals", residuals_to_obj(rep.residuals)},
                   {"P", rep.P},
                   {"signature", {rep.signature_pos, rep.signature_neg, rep.signature_zero}}};
  if (!rep.error.empty()) doc["error"] = rep.error;
  return doc.dump(2);
}

std::string torsion_report_to_json(const TorsionReport& rep) {
  return torsion_report_to_obj(rep).dump(2);
}

std::string family_report_to_json(const FamilyBuild& fb, const TorsionReport& torsion) {
  Eigen::VectorXd diag = fb.structure.g.gram.diagonal();
  ordered_json doc{{"family", family_name(fb.family)},
                   {"a", fb.point.a},
                   {"b", fb.point.b},
                   {"q", fb.point.q},
                   {"delta", fb.point.delta},
                   {"n2", fb.data->root.n2},
                   {"region", region_to_obj(fb.point.region)},
                   {"metric_diag", std::vector<double>(diag.data(), diag.data() + kDim)},
                   {"P_root_volume", quartic_wrt_root_volume(fb)},
                   {"scal_formula", scal_formula(fb.point.a, fb.point.b, fb.data->root.n2)},
                   {"torsion", torsion_report_to_obj(torsion)}};
  return doc.dump(2);
}

namespace {

void text_residuals(std::ostream& os, const std::map<std::string, double>& residuals) {
  for (const auto& [k, v] : residuals) os << "  " << k << " = " << format_sig(v, 12) << "\n";
}

}  // namespace

std::string validation_report_to_text(const ValidationReport& rep) {
  std::ostringstream os;
  os << "valid: " << (rep.valid ? "yes" : "no") << "\n";
  if (!rep.error.empty()) os << "error: " << rep.error << "\n";
  os << "P: " << format_sig(rep.P, 12) << "\n";
  os << "signature: (" << rep.signature_pos << "," << rep.signature_neg << ","
     << rep.signature_zero << ")\n";
  os << "residuals:\n";
  text_residuals(os, rep.residuals);
  return os.str();
}

std::string family_report_to_text(const FamilyBuild& fb, const TorsionReport& torsion) {
  std::ostringstream os;
  os << "family: " << family_name(fb.family) << "\n";
  os << "a: " << format_sig(fb.point.a, 12) << "\n";
  if (fb.family == Family::SU21) os << "b: " << format_sig(fb.point.b, 12) << "\n";
  os << "q: " << format_sig(fb.point.q, 12) << "\n";
  os << "delta: " << fb.point.delta << "\n";
  os << "n2: " << format_sig(fb.data->root.n2, 12) << "\n";
  if (fb.family == Family::SU21) {
    const auto& r = fb.point.region;
    os << "region: in_Q=" << r.in_admissible << " in_A=" << r.in_cone
       << " in_minus_A=" << r.in_mirror_cone << " on_V=" << r.on_slice
       << " in_V_SHF=" << r.in_fundamental << "\n";
  }
  os << "metric_diag:";
  for (int i = 0; i < kDim; ++i) os << " " << format_sig(fb.structure.g.gram(i, i), 12);
  os << "\n";
  os << "P_root_volume: " << format_sig(quartic_wrt_root_volume(fb), 12) << "\n";
  os << "scal: " << format_sig(torsion.scal, 12) << "\n";
  os << "scal_formula: "
     << format_sig(scal_formula(fb.point.a, fb.point.b, fb.data->root.n2), 12) << "\n";
  os << "sigma_norm2: " << format_sig(torsion.sigma_norm2, 12) << "\n";
  os << "torsion_free: " << (torsion.torsion_free ? "yes" : "no") << "\n";
  os << "j_hermitian_ricci: " << (torsion.j_hermitian_ricci ? "yes" : "no") << "\n";
  os << "residuals:\n";
  text_residuals(os, torsion.residuals);
  return os.str();
}

}  // namespace shfkit
