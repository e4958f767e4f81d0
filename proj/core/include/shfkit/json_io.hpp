#ifndef SHFKIT_JSON_IO_HPP
#define SHFKIT_JSON_IO_HPP

#include <string>

#include "shfkit/catalog.hpp"
#include "shfkit/lie_algebra.hpp"
#include "shfkit/su3_structure.hpp"
#include "shfkit/torsion.hpp"

namespace shfkit {

/// Forms serialize as {"degree": k, "coeffs": {"135": c, ...}} with ascending
/// digit-string multi-index keys; omitted keys mean zero and the degree-0
/// coefficient uses the empty key.
std::string kform_to_json(const KForm& phi);
KForm kform_from_json(const std::string& text);

/// (omega, psi) input document: {"omega": <form>, "psi": <form>}.
std::string su3_pair_to_json(const KForm& omega, const KForm& psi);
void su3_pair_from_json(const std::string& text, KForm& omega, KForm& psi);

/// Structure-constant schema:
/// {"dim": n, "bracket": [[i, j, k, "<17-digit decimal>"], ...],
///  "k_indices": [...], "m_indices": [...], "basis_labels": [...]}
/// with 0-based indices, entries i < j only. The Killing matrix is recomputed
/// from the constants on load.
std::string lie_algebra_to_json(const LieAlgebraData& alg);
LieAlgebraData lie_algebra_from_json(const std::string& text);
LieAlgebraData load_lie_algebra(const std::string& path);
void save_lie_algebra(const LieAlgebraData& alg, const std::string& path);

std::string validation_report_to_json(const ValidationReport& rep);
std::string torsion_report_to_json(const TorsionReport& rep);

/// Full catalog point report: parameters, region flags, metric diagonal,
/// quartic invariant w.r.t. the root-basis volume, and the torsion report.
std::string family_report_to_json(const FamilyBuild& fb, const TorsionReport& torsion);

/// Plain-text variants of the reports (12 significant digits).
std::string validation_report_to_text(const ValidationReport& rep);
std::string family_report_to_text(const FamilyBuild& fb, const TorsionReport& torsion);

/// Deterministic number formatting: `sig` significant digits, shortest form.
std::string format_sig(double x, int sig);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace shfkit

#endif
