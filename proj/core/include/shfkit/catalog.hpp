#ifndef SHFKIT_CATALOG_HPP
#define SHFKIT_CATALOG_HPP

#include <string>
#include <vector>

#include "shfkit/lie_algebra.hpp"
#include "shfkit/su3_structure.hpp"
#include "shfkit/torsion.hpp"

namespace shfkit {

enum class Family { SU21, SO41 };

std::string family_name(Family f);  // "su21" / "so41"

/// Parameter-region flags for the SU(2,1) family. The admissible cone is
/// Q = A u (-A) with A = { 0 < -a/2 < b < -2a }; the unit-volume slice V is
/// cut out of A by (b-a)(a+2b)(2a+b) = -1, and the fundamental domain V_SHF
/// is the part of V with 0 < -a <= b.
struct RegionFlags {
  bool in_admissible = false;      // Q
  bool in_cone = false;            // A
  bool in_mirror_cone = false;     // -A
  bool on_slice = false;           // V
  bool in_fundamental = false;     // V_SHF
};

struct FamilyPoint {
  Family family = Family::SU21;
  double a = 0.0;
  double b = 0.0;   // unused for SO41
  double q = 0.0;   // positive normalization constant
  int delta = 0;    // sign of (b-a)(a+2b)(2a+b), resp. sign of a
  RegionFlags region;
};

/// Convention data of the generated root-space realization. The m basis is
/// always ordered (v_alpha, w_alpha, v_beta, w_beta, v_{alpha+beta},
/// w_{alpha+beta}) with alpha the compact root and beta, alpha+beta
/// noncompact.
struct RootData {
  Family family = Family::SU21;
  double n2 = 0.0;                       // N_{alpha,beta}^2 under B(E_g, E_-g) = 1
  KForm omega_ref = KForm::zero(kDim);   // real volume form of the root basis
  Mat6 theta_m = Mat6::Identity();       // SU21: conjugation w.r.t. the split real form
  Mat6 swap_m = Mat6::Identity();        // SU21: conjugation by the torus-swapping element
  Mat6 flip_m = Mat6::Identity();        // SO41: plane-swap mapping a -> -a
};

struct GeneratedFamily {
  LieAlgebraData alg;
  RootData root;
};

/// Build the defining matrix representation, fix the root-vector
/// normalization B(E_gamma, E_{-gamma}) = 1, convert to the real basis and
/// emit structure constants plus the convention data above. Deterministic.
/// Throws RootNormalizationError on a compact/noncompact convention breach.
GeneratedFamily regenerate(Family family);

/// Data directory resolution: $SHFKIT_DATA_DIR when set, otherwise the
/// source-tree data/ directory, otherwise the install location.
std::string data_directory();
std::string family_file_name(Family family);

/// Largest absolute disagreement between two structure-constant sets; +inf on
/// layout mismatch.
double data_agreement(const LieAlgebraData& x, const LieAlgebraData& y);

/// Algebra + root data used by the builders: the data file (when present) is
/// loaded and cross-checked against regeneration at 1e-12; a mismatch is an
/// error. Cached per family.
const GeneratedFamily& family_data(Family family);

/// A constructed catalog point: algebra, validated structure, parameters.
struct FamilyBuild {
  Family family = Family::SU21;
  const GeneratedFamily* data = nullptr;
  SU3Structure structure;
  FamilyPoint point;
};

/// Invariant SHF structure on SU(2,1)/T^2 with parameters (a,b) in Q;
/// q > 0 from q^2 = 2|(b-a)(a+2b)(2a+b)|. NotAdmissible reports the failing
/// inequality.
FamilyBuild build_su21(double a, double b, double tol = 1e-9);

/// Invariant SHF structure on SO(4,1)/U(2); q^2 = delta_a a^3 / 2, a != 0.
FamilyBuild build_so41(double a, double tol = 1e-9);

RegionFlags classify_region(double a, double b);

/// (b-a)(a+2b)(2a+b), the cubic whose level set -1 defines the slice V.
double slice_constraint(double a, double b);

/// Quartic invariant of the built psi w.r.t. the root-basis reference volume
/// delta * omega_ref; equals -q^4 for every catalog structure.
double quartic_wrt_root_volume(const FamilyBuild& fb);

struct SliceNormalization {
  double a = 0.0, b = 0.0, lambda = 0.0;
};
/// Homothety scaling (a,b) -> (lambda a, lambda b) landing on V;
/// lambda = |(b-a)(a+2b)(2a+b)|^{-1/3}. Requires (a,b) in A.
SliceNormalization normalize_to_slice(double a, double b);

/// Certified isomorphism/homothety moves on the parameter plane.
struct Move {
  enum class Kind { Theta, Scale, Swap };
  Kind kind = Kind::Theta;
  double lambda = 1.0;  // Scale only
};
struct DomainMapResult {
  double a = 0.0, b = 0.0;
  std::vector<Move> moves;
};
/// Apply one move to a parameter pair (replay helper).
void apply_move(const Move& m, double& a, double& b);
/// Reduce any (a,b) in Q to the fundamental domain V_SHF through the
/// documented moves; the move list is a replayable certificate.
DomainMapResult fundamental_domain_map(double a, double b);

/// -24 * N2 * (a^2 + ab + b^2): scalar curvature of the SU(2,1) family for
/// volume-normalized parameters ((a,b) on V, or -V for the mirror cone); away
/// from the slice the torsion-derived value carries an extra factor
/// 1/|(b-a)(a+2b)(2a+b)|.
double scal_formula(double a, double b, double n2);

/// Point of the fundamental-domain curve V_SHF at parameter t = b/(-a) in
/// [1, 2); t = 1 is the scalar-curvature maximizer.
void v_shf_point(double t, double& a, double& b);

struct CriticalPoint {
  double a = 0.0, b = 0.0;
  double gradient_norm = 0.0;  // projected-gradient norm of the Lagrange system
  double constraint = 0.0;     // slice constraint value at the solution
};
/// Stationary point of the scalar curvature restricted to the slice V,
/// computed by Newton iteration on the Lagrange system.
CriticalPoint critical_point_check(double n2);

enum class IsoMove { Theta, Swap };
struct IsoResiduals {
  double omega = 0.0;
  double metric = 0.0;
  double psi = 0.0;   // after resolving the free overall sign of psi
  int psi_sign = 1;   // sign making the 3-forms match
  double max() const;
};
/// Pull the forms of the image point back along the Lie-algebra map induced
/// by the move and compare with the forms at (a,b). The 2-form and the metric
/// match exactly; the 3-form matches up to the overall sign left free by the
/// q > 0 normalization (both signs give isomorphic structures).
IsoResiduals isomorphism_check(IsoMove move, double a, double b);

/// Homothety certificate for two SO(4,1) points: residual of the
/// (omega, psi) -> (c^2 omega, c^3 psi) matching, routed through the
/// plane-swap map when the signs of a differ.
double so41_homothety_residual(double a1, double a2);

}  // namespace shfkit

#endif
