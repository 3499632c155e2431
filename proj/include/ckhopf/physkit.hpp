#pragma once

#include <string>
#include <vector>

#include "ckhopf/ckfactory.hpp"

namespace ckhopf {

/// Physical names for the CK generators. CK generator x equals
/// sign[x] times the physical generator names[x].
struct PhysicalBasis {
  int time_slot = 1;  // H = P_s
  std::vector<std::string> ck_names;
  std::vector<std::string> names;
  std::vector<std::string> latex;
  std::vector<int> sign;
};

/// H = P_s, space translations the remaining P's in order, K_i = J between s
/// and the i-th space slot, and for N = 4 J1 = J_{x2x3}, J2 = -J_{x1x3},
/// J3 = J_{x1x2}. Other rotations keep their CK names.
PhysicalBasis physical_basis(int n, int s);

struct Preset {
  std::string name;
  KVector k;
  PhysicalBasis basis;
};

/// Catalog order; kappa_poincare_N is listed once as a pattern.
std::vector<std::string> preset_names();
/// euclid4, poincare_1..4, galilei, kappa_poincare_N. Throws std::invalid_argument.
Preset preset(const std::string& name);

/// Copy of the algebra or Hopf algebra with generators renamed (and signs
/// flipped) per the basis. Letter order, kinds and slots are unchanged.
AlgebraPtr to_physical(const AlgebraPtr& alg, const PhysicalBasis& b);
HopfPtr to_physical(const Hopf& h, const PhysicalBasis& b);

struct TableRow {
  std::string section;  // coproduct, counit, antipode, bracket
  std::string lhs;      // e.g. "Delta(K3)" or "[K3,H]"
  std::string text;
  std::string latex;
};

struct PhysicalTables {
  Preset preset;
  HopfPtr physical;
  std::vector<TableRow> rows;
  /// Term-by-term comparison with the reference tables (poincare_1, galilei);
  /// empty for presets without a reference.
  VerificationReport report;
};

/// One expected entry: Δ(x), ε(x), S(x) (y empty) or [x, y], in physical names.
struct ReferenceRow {
  std::string section;
  std::string x, y;
  std::string text;
};

/// Hand-written tables of U_λ(p(3,1)) for "poincare_1", of the deformed
/// Galilei algebra for "galilei", and of κ-Poincaré in the bicrossproduct
/// basis at c = 1, λ = 1/κ for "kappa_poincare_4". With `displayed_kk`,
/// [K_i, K_j] of poincare_1 is taken with K_k on the right instead of J_k.
std::vector<ReferenceRow> reference_tables(const std::string& preset, bool displayed_kk = false);
/// Term-by-term comparison; also checks every generator and pair is covered.
VerificationReport compare_tables(const Hopf& physical, const std::vector<ReferenceRow>& rows);

/// N = 4 presets only; throws std::invalid_argument otherwise.
PhysicalTables emit_physical_tables(const Preset& p);
std::string tables_latex(const PhysicalTables& t);

/// contract(m = 2) of poincare_1 against the galilei preset: coalgebra
/// unchanged, and exactly the listed brackets change to the listed values.
VerificationReport galilei_limit_check();

/// Advisory: flags positive powers of c in the presentation, for which the
/// κ2 -> 0 limit has no direct meaning. Entries always pass; see note.
VerificationReport divergence_guard(const Preset& p);

/// poincare_s at c = 1 against iso(3,1) written out in physical names, plus
/// the matrix oracle at the specialized κ.
VerificationReport poincare_isomorphism_check(int s);

/// kappa_poincare_N: bicrossproduct decomposition and a primitive time
/// translation; for N = 4 also the bicrossproduct-basis tables at c = 1.
VerificationReport kappa_poincare_check(int n);

}  // namespace ckhopf
