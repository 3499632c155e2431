#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckhopf/hopf.hpp"
#include "ckhopf/ncalg.hpp"
#include "ckhopf/report.hpp"
#include "ckhopf/tensor.hpp"

namespace ckhopf {

/// The parameters κ1..κN of a Cayley–Klein algebra.
class KVector {
 public:
  KVector() = default;
  KVector(int n, std::vector<Coefficient> kappas);  // kappas[l-1] = κ_l

  /// κ1 = 0 when `affine`, every other κ_l the symbol k_l.
  static KVector symbolic(int n, bool affine = true);
  /// Comma-separated entries: N-1 entries give κ2..κN with κ1 = 0, N entries
  /// give κ1..κN. "s" means the symbol k_l; otherwise a coefficient expression.
  static KVector parse(int n, const std::string& csv);

  int n() const { return n_; }
  const SymbolTablePtr& table() const { return table_; }
  const Coefficient& kappa(int l) const { return k_.at(l - 1); }
  /// κ_ab = κ_{a+1}···κ_b, with κ_aa = 1.
  Coefficient kab(int a, int b) const;
  bool affine() const { return kappa(1).is_zero(); }
  KVector with(int l, const Coefficient& value) const;
  KVector specialized(const Bindings& b) const;

  std::string label() const;
  std::string affine_label() const;

 private:
  int n_ = 0;
  SymbolTablePtr table_;
  std::vector<Coefficient> k_;
};

/// κ_ab κ_bc = κ_ac for all a < b < c.
VerificationReport check_kappa_coherence(const KVector& k);

/// Bracket of two CK generators J_ab, J_cd (0 <= a < b <= N) as (coefficient, (p,q)) terms.
std::vector<std::pair<Coefficient, std::pair<int, int>>> ck_bracket(const KVector& k, int a, int b, int c, int d);

/// so_{κ1..κN}(N+1) on J_ab, 0 <= a < b <= N.
AlgebraPtr build_classical_ck(const KVector& k);
/// iso_{κ2..κN}(N) on P_i = J_0i and J_ij; requires κ1 = 0.
AlgebraPtr build_affine(const KVector& k);
/// Deformed Hopf algebra in the basis with symmetric exponentials.
HopfPtr build_deformed_old(const KVector& k);
/// Deformed Hopf algebra in the basis with the single deformed bracket.
HopfPtr build_deformed_new(const KVector& k);

/// W_ijk = κ_ij P_i J_jk - P_j J_ik + P_k J_ij, 1 <= i < j < k <= N-1.
NCElement w_symbol(const AlgebraPtr& alg, const KVector& k, int i, int j, int k3);

/// The [J_iN, J_jN] bracket of the old basis written with W-symbols and cosh.
NCElement old_basis_jj_bracket(const AlgebraPtr& old_alg, const KVector& k, int i, int j);

struct BasisChange {
  HopfPtr old_basis;
  HopfPtr new_basis;
  AlgebraMorphism new_in_old;  // P_i -> E^-1 P_i, J_iN -> symmetrized expression
  AlgebraMorphism old_in_new;  // inverse, solved triangularly
  /// Rewrites a new-basis element in the old basis by elimination.
  NCElement to_old(const NCElement& x) const;
};

BasisChange make_basis_change(const KVector& k);
/// S(X) = -E^(N-1) X E^-(N-1) on every generator of the old basis.
VerificationReport check_compact_antipode(const Hopf& old_basis, const KVector& k);
/// Round trips, transport of every relation both ways, transport of Δ, ε, S,
/// and agreement of the derived [J_iN, J_jN] with the W-symbol display.
VerificationReport check_basis_change(const BasisChange& bc, const KVector& k);

/// Graded contraction: generators J_ab with a < m <= b are scaled by ε and
/// λ by 1/ε; terms vanishing as ε -> 0 are dropped. Throws on a divergent term.
AlgebraPtr contract(const AlgebraPtr& alg, int m);
HopfPtr contract(const Hopf& h, int m);
/// 1 when a < m <= b.
int contraction_weight(const Generator& g, int m);
/// The surviving part of an image whose left-hand side has weight `lhs_weight`.
NCElement contract_image(const NCElement& x, int lhs_weight, int m);
TensorElement contract_image(const TensorElement& t, int lhs_weight, int m);

/// Structural equality of presentations over the same generator layout.
VerificationReport compare_algebras(const Algebra& a, const Algebra& b, const std::string& check);
VerificationReport compare_hopf(const Hopf& a, const Hopf& b, const std::string& check);

enum class Flavor { Classical, Old, New };

/// Second order Casimir of the affine algebra or of either deformed basis.
/// New basis: Σ κ_iN E^2 P_i^2 + (E^2 - 2 + E^-2)/λ^2, the image of the old one.
NCElement casimir(const AlgebraPtr& alg, const KVector& k, Flavor f);
VerificationReport check_casimir(const AlgebraPtr& alg, const KVector& k, Flavor f);

/// Expansion of E = exp(λP_N/2) as a series; returns the λ^order part of x as
/// an element of `classical` (same generator names), keeping the λ^order factor.
NCElement lambda_part(const NCElement& x, const AlgebraPtr& classical, int order);
TensorElement lambda_part(const TensorElement& t, const AlgebraPtr& classical, int order);

/// r = λ Σ_s (J_sN ⊗ P_s - P_s ⊗ J_sN) over the classical algebra.
TensorElement rmatrix(const AlgebraPtr& classical, const KVector& k);
/// λ-linear part of (Δ - τΔ)(X) against [X⊗1 + 1⊗X, r] for every generator.
VerificationReport check_rmatrix(const Hopf& deformed_new, const KVector& k);

/// Classical limit of the new-basis brackets against build_affine.
VerificationReport check_classical_limit(const Hopf& deformed_new, const KVector& k);

// ---------------------------------------------------------------------------
// Dimensional analysis

using DimVector = std::vector<Rational>;  // exponent per base dimension D_1..D_N

struct DimensionAssignment {
  int n_base = 0;
  std::map<std::string, DimVector> generators;
  std::map<std::string, DimVector> symbols;  // lambda, c, k1..kN
};

enum class DimScheme { Uniform, PerAlgebra };

/// Uniform: [κ_a] = D_a^-2, [J_ab] = Π_{i=a+1}^b D_i^-1. Per-algebra: only
/// vanishing κ_a carry a base dimension; nonzero κ and c are dimensionless.
/// In both, [λ] = -[P_N].
DimensionAssignment dimension_assignment(const AlgebraPtr& alg, const KVector& k, DimScheme scheme);

/// Every relation, E-shift, coproduct and antipode term has the dimension of
/// its left-hand side; E may appear only when [λ] + [P_N] = 0.
VerificationReport dimension_check(const Hopf& h, const DimensionAssignment& d);
VerificationReport dimension_check(const AlgebraPtr& alg, const DimensionAssignment& d);

std::string dim_text(const DimVector& v);

// ---------------------------------------------------------------------------
// Matrix oracle

/// Structure constants of the faithful (N+1)x(N+1) realization
/// J_ab = e_ba - κ_ab e_ab at rational κ, compared with the rewriting engine.
VerificationReport check_matrix_oracle(const AlgebraPtr& classical_ck, const KVector& numeric_k);

}  // namespace ckhopf
