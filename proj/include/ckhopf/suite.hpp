#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckhopf/ckfactory.hpp"

namespace ckhopf {

struct SuiteConfig {
  std::string basis = "new";  // classical | old | new
  std::size_t max_degree = 6;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
};

/// jacobi, hopf, bicross, casimir, rmatrix, dimension, confluence, dual2,
/// galilei, basis, contraction.
const std::vector<std::string>& check_names();

/// Checks that "all" expands to for this κ (dual2 only at N = 2).
std::vector<std::string> all_checks(const KVector& k, bool include_galilei = true);

/// Runs one named check. Throws std::invalid_argument for an unknown name or
/// a check that does not apply (dual2 at N != 2, hopf on the classical basis).
VerificationReport run_check(const std::string& name, const KVector& k, const SuiteConfig& cfg);

/// All 3^{N-1} affine κ vectors with κ2..κN in {-1, 0, 1}.
std::vector<KVector> affine_specializations(int n);

/// Runs `checks` on every affine specialization on `threads` workers and
/// merges the reports in specialization order. "all" is expanded per κ
/// without the galilei check.
VerificationReport sweep(int n, const std::vector<std::string>& checks, const SuiteConfig& cfg, unsigned threads);

/// True when no κ contains a symbol.
bool is_numeric(const KVector& k);

}  // namespace ckhopf
