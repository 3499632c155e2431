#pragma once

#include <json.hpp>

#include "ckhopf/hopf.hpp"

namespace ckhopf {

/// Presentation file: symbols, generators, rewrite rules x·y -> image (x >= y),
/// E-shifts, and Δ, ε, S images as text in normal form. Coalgebra fields are
/// omitted for a plain algebra.
nlohmann::json presentation_to_json(const Hopf& h);
nlohmann::json presentation_to_json(const Algebra& a);

/// Throws std::runtime_error on a malformed file. A file without coalgebra
/// fields gives an incomplete Hopf (see Hopf::complete).
HopfPtr presentation_from_json(const nlohmann::json& j);

/// Δ, ε, S of every generator and all nonzero brackets [x, y] with x > y, as
/// LaTeX array environments. Coalgebra sections are skipped when incomplete.
std::string presentation_latex(const Hopf& h);

}  // namespace ckhopf
