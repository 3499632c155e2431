#pragma once

#include <map>
#include <string>

#include "ckhopf/ncalg.hpp"
#include "lexer.hpp"

namespace ckhopf::detail {

using Aliases = std::map<std::string, NCElement>;

/// Product of factors; stops before `+`, `-`, `)`, `(x)` or end of input.
NCElement parse_element_product(TokenStream& ts, const AlgebraPtr& alg, const Aliases& aliases);
NCElement parse_element_sum(TokenStream& ts, const AlgebraPtr& alg, const Aliases& aliases);

}  // namespace ckhopf::detail
