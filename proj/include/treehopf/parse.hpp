#pragma once

#include <stdexcept>
#include <string>

#include "treehopf/series.hpp"

namespace treehopf {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Parses `p/q*TREE + ...` into a canonical series. When dim == 0 the
/// dimension is inferred as the largest label seen (at least 1).
TreeSeries<Rational> parse_series(const std::string& text, int dim = 0);

/// Parses a single labelled tree like `o(1 3(2))`.
LabelledTree parse_tree(const std::string& text, int dim = 0);

/// Renders Psi of a labelled tree as a nested derivative expression, e.g.
/// `f''(y)[V_1'''(y)[V_3(y),V_4(y),V_5(y)],V_2(y)]`.
std::string psi_expression(const LabelledTree& t);

}  // namespace treehopf
