#pragma once

#include "crlc/catalog.hpp"

namespace crlc {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Exact rational expression over a source alphabet.
struct RatExpr {
  Poly num, den;
};

/// Parses one component expression in the holomorphic variables of the
/// surface. sqrt(...) is rejected here; use parse_component_series.
RatExpr parse_component(const std::string& text, Surface source);

/// Series-mode variant: sqrt(...) allowed when the argument has constant
/// term 1 (or an exact square constant that can be factored out).
Series parse_component_series(const std::string& text, Surface source, int order);

/// Expressions are tuples "(expr, expr, ...)"; counts must match the target
/// dimension. With sqrt present anywhere, parses as a germ.
std::variant<RationalMap, MapGerm> parse_map(const std::string& text, Surface source,
                                             Surface target, int order = 20,
                                             std::vector<Scalar> center = {});

/// Map file format: header lines "name:", "source:", "target:", "center:"
/// followed by "components:" with one expression per line.
std::variant<RationalMap, MapGerm> parse_map_file(const std::string& content, int order = 20);

/// Canonical printing of a rational map as a component tuple.
std::string print_map(const RationalMap& map);

}  // namespace crlc
