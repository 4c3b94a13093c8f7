#pragma once

// Text formats. Every format is line based, '#' starts a comment, blank
// lines are ignored and tokens are separated by whitespace.
//
//   quiver:     vertex <id>
//               arrow <id> <source> <target>
//   coalgebra:  quiver lines, then
//               generator <path vector>
//               admissible true|false
//               maxlen <L>
//   relations:  relation <path vector>     (over a quiver given separately)
//               maxlen <L>                 (optional)
//   comodule:   dim <m>
//               rho <i> : <j> <path vector>; <j> <path vector>; ...
//
// A quiver may also be given as JSON:
//   {"vertices": ["x", ...], "arrows": [{"id": "a", "source": "x",
//    "target": "y"}, ...]}
// Arrow ids may not start with "e_" (reserved for trivial paths) or with a
// digit (reserved for coefficients). Errors are ParseError with 1-based
// line and column.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcoalg/comodule.hpp"
#include "qcoalg/path_vector.hpp"
#include "qcoalg/quiver.hpp"

namespace qcoalg {

struct CoalgebraSpec {
  QuiverPtr quiver;
  std::vector<PathVector> generators;
  bool admissible = true;
  std::optional<std::size_t> max_length;
};

struct RelationSpec {
  std::vector<PathVector> relations;
  std::optional<std::size_t> max_length;
};

QuiverPtr parse_quiver(std::string_view text);
CoalgebraSpec parse_coalgebra(std::string_view text);
RelationSpec parse_relations(const Quiver& q, std::string_view text);
// Basis indices are 0-based; unlisted coefficients are zero.
FinComodule parse_comodule(CoalgebraPtr c, std::string_view text);

std::string format_quiver(const Quiver& q);
std::string format_coalgebra(const CoalgebraSpec& spec);
std::string format_relations(const Quiver& q, const RelationSpec& spec);
std::string format_comodule(const FinComodule& m);

// Throws ContractError("cli") when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace qcoalg
