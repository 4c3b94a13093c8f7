#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcoalg/coalgebra.hpp"
#include "qcoalg/io.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) {
  return std::string(QCOALG_FIXTURES_DIR) + "/" + name;
}

inline qcoalg::QuiverPtr load_quiver(const std::string& name) {
  return qcoalg::parse_quiver(qcoalg::read_file(fixture(name)));
}

// Closure of the generators of a coalgebra fixture at its own bound.
inline std::shared_ptr<const qcoalg::GradedSubcoalgebra> load_coalgebra(
    const std::string& name, std::size_t default_length = 2) {
  auto spec = qcoalg::parse_coalgebra(qcoalg::read_file(fixture(name)));
  return std::make_shared<const qcoalg::GradedSubcoalgebra>(
      qcoalg::subcoalgebra_closure(spec.quiver, spec.generators,
                                   spec.max_length.value_or(default_length),
                                   spec.admissible));
}

inline qcoalg::VertexSubset subset(const qcoalg::Quiver& q,
                                   std::vector<std::string> ids) {
  return qcoalg::VertexSubset::from_ids(q, ids);
}

inline qcoalg::PathVector pv(const qcoalg::Quiver& q, const std::string& s) {
  return qcoalg::parse_path_vector(q, s);
}

inline qcoalg::Path path(const qcoalg::Quiver& q, const std::string& s) {
  return qcoalg::parse_path(q, s);
}

// n parallel two-step paths x -> z_i -> y with the consecutive differences
// of the composites as generators.
inline std::string parallel_family(std::size_t n, std::size_t maxlen = 2) {
  std::string s = "vertex x\nvertex y\n";
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    s += "vertex z" + k + "\narrow a" + k + " x z" + k + "\narrow b" + k +
         " z" + k + " y\n";
  }
  for (std::size_t i = 1; i < n; ++i) {
    const std::string k = std::to_string(i), k1 = std::to_string(i + 1);
    s += "generator a" + k + ".b" + k + " - a" + k1 + ".b" + k1 + "\n";
  }
  s += "admissible true\nmaxlen " + std::to_string(maxlen) + "\n";
  return s;
}

inline std::shared_ptr<const qcoalg::GradedSubcoalgebra> closure_of(
    const std::string& text) {
  auto spec = qcoalg::parse_coalgebra(text);
  return std::make_shared<const qcoalg::GradedSubcoalgebra>(
      qcoalg::subcoalgebra_closure(spec.quiver, spec.generators,
                                   spec.max_length.value_or(2),
                                   spec.admissible));
}

}  // namespace testing_support
