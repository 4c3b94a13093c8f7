#pragma once

// The path coalgebra KQ and its subcoalgebras, stored per endpoint component
// C_ab = C ∩ K Q(a, b) and truncated at a maximal path length.
//
// Comultiplication splits a path p = (later part) after (earlier part):
//   delta(p) = sum over factorizations p = eta * tau of eta (x) tau,
// so the left tensor leg ends at target(p) and the right leg starts at
// source(p). For an arrow a: s -> t, delta(a) = e_t (x) a + a (x) e_s.

#include <map>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "qcoalg/path_vector.hpp"
#include "qcoalg/quiver.hpp"
#include "qcoalg/subspace.hpp"

namespace qcoalg {

using TensorExpansion = std::map<std::pair<Path, Path>, Rational>;
using TripleExpansion = std::map<std::tuple<Path, Path, Path>, Rational>;

TensorExpansion delta(const Quiver& q, const Path& p);
TensorExpansion delta_elem(const Quiver& q, const PathVector& v);
Rational counit(const PathVector& v);

// (delta (x) id) delta(p) and (id (x) delta) delta(p).
TripleExpansion delta_left_then(const Quiver& q, const Path& p);
TripleExpansion delta_right_then(const Quiver& q, const Path& p);

// Partial evaluations of delta(v) against path functionals:
//   left_evaluations(v)[eta]  = sum over p = eta*tau of v_p tau
//   right_evaluations(v)[tau] = sum over p = eta*tau of v_p eta
std::map<Path, PathVector> left_evaluations(const Quiver& q,
                                            const PathVector& v);
std::map<Path, PathVector> right_evaluations(const Quiver& q,
                                             const PathVector& v);

class GradedSubcoalgebra {
 public:
  using Key = std::pair<Vertex, Vertex>;  // (source, target)

  // Empty subspace in every component.
  GradedSubcoalgebra(PathTablePtr table, bool admissible);

  const Quiver& quiver() const noexcept { return table_->quiver(); }
  const QuiverPtr& quiver_ptr() const noexcept { return table_->quiver_ptr(); }
  const PathTablePtr& table() const noexcept { return table_; }
  std::size_t max_length() const noexcept { return table_->max_length(); }
  // Whether the construction requested admissibility; see is_admissible for
  // the verified property.
  bool admissible() const noexcept { return admissible_; }

  // Zero subspace (over the right ambient) when nothing is stored.
  Subspace component(Vertex a, Vertex b) const;
  std::size_t dim_component(Vertex a, Vertex b) const;
  std::size_t dimension() const;
  // Stored nonzero components in key order.
  const std::map<Key, Subspace>& components() const noexcept {
    return components_;
  }

  // Non-homogeneous input is split by endpoints. Throws when a path exceeds
  // the truncation.
  bool insert(const PathVector& v);
  bool contains(const PathVector& v) const;
  bool contains_path(const Path& p) const { return contains(PathVector(p)); }

  // All basis rows, component by component.
  std::vector<PathVector> basis() const;

  // Same truncation and the same subspace in every component.
  friend bool operator==(const GradedSubcoalgebra& a,
                         const GradedSubcoalgebra& b) {
    return a.max_length() == b.max_length() && a.components_ == b.components_;
  }

 private:
  PathTablePtr table_;
  bool admissible_;
  std::map<Key, Subspace> components_;
};

// Smallest subspace of KQ_{<=L} containing the generators (and every vertex
// and arrow when `admissible`) that is closed under both partial
// evaluations of delta. Exact at bound L because delta never increases
// length. Throws ContractError("pathcoalg") for generators longer than L.
GradedSubcoalgebra subcoalgebra_closure(QuiverPtr q,
                                        std::span<const PathVector> generators,
                                        std::size_t max_length,
                                        bool admissible);
GradedSubcoalgebra subcoalgebra_closure(PathTablePtr table,
                                        std::span<const PathVector> generators,
                                        bool admissible);

// KQ_{<=L}.
GradedSubcoalgebra full_path_coalgebra(PathTablePtr table);

// The span of `vectors`, unclosed; for testing the closure conditions.
GradedSubcoalgebra span_components(PathTablePtr table,
                                   std::span<const PathVector> vectors);

bool is_subcoalgebra(const GradedSubcoalgebra& c);
bool is_admissible(const GradedSubcoalgebra& c);

struct ComponentDiagnostic {
  Vertex source;
  Vertex target;
  std::size_t dim;
  bool exceeds_two;  // off-diagonal component of dimension > 2
};

// Off-diagonal components with their dimensions. Tame admissible
// subcoalgebras of acyclic quivers have every dim C_xy <= 2.
std::vector<ComponentDiagnostic> tameness_diagnostic(
    const GradedSubcoalgebra& c);

}  // namespace qcoalg
