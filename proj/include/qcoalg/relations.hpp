#pragma once

// Relation ideals Ω ⊆ KQ_{>=2} and the duality Ω ↦ C(Q, Ω) = Ω^⊥,
// H ↦ H^⊥, all truncated at a path length bound L. The Kronecker pairing of
// an element of length <= L only sees the length <= L part of Ω, so the
// truncated ideal is the span of the projections of u*r*w to length <= L.

#include <map>
#include <span>
#include <vector>

#include "qcoalg/coalgebra.hpp"

namespace qcoalg {

class RelationIdeal {
 public:
  using Key = std::pair<Vertex, Vertex>;

  // Throws ContractError("relations") when a generator has a term of
  // length 0 or 1, or a term longer than the truncation.
  RelationIdeal(PathTablePtr table, std::vector<PathVector> generators);

  // An ideal given directly by its truncated span; the caller guarantees
  // two-sided closure. Generators are the RREF rows.
  static RelationIdeal from_span(PathTablePtr table,
                                 std::map<Key, Subspace> components);

  const Quiver& quiver() const noexcept { return table_->quiver(); }
  const PathTablePtr& table() const noexcept { return table_; }
  std::size_t max_length() const noexcept { return table_->max_length(); }
  const std::vector<PathVector>& generators() const noexcept {
    return generators_;
  }

  Subspace component(Vertex a, Vertex b) const;
  const std::map<Key, Subspace>& components() const noexcept {
    return components_;
  }
  std::size_t dimension() const;
  bool contains(const PathVector& v) const;
  std::vector<PathVector> basis() const;

  // Same truncated span; generators may differ.
  friend bool operator==(const RelationIdeal& a, const RelationIdeal& b) {
    return a.max_length() == b.max_length() && a.components_ == b.components_;
  }

 private:
  RelationIdeal(PathTablePtr table) : table_(std::move(table)) {}

  PathTablePtr table_;
  std::vector<PathVector> generators_;
  std::map<Key, Subspace> components_;  // nonzero components only
};

RelationIdeal truncated_ideal_span(QuiverPtr q,
                                   std::span<const PathVector> generators,
                                   std::size_t max_length);

// Ω^⊥ inside KQ_{<=L}; always admissible.
GradedSubcoalgebra coalgebra_of_relations(const RelationIdeal& omega);

// H^⊥ per component. Throws ContractError("relations") when the complement
// is not a relation ideal within the truncation (a term of length 0 or 1, or
// not closed under multiplication by arrows).
RelationIdeal relations_of_coalgebra(const GradedSubcoalgebra& h);

struct CriterionWitness {
  Vertex source;
  Vertex target;
  std::size_t max_length;
  // RREF rows of C_xy (restricted to length <= max_length) whose whole
  // support consists of paths not in C; each row is its pivot path plus
  // a combination of later paths in the canonical order.
  std::vector<PathVector> rows;
  std::vector<Path> pivots;

  std::size_t size() const noexcept { return rows.size(); }
};

// Bounded evidence only: a witness of size k at bound L says nothing about
// infinitely many paths. max_length is clamped to the truncation of C.
CriterionWitness criterion_witness(const GradedSubcoalgebra& c, Vertex x,
                                   Vertex y, std::size_t max_length);

}  // namespace qcoalg
