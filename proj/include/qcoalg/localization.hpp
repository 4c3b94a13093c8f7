#pragma once

// Localization of an admissible subcoalgebra C of KQ at a vertex subset X.
//
// eCe is the sum of the components C_ab with a, b in X. Its Gabriel quiver
// Q^e has vertex set X and, from x to y, one arrow per basis vector of
// K Cell(x, y) ∩ C (the nontrivial (x, y)-primitive elements of eCe). The
// basis is the RREF basis over the canonical path order.
//
// Elements of eCe are re-expressed in K Q^e by cutting each path into cells
// and replacing every cell by the arrow whose RREF row has that cell as
// pivot; a path containing a non-pivot cell maps to zero. This is the
// coalgebra embedding induced by the projection onto the primitives that
// reads off pivot coordinates.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcoalg/coalgebra.hpp"

namespace qcoalg {

class LocalizedQuiver {
 public:
  using Key = std::pair<Vertex, Vertex>;  // original vertices

  struct ArrowInfo {
    Vertex source;       // original vertex
    Vertex target;       // original vertex
    PathVector label;    // element of K Cell(x, y) ∩ C over Q
    Path pivot_cell;     // pivot of the label's RREF row
  };

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  const VertexSubset& vertices() const noexcept { return x_; }
  std::size_t max_length() const noexcept { return max_length_; }
  const std::vector<ArrowInfo>& arrows() const noexcept { return arrows_; }

  Vertex to_original(Vertex localized) const { return to_original_.at(localized); }
  // Throws ContractError when v is not in X.
  Vertex to_localized(Vertex original) const;

  // K Cell(x, y) ∩ C, over the ambient of C_xy.
  const std::map<Key, Subspace>& primitive_spaces() const noexcept {
    return primitives_;
  }
  std::size_t arrow_count(Vertex x, Vertex y) const;
  // Largest number of parallel arrows between two vertices of X, and
  // whether some pair carries at least three (the wild three-arrow
  // Kronecker subquiver, giving dim Ext^1(S_x, S_y) >= 3).
  std::size_t max_parallel_arrows() const;
  bool contains_triple_arrow() const { return max_parallel_arrows() >= 3; }

  // Requires both endpoints of every support path in X.
  std::optional<Path> reexpress_path(const Path& p) const;
  PathVector reexpress(const PathVector& v) const;

 private:
  friend LocalizedQuiver localized_quiver(const GradedSubcoalgebra& c,
                                          const VertexSubset& x,
                                          std::size_t max_length);

  QuiverPtr original_;
  QuiverPtr quiver_;
  VertexSubset x_;
  std::size_t max_length_ = 0;
  std::vector<Vertex> to_original_;
  std::vector<std::optional<Vertex>> to_localized_;
  std::vector<ArrowInfo> arrows_;
  std::map<Key, Subspace> primitives_;
  std::map<Path, Arrow> pivot_arrow_;
};

// Cells are enumerated up to min(max_length, c.max_length()).
LocalizedQuiver localized_quiver(const GradedSubcoalgebra& c,
                                 const VertexSubset& x,
                                 std::size_t max_length);

struct Localization {
  std::shared_ptr<const GradedSubcoalgebra> source;  // C
  VertexSubset vertices;                             // X
  std::shared_ptr<const LocalizedQuiver> quiver;     // Q^e
  // eCe as a subspace of KQ: the components of C inside X x X.
  std::shared_ptr<const GradedSubcoalgebra> restricted;
  // eCe as an admissible subcoalgebra of K Q^e.
  std::shared_ptr<const GradedSubcoalgebra> coalgebra;
};

// Requires C to contain every vertex and arrow of Q (admissibility is what
// makes the re-expression injective). Throws ContractError("localization").
Localization localize_coalgebra(std::shared_ptr<const GradedSubcoalgebra> c,
                                const VertexSubset& x);

// K Tail(x) ∩ C over the ambient of all x-tails up to max_length (clamped
// to the truncation of C). Throws when x is not in X.
Subspace tail_space(const GradedSubcoalgebra& c, const VertexSubset& x,
                    Vertex at, std::size_t max_length);

struct TailDimensions {
  Vertex vertex;
  std::vector<std::size_t> by_bound;  // index l: dim at tail length <= l
  bool growth_warning;  // strictly increasing over the last two bounds
};

struct IdempotentClassification {
  bool left_semicentral = false;   // no arrow enters X from outside
  bool right_semicentral = false;  // no arrow leaves X
  bool split = false;              // eCe is a subcoalgebra of C
  // Truncated data is finite dimensional, so every tail space is finite;
  // growth is reported through `tails` instead of a negative verdict.
  bool colocalizing = true;
  // Q acyclic with Q_0 \ X finite: every localizing subcategory is
  // colocalizing.
  bool acyclic_shortcut = false;
  std::optional<Arrow> entering_arrow;
  std::optional<Arrow> leaving_arrow;
  std::optional<Path> split_witness;  // support path of eCe leaving X
  std::vector<TailDimensions> tails;
};

IdempotentClassification classify_idempotent(const GradedSubcoalgebra& c,
                                              const VertexSubset& x,
                                              std::size_t max_length);

}  // namespace qcoalg
