#pragma once

// Quivers, paths and the cell/tail combinatorics relative to a vertex subset.
//
// Paths are stored in traversal order: the first arrow of `arrows()` is the
// first one walked. The usual right-to-left product notation p = a_m ... a_1
// only appears in `Quiver::product_notation`. The source of an arrow is
// where it starts and the target is where it ends.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qcoalg {

using Vertex = std::uint32_t;
using Arrow = std::uint32_t;

class Path {
 public:
  static Path trivial(Vertex v) { return Path(v, v, {}); }

  // No composability check; use Quiver::make_path for validated input.
  Path(Vertex source, Vertex target, std::vector<Arrow> arrows)
      : source_(source), target_(target), arrows_(std::move(arrows)) {}

  Vertex source() const noexcept { return source_; }
  Vertex target() const noexcept { return target_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  bool is_trivial() const noexcept { return arrows_.empty(); }
  std::span<const Arrow> arrows() const noexcept { return arrows_; }

  // Canonical order: length first, then the arrow sequence
  // lexicographically; trivial paths are ordered by vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
    if (a.arrows_.empty()) return a.source_ <=> b.source_;
    return a.arrows_ <=> b.arrows_;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.source_ == b.source_ && a.arrows_ == b.arrows_;
  }

 private:
  Vertex source_;
  Vertex target_;
  std::vector<Arrow> arrows_;
};

// Vertices visited by a path, source first; length() + 1 entries.
struct VertexTrace {
  std::vector<Vertex> vertices;
};

class Quiver {
 public:
  struct ArrowData {
    std::string id;
    Vertex source;
    Vertex target;
  };

  // Ids must be unique among vertices (resp. arrows). Throws ContractError.
  Vertex add_vertex(std::string id);
  Arrow add_arrow(std::string id, Vertex source, Vertex target);
  Arrow add_arrow(std::string id, std::string_view source,
                  std::string_view target);

  std::size_t num_vertices() const noexcept { return vertex_ids_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }

  const std::string& vertex_id(Vertex v) const { return vertex_ids_.at(v); }
  const ArrowData& arrow(Arrow a) const { return arrows_.at(a); }
  Vertex source(Arrow a) const { return arrows_.at(a).source; }
  Vertex target(Arrow a) const { return arrows_.at(a).target; }

  std::optional<Vertex> find_vertex(std::string_view id) const;
  std::optional<Arrow> find_arrow(std::string_view id) const;
  // Throws ContractError for unknown ids.
  Vertex vertex(std::string_view id) const;

  std::span<const Arrow> out_arrows(Vertex v) const { return out_.at(v); }
  std::span<const Arrow> in_arrows(Vertex v) const { return in_.at(v); }

  // Validates composability; an empty list is rejected (use Path::trivial).
  Path make_path(std::vector<Arrow> arrows) const;
  Path arrow_path(Arrow a) const;

  VertexTrace trace(const Path& p) const;
  // Arrows [begin, end) of p; a trivial path when begin == end.
  Path subpath(const Path& p, std::size_t begin, std::size_t end) const;

  // "e_<v>" or arrow ids joined by '.', traversal order.
  std::string format_path(const Path& p) const;
  // Arrow ids right to left separated by spaces (product notation), e.g.
  // "a2 a1" for the path that walks a1 then a2.
  std::string product_notation(const Path& p) const;

  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<ArrowData> arrows_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::unordered_map<std::string, Arrow> arrow_index_;
  std::vector<std::vector<Arrow>> out_;
  std::vector<std::vector<Arrow>> in_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// Vertex subset X of a quiver; membership by mask, members in vertex order.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(std::size_t num_vertices, std::span<const Vertex> members);

  static VertexSubset all(std::size_t num_vertices);
  // Throws ContractError("localization", ...) on unknown ids.
  static VertexSubset from_ids(const Quiver& q,
                               std::span<const std::string> ids);

  bool contains(Vertex v) const { return v < mask_.size() && mask_[v]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t universe() const noexcept { return mask_.size(); }

 private:
  std::vector<bool> mask_;
  std::vector<Vertex> members_;
};

// Concatenation "p then q"; nullopt when target(p) != source(q). In product
// notation this is "q p".
std::optional<Path> compose(const Path& p, const Path& q);

// All paths a -> b of length <= max_length, in canonical order.
std::vector<Path> enumerate_paths(const Quiver& q, Vertex a, Vertex b,
                                  std::size_t max_length);

bool is_acyclic(const Quiver& q);
// True when no oriented cycle of length <= max_length exists. A finite quiver
// is intervally finite iff it is acyclic, so this is exact for acyclic input
// and a certificate up to max_length otherwise.
bool is_intervally_finite_upto(const Quiver& q, std::size_t max_length);

// Both throw ContractError for trivial paths.
bool is_cell(const Quiver& q, const Path& p, const VertexSubset& x);
bool is_tail(const Quiver& q, const Path& p, const VertexSubset& x);

struct CellDecomposition {
  std::vector<Path> cells;  // traversal order
};

struct TailDecomposition {
  std::vector<Path> cells;  // traversal order
  Path tail;
};

// Requires a nontrivial p with both endpoints in X.
CellDecomposition cellular_decomposition(const Quiver& q, const Path& p,
                                         const VertexSubset& x);
// Requires source(p) in X and target(p) not in X.
TailDecomposition tail_decomposition(const Quiver& q, const Path& p,
                                     const VertexSubset& x);

Path concatenate(std::span<const Path> pieces);

// Cells x -> y of length 1..max_length, canonical order.
std::vector<Path> enumerate_cells(const Quiver& q, const VertexSubset& x,
                                  Vertex from, Vertex to,
                                  std::size_t max_length);
// x-tails of length 1..max_length, canonical order.
std::vector<Path> enumerate_tails(const Quiver& q, const VertexSubset& x,
                                  Vertex from, std::size_t max_length);

// Every path of length <= max_length grouped by endpoints. Ambient lists are
// shared so that subspaces over the same component compare cheaply.
class PathTable {
 public:
  using PathList = std::shared_ptr<const std::vector<Path>>;

  PathTable(QuiverPtr quiver, std::size_t max_length);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  std::size_t max_length() const noexcept { return max_length_; }

  // Never null; empty list when no path exists.
  const PathList& paths(Vertex a, Vertex b) const;
  std::size_t total_paths() const noexcept { return total_; }

 private:
  QuiverPtr quiver_;
  std::size_t max_length_;
  std::size_t total_ = 0;
  std::vector<PathList> by_pair_;  // index a * n + b
};

using PathTablePtr = std::shared_ptr<const PathTable>;

}  // namespace qcoalg
