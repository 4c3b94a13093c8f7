#include "qcoalg/quiver.hpp"

#include <algorithm>
#include <functional>

#include "qcoalg/errors.hpp"

namespace qcoalg {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ContractError("quiver", what);
}

}  // namespace

Vertex Quiver::add_vertex(std::string id) {
  if (id.empty()) fail("empty vertex id");
  if (vertex_index_.contains(id)) fail("duplicate vertex id '" + id + "'");
  auto v = static_cast<Vertex>(vertex_ids_.size());
  vertex_index_.emplace(id, v);
  vertex_ids_.push_back(std::move(id));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

Arrow Quiver::add_arrow(std::string id, Vertex source, Vertex target) {
  if (id.empty()) fail("empty arrow id");
  if (arrow_index_.contains(id)) fail("duplicate arrow id '" + id + "'");
  if (source >= num_vertices() || target >= num_vertices())
    fail("arrow '" + id + "' references a missing vertex");
  auto a = static_cast<Arrow>(arrows_.size());
  arrow_index_.emplace(id, a);
  arrows_.push_back({std::move(id), source, target});
  out_[source].push_back(a);
  in_[target].push_back(a);
  return a;
}

Arrow Quiver::add_arrow(std::string id, std::string_view source,
                        std::string_view target) {
  auto s = find_vertex(source);
  auto t = find_vertex(target);
  if (!s || !t)
    fail("arrow '" + id + "' references unknown vertex '" +
         std::string(!s ? source : target) + "'");
  return add_arrow(std::move(id), *s, *t);
}

std::optional<Vertex> Quiver::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Arrow> Quiver::find_arrow(std::string_view id) const {
  auto it = arrow_index_.find(std::string(id));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

Vertex Quiver::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  fail("unknown vertex '" + std::string(id) + "'");
}

Path Quiver::make_path(std::vector<Arrow> arrows) const {
  if (arrows.empty()) fail("empty arrow list; use a trivial path");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k] >= num_arrows()) fail("arrow index out of range");
    if (k > 0 && target(arrows[k - 1]) != source(arrows[k]))
      fail("arrows '" + arrow(arrows[k - 1]).id + "' and '" +
           arrow(arrows[k]).id + "' do not compose");
  }
  Vertex s = source(arrows.front());
  Vertex t = target(arrows.back());
  return Path(s, t, std::move(arrows));
}

Path Quiver::arrow_path(Arrow a) const {
  return Path(source(a), target(a), {a});
}

VertexTrace Quiver::trace(const Path& p) const {
  VertexTrace tr;
  tr.vertices.reserve(p.length() + 1);
  tr.vertices.push_back(p.source());
  for (Arrow a : p.arrows()) tr.vertices.push_back(target(a));
  return tr;
}

Path Quiver::subpath(const Path& p, std::size_t begin, std::size_t end) const {
  if (begin > end || end > p.length()) fail("subpath range out of bounds");
  if (begin == end) {
    Vertex v = begin == 0 ? p.source() : target(p.arrows()[begin - 1]);
    return Path::trivial(v);
  }
  auto arrows = p.arrows();
  std::vector<Arrow> piece(arrows.begin() + begin, arrows.begin() + end);
  const Vertex s = source(piece.front()), t = target(piece.back());
  return Path(s, t, std::move(piece));
}

std::string Quiver::format_path(const Path& p) const {
  if (p.is_trivial()) return "e_" + vertex_id(p.source());
  std::string out;
  for (Arrow a : p.arrows()) {
    if (!out.empty()) out += '.';
    out += arrow(a).id;
  }
  return out;
}

std::string Quiver::product_notation(const Path& p) const {
  if (p.is_trivial()) return "e_" + vertex_id(p.source());
  std::string out;
  auto arrows = p.arrows();
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += arrow(*it).id;
  }
  return out;
}

bool Quiver::operator==(const Quiver& other) const {
  if (vertex_ids_ != other.vertex_ids_) return false;
  if (arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    const auto& b = other.arrows_[i];
    if (a.id != b.id || a.source != b.source || a.target != b.target)
      return false;
  }
  return true;
}

VertexSubset::VertexSubset(std::size_t num_vertices,
                           std::span<const Vertex> members)
    : mask_(num_vertices, false) {
  for (Vertex v : members) {
    if (v >= num_vertices)
      throw ContractError("localization", "vertex index out of range");
    mask_[v] = true;
  }
  for (Vertex v = 0; v < num_vertices; ++v)
    if (mask_[v]) members_.push_back(v);
}

VertexSubset VertexSubset::all(std::size_t num_vertices) {
  std::vector<Vertex> vs(num_vertices);
  for (Vertex v = 0; v < num_vertices; ++v) vs[v] = v;
  return VertexSubset(num_vertices, vs);
}

VertexSubset VertexSubset::from_ids(const Quiver& q,
                                    std::span<const std::string> ids) {
  std::vector<Vertex> vs;
  for (const auto& id : ids) {
    auto v = q.find_vertex(id);
    if (!v) throw ContractError("localization", "unknown vertex '" + id + "'");
    vs.push_back(*v);
  }
  return VertexSubset(q.num_vertices(), vs);
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target() != q.source()) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<Arrow> arrows(p.arrows().begin(), p.arrows().end());
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(p.source(), q.target(), std::move(arrows));
}

Path concatenate(std::span<const Path> pieces) {
  if (pieces.empty()) fail("nothing to concatenate");
  Path acc = pieces.front();
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    auto next = compose(acc, pieces[k]);
    if (!next) fail("pieces do not compose");
    acc = std::move(*next);
  }
  return acc;
}

namespace {

// Depth-first walk from `start`; `visit` sees every nonempty arrow sequence
// of length <= max_length whose intermediate vertices satisfy `may_pass`.
// `visit` returns whether to keep extending the current sequence.
void walk(const Quiver& q, Vertex start, std::size_t max_length,
          const std::function<bool(const std::vector<Arrow>&, Vertex)>& visit) {
  std::vector<Arrow> stack;
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (stack.size() == max_length) return;
    for (Arrow a : q.out_arrows(v)) {
      stack.push_back(a);
      Vertex t = q.target(a);
      if (visit(stack, t)) rec(t);
      stack.pop_back();
    }
  };
  rec(start);
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, Vertex a, Vertex b,
                                  std::size_t max_length) {
  std::vector<Path> out;
  if (a == b) out.push_back(Path::trivial(a));
  walk(q, a, max_length, [&](const std::vector<Arrow>& arrows, Vertex t) {
    if (t == b) out.emplace_back(a, b, arrows);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_acyclic(const Quiver& q) {
  // Kahn's algorithm; loops count as cycles.
  std::vector<std::size_t> indeg(q.num_vertices(), 0);
  for (Arrow a = 0; a < q.num_arrows(); ++a) ++indeg[q.target(a)];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < q.num_vertices(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Arrow a : q.out_arrows(v))
      if (--indeg[q.target(a)] == 0) ready.push_back(q.target(a));
  }
  return seen == q.num_vertices();
}

bool is_intervally_finite_upto(const Quiver& q, std::size_t max_length) {
  if (is_acyclic(q)) return true;
  // Shortest cycle through each vertex by BFS.
  for (Vertex s = 0; s < q.num_vertices(); ++s) {
    std::vector<std::size_t> dist(q.num_vertices(), 0);
    std::vector<bool> seen(q.num_vertices(), false);
    std::vector<Vertex> frontier{s};
    for (std::size_t depth = 1; depth <= max_length && !frontier.empty();
         ++depth) {
      std::vector<Vertex> next;
      for (Vertex v : frontier)
        for (Arrow a : q.out_arrows(v)) {
          Vertex t = q.target(a);
          if (t == s) return false;
          if (!seen[t]) {
            seen[t] = true;
            next.push_back(t);
          }
        }
      frontier = std::move(next);
    }
  }
  return true;
}

bool is_cell(const Quiver& q, const Path& p, const VertexSubset& x) {
  if (p.is_trivial()) fail("is_cell: trivial path");
  if (!x.contains(p.source()) || !x.contains(p.target())) return false;
  auto arrows = p.arrows();
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (x.contains(q.target(arrows[k]))) return false;
  return true;
}

bool is_tail(const Quiver& q, const Path& p, const VertexSubset& x) {
  if (p.is_trivial()) fail("is_tail: trivial path");
  if (!x.contains(p.source())) return false;
  for (Arrow a : p.arrows())
    if (x.contains(q.target(a))) return false;
  return true;
}

namespace {

// Cut points: positions k (1 <= k < length) where the vertex reached after
// arrow k-1 lies in X.
std::vector<std::size_t> cut_points(const Quiver& q, const Path& p,
                                    const VertexSubset& x) {
  std::vector<std::size_t> cuts;
  auto arrows = p.arrows();
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (x.contains(q.target(arrows[k]))) cuts.push_back(k + 1);
  return cuts;
}

}  // namespace

CellDecomposition cellular_decomposition(const Quiver& q, const Path& p,
                                         const VertexSubset& x) {
  if (p.is_trivial()) fail("cellular_decomposition: trivial path");
  if (!x.contains(p.source()) || !x.contains(p.target()))
    fail("cellular_decomposition: path endpoints must lie in X");
  CellDecomposition d;
  std::size_t begin = 0;
  for (std::size_t cut : cut_points(q, p, x)) {
    d.cells.push_back(q.subpath(p, begin, cut));
    begin = cut;
  }
  d.cells.push_back(q.subpath(p, begin, p.length()));
  return d;
}

TailDecomposition tail_decomposition(const Quiver& q, const Path& p,
                                     const VertexSubset& x) {
  if (p.is_trivial()) fail("tail_decomposition: trivial path");
  if (!x.contains(p.source()))
    fail("tail_decomposition: source must lie in X");
  if (x.contains(p.target()))
    fail("tail_decomposition: target lies in X; use cellular_decomposition");
  std::vector<Path> cells;
  std::size_t begin = 0;
  for (std::size_t cut : cut_points(q, p, x)) {
    cells.push_back(q.subpath(p, begin, cut));
    begin = cut;
  }
  return TailDecomposition{std::move(cells), q.subpath(p, begin, p.length())};
}

std::vector<Path> enumerate_cells(const Quiver& q, const VertexSubset& x,
                                  Vertex from, Vertex to,
                                  std::size_t max_length) {
  std::vector<Path> out;
  if (!x.contains(from) || !x.contains(to)) return out;
  walk(q, from, max_length, [&](const std::vector<Arrow>& arrows, Vertex t) {
    if (x.contains(t)) {
      if (t == to) out.emplace_back(from, to, arrows);
      return false;
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> enumerate_tails(const Quiver& q, const VertexSubset& x,
                                  Vertex from, std::size_t max_length) {
  std::vector<Path> out;
  if (!x.contains(from)) return out;
  walk(q, from, max_length, [&](const std::vector<Arrow>& arrows, Vertex t) {
    if (x.contains(t)) return false;
    out.emplace_back(from, t, arrows);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

PathTable::PathTable(QuiverPtr quiver, std::size_t max_length)
    : quiver_(std::move(quiver)), max_length_(max_length) {
  const std::size_t n = quiver_->num_vertices();
  std::vector<std::vector<Path>> buckets(n * n);
  for (Vertex a = 0; a < n; ++a) {
    buckets[a * n + a].push_back(Path::trivial(a));
    walk(*quiver_, a, max_length_,
         [&](const std::vector<Arrow>& arrows, Vertex t) {
           buckets[a * n + t].emplace_back(a, t, arrows);
           return true;
         });
  }
  by_pair_.reserve(n * n);
  for (auto& bucket : buckets) {
    std::sort(bucket.begin(), bucket.end());
    total_ += bucket.size();
    by_pair_.push_back(
        std::make_shared<const std::vector<Path>>(std::move(bucket)));
  }
}

const PathTable::PathList& PathTable::paths(Vertex a, Vertex b) const {
  const std::size_t n = quiver_->num_vertices();
  if (a >= n || b >= n) fail("PathTable: vertex out of range");
  return by_pair_[a * n + b];
}

}  // namespace qcoalg
