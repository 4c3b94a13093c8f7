#include "qcoalg/localization.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcoalg/errors.hpp"

namespace qcoalg {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ContractError("localization", what);
}

void check_subset(const Quiver& q, const VertexSubset& x) {
  if (x.universe() != q.num_vertices())
    fail("vertex subset belongs to a quiver with " +
         std::to_string(x.universe()) + " vertices, expected " +
         std::to_string(q.num_vertices()));
}

std::vector<PathVector> as_vectors(const std::vector<Path>& paths) {
  std::vector<PathVector> out;
  out.reserve(paths.size());
  for (const Path& p : paths) out.emplace_back(p);
  return out;
}

std::string arrow_name(const Quiver& q, const PathVector& label, Vertex x,
                       Vertex y, std::size_t k) {
  if (label.size() == 1) {
    std::string name = "bar";
    for (Arrow a : label.terms().begin()->first.arrows())
      name += "_" + q.arrow(a).id;
    return name;
  }
  return "bar_" + q.vertex_id(x) + "_" + q.vertex_id(y) + "_" +
         std::to_string(k);
}

}  // namespace

Vertex LocalizedQuiver::to_localized(Vertex original) const {
  if (original >= to_localized_.size() || !to_localized_[original])
    fail("vertex is not in the localizing subset");
  return *to_localized_[original];
}

std::size_t LocalizedQuiver::arrow_count(Vertex x, Vertex y) const {
  auto it = primitives_.find({x, y});
  return it == primitives_.end() ? 0 : it->second.dim();
}

std::size_t LocalizedQuiver::max_parallel_arrows() const {
  std::size_t m = 0;
  for (const auto& [key, s] : primitives_) m = std::max(m, s.dim());
  return m;
}

std::optional<Path> LocalizedQuiver::reexpress_path(const Path& p) const {
  if (!x_.contains(p.source()) || !x_.contains(p.target()))
    fail("path endpoints must lie in the localizing subset");
  if (p.is_trivial()) return Path::trivial(to_localized(p.source()));
  std::vector<Arrow> arrows;
  for (const Path& cell : cellular_decomposition(*original_, p, x_).cells) {
    auto it = pivot_arrow_.find(cell);
    if (it == pivot_arrow_.end()) return std::nullopt;
    arrows.push_back(it->second);
  }
  return Path(to_localized(p.source()), to_localized(p.target()),
              std::move(arrows));
}

PathVector LocalizedQuiver::reexpress(const PathVector& v) const {
  PathVector out;
  for (const auto& [p, c] : v.terms())
    if (auto image = reexpress_path(p)) out.add(*image, c);
  return out;
}

LocalizedQuiver localized_quiver(const GradedSubcoalgebra& c,
                                 const VertexSubset& x,
                                 std::size_t max_length) {
  const Quiver& q = c.quiver();
  check_subset(q, x);
  const std::size_t bound = std::min(max_length, c.max_length());

  LocalizedQuiver out;
  out.original_ = c.quiver_ptr();
  out.x_ = x;
  out.max_length_ = bound;
  out.to_localized_.assign(q.num_vertices(), std::nullopt);

  auto lq = std::make_shared<Quiver>();
  for (Vertex v : x.members()) {
    out.to_localized_[v] = lq->add_vertex(q.vertex_id(v));
    out.to_original_.push_back(v);
  }
  for (Vertex from : x.members())
    for (Vertex to : x.members()) {
      auto cells = enumerate_cells(q, x, from, to, bound);
      if (cells.empty()) continue;
      Subspace comp = c.component(from, to);
      Subspace prim =
          intersect(Subspace::span(comp.ambient(), as_vectors(cells)), comp);
      if (prim.dim() == 0) continue;
      auto labels = prim.basis();
      auto pivots = prim.pivot_paths();
      for (std::size_t k = 0; k < labels.size(); ++k) {
        std::string name = arrow_name(q, labels[k], from, to, k + 1);
        if (lq->find_arrow(name)) {
          std::size_t suffix = 2;
          while (lq->find_arrow(name + "_" + std::to_string(suffix))) ++suffix;
          name += "_" + std::to_string(suffix);
        }
        Arrow a = lq->add_arrow(name, *out.to_localized_[from],
                                *out.to_localized_[to]);
        out.pivot_arrow_.emplace(pivots[k], a);
        out.arrows_.push_back({from, to, labels[k], pivots[k]});
      }
      out.primitives_.emplace(std::make_pair(from, to), std::move(prim));
    }
  out.quiver_ = std::move(lq);
  return out;
}

Localization localize_coalgebra(std::shared_ptr<const GradedSubcoalgebra> c,
                                const VertexSubset& x) {
  if (!c) fail("null coalgebra");
  const Quiver& q = c->quiver();
  check_subset(q, x);
  for (Vertex v = 0; v < q.num_vertices(); ++v)
    if (!c->contains_path(Path::trivial(v)))
      fail("coalgebra is not admissible: missing e_" + q.vertex_id(v));
  if (c->max_length() >= 1)
    for (Arrow a = 0; a < q.num_arrows(); ++a)
      if (!c->contains_path(q.arrow_path(a)))
        fail("coalgebra is not admissible: missing arrow " + q.arrow(a).id);

  Localization out;
  out.source = c;
  out.vertices = x;
  auto lq = std::make_shared<const LocalizedQuiver>(
      localized_quiver(*c, x, c->max_length()));
  out.quiver = lq;

  auto restricted = std::make_shared<GradedSubcoalgebra>(c->table(), false);
  auto table =
      std::make_shared<const PathTable>(lq->quiver_ptr(), c->max_length());
  auto local = std::make_shared<GradedSubcoalgebra>(table, true);
  for (const auto& [key, s] : c->components()) {
    if (!x.contains(key.first) || !x.contains(key.second)) continue;
    for (const auto& row : s.basis()) {
      restricted->insert(row);
      local->insert(lq->reexpress(row));
    }
  }
  if (local->dimension() != restricted->dimension())
    throw std::logic_error(
        "localization: re-expression lost dimension; coalgebra is not "
        "closed under comultiplication");
  out.restricted = std::move(restricted);
  out.coalgebra = std::move(local);
  return out;
}

Subspace tail_space(const GradedSubcoalgebra& c, const VertexSubset& x,
                    Vertex at, std::size_t max_length) {
  const Quiver& q = c.quiver();
  check_subset(q, x);
  if (!x.contains(at)) fail("tail space requested at a vertex outside X");
  const std::size_t bound = std::min(max_length, c.max_length());
  auto tails = enumerate_tails(q, x, at, bound);

  std::map<Vertex, std::vector<PathVector>> by_target;
  for (const Path& t : tails) by_target[t.target()].emplace_back(t);
  std::vector<PathVector> rows;
  for (const auto& [b, vs] : by_target) {
    Subspace comp = c.component(at, b);
    Subspace inter = intersect(Subspace::span(comp.ambient(), vs), comp);
    for (auto& r : inter.basis()) rows.push_back(std::move(r));
  }
  return Subspace::span(Subspace::make_ambient(std::move(tails)), rows);
}

IdempotentClassification classify_idempotent(const GradedSubcoalgebra& c,
                                              const VertexSubset& x,
                                              std::size_t max_length) {
  const Quiver& q = c.quiver();
  check_subset(q, x);
  IdempotentClassification out;

  for (Arrow a = 0; a < q.num_arrows(); ++a) {
    bool from_in = x.contains(q.source(a));
    bool to_in = x.contains(q.target(a));
    if (!from_in && to_in && !out.entering_arrow) out.entering_arrow = a;
    if (from_in && !to_in && !out.leaving_arrow) out.leaving_arrow = a;
  }
  out.left_semicentral = !out.entering_arrow;
  out.right_semicentral = !out.leaving_arrow;

  for (const auto& [key, s] : c.components()) {
    if (out.split_witness) break;
    if (!x.contains(key.first) || !x.contains(key.second)) continue;
    for (const auto& p : psupp_set(s.basis())) {
      auto trace = q.trace(p).vertices;
      if (!std::ranges::all_of(trace,
                               [&](Vertex v) { return x.contains(v); })) {
        out.split_witness = p;
        break;
      }
    }
  }
  out.split = !out.split_witness;

  const std::size_t bound = std::min(max_length, c.max_length());
  for (Vertex v : x.members()) {
    TailDimensions td{v, {0}, false};
    for (std::size_t l = 1; l <= bound; ++l)
      td.by_bound.push_back(tail_space(c, x, v, l).dim());
    td.growth_warning =
        td.by_bound.size() >= 2 &&
        td.by_bound.back() > td.by_bound[td.by_bound.size() - 2];
    out.tails.push_back(std::move(td));
  }
  out.colocalizing = true;
  out.acyclic_shortcut = is_acyclic(q);
  return out;
}

}  // namespace qcoalg
