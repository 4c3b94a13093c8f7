#include "qcoalg/relations.hpp"

#include "qcoalg/errors.hpp"

namespace qcoalg {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ContractError("relations", what);
}

// Terms of "w then v then u" of length <= bound.
PathVector sandwich(const Path& w, const PathVector& v, const Path& u,
                    std::size_t bound) {
  PathVector out;
  for (const auto& [p, c] : v.terms()) {
    if (w.length() + p.length() + u.length() > bound) continue;
    const Path pieces[] = {w, p, u};
    out.add(concatenate(pieces), c);
  }
  return out;
}

Subspace& slot(std::map<RelationIdeal::Key, Subspace>& comps,
               const PathTable& table, Vertex a, Vertex b) {
  auto it = comps.find({a, b});
  if (it == comps.end())
    it = comps.emplace(std::make_pair(a, b), Subspace(table.paths(a, b))).first;
  return it->second;
}

}  // namespace

RelationIdeal::RelationIdeal(PathTablePtr table,
                             std::vector<PathVector> generators)
    : table_(std::move(table)), generators_(std::move(generators)) {
  const Quiver& q = table_->quiver();
  const std::size_t bound = table_->max_length();
  const std::size_t n = q.num_vertices();
  for (const auto& g : generators_) {
    for (const auto& [p, c] : g.terms()) {
      if (p.length() < 2)
        fail("relation term " + q.format_path(p) +
             " has length below 2");
      if (p.length() > bound)
        fail("relation term " + q.format_path(p) +
             " exceeds the truncation length " + std::to_string(bound));
    }
    for (const auto& [key, part] : g.split_by_endpoints()) {
      auto [a, b] = key;
      const std::size_t room = bound - part.min_length();
      for (Vertex s = 0; s < n; ++s)
        for (const Path& w : *table_->paths(s, a)) {
          if (w.length() > room) break;
          for (Vertex t = 0; t < n; ++t)
            for (const Path& u : *table_->paths(b, t)) {
              if (w.length() + u.length() > room) break;
              PathVector prod = sandwich(w, part, u, bound);
              if (!prod.is_zero()) slot(components_, *table_, s, t).insert(prod);
            }
        }
    }
  }
  std::erase_if(components_, [](const auto& kv) { return kv.second.dim() == 0; });
}

RelationIdeal RelationIdeal::from_span(PathTablePtr table,
                                       std::map<Key, Subspace> components) {
  RelationIdeal out(std::move(table));
  std::erase_if(components, [](const auto& kv) { return kv.second.dim() == 0; });
  out.components_ = std::move(components);
  out.generators_ = out.basis();
  return out;
}

Subspace RelationIdeal::component(Vertex a, Vertex b) const {
  if (auto it = components_.find({a, b}); it != components_.end())
    return it->second;
  return Subspace(table_->paths(a, b));
}

std::size_t RelationIdeal::dimension() const {
  std::size_t d = 0;
  for (const auto& [key, s] : components_) d += s.dim();
  return d;
}

bool RelationIdeal::contains(const PathVector& v) const {
  if (v.max_length() > max_length()) return false;
  for (const auto& [key, part] : v.split_by_endpoints()) {
    auto it = components_.find(key);
    if (it == components_.end() || !it->second.contains(part)) return false;
  }
  return true;
}

std::vector<PathVector> RelationIdeal::basis() const {
  std::vector<PathVector> out;
  for (const auto& [key, s] : components_)
    for (auto& v : s.basis()) out.push_back(std::move(v));
  return out;
}

RelationIdeal truncated_ideal_span(QuiverPtr q,
                                   std::span<const PathVector> generators,
                                   std::size_t max_length) {
  return RelationIdeal(std::make_shared<const PathTable>(std::move(q), max_length),
                       {generators.begin(), generators.end()});
}

GradedSubcoalgebra coalgebra_of_relations(const RelationIdeal& omega) {
  const PathTable& table = *omega.table();
  const std::size_t n = omega.quiver().num_vertices();
  GradedSubcoalgebra c(omega.table(), true);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (table.paths(a, b)->empty()) continue;
      for (const auto& row : orthogonal(omega.component(a, b)).basis())
        c.insert(row);
    }
  return c;
}

RelationIdeal relations_of_coalgebra(const GradedSubcoalgebra& h) {
  const PathTable& table = *h.table();
  const Quiver& q = h.quiver();
  const std::size_t n = q.num_vertices();
  const std::size_t bound = h.max_length();

  std::map<RelationIdeal::Key, Subspace> comps;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (table.paths(a, b)->empty()) continue;
      Subspace perp = orthogonal(h.component(a, b));
      if (perp.dim() == 0) continue;
      for (const auto& row : perp.basis())
        if (row.min_length() < 2)
          fail("complement contains " + format_path_vector(q, row) +
               ", which has a term of length below 2");
      comps.emplace(std::make_pair(a, b), std::move(perp));
    }

  auto member = [&](const PathVector& v) {
    if (v.is_zero()) return true;
    auto e = v.endpoints();
    auto it = comps.find(*e);
    return it != comps.end() && it->second.contains(v);
  };
  for (const auto& [key, s] : comps) {
    auto [a, b] = key;
    for (const auto& row : s.basis()) {
      for (Arrow x : q.out_arrows(b)) {
        PathVector v = sandwich(Path::trivial(a), row, q.arrow_path(x), bound);
        if (!member(v))
          fail("complement is not closed under right multiplication by " +
               q.arrow(x).id);
      }
      for (Arrow x : q.in_arrows(a)) {
        PathVector v = sandwich(q.arrow_path(x), row, Path::trivial(b), bound);
        if (!member(v))
          fail("complement is not closed under left multiplication by " +
               q.arrow(x).id);
      }
    }
  }
  return RelationIdeal::from_span(h.table(), std::move(comps));
}

CriterionWitness criterion_witness(const GradedSubcoalgebra& c, Vertex x,
                                   Vertex y, std::size_t max_length) {
  const Quiver& q = c.quiver();
  if (x >= q.num_vertices() || y >= q.num_vertices())
    fail("criterion endpoints out of range");
  CriterionWitness out{x, y, std::min(max_length, c.max_length()), {}, {}};
  Subspace comp = c.component(x, y);
  std::vector<PathVector> short_paths;
  for (const Path& p : *comp.ambient())
    if (p.length() <= out.max_length) short_paths.emplace_back(p);
  Subspace bounded =
      intersect(comp, Subspace::span(comp.ambient(), short_paths));
  auto pivots = bounded.pivot_paths();
  auto rows = bounded.basis();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    bool outside = true;
    for (const auto& [p, coef] : rows[k].terms())
      if (c.contains_path(p)) {
        outside = false;
        break;
      }
    if (!outside) continue;
    out.rows.push_back(rows[k]);
    out.pivots.push_back(pivots[k]);
  }
  return out;
}

}  // namespace qcoalg
