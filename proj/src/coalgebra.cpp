#include "qcoalg/coalgebra.hpp"

#include <deque>

#include "qcoalg/errors.hpp"

namespace qcoalg {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ContractError("pathcoalg", what);
}

}  // namespace

TensorExpansion delta(const Quiver& q, const Path& p) {
  TensorExpansion out;
  for (std::size_t k = 0; k <= p.length(); ++k)
    out.emplace(std::make_pair(q.subpath(p, k, p.length()), q.subpath(p, 0, k)),
                Rational(1));
  return out;
}

TensorExpansion delta_elem(const Quiver& q, const PathVector& v) {
  TensorExpansion out;
  for (const auto& [p, c] : v.terms())
    for (auto& [legs, one] : delta(q, p)) {
      auto& slot = out[legs];
      slot += c;
      if (sgn(slot) == 0) out.erase(legs);
    }
  return out;
}

Rational counit(const PathVector& v) {
  Rational s(0);
  for (const auto& [p, c] : v.terms())
    if (p.is_trivial()) s += c;
  return s;
}

TripleExpansion delta_left_then(const Quiver& q, const Path& p) {
  TripleExpansion out;
  for (const auto& [legs, c] : delta(q, p))
    for (const auto& [inner, d] : delta(q, legs.first))
      out[{inner.first, inner.second, legs.second}] += c * d;
  return out;
}

TripleExpansion delta_right_then(const Quiver& q, const Path& p) {
  TripleExpansion out;
  for (const auto& [legs, c] : delta(q, p))
    for (const auto& [inner, d] : delta(q, legs.second))
      out[{legs.first, inner.first, inner.second}] += c * d;
  return out;
}

std::map<Path, PathVector> left_evaluations(const Quiver& q,
                                            const PathVector& v) {
  std::map<Path, PathVector> out;
  for (const auto& [p, c] : v.terms())
    for (std::size_t k = 0; k <= p.length(); ++k)
      out[q.subpath(p, k, p.length())].add(q.subpath(p, 0, k), c);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::map<Path, PathVector> right_evaluations(const Quiver& q,
                                             const PathVector& v) {
  std::map<Path, PathVector> out;
  for (const auto& [p, c] : v.terms())
    for (std::size_t k = 0; k <= p.length(); ++k)
      out[q.subpath(p, 0, k)].add(q.subpath(p, k, p.length()), c);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

GradedSubcoalgebra::GradedSubcoalgebra(PathTablePtr table, bool admissible)
    : table_(std::move(table)), admissible_(admissible) {
  if (!table_) fail("null path table");
}

Subspace GradedSubcoalgebra::component(Vertex a, Vertex b) const {
  if (auto it = components_.find({a, b}); it != components_.end())
    return it->second;
  return Subspace(table_->paths(a, b));
}

std::size_t GradedSubcoalgebra::dim_component(Vertex a, Vertex b) const {
  auto it = components_.find({a, b});
  return it == components_.end() ? 0 : it->second.dim();
}

std::size_t GradedSubcoalgebra::dimension() const {
  std::size_t d = 0;
  for (const auto& [key, s] : components_) d += s.dim();
  return d;
}

bool GradedSubcoalgebra::insert(const PathVector& v) {
  if (v.max_length() > max_length())
    fail("element exceeds the truncation length " +
         std::to_string(max_length()));
  bool grew = false;
  for (auto& [key, part] : v.split_by_endpoints()) {
    auto it = components_.find(key);
    if (it == components_.end())
      it = components_
               .emplace(key, Subspace(table_->paths(key.first, key.second)))
               .first;
    grew |= it->second.insert(part);
  }
  return grew;
}

bool GradedSubcoalgebra::contains(const PathVector& v) const {
  if (v.max_length() > max_length()) return false;
  for (const auto& [key, part] : v.split_by_endpoints()) {
    auto it = components_.find(key);
    if (it == components_.end() || !it->second.contains(part)) return false;
  }
  return true;
}

std::vector<PathVector> GradedSubcoalgebra::basis() const {
  std::vector<PathVector> out;
  for (const auto& [key, s] : components_)
    for (auto& v : s.basis()) out.push_back(std::move(v));
  return out;
}

namespace {

std::vector<PathVector> vertices_and_arrows(const Quiver& q) {
  std::vector<PathVector> out;
  for (Vertex v = 0; v < q.num_vertices(); ++v)
    out.emplace_back(Path::trivial(v));
  for (Arrow a = 0; a < q.num_arrows(); ++a) out.emplace_back(q.arrow_path(a));
  return out;
}

}  // namespace

GradedSubcoalgebra subcoalgebra_closure(QuiverPtr q,
                                        std::span<const PathVector> generators,
                                        std::size_t max_length,
                                        bool admissible) {
  return subcoalgebra_closure(
      std::make_shared<const PathTable>(std::move(q), max_length), generators,
      admissible);
}

GradedSubcoalgebra subcoalgebra_closure(PathTablePtr table,
                                        std::span<const PathVector> generators,
                                        bool admissible) {
  GradedSubcoalgebra c(table, admissible);
  const Quiver& q = table->quiver();
  std::deque<PathVector> pending;
  auto offer = [&](const PathVector& v) {
    for (auto& [key, part] : v.split_by_endpoints())
      if (c.insert(part)) pending.push_back(std::move(part));
  };
  for (const auto& g : generators) {
    if (g.max_length() > table->max_length())
      fail("generator exceeds the truncation length " +
           std::to_string(table->max_length()));
    offer(g);
  }
  if (admissible && table->max_length() >= 1)
    for (const auto& v : vertices_and_arrows(q)) offer(v);
  else if (admissible)
    for (Vertex v = 0; v < q.num_vertices(); ++v)
      offer(PathVector(Path::trivial(v)));
  // Every vector ever inserted is processed once; partial evaluation is
  // linear, so this closes the span.
  while (!pending.empty()) {
    PathVector v = std::move(pending.front());
    pending.pop_front();
    for (const auto& [path, leg] : left_evaluations(q, v)) offer(leg);
    for (const auto& [path, leg] : right_evaluations(q, v)) offer(leg);
  }
  return c;
}

GradedSubcoalgebra full_path_coalgebra(PathTablePtr table) {
  GradedSubcoalgebra c(table, true);
  const std::size_t n = table->quiver().num_vertices();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (const Path& p : *table->paths(a, b)) c.insert(PathVector(p));
  return c;
}

GradedSubcoalgebra span_components(PathTablePtr table,
                                   std::span<const PathVector> vectors) {
  GradedSubcoalgebra c(std::move(table), false);
  for (const auto& v : vectors) c.insert(v);
  return c;
}

bool is_subcoalgebra(const GradedSubcoalgebra& c) {
  const Quiver& q = c.quiver();
  for (const auto& v : c.basis()) {
    for (const auto& [path, leg] : left_evaluations(q, v))
      if (!c.contains(leg)) return false;
    for (const auto& [path, leg] : right_evaluations(q, v))
      if (!c.contains(leg)) return false;
  }
  return true;
}

bool is_admissible(const GradedSubcoalgebra& c) {
  const Quiver& q = c.quiver();
  for (Vertex v = 0; v < q.num_vertices(); ++v)
    if (!c.contains_path(Path::trivial(v))) return false;
  if (c.max_length() >= 1)
    for (Arrow a = 0; a < q.num_arrows(); ++a)
      if (!c.contains_path(q.arrow_path(a))) return false;
  return is_subcoalgebra(c);
}

std::vector<ComponentDiagnostic> tameness_diagnostic(
    const GradedSubcoalgebra& c) {
  std::vector<ComponentDiagnostic> out;
  for (const auto& [key, s] : c.components()) {
    if (key.first == key.second || s.dim() == 0) continue;
    out.push_back({key.first, key.second, s.dim(), s.dim() > 2});
  }
  return out;
}

}  // namespace qcoalg
