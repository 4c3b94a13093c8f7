#include "qcoalg/random.hpp"

#include <algorithm>

namespace qcoalg {

Rational Rng::coefficient(int bound) {
  std::int64_t c = uniform(1, bound);
  return Rational(chance(0.5) ? c : -c);
}

QuiverPtr random_quiver(Rng& rng, const QuiverShape& shape) {
  auto q = std::make_shared<Quiver>();
  const auto n = static_cast<std::size_t>(rng.uniform(
      static_cast<std::int64_t>(shape.min_vertices),
      static_cast<std::int64_t>(shape.max_vertices)));
  for (std::size_t v = 0; v < n; ++v) q->add_vertex("v" + std::to_string(v));
  if (n < 2 && (shape.acyclic || !shape.loops)) return q;
  const auto m = static_cast<std::size_t>(
      rng.uniform(1, static_cast<std::int64_t>(shape.max_arrows)));
  for (std::size_t k = 0; k < m; ++k) {
    Vertex s, t;
    do {
      s = static_cast<Vertex>(rng.index(n));
      t = static_cast<Vertex>(rng.index(n));
    } while (s == t && (shape.acyclic || !shape.loops));
    if (shape.acyclic && s > t) std::swap(s, t);
    q->add_arrow("a" + std::to_string(k), s, t);
  }
  return q;
}

VertexSubset random_subset(Rng& rng, std::size_t num_vertices, double p) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < num_vertices; ++v)
    if (rng.chance(p)) members.push_back(v);
  if (members.empty() && num_vertices > 0)
    members.push_back(static_cast<Vertex>(rng.index(num_vertices)));
  return VertexSubset(num_vertices, members);
}

Path random_path(Rng& rng, const Quiver& q, std::size_t max_length) {
  Vertex start = static_cast<Vertex>(rng.index(q.num_vertices()));
  const auto want = static_cast<std::size_t>(
      rng.uniform(0, static_cast<std::int64_t>(max_length)));
  std::vector<Arrow> arrows;
  Vertex at = start;
  while (arrows.size() < want) {
    auto out = q.out_arrows(at);
    if (out.empty()) break;
    Arrow a = out[rng.index(out.size())];
    arrows.push_back(a);
    at = q.target(a);
  }
  return Path(start, at, std::move(arrows));
}

std::optional<PathVector> random_homogeneous_vector(Rng& rng,
                                                    const PathTable& table,
                                                    std::size_t min_length,
                                                    std::size_t terms,
                                                    int coefficient_bound) {
  const std::size_t n = table.quiver().num_vertices();
  std::vector<std::vector<Path>> pools;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      std::vector<Path> pool;
      for (const Path& p : *table.paths(a, b))
        if (p.length() >= min_length) pool.push_back(p);
      if (!pool.empty()) pools.push_back(std::move(pool));
    }
  if (pools.empty()) return std::nullopt;
  std::vector<Path>& pool = pools[rng.index(pools.size())];
  const auto k = static_cast<std::size_t>(
      rng.uniform(1, static_cast<std::int64_t>(std::min(terms, pool.size()))));
  PathVector v;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pick = i + rng.index(pool.size() - i);
    std::swap(pool[i], pool[pick]);
    v.add(pool[i], rng.coefficient(coefficient_bound));
  }
  return v;
}

GradedSubcoalgebra random_admissible_subcoalgebra(Rng& rng, PathTablePtr table,
                                                  std::size_t generators) {
  std::vector<PathVector> gens;
  const auto k = rng.uniform(0, static_cast<std::int64_t>(generators));
  for (std::int64_t i = 0; i < k; ++i)
    if (auto v = random_homogeneous_vector(rng, *table, 2, 3, 2))
      gens.push_back(std::move(*v));
  return subcoalgebra_closure(std::move(table), gens, true);
}

PathVector random_element(Rng& rng, const GradedSubcoalgebra& c,
                          int coefficient_bound) {
  const auto& comps = c.components();
  if (comps.empty()) return {};
  auto it = comps.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.index(comps.size())));
  auto rows = it->second.basis();
  PathVector v;
  const std::size_t forced = rng.index(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (r == forced || rng.chance(0.5))
      v += rng.coefficient(coefficient_bound) * rows[r];
  return v;
}

FinComodule random_comodule(Rng& rng, CoalgebraPtr c, std::size_t max_dim) {
  const std::size_t nv = c->quiver().num_vertices();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<PathVector> gens;
    const auto k = rng.uniform(1, 2);
    for (std::int64_t i = 0; i < k; ++i) {
      PathVector v = random_element(rng, *c, 2);
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
    FinComodule m = comodule_from_coalgebra(c, gens).module;
    if (m.dim() == 0 || m.dim() > max_dim) continue;
    if (m.dim() > 1 && rng.chance(0.3)) {
      std::vector<linalg::SparseVec> seed;
      std::vector<linalg::SparseVec::Entry> e;
      for (std::size_t i = 0; i < m.dim(); ++i)
        if (rng.chance(0.5)) e.emplace_back(i, rng.coefficient(2));
      seed.emplace_back(std::move(e));
      auto w = subcomodule_generated(m, seed);
      if (w.rank() > 0 && w.rank() < m.dim()) m = quotient(m, w);
    }
    if (m.dim() < max_dim && rng.chance(0.3))
      m = direct_sum(m, simple_comodule(c, static_cast<Vertex>(rng.index(nv))));
    return m;
  }
  return simple_comodule(c, static_cast<Vertex>(rng.index(nv)));
}

}  // namespace qcoalg
