#include "qcoalg/comodule.hpp"

#include <deque>
#include <tuple>

#include "qcoalg/errors.hpp"

namespace qcoalg {

using linalg::RowEchelon;
using linalg::SparseVec;

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ContractError("comodules", what);
}

// Assigns consecutive column indices to arbitrary keys.
template <typename Key>
class Columns {
 public:
  std::size_t operator()(const Key& k) {
    return index_.try_emplace(k, index_.size()).first->second;
  }

 private:
  std::map<Key, std::size_t> index_;
};

bool same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

// A basis of several components of C laid out one after another.
class ComponentBasis {
 public:
  template <typename Pred>
  ComponentBasis(const GradedSubcoalgebra& c, Pred keep) {
    for (const auto& [key, s] : c.components()) {
      if (!keep(key)) continue;
      offsets_.emplace(key, std::make_pair(rows_.size(), &s));
      for (auto& r : s.basis()) rows_.push_back(std::move(r));
    }
  }

  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<PathVector>& rows() const noexcept { return rows_; }

  // Coordinates of v against rows(); v must lie in the span.
  SparseVec coordinates(const PathVector& v) const {
    std::vector<SparseVec::Entry> out;
    for (const auto& [key, part] : v.split_by_endpoints()) {
      auto it = offsets_.find(key);
      if (it == offsets_.end() || !it->second.second->contains(part))
        throw std::logic_error("comodules: vector outside the basis span");
      auto coords = it->second.second->coordinates(part);
      for (std::size_t s = 0; s < coords.size(); ++s)
        out.emplace_back(it->second.first + s, coords[s]);
    }
    return SparseVec(std::move(out));
  }

 private:
  std::vector<PathVector> rows_;
  std::map<GradedSubcoalgebra::Key, std::pair<std::size_t, const Subspace*>>
      offsets_;
};

FinComodule::Coefficients empty_coefficients(std::size_t n) {
  return FinComodule::Coefficients(n, std::vector<PathVector>(n));
}

}  // namespace

std::size_t total_length(const LengthVector& v) {
  std::size_t s = 0;
  for (const auto& [x, k] : v) s += k;
  return s;
}

LengthVector operator+(LengthVector a, const LengthVector& b) {
  for (const auto& [x, k] : b) a[x] += k;
  return a;
}

FinComodule::FinComodule(CoalgebraPtr c, Coefficients coefficients)
    : c_(std::move(c)), coef_(std::move(coefficients)) {
  if (!c_) fail("null coalgebra");
  for (const auto& row : coef_)
    if (row.size() != coef_.size())
      fail("coaction table must be square");
}

std::map<Path, SparseVec> FinComodule::coact(const SparseVec& v) const {
  std::map<Path, std::vector<SparseVec::Entry>> acc;
  for (const auto& [i, vi] : v.entries())
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [p, c] : coef_[i][j].terms())
        acc[p].emplace_back(j, vi * c);
  std::map<Path, SparseVec> out;
  for (auto& [p, entries] : acc) {
    SparseVec s(std::move(entries));
    if (!s.empty()) out.emplace(p, std::move(s));
  }
  return out;
}

ValidationReport validate(const FinComodule& m) {
  ValidationReport r;
  const Quiver& q = m.quiver();
  const std::size_t n = m.dim();
  auto problem = [&](std::string what) {
    r.valid = false;
    r.problems.push_back(std::move(what));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m.coalgebra()->contains(m.coefficient(i, j)))
        problem("coefficient (" + std::to_string(i) + ", " +
                std::to_string(j) + ") is not in the coalgebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (counit(m.coefficient(i, j)) != Rational(i == j ? 1 : 0))
        problem("counit law fails at basis index " + std::to_string(i) +
                " (coefficient " + std::to_string(j) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      TensorExpansion lhs = delta_elem(q, m.coefficient(i, k));
      TensorExpansion rhs;
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [p, a] : m.coefficient(j, k).terms())
          for (const auto& [pp, b] : m.coefficient(i, j).terms())
            rhs[{p, pp}] += a * b;
      std::erase_if(rhs, [](const auto& kv) { return sgn(kv.second) == 0; });
      if (lhs != rhs)
        problem("coassociativity fails at (" + std::to_string(i) + ", " +
                std::to_string(k) + ")");
    }
  return r;
}

FinComodule simple_comodule(CoalgebraPtr c, Vertex x) {
  if (x >= c->quiver().num_vertices()) fail("vertex out of range");
  return FinComodule(std::move(c), {{PathVector(Path::trivial(x))}});
}

FinComodule direct_sum(const FinComodule& a, const FinComodule& b) {
  if (!same_coalgebra(a.coalgebra(), b.coalgebra()))
    fail("direct sum of comodules over different coalgebras");
  const std::size_t n = a.dim(), m = b.dim();
  auto coef = empty_coefficients(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) coef[i][j] = a.coefficient(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      coef[n + i][n + j] = b.coefficient(i, j);
  return FinComodule(a.coalgebra(), std::move(coef));
}

bool is_subcomodule(const FinComodule& m, const RowEchelon& w) {
  if (w.ncols() != m.dim()) fail("subspace dimension mismatch");
  for (const auto& row : w.rows())
    for (const auto& [p, u] : m.coact(row))
      if (!w.contains(u)) return false;
  return true;
}

RowEchelon subcomodule_generated(const FinComodule& m,
                                 std::span<const SparseVec> vectors) {
  RowEchelon w(m.dim());
  std::deque<SparseVec> pending;
  auto offer = [&](const SparseVec& v) {
    if (w.insert(v)) pending.push_back(v);
  };
  for (const auto& v : vectors) offer(v);
  while (!pending.empty()) {
    SparseVec v = std::move(pending.front());
    pending.pop_front();
    for (const auto& [p, u] : m.coact(v)) offer(u);
  }
  return w;
}

FinComodule restrict_to(const FinComodule& m, const RowEchelon& w) {
  if (w.ncols() != m.dim()) fail("subspace dimension mismatch");
  const auto pivots = w.pivots();
  const std::size_t r = w.rank();
  auto coef = empty_coefficients(r);
  for (std::size_t a = 0; a < r; ++a)
    for (const auto& [i, bi] : w.rows()[a].entries())
      for (std::size_t s = 0; s < r; ++s)
        coef[a][s] += bi * m.coefficient(i, pivots[s]);
  return FinComodule(m.coalgebra(), std::move(coef));
}

FinComodule quotient(const FinComodule& m, const RowEchelon& w) {
  if (w.ncols() != m.dim()) fail("subspace dimension mismatch");
  std::vector<bool> pivot(m.dim(), false);
  for (std::size_t p : w.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  std::vector<std::size_t> position(m.dim(), 0);
  for (std::size_t j = 0; j < m.dim(); ++j)
    if (!pivot[j]) {
      position[j] = free.size();
      free.push_back(j);
    }
  // Class of m_j in terms of the classes of the free basis vectors.
  std::vector<SparseVec> classes;
  for (std::size_t j = 0; j < m.dim(); ++j)
    classes.push_back(w.reduce(SparseVec::unit(j)));
  auto coef = empty_coefficients(free.size());
  for (std::size_t a = 0; a < free.size(); ++a)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const PathVector& c = m.coefficient(free[a], j);
      if (c.is_zero()) continue;
      for (const auto& [f, val] : classes[j].entries())
        coef[a][position[f]] += val * c;
    }
  return FinComodule(m.coalgebra(), std::move(coef));
}

RowEchelon hom_simple(const FinComodule& m, Vertex x) {
  Columns<std::pair<Path, std::size_t>> col;
  const Path ex = Path::trivial(x);
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (const auto& [p, c] : m.coefficient(i, j).terms())
        e.emplace_back(col({p, j}), c);
    e.emplace_back(col({ex, i}), Rational(-1));
    images.emplace_back(std::move(e));
  }
  return linalg::kernel(images);
}

Socle socle(const FinComodule& m) {
  Columns<std::pair<Path, std::size_t>> col;
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (const auto& [p, c] : m.coefficient(i, j).terms())
        if (!p.is_trivial()) e.emplace_back(col({p, j}), c);
    images.emplace_back(std::move(e));
  }
  Socle out{linalg::kernel(images), {}};
  const Quiver& q = m.quiver();
  for (Vertex x = 0; x < q.num_vertices(); ++x)
    if (std::size_t d = hom_simple(m, x).rank(); d > 0)
      out.lengths[q.vertex_id(x)] = d;
  return out;
}

SocleFiltration socle_filtration(const FinComodule& m) {
  SocleFiltration out;
  FinComodule cur = m;
  while (cur.dim() > 0) {
    Socle s = socle(cur);
    if (s.space.rank() == 0)
      fail("nonzero comodule with zero socle; coaction is not valid");
    out.lengths = out.lengths + s.lengths;
    ++out.loewy_length;
    cur = quotient(cur, s.space);
  }
  return out;
}

LengthVector length_vector(const FinComodule& m) {
  return socle_filtration(m).lengths;
}

LabeledComodule comodule_from_coalgebra(
    CoalgebraPtr c, std::span<const PathVector> generators) {
  const Quiver& q = c->quiver();
  GradedSubcoalgebra w(c->table(), false);
  std::deque<PathVector> pending;
  auto offer = [&](const PathVector& v) {
    for (auto& [key, part] : v.split_by_endpoints())
      if (w.insert(part)) pending.push_back(std::move(part));
  };
  for (const auto& g : generators) {
    if (!c->contains(g)) fail("generator is not in the coalgebra");
    offer(g);
  }
  while (!pending.empty()) {
    PathVector v = std::move(pending.front());
    pending.pop_front();
    for (const auto& [tau, eta] : right_evaluations(q, v)) offer(eta);
  }

  ComponentBasis basis(w, [](const auto&) { return true; });
  const std::size_t n = basis.size();
  auto coef = empty_coefficients(n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [tau, eta] : right_evaluations(q, basis.rows()[r])) {
      const SparseVec coords = basis.coordinates(eta);
      for (const auto& [s, val] : coords.entries()) coef[r][s].add(tau, val);
    }
  return {FinComodule(std::move(c), std::move(coef)), basis.rows()};
}

LabeledComodule comodule_of_eC(const Localization& loc) {
  const GradedSubcoalgebra& c = *loc.source;
  const Quiver& q = c.quiver();
  const VertexSubset& x = loc.vertices;
  ComponentBasis basis(c, [&](const auto& key) { return x.contains(key.first); });
  const std::size_t n = basis.size();
  auto coef = empty_coefficients(n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [tau, eta] : right_evaluations(q, basis.rows()[r])) {
      if (!x.contains(tau.target())) continue;
      auto image = loc.quiver->reexpress_path(tau);
      if (!image) continue;
      const SparseVec coords = basis.coordinates(eta);
      for (const auto& [s, val] : coords.entries()) coef[r][s].add(*image, val);
    }
  return {FinComodule(loc.coalgebra, std::move(coef)), basis.rows()};
}

FinComodule quotient_functor(const FinComodule& m, const Localization& loc) {
  if (!same_coalgebra(m.coalgebra(), loc.source))
    fail("comodule is not over the localized coalgebra's source");
  const VertexSubset& x = loc.vertices;
  const std::size_t n = m.dim();

  // P[i][j] = e(c_ij): the action of the idempotent on basis vectors.
  std::vector<SparseVec> p;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [path, c] : m.coefficient(i, j).terms())
        if (path.is_trivial() && x.contains(path.source())) e.emplace_back(j, c);
    p.emplace_back(std::move(e));
  }
  RowEchelon em = RowEchelon::span(n, p);
  const auto pivots = em.pivots();
  const std::size_t r = em.rank();

  auto compress = [&](const PathVector& v) {
    PathVector inside;
    for (const auto& [path, c] : v.terms())
      if (x.contains(path.source()) && x.contains(path.target()))
        inside.add(path, c);
    return loc.quiver->reexpress(inside);
  };

  auto coef = empty_coefficients(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      PathVector d;
      for (const auto& [i, bi] : em.rows()[a].entries())
        d += bi * m.coefficient(i, j);
      if (d.is_zero()) continue;
      PathVector image = compress(d);
      if (image.is_zero()) continue;
      for (std::size_t s = 0; s < r; ++s)
        if (Rational f = p[j].get(pivots[s]); sgn(f) != 0)
          coef[a][s] += f * image;
    }
  return FinComodule(loc.coalgebra, std::move(coef));
}

FinComodule cotensor_section(const FinComodule& n, const Localization& loc,
                             std::size_t cap) {
  if (!same_coalgebra(n.coalgebra(), loc.coalgebra))
    fail("comodule is not over the localized coalgebra");
  const GradedSubcoalgebra& c = *loc.source;
  const Quiver& q = c.quiver();
  const VertexSubset& x = loc.vertices;
  ComponentBasis ce(c, [&](const auto& key) { return x.contains(key.second); });
  const std::size_t nn = n.dim(), nb = ce.size();
  if (nn * nb > cap)
    fail("cotensor space of dimension " + std::to_string(nn * nb) +
         " exceeds the cap " + std::to_string(cap));

  // lambda(g_k) = sum over (eta, w): eta re-expressed (x) w, split at X.
  std::vector<std::vector<std::pair<Path, SparseVec>>> lambda(nb);
  // rho(g_k) = sum over tau: (coordinates of the eta-sum) (x) tau.
  std::vector<std::vector<std::pair<Path, SparseVec>>> rho(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    const PathVector& g = ce.rows()[k];
    for (const auto& [eta, w] : left_evaluations(q, g)) {
      if (!x.contains(eta.source())) continue;
      if (auto image = loc.quiver->reexpress_path(eta))
        lambda[k].emplace_back(*image, ce.coordinates(w));
    }
    for (const auto& [tau, eta] : right_evaluations(q, g))
      rho[k].emplace_back(tau, ce.coordinates(eta));
  }

  Columns<std::tuple<std::size_t, Path, std::size_t>> col;
  std::vector<SparseVec> images;
  images.reserve(nn * nb);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t k = 0; k < nb; ++k) {
      std::vector<SparseVec::Entry> e;
      for (std::size_t j = 0; j < nn; ++j)
        for (const auto& [path, a] : n.coefficient(i, j).terms())
          e.emplace_back(col({j, path, k}), a);
      for (const auto& [path, coords] : lambda[k])
        for (const auto& [kk, a] : coords.entries())
          e.emplace_back(col({i, path, kk}), -a);
      images.emplace_back(std::move(e));
    }
  RowEchelon kernel = linalg::kernel(images);

  const auto pivots = kernel.pivots();
  const std::size_t r = kernel.rank();
  auto coef = empty_coefficients(r);
  for (std::size_t a = 0; a < r; ++a) {
    std::map<Path, std::vector<SparseVec::Entry>> acc;
    for (const auto& [idx, val] : kernel.rows()[a].entries()) {
      const std::size_t i = idx / nb, k = idx % nb;
      for (const auto& [tau, coords] : rho[k])
        for (const auto& [kk, b] : coords.entries())
          acc[tau].emplace_back(i * nb + kk, val * b);
    }
    for (auto& [tau, entries] : acc) {
      SparseVec u(std::move(entries));
      for (std::size_t s = 0; s < r; ++s)
        if (Rational f = u.get(pivots[s]); sgn(f) != 0) coef[a][s].add(tau, f);
    }
  }
  return FinComodule(loc.source, std::move(coef));
}

}  // namespace qcoalg
