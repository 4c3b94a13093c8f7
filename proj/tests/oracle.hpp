#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's decomposition, comultiplication or echelon code; paths are
// handled as raw arrow lists.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qcoalg/comodule.hpp"
#include "qcoalg/quiver.hpp"
#include "qcoalg/rational.hpp"

namespace oracle {

using qcoalg::Arrow;
using qcoalg::Quiver;
using qcoalg::Rational;
using qcoalg::Vertex;
using Arrows = std::vector<Arrow>;

// Vertices visited by walking `arrows` from `start`.
inline std::vector<Vertex> walk(const Quiver& q, Vertex start,
                                const Arrows& arrows) {
  std::vector<Vertex> out{start};
  for (Arrow a : arrows) out.push_back(q.arrow(a).target);
  return out;
}

inline bool cell(const Quiver& q, Vertex start, const Arrows& arrows,
                 const std::set<Vertex>& x) {
  if (arrows.empty()) return false;
  auto w = walk(q, start, arrows);
  if (!x.count(w.front()) || !x.count(w.back())) return false;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (x.count(w[i])) return false;
  return true;
}

inline bool tail(const Quiver& q, Vertex start, const Arrows& arrows,
                 const std::set<Vertex>& x) {
  if (arrows.empty()) return false;
  auto w = walk(q, start, arrows);
  if (!x.count(w.front())) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (x.count(w[i])) return false;
  return true;
}

// Every way to cut `arrows` into nonempty consecutive pieces, as the list
// of piece lengths.
inline std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> parts;
    std::size_t len = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) {
        parts.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    parts.push_back(len);
    out.push_back(parts);
  }
  return out;
}

struct Piece {
  Vertex start;
  Arrows arrows;
  bool operator==(const Piece&) const = default;
};

inline std::vector<Piece> cut(const Quiver& q, Vertex start,
                              const Arrows& arrows,
                              const std::vector<std::size_t>& parts) {
  std::vector<Piece> out;
  std::size_t at = 0;
  Vertex v = start;
  for (std::size_t len : parts) {
    Piece p{v, Arrows(arrows.begin() + at, arrows.begin() + at + len)};
    v = q.arrow(p.arrows.back()).target;
    at += len;
    out.push_back(std::move(p));
  }
  return out;
}

// All factorizations into cells (all pieces cells) or into cells followed
// by a tail (`with_tail`).
inline std::vector<std::vector<Piece>> factorizations(
    const Quiver& q, Vertex start, const Arrows& arrows,
    const std::set<Vertex>& x, bool with_tail) {
  std::vector<std::vector<Piece>> out;
  for (const auto& parts : compositions(arrows.size())) {
    auto pieces = cut(q, start, arrows, parts);
    bool ok = true;
    for (std::size_t i = 0; i < pieces.size() && ok; ++i) {
      const bool last = i + 1 == pieces.size();
      ok = (with_tail && last)
               ? tail(q, pieces[i].start, pieces[i].arrows, x)
               : cell(q, pieces[i].start, pieces[i].arrows, x);
    }
    if (ok) out.push_back(std::move(pieces));
  }
  return out;
}

// Number of paths a -> b of each length 0..max_length, by adjacency powers.
inline std::size_t count_paths(const Quiver& q, Vertex a, Vertex b,
                               std::size_t max_length) {
  const std::size_t n = q.num_vertices();
  std::vector<std::size_t> cur(n, 0);
  cur[a] = 1;
  std::size_t total = cur[b];
  for (std::size_t l = 1; l <= max_length; ++l) {
    std::vector<std::size_t> next(n, 0);
    for (Arrow e = 0; e < q.num_arrows(); ++e)
      next[q.arrow(e).target] += cur[q.arrow(e).source];
    cur = std::move(next);
    total += cur[b];
  }
  return total;
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Multiplicity of S_x in a comodule: the coefficients of e_x form an
// idempotent matrix whose rank is dim e_x M.
inline std::size_t multiplicity(const qcoalg::FinComodule& m, Vertex x) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n));
  const auto ex = qcoalg::Path::trivial(x);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i][j] = m.coefficient(i, j).coefficient(ex);
  return rank(std::move(p));
}

inline qcoalg::LengthVector length_vector(const qcoalg::FinComodule& m) {
  qcoalg::LengthVector out;
  for (Vertex x = 0; x < m.quiver().num_vertices(); ++x)
    if (auto k = multiplicity(m, x)) out[m.quiver().vertex_id(x)] = k;
  return out;
}

}  // namespace oracle
