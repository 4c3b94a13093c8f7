#include <doctest.h>

#include "oracle.hpp"
#include "qcoalg/errors.hpp"
#include "qcoalg/linalg.hpp"
#include "qcoalg/random.hpp"
#include "qcoalg/subspace.hpp"

using namespace qcoalg;
using linalg::RowEchelon;
using linalg::SparseVec;

namespace {

SparseVec random_vec(Rng& rng, std::size_t n) {
  std::vector<SparseVec::Entry> e;
  for (std::size_t i = 0; i < n; ++i)
    if (rng.chance(0.4)) e.emplace_back(i, rng.coefficient(3));
  return SparseVec(std::move(e));
}

std::vector<std::vector<Rational>> dense(std::span<const SparseVec> vs,
                                         std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vs) {
    std::vector<Rational> row(n);
    for (const auto& [c, x] : v.entries()) row[c] = x;
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("sparse vectors drop zeros and merge duplicates") {
  SparseVec v({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}, {0, Rational(0)}});
  CHECK(v.nnz() == 1);
  CHECK(v.get(1) == 2);
  CHECK(v.lead() == 1);
}

TEST_CASE("echelon form is unique for a subspace") {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.index(7);
    std::vector<SparseVec> vs;
    for (int k = 0; k < 4; ++k) vs.push_back(random_vec(rng, n));
    auto a = RowEchelon::span(n, vs);
    CHECK(a.rank() == oracle::rank(dense(vs, n)));

    // Same span from rescaled, recombined generators in reverse order.
    std::vector<SparseVec> ws;
    for (std::size_t i = vs.size(); i-- > 0;) {
      SparseVec w = vs[i];
      w.scale(Rational(-3, 2));
      if (i > 0) w.axpy(Rational(5), vs[i - 1]);
      ws.push_back(std::move(w));
    }
    ws.push_back(vs.front());
    CHECK(RowEchelon::span(n, ws) == a);
    for (const auto& v : vs) CHECK(a.contains(v));
  }
}

TEST_CASE("orthogonal complement") {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.index(8);
    std::vector<SparseVec> vs;
    for (int k = 0; k < 3; ++k) vs.push_back(random_vec(rng, n));
    auto a = RowEchelon::span(n, vs);
    auto perp = a.orthogonal();
    CHECK(a.rank() + perp.rank() == n);
    for (const auto& r : a.rows())
      for (const auto& s : perp.rows()) CHECK(linalg::dot(r, s) == 0);
    CHECK(perp.orthogonal() == a);
  }
}

TEST_CASE("sum and intersection dimensions") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng.index(6);
    std::vector<SparseVec> va, vb;
    for (int k = 0; k < 3; ++k) va.push_back(random_vec(rng, n));
    for (int k = 0; k < 3; ++k) vb.push_back(random_vec(rng, n));
    auto a = RowEchelon::span(n, va), b = RowEchelon::span(n, vb);
    auto s = linalg::sum(a, b), i = linalg::intersect(a, b);
    CHECK(s.rank() + i.rank() == a.rank() + b.rank());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
  }
}

TEST_CASE("kernel of a linear map") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t dom = 1 + rng.index(6), cod = 1 + rng.index(6);
    std::vector<SparseVec> images;
    for (std::size_t k = 0; k < dom; ++k) images.push_back(random_vec(rng, cod));
    auto ker = linalg::kernel(images);
    CHECK(ker.ncols() == dom);
    CHECK(ker.rank() + oracle::rank(dense(images, cod)) == dom);
    for (const auto& r : ker.rows()) {
      SparseVec img;
      for (const auto& [c, x] : r.entries()) img.axpy(x, images[c]);
      CHECK(img.empty());
    }
  }
}

TEST_CASE("coordinates reproduce members") {
  std::vector<SparseVec> vs{SparseVec({{0, Rational(1)}, {2, Rational(1)}}),
                            SparseVec({{1, Rational(2)}, {2, Rational(-1)}})};
  auto a = RowEchelon::span(3, vs);
  SparseVec v = vs[0];
  v.axpy(Rational(3), vs[1]);
  auto c = a.coordinates(v);
  SparseVec back;
  for (std::size_t i = 0; i < c.size(); ++i) back.axpy(c[i], a.rows()[i]);
  CHECK(back == v);
}

TEST_CASE("subspaces over path ambients") {
  Quiver q;
  q.add_vertex("u");
  q.add_vertex("v");
  Arrow f = q.add_arrow("f", "u", "v");
  Arrow g = q.add_arrow("g", "u", "v");
  auto amb = Subspace::make_ambient({q.arrow_path(f), q.arrow_path(g)});
  PathVector d = PathVector(q.arrow_path(f)) - PathVector(q.arrow_path(g));
  auto s = rref(amb, std::span<const PathVector>(&d, 1));
  CHECK(s.dim() == 1);
  auto perp = orthogonal(s);
  CHECK(perp.contains(PathVector(q.arrow_path(f)) + PathVector(q.arrow_path(g))));
  CHECK(intersect(s, perp).dim() == 0);

  auto other = Subspace::make_ambient({q.arrow_path(f)});
  CHECK_THROWS_AS(intersect(s, Subspace(other)), ContractError);
  PathVector outside(Path::trivial(0));
  CHECK_FALSE(s.contains_lenient(outside));
  CHECK_THROWS_AS(Subspace::span(amb, std::span<const PathVector>(&outside, 1)),
                  ContractError);
}
