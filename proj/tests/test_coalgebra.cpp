#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "qcoalg/errors.hpp"
#include "qcoalg/random.hpp"

using namespace qcoalg;
using testing_support::load_coalgebra;
using testing_support::load_quiver;
using testing_support::path;
using testing_support::pv;

namespace {

// delta(p) from the raw arrow list: tau = first k arrows, eta = the rest.
TensorExpansion split_everywhere(const Quiver& q, const Path& p) {
  TensorExpansion out;
  std::vector<Arrow> as(p.arrows().begin(), p.arrows().end());
  for (std::size_t k = 0; k <= as.size(); ++k) {
    std::vector<Arrow> first(as.begin(), as.begin() + k), rest(as.begin() + k, as.end());
    Vertex mid = k == 0 ? p.source() : q.arrow(as[k - 1]).target;
    Path tau = first.empty() ? Path::trivial(mid) : Path(p.source(), mid, first);
    Path eta = rest.empty() ? Path::trivial(mid) : Path(mid, p.target(), rest);
    out[{eta, tau}] += 1;
  }
  return out;
}

}  // namespace

TEST_CASE("delta of a two-arrow path has three splittings") {
  auto q = load_quiver("diamond.q");
  auto d = delta(*q, path(*q, "a1.a2"));
  REQUIRE(d.size() == 3);
  CHECK(d.at({path(*q, "e_x4"), path(*q, "a1.a2")}) == 1);
  CHECK(d.at({path(*q, "a2"), path(*q, "a1")}) == 1);
  CHECK(d.at({path(*q, "a1.a2"), path(*q, "e_x1")}) == 1);
}

TEST_CASE("delta of a vertex and of an arrow") {
  auto q = load_quiver("diamond.q");
  auto dv = delta(*q, path(*q, "e_x2"));
  REQUIRE(dv.size() == 1);
  CHECK(dv.begin()->first.first == path(*q, "e_x2"));
  auto da = delta(*q, path(*q, "a3"));
  CHECK(da.size() == 2);
  CHECK(da.count({path(*q, "e_x3"), path(*q, "a3")}) == 1);
  CHECK(counit(pv(*q, "2*e_x1 + a1 - 3*e_x2")) == -1);
}

TEST_CASE("delta matches the splitting oracle and the axioms") {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    auto q = random_quiver(rng, {1, 5, 8, false, true});
    Path p = random_path(rng, *q, 7);
    auto d = delta(*q, p);
    CHECK(d == split_everywhere(*q, p));
    CHECK(d.size() == p.length() + 1);
    CHECK(delta_left_then(*q, p) == delta_right_then(*q, p));
  }
}

TEST_CASE("partial evaluations of delta") {
  auto q = load_quiver("diamond.q");
  PathVector g = pv(*q, "a1.a2 + a3.a4");
  auto left = left_evaluations(*q, g);
  CHECK(left.at(path(*q, "a2")) == pv(*q, "a1"));
  CHECK(left.at(path(*q, "e_x4")) == g);
  auto right = right_evaluations(*q, g);
  CHECK(right.at(path(*q, "a3")) == pv(*q, "a4"));
  CHECK(right.at(path(*q, "e_x1")) == g);
}

TEST_CASE("closure of the diamond element") {
  auto c = load_coalgebra("diamond.coalg");
  const Quiver& q = c->quiver();
  CHECK(c->dimension() == 9);
  CHECK(c->dim_component(q.vertex("x1"), q.vertex("x4")) == 1);
  CHECK(c->contains(pv(q, "a1.a2 + a3.a4")));
  CHECK_FALSE(c->contains_path(path(q, "a1.a2")));
  CHECK(is_subcoalgebra(*c));
  CHECK(is_admissible(*c));
  CHECK(*c == subcoalgebra_closure(c->table(), c->basis(), true));
}

TEST_CASE("closure without admissibility keeps only what delta reaches") {
  auto q = load_quiver("diamond.q");
  PathVector p = pv(*q, "a1.a2");
  auto c = subcoalgebra_closure(q, std::span<const PathVector>(&p, 1), 2, false);
  CHECK(c.dimension() == 6);
  CHECK(c.contains_path(path(*q, "e_x2")));
  CHECK_FALSE(c.contains_path(path(*q, "a3")));
  CHECK(is_subcoalgebra(c));
  CHECK_FALSE(is_admissible(c));
}

TEST_CASE("a span that is not closed is detected") {
  auto q = load_quiver("diamond.q");
  auto table = std::make_shared<const PathTable>(q, 2);
  std::vector<PathVector> vs{pv(*q, "a1.a2"), pv(*q, "e_x1")};
  CHECK_FALSE(is_subcoalgebra(span_components(table, vs)));
  CHECK(is_subcoalgebra(full_path_coalgebra(table)));
}

TEST_CASE("generators beyond the truncation are rejected") {
  auto q = load_quiver("diamond.q");
  PathVector p = pv(*q, "a1.a2");
  CHECK_THROWS_AS(subcoalgebra_closure(q, std::span<const PathVector>(&p, 1), 1, true),
                  ContractError);
}

TEST_CASE("non-homogeneous generators split by endpoints") {
  auto q = load_quiver("diamond.q");
  PathVector mixed = pv(*q, "a1.a2 + a3");
  auto c = subcoalgebra_closure(q, std::span<const PathVector>(&mixed, 1), 2, true);
  CHECK(c.contains_path(path(*q, "a1.a2")));
}

TEST_CASE("closures are minimal subcoalgebras") {
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    auto q = random_quiver(rng, {2, 5, 8, true, false});
    auto table = std::make_shared<const PathTable>(q, 4);
    auto c = random_admissible_subcoalgebra(rng, table, 3);
    CHECK(is_subcoalgebra(c));
    CHECK(is_admissible(c));
    // Every left and right evaluation of a basis vector stays inside.
    for (const auto& b : c.basis()) {
      for (const auto& [k, v] : left_evaluations(*q, b)) CHECK(c.contains(v));
      for (const auto& [k, v] : right_evaluations(*q, b)) CHECK(c.contains(v));
    }
  }
}

TEST_CASE("tameness diagnostic flags wide components") {
  auto c = load_coalgebra("h4.coalg");
  const Quiver& q = c->quiver();
  bool saw = false;
  for (const auto& d : tameness_diagnostic(*c))
    if (d.source == q.vertex("x") && d.target == q.vertex("y")) {
      CHECK(d.dim == 3);
      CHECK(d.exceeds_two);
      saw = true;
    }
  CHECK(saw);
}
