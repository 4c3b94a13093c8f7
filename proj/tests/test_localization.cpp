#include <doctest.h>

#include "helpers.hpp"
#include "qcoalg/errors.hpp"
#include "qcoalg/random.hpp"

using namespace qcoalg;
using testing_support::closure_of;
using testing_support::load_coalgebra;
using testing_support::parallel_family;
using testing_support::path;
using testing_support::pv;
using testing_support::subset;

namespace {

std::vector<std::string> arrow_ids(const Quiver& q) {
  std::vector<std::string> out;
  for (Arrow a = 0; a < q.num_arrows(); ++a) out.push_back(q.arrow(a).id);
  return out;
}

}  // namespace

TEST_CASE("diamond closure localized at x1, x3, x4") {
  auto c = load_coalgebra("diamond.coalg");
  const Quiver& q = c->quiver();
  auto loc = localize_coalgebra(c, subset(q, {"x1", "x3", "x4"}));
  const Quiver& qe = loc.quiver->quiver();
  CHECK(arrow_ids(qe) == std::vector<std::string>{"bar_a3", "bar_a4"});
  CHECK(qe.vertex_id(qe.arrow(0).source) == "x1");
  CHECK(qe.vertex_id(qe.arrow(1).target) == "x4");
  CHECK(format_path_vector(qe, loc.quiver->reexpress(pv(q, "a1.a2 + a3.a4"))) ==
        "bar_a3.bar_a4");
  CHECK(loc.coalgebra->dimension() == loc.restricted->dimension());
  CHECK(loc.coalgebra->dimension() == 6);
  CHECK(is_subcoalgebra(*loc.coalgebra));
  CHECK(is_admissible(*loc.coalgebra));
}

TEST_CASE("full diamond localized at x1, x3, x4 gains a direct arrow") {
  auto c = load_coalgebra("diamond_full.coalg");
  const Quiver& q = c->quiver();
  auto loc = localize_coalgebra(c, subset(q, {"x1", "x3", "x4"}));
  const Quiver& qe = loc.quiver->quiver();
  CHECK(arrow_ids(qe) == std::vector<std::string>{"bar_a3", "bar_a1_a2", "bar_a4"});
  CHECK(format_path_vector(qe, loc.quiver->reexpress(pv(q, "a1.a2 + a3.a4"))) ==
        "bar_a1_a2 + bar_a3.bar_a4");
  CHECK(loc.quiver->arrow_count(q.vertex("x1"), q.vertex("x4")) == 1);
}

TEST_CASE("localizing needs vertices and arrows in C") {
  auto q = parse_quiver("vertex u\nvertex v\narrow f u v\n");
  PathVector ev = pv(*q, "e_u");
  auto c = std::make_shared<const GradedSubcoalgebra>(
      subcoalgebra_closure(q, std::span<const PathVector>(&ev, 1), 2, false));
  CHECK_THROWS_AS(localize_coalgebra(c, VertexSubset::all(2)), ContractError);
}

TEST_CASE("re-expression rejects paths leaving X") {
  auto c = load_coalgebra("diamond.coalg");
  const Quiver& q = c->quiver();
  auto lq = localized_quiver(*c, subset(q, {"x1", "x4"}), 2);
  // Both 2-paths are cells for X = {x1, x4}; C only holds their sum.
  REQUIRE(lq.arrows().size() == 1);
  CHECK(lq.quiver().arrow(0).id == "bar_x1_x4_1");
  CHECK(lq.arrows()[0].label == pv(q, "a1.a2 + a3.a4"));
  CHECK_THROWS_AS(lq.reexpress_path(path(q, "a1")), ContractError);
  CHECK_THROWS_AS(lq.to_localized(q.vertex("x2")), ContractError);
}

TEST_CASE("a non-pivot cell maps the path to zero") {
  auto c = load_coalgebra("h4.coalg");
  const Quiver& q = c->quiver();
  auto lq = localized_quiver(*c, subset(q, {"x", "y"}), 2);
  CHECK(lq.arrow_count(q.vertex("x"), q.vertex("y")) == 3);
  CHECK(lq.reexpress_path(path(q, "a1.b1")));
  CHECK_FALSE(lq.reexpress_path(path(q, "a4.b4")));
}

TEST_CASE("parallel families give n - 1 arrows") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto c = closure_of(parallel_family(n));
    const Quiver& q = c->quiver();
    auto lq = localized_quiver(*c, subset(q, {"x", "y"}), 2);
    CHECK(lq.max_parallel_arrows() == n - 1);
    CHECK(lq.contains_triple_arrow() == (n >= 4));
  }
}

TEST_CASE("localization is a coalgebra embedding") {
  Rng rng(21);
  std::size_t checked = 0;
  for (int t = 0; t < 60; ++t) {
    auto q = random_quiver(rng, {2, 5, 8, true, false});
    auto table = std::make_shared<const PathTable>(q, 4);
    auto c = std::make_shared<const GradedSubcoalgebra>(
        random_admissible_subcoalgebra(rng, table, 3));
    auto x = random_subset(rng, q->num_vertices());
    auto loc = localize_coalgebra(c, x);
    const Quiver& qe = loc.quiver->quiver();
    CHECK(loc.coalgebra->dimension() == loc.restricted->dimension());
    CHECK(is_subcoalgebra(*loc.coalgebra));

    for (const auto& v : loc.restricted->basis()) {
      PathVector img = loc.quiver->reexpress(v);
      CHECK_FALSE(img.is_zero());
      CHECK(loc.coalgebra->contains(img));
      // Splitting at vertices of X commutes with the re-expression.
      TensorExpansion expected;
      for (const auto& [legs, coef] : delta_elem(*q, v)) {
        if (!x.contains(legs.first.source())) continue;
        auto eta = loc.quiver->reexpress_path(legs.first);
        auto tau = loc.quiver->reexpress_path(legs.second);
        if (!eta || !tau) continue;
        expected[{*eta, *tau}] += coef;
      }
      std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
      CHECK(delta_elem(qe, img) == expected);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("split examples") {
  auto path3 = load_coalgebra("path3.coalg");
  auto cls = classify_idempotent(*path3, subset(path3->quiver(), {"1", "3"}), 2);
  CHECK(cls.split);
  CHECK_FALSE(cls.left_semicentral);
  CHECK_FALSE(cls.right_semicentral);
  auto loc = localize_coalgebra(path3, subset(path3->quiver(), {"1", "3"}));
  CHECK(loc.quiver->quiver().num_arrows() == 0);
  CHECK(loc.coalgebra->dimension() == 2);

  auto diamond = load_coalgebra("diamond.coalg");
  const Quiver& q = diamond->quiver();
  auto d = classify_idempotent(*diamond, subset(q, {"x1", "x3", "x4"}), 2);
  CHECK_FALSE(d.split);
  CHECK_FALSE(d.left_semicentral);
  REQUIRE(d.entering_arrow);
  CHECK(q.arrow(*d.entering_arrow).id == "a2");
  REQUIRE(d.split_witness);
  CHECK(q.format_path(*d.split_witness) == "a1.a2");
}

TEST_CASE("star tails at the centre") {
  auto c = load_coalgebra("star5.coalg");
  const Quiver& q = c->quiver();
  auto x = subset(q, {"x"});
  CHECK(tail_space(*c, x, q.vertex("x"), 2).dim() == 5);
  auto cls = classify_idempotent(*c, x, 2);
  CHECK(cls.colocalizing);
  CHECK(cls.left_semicentral);
  CHECK_FALSE(cls.right_semicentral);
  CHECK(cls.split);
  REQUIRE(cls.tails.size() == 1);
  CHECK(cls.tails[0].by_bound == std::vector<std::size_t>{0, 5, 5});
  CHECK_FALSE(cls.tails[0].growth_warning);
}

TEST_CASE("growth at the last bound is flagged") {
  auto c = load_coalgebra("star5.coalg");
  auto cls = classify_idempotent(*c, subset(c->quiver(), {"x"}), 1);
  CHECK(cls.tails[0].growth_warning);
}

TEST_CASE("split agrees with eCe being a subcoalgebra of C") {
  Rng rng(22);
  for (int t = 0; t < 150; ++t) {
    auto q = random_quiver(rng, {2, 6, 9, true, false});
    auto table = std::make_shared<const PathTable>(q, 3);
    auto c = std::make_shared<const GradedSubcoalgebra>(
        random_admissible_subcoalgebra(rng, table, 3));
    auto x = random_subset(rng, q->num_vertices());
    auto cls = classify_idempotent(*c, x, 3);
    auto loc = localize_coalgebra(c, x);
    CHECK(cls.split == is_subcoalgebra(*loc.restricted));
    if (cls.left_semicentral || cls.right_semicentral) CHECK(cls.split);
    CHECK(cls.acyclic_shortcut);
  }
}
