#include <doctest.h>

#include "helpers.hpp"
#include "qcoalg/errors.hpp"
#include "qcoalg/random.hpp"

using namespace qcoalg;
using testing_support::fixture;
using testing_support::load_coalgebra;
using testing_support::load_quiver;

namespace {

template <typename F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError("unreachable");
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(4) / 2) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("path vectors round trip through text") {
  auto q = load_quiver("diamond.q");
  for (std::string s : {"a1.a2 + a3.a4", "-1/2*a1 + 3*e_x2", "0", "e_x1 - a3.a4"}) {
    PathVector v = parse_path_vector(*q, s);
    CHECK(parse_path_vector(*q, format_path_vector(*q, v)) == v);
  }
  CHECK(format_path_vector(*q, parse_path_vector(*q, "a3.a4 + 2*a1.a2 - a3.a4")) ==
        "2*a1.a2");
  CHECK(parse_path_vector(*q, "a1 - a1").is_zero());
}

TEST_CASE("path vector errors carry columns") {
  auto q = load_quiver("diamond.q");
  auto e = parse_error_of([&] { parse_path_vector(*q, "a1 + a9"); });
  CHECK(e.column() == 6);
  auto gap = parse_error_of([&] { parse_path_vector(*q, "a1.a4"); });
  CHECK(gap.column() > 0);
  CHECK_THROWS_AS(parse_path_vector(*q, "a1 +"), ParseError);
}

TEST_CASE("quiver files") {
  auto q = load_quiver("diamond.q");
  CHECK(q->num_vertices() == 4);
  CHECK(q->num_arrows() == 4);
  CHECK(*parse_quiver(format_quiver(*q)) == *q);

  auto j = parse_quiver(R"({"vertices": ["x1", "x2", "x3", "x4"], "arrows": [
    {"id": "a1", "source": "x1", "target": "x2"},
    {"id": "a2", "source": "x2", "target": "x4"},
    {"id": "a3", "source": "x1", "target": "x3"},
    {"id": "a4", "source": "x3", "target": "x4"}]})");
  CHECK(*j == *q);
}

TEST_CASE("quiver file errors") {
  auto e = parse_error_of([] { parse_quiver("vertex a\narrow f a b\n"); });
  CHECK(e.line() == 2);
  CHECK(e.column() == 11);
  CHECK(parse_error_of([] { parse_quiver("vertex a\nvertex a\n"); }).line() == 2);
  CHECK(parse_error_of([] { parse_quiver("vertex a\nbogus\n"); }).column() == 1);
  CHECK_THROWS_AS(parse_quiver("vertex a\narrow e_f a a\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertex a\narrow 2f a a\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("{\"vertices\": [1]}"), ParseError);
}

TEST_CASE("coalgebra and relation files round trip") {
  auto spec = parse_coalgebra(read_file(fixture("h4.coalg")));
  CHECK(spec.generators.size() == 3);
  CHECK(spec.max_length == 2u);
  auto again = parse_coalgebra(format_coalgebra(spec));
  CHECK(*again.quiver == *spec.quiver);
  CHECK(again.generators == spec.generators);
  CHECK(again.max_length == spec.max_length);

  auto q = load_quiver("ladder.q");
  auto rel = parse_relations(*q, read_file(fixture("all-ge2.rel")));
  CHECK(rel.relations.size() == 10);
  auto rel2 = parse_relations(*q, format_relations(*q, rel));
  CHECK(rel2.relations == rel.relations);
  CHECK(rel2.max_length == rel.max_length);

  CHECK(parse_error_of([] { parse_coalgebra("vertex a\nmaxlen x\n"); }).line() == 2);
}

TEST_CASE("comodule files") {
  auto c = load_coalgebra("diamond.coalg");
  auto m = parse_comodule(c, read_file(fixture("diamond.comod")));
  CHECK(m.dim() == 4);
  auto again = parse_comodule(c, format_comodule(m));
  CHECK(again.coefficients() == m.coefficients());

  auto dup = parse_error_of([&] { parse_comodule(c, "dim 1\nrho 0 : 0 e_x1; 0 e_x1\n"); });
  CHECK(dup.line() == 2);
  CHECK(parse_error_of([&] { parse_comodule(c, "dim 1\nrho 1 : 0 e_x1\n"); }).line() == 2);
  CHECK(parse_error_of([&] { parse_comodule(c, "rho 0 : 0 e_x1\n"); }).line() == 1);
}

TEST_CASE("random comodules survive the text format") {
  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    auto q = random_quiver(rng, {2, 5, 7, true, false});
    auto table = std::make_shared<const PathTable>(q, 3);
    auto c = std::make_shared<const GradedSubcoalgebra>(
        random_admissible_subcoalgebra(rng, table, 2));
    auto m = random_comodule(rng, c, 6);
    CHECK(parse_comodule(c, format_comodule(m)).coefficients() == m.coefficients());
  }
}

TEST_CASE("unreadable files are contract errors") {
  CHECK_THROWS_AS(read_file("/nonexistent/file.q"), ContractError);
}
