#include "qcoalg/selftest.hpp"

#include <exception>
#include <functional>

#include "qcoalg/comodule.hpp"
#include "qcoalg/random.hpp"
#include "qcoalg/relations.hpp"

namespace qcoalg {

namespace {

// Each check returns an empty string on success, else a description.
using Check = std::function<std::string(Rng&)>;

SuiteResult run_suite(const std::string& name, Rng& rng, std::size_t trials,
                      const Check& check) {
  SuiteResult r{name, trials, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    std::string problem;
    try {
      problem = check(rng);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem.empty()) {
      if (r.failures == 0)
        r.first_failure = "trial " + std::to_string(t) + ": " + problem;
      ++r.failures;
    }
  }
  return r;
}

std::string coalgebra_axioms(Rng& rng) {
  QuiverShape shape{1, 4, 6, false, true};
  auto q = random_quiver(rng, shape);
  Path p = random_path(rng, *q, 6);
  if (delta_left_then(*q, p) != delta_right_then(*q, p))
    return "coassociativity fails for " + q->format_path(p);
  PathVector left, right;
  for (const auto& [legs, c] : delta(*q, p)) {
    if (legs.first.is_trivial()) left.add(legs.second, c);
    if (legs.second.is_trivial()) right.add(legs.first, c);
  }
  if (left != PathVector(p) || right != PathVector(p))
    return "counit law fails for " + q->format_path(p);
  return {};
}

std::string closure_is_admissible(Rng& rng) {
  auto q = random_quiver(rng, {2, 5, 7, true, false});
  auto table = std::make_shared<const PathTable>(q, 4);
  auto c = random_admissible_subcoalgebra(rng, table, 3);
  if (!is_admissible(c)) return "closure output is not admissible";
  return {};
}

std::string decompositions(Rng& rng) {
  auto q = random_quiver(rng, {2, 6, 9, true, false});
  auto x = random_subset(rng, q->num_vertices());
  Path p = random_path(rng, *q, 6);
  if (p.is_trivial() || !x.contains(p.source())) return {};
  if (x.contains(p.target())) {
    auto d = cellular_decomposition(*q, p, x);
    if (concatenate(d.cells) != p) return "cells do not concatenate";
    for (const auto& c : d.cells)
      if (!is_cell(*q, c, x)) return "factor is not a cell";
  } else {
    auto d = tail_decomposition(*q, p, x);
    auto pieces = d.cells;
    pieces.push_back(d.tail);
    if (concatenate(pieces) != p) return "tail decomposition does not concatenate";
    if (!is_tail(*q, d.tail, x)) return "last factor is not a tail";
  }
  return {};
}

std::string duality(Rng& rng) {
  auto q = random_quiver(rng, {2, 5, 8, true, false});
  auto table = std::make_shared<const PathTable>(q, 4);
  std::vector<PathVector> gens;
  for (int k = 0; k < 3; ++k)
    if (auto v = random_homogeneous_vector(rng, *table, 2, 3, 2))
      gens.push_back(std::move(*v));
  RelationIdeal omega(table, gens);
  auto c = coalgebra_of_relations(omega);
  if (!is_admissible(c)) return "C(Q, omega) is not admissible";
  if (!(relations_of_coalgebra(c) == omega)) return "ideal round trip differs";
  auto h = random_admissible_subcoalgebra(rng, table, 3);
  if (!(coalgebra_of_relations(relations_of_coalgebra(h)) == h))
    return "coalgebra round trip differs";
  return {};
}

std::string length_functoriality(Rng& rng) {
  auto q = random_quiver(rng, {2, 5, 7, true, false});
  auto table = std::make_shared<const PathTable>(q, 3);
  auto c = std::make_shared<const GradedSubcoalgebra>(
      random_admissible_subcoalgebra(rng, table, 2));
  auto x = random_subset(rng, q->num_vertices());
  auto loc = localize_coalgebra(c, x);
  auto m = random_comodule(rng, c, 8);
  auto lm = length_vector(m);
  auto lem = length_vector(quotient_functor(m, loc));
  LengthVector projected;
  for (Vertex v : x.members())
    if (auto it = lm.find(q->vertex_id(v)); it != lm.end())
      projected.insert(*it);
  if (lem != projected) return "length vector of eM is not the projection";
  return {};
}

std::string section_then_quotient(Rng& rng) {
  auto q = random_quiver(rng, {2, 4, 5, true, false});
  auto table = std::make_shared<const PathTable>(q, 3);
  auto c = std::make_shared<const GradedSubcoalgebra>(
      random_admissible_subcoalgebra(rng, table, 2));
  auto x = random_subset(rng, q->num_vertices());
  auto loc = localize_coalgebra(c, x);
  auto n = random_comodule(rng, loc.coalgebra, 4);
  auto tsn = quotient_functor(cotensor_section(n, loc), loc);
  if (length_vector(tsn) != length_vector(n)) return "length vectors differ";
  for (Vertex v = 0; v < loc.quiver->quiver().num_vertices(); ++v)
    if (hom_simple(tsn, v).rank() != hom_simple(n, v).rank())
      return "hom from a simple differs";
  return {};
}

std::string semicentral_split(Rng& rng) {
  auto q = random_quiver(rng, {2, 6, 8, true, false});
  auto table = std::make_shared<const PathTable>(q, 3);
  auto c = random_admissible_subcoalgebra(rng, table, 3);
  auto x = random_subset(rng, q->num_vertices());
  auto cls = classify_idempotent(c, x, 3);
  if ((cls.left_semicentral || cls.right_semicentral) && !cls.split)
    return "semicentral idempotent reported as not split";
  return {};
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(run_suite("coalgebra_axioms", rng, trials, coalgebra_axioms));
  out.push_back(run_suite("closure_admissible", rng, trials, closure_is_admissible));
  out.push_back(run_suite("decompositions", rng, trials, decompositions));
  out.push_back(run_suite("duality_round_trip", rng, trials, duality));
  out.push_back(run_suite("length_functoriality", rng, trials, length_functoriality));
  out.push_back(run_suite("section_then_quotient", rng, trials, section_then_quotient));
  out.push_back(run_suite("semicentral_implies_split", rng, trials, semicentral_split));
  return out;
}

}  // namespace qcoalg
