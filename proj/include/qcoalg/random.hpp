#pragma once

// Seeded random instances for the property suites and `selftest`.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qcoalg/comodule.hpp"

namespace qcoalg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Inclusive range.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  // Nonzero integer in [-bound, bound].
  Rational coefficient(int bound);

 private:
  std::mt19937_64 engine_;
};

struct QuiverShape {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 6;
  std::size_t max_arrows = 10;
  bool acyclic = true;
  bool loops = false;  // only when !acyclic
};

// Vertices v0.., arrows a0..; acyclic quivers only have arrows from lower
// to higher vertex index.
QuiverPtr random_quiver(Rng& rng, const QuiverShape& shape);

// Nonempty proper or full subset, each vertex kept with probability p.
VertexSubset random_subset(Rng& rng, std::size_t num_vertices, double p = 0.5);

// Random walk of length in [0, max_length] from a random vertex; stops
// early at sinks.
Path random_path(Rng& rng, const Quiver& q, std::size_t max_length);

// A combination of up to `terms` paths from one random nonempty component
// whose paths have length in [min_length, table max]; nullopt when no
// such path exists.
std::optional<PathVector> random_homogeneous_vector(Rng& rng,
                                                    const PathTable& table,
                                                    std::size_t min_length,
                                                    std::size_t terms,
                                                    int coefficient_bound);

// Closure of up to `generators` random homogeneous vectors of length >= 2.
GradedSubcoalgebra random_admissible_subcoalgebra(Rng& rng, PathTablePtr table,
                                                  std::size_t generators);

// A random element of one nonempty component of C.
PathVector random_element(Rng& rng, const GradedSubcoalgebra& c,
                          int coefficient_bound);

// A valid comodule over c of dimension in [1, max_dim]: a sub-comodule of
// C generated by random elements, sometimes divided by a random
// sub-comodule or summed with a simple. Falls back to a simple comodule
// when the attempts exceed max_dim.
FinComodule random_comodule(Rng& rng, CoalgebraPtr c, std::size_t max_dim);

}  // namespace qcoalg
