#pragma once

// Elements of KQ: finite rational combinations of paths.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "qcoalg/quiver.hpp"
#include "qcoalg/rational.hpp"

namespace qcoalg {

class PathVector {
 public:
  using Terms = std::map<Path, Rational>;

  PathVector() = default;
  explicit PathVector(const Path& p, const Rational& c = Rational(1)) {
    add(p, c);
  }

  void add(const Path& p, const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  Rational coefficient(const Path& p) const;
  std::size_t size() const noexcept { return terms_.size(); }

  // Common (source, target) of the support; nullopt when the support is
  // empty or mixes endpoints.
  std::optional<std::pair<Vertex, Vertex>> endpoints() const;
  // The components e_b v e_a, keyed by (source a, target b).
  std::map<std::pair<Vertex, Vertex>, PathVector> split_by_endpoints() const;
  std::size_t max_length() const;
  std::size_t min_length() const;

  PathVector& operator+=(const PathVector& other);
  PathVector& operator-=(const PathVector& other);
  PathVector& operator*=(const Rational& c);

  friend PathVector operator+(PathVector a, const PathVector& b) {
    return a += b;
  }
  friend PathVector operator-(PathVector a, const PathVector& b) {
    return a -= b;
  }
  friend PathVector operator*(const Rational& c, PathVector a) {
    return a *= c;
  }
  friend bool operator==(const PathVector&, const PathVector&) = default;

 private:
  Terms terms_;
};

// Bilinear extension of <p, q> = [p == q].
Rational pairing(const PathVector& v, const PathVector& w);

// The path support PSupp(v).
std::set<Path> psupp(const PathVector& v);

template <typename Range>
std::set<Path> psupp_set(const Range& vectors) {
  std::set<Path> out;
  for (const PathVector& v : vectors)
    for (const auto& [p, c] : v.terms()) out.insert(p);
  return out;
}

// Text syntax: terms "c*path" joined by '+'/'-', where c is an optional
// rational "p/q" and a path is "e_<vertex>" or arrow ids joined by '.' in
// traversal order. "0" is the zero vector. Throws ParseError with a 1-based
// column; `line` is passed through for file contexts.
Path parse_path(const Quiver& q, std::string_view text, std::size_t line = 0,
                std::size_t column_offset = 0);
PathVector parse_path_vector(const Quiver& q, std::string_view text,
                             std::size_t line = 0,
                             std::size_t column_offset = 0);

// Canonical term order, integer coefficients without '/1', unit
// coefficients omitted. Round-trips through parse_path_vector.
std::string format_path_vector(const Quiver& q, const PathVector& v);

}  // namespace qcoalg
