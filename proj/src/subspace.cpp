#include "qcoalg/subspace.hpp"

#include <algorithm>

#include "qcoalg/errors.hpp"

namespace qcoalg {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ContractError("exactlinalg", what);
}

const Subspace::Ambient& empty_ambient() {
  static const Subspace::Ambient a =
      std::make_shared<const std::vector<Path>>();
  return a;
}

}  // namespace

Subspace::Subspace() : Subspace(empty_ambient()) {}

Subspace::Subspace(Ambient ambient)
    : ambient_(std::move(ambient)), basis_(ambient_->size()) {}

Subspace::Subspace(Ambient ambient, linalg::RowEchelon basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.ncols() != ambient_->size()) fail("basis width mismatch");
}

Subspace Subspace::span(Ambient ambient, std::span<const PathVector> vectors) {
  Subspace s(std::move(ambient));
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(Ambient ambient) {
  auto n = ambient->size();
  return Subspace(std::move(ambient), linalg::RowEchelon::full(n));
}

Subspace::Ambient Subspace::make_ambient(std::vector<Path> paths) {
  std::sort(paths.begin(), paths.end());
  if (std::adjacent_find(paths.begin(), paths.end()) != paths.end())
    fail("duplicate path in ambient");
  return std::make_shared<const std::vector<Path>>(std::move(paths));
}

std::vector<PathVector> Subspace::basis() const {
  std::vector<PathVector> out;
  out.reserve(dim());
  for (const auto& row : basis_.rows()) out.push_back(to_vector(row));
  return out;
}

std::vector<Path> Subspace::pivot_paths() const {
  std::vector<Path> out;
  for (const auto& row : basis_.rows()) out.push_back((*ambient_)[row.lead()]);
  return out;
}

bool Subspace::insert(const PathVector& v) {
  return basis_.insert(to_sparse(v));
}

bool Subspace::contains(const PathVector& v) const {
  return basis_.contains(to_sparse(v));
}

bool Subspace::contains_lenient(const PathVector& v) const {
  for (const auto& [p, c] : v.terms())
    if (!column(p)) return false;
  return contains(v);
}

std::vector<Rational> Subspace::coordinates(const PathVector& v) const {
  return basis_.coordinates(to_sparse(v));
}

std::optional<std::size_t> Subspace::column(const Path& p) const {
  auto it = std::lower_bound(ambient_->begin(), ambient_->end(), p);
  if (it == ambient_->end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - ambient_->begin());
}

linalg::SparseVec Subspace::to_sparse(const PathVector& v) const {
  std::vector<linalg::SparseVec::Entry> entries;
  entries.reserve(v.size());
  for (const auto& [p, c] : v.terms()) {
    auto col = column(p);
    if (!col) fail("vector has support outside the ambient path list");
    entries.emplace_back(*col, c);
  }
  return linalg::SparseVec(std::move(entries));
}

PathVector Subspace::to_vector(const linalg::SparseVec& v) const {
  PathVector out;
  for (const auto& [col, c] : v.entries()) out.add((*ambient_)[col], c);
  return out;
}

bool Subspace::same_ambient(const Subspace& other) const {
  return ambient_ == other.ambient_ || *ambient_ == *other.ambient_;
}

Subspace rref(Subspace::Ambient ambient, std::span<const PathVector> vectors) {
  return Subspace::span(std::move(ambient), vectors);
}

bool member(const PathVector& v, const Subspace& s) { return s.contains(v); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (!a.same_ambient(b)) fail("ambient mismatch in intersect");
  return Subspace(a.ambient(), linalg::intersect(a.echelon(), b.echelon()));
}

Subspace orthogonal(const Subspace& s) {
  return Subspace(s.ambient(), s.echelon().orthogonal());
}

}  // namespace qcoalg
