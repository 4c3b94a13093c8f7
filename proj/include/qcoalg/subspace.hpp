#pragma once

#include <memory>
#include <span>
#include <vector>

#include "qcoalg/linalg.hpp"
#include "qcoalg/path_vector.hpp"

namespace qcoalg {

// A subspace of the span of an ordered, duplicate-free ambient path list,
// stored as an RREF basis whose columns follow the ambient order. Ambient
// lists must be sorted canonically, so pivots follow the canonical order.
class Subspace {
 public:
  using Ambient = std::shared_ptr<const std::vector<Path>>;

  Subspace();
  explicit Subspace(Ambient ambient);
  Subspace(Ambient ambient, linalg::RowEchelon basis);

  // Throws ContractError("exactlinalg") when a vector leaves the ambient.
  static Subspace span(Ambient ambient, std::span<const PathVector> vectors);
  static Subspace full(Ambient ambient);
  static Ambient make_ambient(std::vector<Path> paths);

  const Ambient& ambient() const noexcept { return ambient_; }
  const linalg::RowEchelon& echelon() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.rank(); }
  std::size_t ambient_dim() const noexcept { return ambient_->size(); }

  std::vector<PathVector> basis() const;
  // Pivot path of each basis row.
  std::vector<Path> pivot_paths() const;

  bool insert(const PathVector& v);
  bool contains(const PathVector& v) const;
  // False (rather than throwing) when v has support outside the ambient.
  bool contains_lenient(const PathVector& v) const;
  // Coefficients of v against basis(); v must be a member.
  std::vector<Rational> coordinates(const PathVector& v) const;

  std::optional<std::size_t> column(const Path& p) const;
  linalg::SparseVec to_sparse(const PathVector& v) const;
  PathVector to_vector(const linalg::SparseVec& v) const;

  bool same_ambient(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.same_ambient(b) && a.basis_ == b.basis_;
  }

 private:
  Ambient ambient_;
  linalg::RowEchelon basis_;
};

// Each throws ContractError("exactlinalg") on ambient mismatch.
Subspace rref(Subspace::Ambient ambient, std::span<const PathVector> vectors);
bool member(const PathVector& v, const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace orthogonal(const Subspace& s);

}  // namespace qcoalg
