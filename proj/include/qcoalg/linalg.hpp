#pragma once

// Exact sparse linear algebra over Q on integer-indexed coordinates.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qcoalg/rational.hpp"

namespace qcoalg::linalg {

// Sorted (column, value) pairs; zero values are never stored.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  // Entries may be unsorted and contain duplicates or zeros.
  explicit SparseVec(std::vector<Entry> entries);

  static SparseVec unit(std::size_t col) {
    SparseVec v;
    v.entries_.emplace_back(col, Rational(1));
    return v;
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }
  // Requires !empty().
  std::size_t lead() const { return entries_.front().first; }
  Rational get(std::size_t col) const;

  // this += factor * other
  void axpy(const Rational& factor, const SparseVec& other);
  void scale(const Rational& factor);

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

Rational dot(const SparseVec& a, const SparseVec& b);

// Reduced row-echelon basis of a subspace of Q^ncols. Rows are sorted by
// pivot, every pivot entry is 1 and pivot columns are zero in other rows, so
// the representation of a subspace is unique.
class RowEchelon {
 public:
  RowEchelon() = default;
  explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

  static RowEchelon span(std::size_t ncols, std::span<const SparseVec> vs);
  static RowEchelon full(std::size_t ncols);

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  std::vector<std::size_t> pivots() const;

  // Returns true when the rank grew.
  bool insert(SparseVec v);
  // v minus its projection onto the span along the pivot coordinates; zero
  // iff v is in the span.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const RowEchelon& other) const;

  // Coefficients of v in terms of rows(), read off the pivot columns. Only
  // meaningful when contains(v).
  std::vector<Rational> coordinates(const SparseVec& v) const;

  // Annihilator under the standard dot product: dim + dim = ncols.
  RowEchelon orthogonal() const;

  friend bool operator==(const RowEchelon&, const RowEchelon&) = default;

 private:
  std::size_t ncols_ = 0;
  std::vector<SparseVec> rows_;
};

RowEchelon intersect(const RowEchelon& a, const RowEchelon& b);
RowEchelon sum(const RowEchelon& a, const RowEchelon& b);

// Kernel of the linear map whose images of the domain basis vectors are
// `images` (domain dimension = images.size()); codomain coordinates may be
// arbitrary indices.
RowEchelon kernel(std::span<const SparseVec> images);

}  // namespace qcoalg::linalg
