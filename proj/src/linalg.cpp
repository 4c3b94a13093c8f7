#include "qcoalg/linalg.hpp"

#include <algorithm>
#include <map>

#include "qcoalg/errors.hpp"

namespace qcoalg::linalg {

SparseVec::SparseVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first)
      entries_.back().second += e.second;
    else
      entries_.push_back(std::move(e));
  }
  std::erase_if(entries_, [](const Entry& e) { return sgn(e.second) == 0; });
}

Rational SparseVec::get(std::size_t col) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), col,
      [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != entries_.end() && it->first == col) return it->second;
  return Rational(0);
}

void SparseVec::axpy(const Rational& factor, const SparseVec& other) {
  if (sgn(factor) == 0 || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() ||
        (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational s = a->second + factor * b->second;
      if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Rational& factor) {
  if (sgn(factor) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational s(0);
  auto x = a.entries().begin();
  auto y = b.entries().begin();
  while (x != a.entries().end() && y != b.entries().end()) {
    if (x->first < y->first)
      ++x;
    else if (y->first < x->first)
      ++y;
    else {
      s += x->second * y->second;
      ++x;
      ++y;
    }
  }
  return s;
}

RowEchelon RowEchelon::span(std::size_t ncols, std::span<const SparseVec> vs) {
  RowEchelon r(ncols);
  for (const auto& v : vs) r.insert(v);
  return r;
}

RowEchelon RowEchelon::full(std::size_t ncols) {
  RowEchelon r(ncols);
  r.rows_.reserve(ncols);
  for (std::size_t c = 0; c < ncols; ++c) r.rows_.push_back(SparseVec::unit(c));
  return r;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.lead());
  return p;
}

SparseVec RowEchelon::reduce(const SparseVec& v) const {
  SparseVec out = v;
  for (const auto& row : rows_) {
    Rational c = v.get(row.lead());
    if (sgn(c) != 0) out.axpy(-c, row);
  }
  return out;
}

bool RowEchelon::insert(SparseVec v) {
  if (!v.empty() && v.entries().back().first >= ncols_)
    throw ContractError("exactlinalg", "vector exceeds the ambient dimension");
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Rational lead_value = r.entries().front().second;
  r.scale(1 / lead_value);
  const std::size_t p = r.lead();
  for (auto& row : rows_) {
    Rational c = row.get(p);
    if (sgn(c) != 0) row.axpy(-c, r);
  }
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), p,
      [](const SparseVec& row, std::size_t col) { return row.lead() < col; });
  rows_.insert(pos, std::move(r));
  return true;
}

bool RowEchelon::contains(const RowEchelon& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<Rational> RowEchelon::coordinates(const SparseVec& v) const {
  std::vector<Rational> c;
  c.reserve(rows_.size());
  for (const auto& row : rows_) c.push_back(v.get(row.lead()));
  return c;
}

RowEchelon RowEchelon::orthogonal() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (const auto& row : rows_) is_pivot[row.lead()] = true;
  // Column-major view of the non-pivot entries.
  std::map<std::size_t, std::vector<SparseVec::Entry>> by_free_col;
  for (const auto& row : rows_)
    for (const auto& [col, val] : row.entries())
      if (col != row.lead()) by_free_col[col].emplace_back(row.lead(), -val);
  RowEchelon out(ncols_);
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<SparseVec::Entry> entries;
    entries.emplace_back(f, Rational(1));
    if (auto it = by_free_col.find(f); it != by_free_col.end())
      entries.insert(entries.end(), it->second.begin(), it->second.end());
    out.insert(SparseVec(std::move(entries)));
  }
  return out;
}

RowEchelon intersect(const RowEchelon& a, const RowEchelon& b) {
  if (a.ncols() != b.ncols())
    throw ContractError("exactlinalg", "ambient mismatch in intersect");
  return sum(a.orthogonal(), b.orthogonal()).orthogonal();
}

RowEchelon sum(const RowEchelon& a, const RowEchelon& b) {
  if (a.ncols() != b.ncols())
    throw ContractError("exactlinalg", "ambient mismatch in sum");
  RowEchelon out = a;
  for (const auto& row : b.rows()) out.insert(row);
  return out;
}

RowEchelon kernel(std::span<const SparseVec> images) {
  std::map<std::size_t, std::vector<SparseVec::Entry>> equations;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [col, val] : images[i].entries())
      equations[col].emplace_back(i, val);
  RowEchelon eqs(images.size());
  for (auto& [col, entries] : equations) eqs.insert(SparseVec(std::move(entries)));
  return eqs.orthogonal();
}

}  // namespace qcoalg::linalg
