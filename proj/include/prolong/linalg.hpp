#pragma once

// Exact sparse linear algebra over a field, templated on the scalar type.
// Column indices are ordered: the leading entry of a vector is the one with
// the smallest index, and that is where echelon pivots sit.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace prolong::linalg {

template <class Scalar>
class SparseVector {
 public:
  struct Entry {
    std::size_t index;
    Scalar value;
  };

  SparseVector() = default;

  static SparseVector unit(std::size_t i) {
    SparseVector v;
    v.entries_.push_back({i, Scalar(1)});
    return v;
  }

  // Builds from an index-sorted map, dropping zeros.
  static SparseVector from_map(const std::map<std::size_t, Scalar>& m) {
    SparseVector v;
    v.entries_.reserve(m.size());
    for (const auto& [i, x] : m)
      if (x != 0) v.entries_.push_back({i, x});
    return v;
  }

  // Appends an entry; indices must be strictly increasing.
  void push_back(std::size_t i, Scalar x) {
    if (x == 0) return;
    if (!entries_.empty() && entries_.back().index >= i)
      throw std::logic_error("SparseVector::push_back: indices must increase");
    entries_.push_back({i, std::move(x)});
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const Entry& leading() const { return entries_.front(); }

  Scalar at(std::size_t i) const {
    auto it = find(i);
    return it == entries_.end() ? Scalar(0) : it->value;
  }
  bool has(std::size_t i) const { return find(i) != entries_.end(); }

  SparseVector& scale(const Scalar& s) {
    if (s == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& e : entries_) e.value *= s;
    return *this;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (a.entries_[k].index != b.entries_[k].index || a.entries_[k].value != b.entries_[k].value) return false;
    return true;
  }

 private:
  auto find(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.index < k; });
    return (it != entries_.end() && it->index == i) ? it : entries_.end();
  }

  std::vector<Entry> entries_;
};

// y + a * x
template <class Scalar>
SparseVector<Scalar> axpy(const SparseVector<Scalar>& y, const Scalar& a, const SparseVector<Scalar>& x) {
  if (a == 0 || x.empty()) return y;
  SparseVector<Scalar> out;
  auto iy = y.begin(), ey = y.end();
  auto ix = x.begin(), ex = x.end();
  while (iy != ey || ix != ex) {
    if (ix == ex || (iy != ey && iy->index < ix->index)) {
      out.push_back(iy->index, iy->value);
      ++iy;
    } else if (iy == ey || ix->index < iy->index) {
      out.push_back(ix->index, Scalar(a * ix->value));
      ++ix;
    } else {
      Scalar s = iy->value + a * ix->value;
      if (s != 0) out.push_back(iy->index, std::move(s));
      ++iy;
      ++ix;
    }
  }
  return out;
}

// A reduced row-echelon basis grown one vector at a time. Every stored row has
// pivot coefficient 1 and zeros in all other pivot columns. Optionally each
// row carries a combination vector recording how it was built from the
// caller's generators.
template <class Scalar>
class EchelonBasis {
 public:
  using Vector = SparseVector<Scalar>;

  explicit EchelonBasis(bool track = false) : track_(track) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  // Residual of v after subtracting its projection onto pivot columns.
  Vector reduce(const Vector& v) const { return reduce_tracked(v, Vector{}).first; }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  // Inserts v. Returns nullopt if the rank grew, otherwise the combination
  // (when tracking) that expresses a linear relation among the generators.
  std::optional<Vector> insert(const Vector& v, const Vector& combo = Vector{}) {
    auto [res, comb] = reduce_tracked(v, combo);
    if (res.empty()) return comb;
    Scalar inv = Scalar(1) / res.leading().value;
    res.scale(inv);
    if (track_) comb.scale(inv);
    const std::size_t p = res.leading().index;
    for (auto& row : rows_) {
      Scalar c = row.vec.at(p);
      if (c == 0) continue;
      Scalar neg = -c;
      row.vec = axpy(row.vec, neg, res);
      if (track_) row.combo = axpy(row.combo, neg, comb);
    }
    pivots_.emplace(p, rows_.size());
    rows_.push_back({std::move(res), std::move(comb)});
    return std::nullopt;
  }

  // Rows ordered by pivot column.
  std::vector<Vector> rows() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : pivots_) out.push_back(rows_[r].vec);
    return out;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [p, r] : pivots_) out.push_back(p);
    return out;
  }

  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

 private:
  struct Row {
    Vector vec;
    Vector combo;
  };

  std::pair<Vector, Vector> reduce_tracked(const Vector& v, Vector combo) const {
    // Rows are fully reduced, so subtracting one never creates an entry in
    // another pivot column: the multipliers can all be read off v itself.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& e : v) {
      auto it = pivots_.find(e.index);
      if (it != pivots_.end()) hits.emplace_back(it->second, e.value);
    }
    Vector res = v;
    for (const auto& [r, c] : hits) {
      Scalar neg = -c;
      res = axpy(res, neg, rows_[r].vec);
      if (track_) combo = axpy(combo, neg, rows_[r].combo);
    }
    return {std::move(res), std::move(combo)};
  }

  bool track_;
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivots_;
};

// Canonical reduced row-echelon form of the span of `rows`.
template <class Scalar>
std::vector<SparseVector<Scalar>> rref(const std::vector<SparseVector<Scalar>>& rows) {
  EchelonBasis<Scalar> basis;
  for (const auto& r : rows) basis.insert(r);
  return basis.rows();
}

// Basis of {c : sum_i c_i rows[i] = 0}, expressed over row indices.
template <class Scalar>
std::vector<SparseVector<Scalar>> left_nullspace(const std::vector<SparseVector<Scalar>>& rows) {
  EchelonBasis<Scalar> basis(true);
  std::vector<SparseVector<Scalar>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (auto rel = basis.insert(rows[i], SparseVector<Scalar>::unit(i))) out.push_back(std::move(*rel));
  }
  return out;
}

// Basis of {x in K^ncols : <eq, x> = 0 for every equation}, given the
// equations already in echelon form. One vector per free column, in column order.
template <class Scalar>
std::vector<SparseVector<Scalar>> kernel(const EchelonBasis<Scalar>& equations, std::size_t ncols) {
  auto rows = equations.rows();
  auto pivots = equations.pivot_columns();
  // column -> (pivot, coefficient) for rows touching that free column
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> touching(ncols);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const auto& e : rows[k])
      if (e.index != pivots[k]) touching.at(e.index).emplace_back(pivots[k], e.value);
  std::vector<SparseVector<Scalar>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (equations.is_pivot(f)) continue;
    std::map<std::size_t, Scalar> entries;
    entries.emplace(f, Scalar(1));
    for (const auto& [p, c] : touching[f]) entries.emplace(p, Scalar(-c));
    out.push_back(SparseVector<Scalar>::from_map(entries));
  }
  return out;
}

// Linear combination sum_i combo_i * vectors[i].
template <class Scalar>
SparseVector<Scalar> combine(const SparseVector<Scalar>& combo, const std::vector<SparseVector<Scalar>>& vectors) {
  SparseVector<Scalar> out;
  for (const auto& e : combo) out = axpy(out, e.value, vectors.at(e.index));
  return out;
}

}  // namespace prolong::linalg
