#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starlift/algebra.hpp"
#include "starlift/errors.hpp"

namespace starlift {

// Dense square matrix over a base-algebra element type. Entry arithmetic is
// exact; the matrix carries its dimension, so operators are self-contained.
template <class E>
class SquareMatrix {
 public:
  SquareMatrix(int n, std::vector<E> entries) : n_(n), a_(std::move(entries)) {
    if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    if (a_.size() != static_cast<std::size_t>(n) * n)
      throw DimensionMismatch("matrix entry count does not match dimension");
  }

  static SquareMatrix filled(int n, const E& v) {
    return SquareMatrix(n, std::vector<E>(static_cast<std::size_t>(n) * n, v));
  }

  int dim() const { return n_; }
  const E& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  E& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_zero() const {
    for (const E& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  E trace() const {
    E t = at(0, 0);
    for (int i = 1; i < n_; ++i) t = t + at(i, i);
    return t;
  }

  SquareMatrix operator+(const SquareMatrix& o) const {
    check(o);
    std::vector<E> r;
    r.reserve(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) r.push_back(a_[i] + o.a_[i]);
    return SquareMatrix(n_, std::move(r));
  }

  SquareMatrix operator-(const SquareMatrix& o) const {
    check(o);
    std::vector<E> r;
    r.reserve(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) r.push_back(a_[i] - o.a_[i]);
    return SquareMatrix(n_, std::move(r));
  }

  SquareMatrix operator-() const {
    std::vector<E> r;
    r.reserve(a_.size());
    for (const E& e : a_) r.push_back(-e);
    return SquareMatrix(n_, std::move(r));
  }

  SquareMatrix operator*(const SquareMatrix& o) const {
    check(o);
    std::vector<E> r;
    r.reserve(a_.size());
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        E acc = at(i, 0) * o.at(0, k);
        for (int j = 1; j < n_; ++j) acc = acc + at(i, j) * o.at(j, k);
        r.push_back(std::move(acc));
      }
    }
    return SquareMatrix(n_, std::move(r));
  }

  SquareMatrix operator*(std::int64_t k) const {
    std::vector<E> r;
    r.reserve(a_.size());
    for (const E& e : a_) r.push_back(e * k);
    return SquareMatrix(n_, std::move(r));
  }

  bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

 private:
  void check(const SquareMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
  }

  int n_;
  std::vector<E> a_;
};

// M_n over a base algebra. Inversion is exact: Gauss-Jordan when the entries
// form a field, adjugate over a commutative entry ring (the matrix is a unit
// iff its determinant is a unit of the entry ring).
template <Algebra A>
struct MatrixAlgebra {
  using Entries = A;
  using Field = typename A::Field;
  using Entry = typename A::Element;
  using Element = SquareMatrix<Entry>;
  static constexpr bool is_field = false;
  static constexpr bool is_commutative = false;

  MatrixAlgebra(A entries, int n) : entries_(std::move(entries)), n_(n) {
    if (n < 1) throw DimensionMismatch("matrix algebra dimension must be >= 1");
  }

  const A& entry_algebra() const { return entries_; }
  const Field& field() const { return entries_.field(); }
  int dim() const { return n_; }

  Element zero() const { return Element::filled(n_, entries_.zero()); }

  Element one() const {
    Element r = zero();
    for (int i = 0; i < n_; ++i) r.at(i, i) = entries_.one();
    return r;
  }

  Element from_int(std::int64_t k) const {
    Element r = zero();
    for (int i = 0; i < n_; ++i) r.at(i, i) = entries_.from_int(k);
    return r;
  }

  // Matrix unit E_ij.
  Element basis(int i, int j) const {
    Element r = zero();
    r.at(i, j) = entries_.one();
    return r;
  }

  Element diagonal(const std::vector<Entry>& d) const {
    if (static_cast<int>(d.size()) != n_)
      throw DimensionMismatch("diagonal length does not match dimension");
    Element r = zero();
    for (int i = 0; i < n_; ++i) r.at(i, i) = d[i];
    return r;
  }

  Element scalar_mul(const typename Field::Element& c, const Element& m) const {
    Element r = m;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = entries_.scalar_mul(c, m.at(i, j));
    return r;
  }

  std::optional<Element> try_invert(const Element& m) const {
    if (m.dim() != n_) throw DimensionMismatch("matrix dimension does not match algebra");
    if constexpr (A::is_field) {
      return gauss_jordan(m);
    } else {
      static_assert(A::is_commutative,
                    "adjugate inversion requires a commutative entry ring");
      return adjugate_inverse(m);
    }
  }

  bool eq(const Element& a, const Element& b) const { return a == b; }

  Element sample(Rng& rng) const {
    Element r = zero();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = entries_.sample(rng);
    return r;
  }

  // Unit lower-triangular times unit upper-triangular times a unit diagonal:
  // invertible over any entry ring, with deterministic cost.
  Element sample_unit(Rng& rng) const {
    Element lower = one(), upper = one();
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < i; ++j) {
        lower.at(i, j) = entries_.sample(rng);
        upper.at(j, i) = entries_.sample(rng);
      }
    }
    std::vector<Entry> d;
    d.reserve(n_);
    for (int i = 0; i < n_; ++i) d.push_back(entries_.sample_unit(rng));
    return lower * upper * diagonal(d);
  }

  std::string describe() const {
    return "matrix[n=" + std::to_string(n_) + "] over " + entries_.describe();
  }

  bool operator==(const MatrixAlgebra& o) const {
    return entries_ == o.entries_ && n_ == o.n_;
  }

 private:
  std::optional<Element> gauss_jordan(const Element& m) const {
    Element work = m, inv = one();
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int row = col; row < n_; ++row) {
        if (!work.at(row, col).is_zero()) {
          pivot = row;
          break;
        }
      }
      if (pivot < 0) return std::nullopt;
      if (pivot != col) {
        for (int j = 0; j < n_; ++j) {
          std::swap(work.at(pivot, j), work.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      }
      Entry scale = work.at(col, col).inverse();
      for (int j = 0; j < n_; ++j) {
        work.at(col, j) = scale * work.at(col, j);
        inv.at(col, j) = scale * inv.at(col, j);
      }
      for (int row = 0; row < n_; ++row) {
        if (row == col || work.at(row, col).is_zero()) continue;
        Entry factor = work.at(row, col);
        for (int j = 0; j < n_; ++j) {
          work.at(row, j) = work.at(row, j) - factor * work.at(col, j);
          inv.at(row, j) = inv.at(row, j) - factor * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  Entry det_recursive(const Element& m, std::vector<int>& rows, int col_mask) const {
    int size = static_cast<int>(rows.size());
    int col = 0;
    while (col_mask & (1 << col)) ++col;
    if (size == 1) return m.at(rows[0], col);
    Entry acc = entries_.zero();
    for (int k = 0; k < size; ++k) {
      const Entry& pivot = m.at(rows[k], col);
      if (pivot.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(size - 1);
      for (int r = 0; r < size; ++r)
        if (r != k) rest.push_back(rows[r]);
      Entry minor = det_recursive(m, rest, col_mask | (1 << col));
      Entry term = pivot * minor;
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  }

  Entry determinant(const Element& m) const {
    std::vector<int> rows(n_);
    for (int i = 0; i < n_; ++i) rows[i] = i;
    return det_recursive(m, rows, 0);
  }

  std::optional<Element> adjugate_inverse(const Element& m) const {
    Entry det = determinant(m);
    auto det_inv = entries_.try_invert(det);
    if (!det_inv) return std::nullopt;
    Element adj = zero();
    if (n_ == 1) {
      adj.at(0, 0) = entries_.one();
    } else {
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          std::vector<int> rows;
          rows.reserve(n_ - 1);
          for (int r = 0; r < n_; ++r)
            if (r != j) rows.push_back(r);
          Entry minor = det_recursive(m, rows, 1 << i);
          adj.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
        }
      }
    }
    Element inv = zero();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) inv.at(i, j) = *det_inv * adj.at(i, j);
    return inv;
  }

  A entries_;
  int n_;
};

}  // namespace starlift
