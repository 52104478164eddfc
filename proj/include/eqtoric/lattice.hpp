// Copyright 2026 The eqtoric Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact integer linear algebra: matrices over Z, Bareiss determinants,
// Smith and Hermite normal forms, and unimodular change-of-basis solves.
//
// All arithmetic is arbitrary precision. Matrices are small (a fan in rank n
// with m rays gives n x m ray matrices), so clarity wins over speed here.

#ifndef EQTORIC_LATTICE_HPP_
#define EQTORIC_LATTICE_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqtoric/error.hpp"

namespace eqtoric {

using Integer = boost::multiprecision::cpp_int;

// An element of Z^n. Used both for lattice vectors (rays, in H_2(BT)) and
// covectors (elements of H^2(BT) written in the dual basis).
using IntVector = std::vector<Integer>;

inline IntVector make_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ArgumentError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// gcd of the absolute values of the entries; 0 for the zero vector.
inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

inline bool is_primitive(const IntVector& v) { return content(v) == 1; }

// Floor division, rounding toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw ArgumentError("from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  // Builds the matrix whose c-th column is columns[c]. `height` is used when
  // `columns` is empty.
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t height = 0) {
    const std::size_t rows = columns.empty() ? height : columns.front().size();
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) {
        throw ArgumentError("from_columns: ragged columns");
      }
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> v;
    for (const auto& r : rows) v.push_back(make_vector(r));
    return from_rows(v);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const {
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  IntVector column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<IntVector> row_list() const {
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r != c && (*this)(r, c) != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("matrix product: shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw ArgumentError("matrix-vector product: shape mismatch");
    IntVector out(a.rows_, Integer(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) os << ", ";
      os << '[';
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) os << ", ";
        os << (*this)(r, c);
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Determinant by Bareiss fraction-free elimination. Every intermediate
// division is exact.
inline Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw ArgumentError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Rank over Q by fraction-free row reduction (rows are kept primitive).
inline std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Integer f = a(i, c);
      const Integer pivot = a(r, c);
      Integer g = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = pivot * a(i, j) - f * a(r, j);
        g = boost::multiprecision::gcd(g, abs(a(i, j)));
      }
      if (g > 1)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) /= g;
    }
    ++r;
  }
  return r;
}

// Adjugate (transposed cofactor matrix): adj(M) * M = det(M) * I.
inline IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw ArgumentError("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Integer cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

// left * original * right == diag(diag) (padded with zeros to the original
// shape). left and right are unimodular; diag is a divisibility chain of
// nonnegative integers with min(rows, cols) entries.
struct SmithDecomposition {
  IntMatrix left;
  std::vector<Integer> diag;
  IntMatrix right;

  IntMatrix diagonal_matrix() const {
    IntMatrix d(left.rows(), right.cols());
    for (std::size_t k = 0; k < diag.size(); ++k) d(k, k) = diag[k];
    return d;
  }
  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diag.begin(), diag.end(), [](const Integer& x) { return x != 0; }));
  }
};

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool rest_is_zero = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        rest_is_zero = true;
        break;
      }
      d.swap_rows(t, pi);
      left.swap_rows(t, pi);
      d.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row(t, bad, 1);
      left.add_row(t, bad, 1);
    }
    if (rest_is_zero) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(left), {}, std::move(right)};
  out.diag.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) out.diag.push_back(d(k, k));
  return out;
}

// Row-style Hermite normal form of the lattice spanned by the rows of `m`:
// echelon, positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped, so the result is a canonical basis.
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (p == rows || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == rows) break;
      h.swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row(i, r, -(h(i, c) / h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = h(i, j);
  return out;
}

inline bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  return abs(det(m)) == 1;
}

// Inverse of a unimodular matrix, read off its Smith decomposition:
// L M R = I  =>  M^{-1} = R L.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!is_unimodular(m)) throw ArgumentError("inverse_unimodular: |det| != 1");
  const auto snf = smith_normal_form(m);
  return snf.right * snf.left;
}

// Integer matrix A with A * src[k] == dst[k] for every k. `src` must be a
// Z-basis of Z^n; then A always exists and is integral. When dst is also a
// basis, |det A| == 1.
inline std::optional<IntMatrix> solve_basis_map(const std::vector<IntVector>& src,
                                                const std::vector<IntVector>& dst) {
  const std::size_t n = src.size();
  if (dst.size() != n) throw ArgumentError("solve_basis_map: src/dst size mismatch");
  for (const auto& v : src)
    if (v.size() != n) throw ArgumentError("solve_basis_map: src is not n vectors in Z^n");
  for (const auto& v : dst)
    if (v.size() != n) throw ArgumentError("solve_basis_map: dst is not n vectors in Z^n");
  const IntMatrix s = IntMatrix::from_columns(src, n);
  if (!is_unimodular(s)) {
    throw ArgumentError("solve_basis_map: source vectors are not a Z-basis (det != +-1)");
  }
  const IntMatrix a = IntMatrix::from_columns(dst, n) * inverse_unimodular(s);
  for (std::size_t k = 0; k < n; ++k)
    if (a * src[k] != dst[k]) return std::nullopt;
  return a;
}

}  // namespace eqtoric

#endif  // EQTORIC_LATTICE_HPP_
