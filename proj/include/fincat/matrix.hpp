#pragma once

// Dense exact matrices and subspaces. Elimination always pivots on the first
// nonzero entry in column order, so echelon bases are reproducible bit for bit.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fincat/field.hpp"

namespace fincat {

template <class K>
using Vec = std::vector<K>;

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const K& zero)
      : rows_(rows), cols_(cols), zero_(zero.zero()), data_(rows * cols, zero.zero()) {}

  static Matrix identity(std::size_t n, const K& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = zero.one();
    return m;
  }
  /// Rows given as nested lists of integers.
  static Matrix from_ints(const std::vector<std::vector<std::int64_t>>& rows, const K& zero) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c, zero);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_ints: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = zero.from_int(rows[i][j]);
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<K>>& cols, std::size_t rows, const K& zero) {
    Matrix m(rows, cols.size(), zero);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("Matrix::from_columns: bad length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols, const K& zero) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: bad length");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& zero() const { return zero_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<K> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec<K> row_vec(std::size_t i) const { return Vec<K>(row(i).begin(), row(i).end()); }
  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const Vec<K>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator+(const Matrix& o) const {
    shape_check(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    shape_check(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Matrix scaled(const K& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix r(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (a.is_zero()) continue;
        auto src = o.row(k);
        auto dst = r.row(i);
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!src[j].is_zero()) dst[j] += a * src[j];
      }
    return r;
  }
  Vec<K> operator*(const Vec<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector shape mismatch");
    Vec<K> r(rows_, zero_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const K& a = (*this)(i, j);
        if (!a.is_zero()) r[i] += a * v[j];
      }
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Matrix hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("Matrix::hstack: row mismatch");
    Matrix r(rows_, cols_ + o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::copy(row(i).begin(), row(i).end(), r.row(i).begin());
      std::copy(o.row(i).begin(), o.row(i).end(), r.row(i).begin() + cols_);
    }
    return r;
  }
  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("Matrix::vstack: column mismatch");
    Matrix r(rows_ + o.rows_, cols_, zero_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + data_.size());
    return r;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix r(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  Matrix select_cols(const std::vector<std::size_t>& js) const {
    Matrix r(rows_, js.size(), zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < js.size(); ++k) r(i, k) = (*this)(i, js[k]);
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void shape_check(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  K zero_{};
  std::vector<K> data_;
};

namespace detail {

// Gauss-Jordan on raw residues; the hot path for all prime-field work.
inline std::vector<std::size_t> rref_fp(Matrix<Fp>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return {};
  const std::uint64_t p = m(0, 0).modulus();
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (m(i, j).modulus() != p) throw FieldMismatch("rref: mixed-field entries");
  std::vector<std::uint32_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m(i, j).value();
  auto inv = [p](std::uint64_t x) { return Fp(static_cast<std::int64_t>(x), static_cast<std::uint32_t>(p)).inverse().value(); };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (a[i * C + c]) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * C, a.begin() + piv * C + C, a.begin() + r * C);
    std::uint32_t* pr = a.data() + r * C;
    const std::uint64_t s = inv(pr[c]);
    if (s != 1)
      for (std::size_t j = c; j < C; ++j) pr[j] = static_cast<std::uint32_t>(pr[j] * s % p);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint32_t* qi = a.data() + i * C;
      const std::uint64_t f = qi[c];
      if (!f) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < C; ++j)
        if (pr[j]) qi[j] = static_cast<std::uint32_t>((qi[j] + nf * pr[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  const auto P = static_cast<std::uint32_t>(p);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) m(i, j) = Fp(a[i * C + j], P);
  return pivots;
}

template <class K>
std::vector<std::size_t> rref_generic(Matrix<K>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
    const K s = m(r, c).inverse();
    for (std::size_t j = c; j < C; ++j) m(r, j) *= s;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Reduced row echelon form in place; returns pivot columns. Zero rows end up
/// at the bottom.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  if constexpr (std::is_same_v<K, Fp>)
    return detail::rref_fp(m);
  else
    return detail::rref_generic(m);
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

/// Subspace of K^n held as the nonzero rows of a reduced echelon matrix.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const K& zero) : ambient_(ambient), basis_(0, ambient, zero) {}

  /// Span of the rows of m.
  static Subspace row_span(Matrix<K> m) {
    Subspace s(m.cols(), m.zero());
    auto piv = rref(m);
    s.basis_ = m.block(0, 0, piv.size(), m.cols());
    s.pivots_ = std::move(piv);
    return s;
  }
  /// Span of the columns of m.
  static Subspace column_span(const Matrix<K>& m) { return row_span(m.transpose()); }
  static Subspace span(const std::vector<Vec<K>>& vs, std::size_t ambient, const K& zero) {
    return row_span(Matrix<K>::from_rows(vs, ambient, zero));
  }
  static Subspace full(std::size_t n, const K& zero) { return row_span(Matrix<K>::identity(n, zero)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<K> vector(std::size_t i) const { return basis_.row_vec(i); }
  /// Basis vectors as the columns of an ambient x dim matrix.
  Matrix<K> as_columns() const { return basis_.transpose(); }

  /// v minus its echelon reduction against the basis; zero iff v lies in the span.
  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t i = 0; i < dim(); ++i) {
      const K c = v[pivots_[i]];
      if (c.is_zero()) continue;
      auto row = basis_.row(i);
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    return v;
  }
  bool contains(const Vec<K>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const K& x) { return x.is_zero(); });
  }
  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }
  /// Coordinates of v in the echelon basis, or nothing if v is outside.
  std::optional<Vec<K>> coordinates(const Vec<K>& v) const {
    Vec<K> c(dim(), basis_.zero());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    Vec<K> back(ambient_, basis_.zero());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!c[i].is_zero())
        for (std::size_t j = 0; j < ambient_; ++j) back[j] += c[i] * basis_(i, j);
    if (back != v) return std::nullopt;
    return c;
  }
  /// Coordinates of a vector already known to lie in the span.
  Vec<K> pivot_coordinates(const Vec<K>& v) const {
    Vec<K> c(dim(), basis_.zero());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  Subspace operator+(const Subspace& o) const { return row_span(basis_.vstack(o.basis_)); }
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {x : m x = 0} in reduced echelon form.
template <class K>
Subspace<K> kernel_basis(const Matrix<K>& m) {
  Matrix<K> r = m;
  auto piv = rref(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec<K>> vs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec<K> v(n, m.zero());
    v[f] = m.zero().one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    vs.push_back(std::move(v));
  }
  return Subspace<K>::span(vs, n, m.zero());
}

/// Some x with a x = b (free variables zero), or nothing when inconsistent.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  Matrix<K> aug = a.hstack(b);
  auto piv = rref(aug);
  const std::size_t n = a.cols();
  Matrix<K> x(n, b.cols(), a.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, n + j);
  }
  return x;
}

template <class K>
std::optional<Vec<K>> solve_vec(const Matrix<K>& a, const Vec<K>& b) {
  auto x = solve(a, Matrix<K>::from_columns({b}, b.size(), a.zero()));
  if (!x) return std::nullopt;
  return x->col(0);
}

/// Inverse of a square matrix, or nothing when singular.
template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
  auto x = solve(a, Matrix<K>::identity(a.rows(), a.zero()));
  if (!x || !((a * *x) == Matrix<K>::identity(a.rows(), a.zero()))) return std::nullopt;
  return x;
}

/// Kronecker product in the standard row-major block layout.
template <class K>
Matrix<K> kronecker(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const K& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

template <class K>
Vec<K> axpy(Vec<K> y, const K& a, const Vec<K>& x) {
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

}  // namespace fincat
