#ifndef ORBITSYM_LINALG_HPP
#define ORBITSYM_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "orbitsym/rational.hpp"

namespace orbitsym {

/// Dense matrix over exact rationals. Row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul: shape mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Rat& x = (*this)(i, k);
        if (x == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) {
          if (o(k, j) == 0) continue;
          r(i, j) += x * o(k, j);
        }
      }
    return r;
  }
  Mat operator*(const Rat& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
    std::vector<Rat> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Row echelon state used by rank / kernel / solve. Gaussian elimination
/// with exact pivots; deterministic (first nonzero pivot in column order).
struct Rref {
  Mat m;
  std::vector<size_t> pivot_cols;

  explicit Rref(Mat in) : m(std::move(in)) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      size_t p = r;
      while (p < m.rows() && m(p, c) == 0) ++p;
      if (p == m.rows()) continue;
      if (p != r)
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      Rat inv = 1 / m(r, c);
      for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
      for (size_t i = 0; i < m.rows(); ++i) {
        if (i == r || m(i, c) == 0) continue;
        Rat f = m(i, c);
        for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      }
      pivot_cols.push_back(c);
      ++r;
    }
  }

  size_t rank() const { return pivot_cols.size(); }
};

inline size_t rank(const Mat& m) { return Rref(m).rank(); }

/// Basis of the right kernel, one column vector per free variable,
/// free variables set to one in column order.
inline std::vector<std::vector<Rat>> kernel_basis(const Mat& m) {
  Rref rr(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> out;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(m.cols());
    v[fc] = 1;
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r) v[rr.pivot_cols[r]] = -rr.m(r, fc);
    out.push_back(std::move(v));
  }
  return out;
}

/// Particular solution of m x = b with free variables set to zero
/// (canonical solution; support lies on pivot columns only).
/// Returns nullopt when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref rr(std::move(aug));
  std::vector<Rat> x(m.cols());
  for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
    if (rr.pivot_cols[r] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[rr.pivot_cols[r]] = rr.m(r, m.cols());
  }
  return x;
}

inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref rr(std::move(aug));
  if (rr.rank() != n || rr.pivot_cols.back() >= n) throw std::invalid_argument("inverse: singular");
  Mat out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = rr.m(i, n + j);
  return out;
}

/// Incremental row-space tracker: feeds vectors one at a time and keeps a
/// reduced independent set. Used for span closures.
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t dim) : dim_(dim) {}

  /// Returns true when the vector enlarged the span.
  bool add(const std::vector<Rat>& v) {
    std::vector<Rat> w = v;
    reduce(w);
    size_t lead = 0;
    while (lead < dim_ && w[lead] == 0) ++lead;
    if (lead == dim_) return false;
    Rat inv = 1 / w[lead];
    for (size_t j = lead; j < dim_; ++j) w[j] *= inv;
    for (auto& [l, row] : rows_)
      if (row[lead] != 0) {
        Rat f = row[lead];
        for (size_t j = lead; j < dim_; ++j) row[j] -= f * w[j];
      }
    rows_.emplace_back(lead, std::move(w));
    return true;
  }

  bool contains(const std::vector<Rat>& v) const {
    std::vector<Rat> w = v;
    reduce(w);
    for (const auto& x : w)
      if (x != 0) return false;
    return true;
  }

  size_t size() const { return rows_.size(); }
  size_t dim() const { return dim_; }

 private:
  void reduce(std::vector<Rat>& w) const {
    for (const auto& [lead, row] : rows_) {
      if (w[lead] == 0) continue;
      Rat f = w[lead];
      for (size_t j = lead; j < dim_; ++j) w[j] -= f * row[j];
    }
  }
  size_t dim_;
  std::vector<std::pair<size_t, std::vector<Rat>>> rows_;
};

}  // namespace orbitsym

#endif
