#pragma once

#include <cstdint>
#include <vector>

#include "uea/element.hpp"
#include "uea/scalar.hpp"

namespace uea {

// Small dense matrix over the exact scalar field
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static Mat identity(int n);
  static Mat zero(int n) { return Mat(n, n); }

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(Mat x, const Scalar& s) { return x *= s; }
  friend Mat operator*(const Mat& x, const Mat& y);
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  Scalar trace() const;
  bool is_zero() const;

  // Gauss-Jordan inverse; throws on a singular matrix
  Mat inverse() const;
};

// Row-sparse exact square matrix for tensor-power representations. Each row
// holds (col, value) pairs sorted by column.
class SparseMat {
 public:
  using Entry = std::pair<int64_t, Scalar>;

  SparseMat() = default;
  explicit SparseMat(int64_t n) : n_(n), rows_(static_cast<size_t>(n)) {}

  static SparseMat identity(int64_t n);
  static SparseMat from_dense(const Mat& m);

  int64_t dim() const { return n_; }
  size_t nnz() const;
  const std::vector<Entry>& row(int64_t i) const { return rows_[i]; }

  void set(int64_t i, int64_t j, Scalar v);  // overwrites
  Scalar get(int64_t i, int64_t j) const;

  // this += s * o
  void add_scaled(const SparseMat& o, const Scalar& s);

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  static SparseMat kron(const SparseMat& a, const SparseMat& b);

  Scalar trace() const;
  // tr(a*b) without forming the product
  static Scalar trace_mul(const SparseMat& a, const SparseMat& b);

  bool operator==(const SparseMat& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  int64_t n_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

// Ad(g)u = g u g^{-1} extended multiplicatively from the generator images;
// throws on singular g or dimension mismatch with the element's rank.
Element ad_group(const Mat& g, const Element& u);

}  // namespace uea
