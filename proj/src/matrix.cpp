#include "uea/matrix.hpp"

#include <algorithm>

namespace uea {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("matrix dimension mismatch");
  for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("matrix dimension mismatch");
  for (size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& v : a) v *= s;
  return *this;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Scalar& yv = y.at(k, j);
        if (!yv.is_zero()) r.at(i, j) += xv * yv;
      }
    }
  return r;
}

Scalar Mat::trace() const {
  if (rows != cols) throw std::invalid_argument("trace of non-square matrix");
  Scalar t;
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Mat Mat::inverse() const {
  if (rows != cols) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows;
  Mat work = *this;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!work.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Scalar inv_p = Scalar::one() / work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) *= inv_p;
      inv.at(col, j) *= inv_p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Scalar f = work.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

SparseMat SparseMat::identity(int64_t n) {
  SparseMat m(n);
  for (int64_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Scalar::one()});
  return m;
}

SparseMat SparseMat::from_dense(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("square matrix expected");
  SparseMat r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) r.rows_[i].push_back({j, m.at(i, j)});
  return r;
}

size_t SparseMat::nnz() const {
  size_t t = 0;
  for (const auto& r : rows_) t += r.size();
  return t;
}

void SparseMat::set(int64_t i, int64_t j, Scalar v) {
  auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, int64_t c) { return e.first < c; });
  if (it != row.end() && it->first == j) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    row.insert(it, {j, std::move(v)});
  }
}

Scalar SparseMat::get(int64_t i, int64_t j) const {
  const auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, int64_t c) { return e.first < c; });
  if (it != row.end() && it->first == j) return it->second;
  return Scalar::zero();
}

void SparseMat::add_scaled(const SparseMat& o, const Scalar& s) {
  if (n_ != o.n_) throw std::invalid_argument("sparse dimension mismatch");
  if (s.is_zero()) return;
  for (int64_t i = 0; i < n_; ++i) {
    if (o.rows_[i].empty()) continue;
    std::vector<Entry> merged;
    merged.reserve(rows_[i].size() + o.rows_[i].size());
    auto a = rows_[i].begin(), ae = rows_[i].end();
    auto b = o.rows_[i].begin(), be = o.rows_[i].end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        merged.push_back({b->first, b->second * s});
        ++b;
      } else {
        Scalar v = a->second + b->second * s;
        if (!v.is_zero()) merged.push_back({a->first, std::move(v)});
        ++a;
        ++b;
      }
    }
    rows_[i] = std::move(merged);
  }
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("sparse dimension mismatch");
  SparseMat r(a.n_);
  for (int64_t i = 0; i < a.n_; ++i) {
    if (a.rows_[i].empty()) continue;
    // accumulate row i of the product as a sorted merge of scaled rows of b
    std::vector<SparseMat::Entry> acc;
    for (const auto& [k, av] : a.rows_[i]) {
      const auto& brow = b.rows_[k];
      if (brow.empty()) continue;
      std::vector<SparseMat::Entry> merged;
      merged.reserve(acc.size() + brow.size());
      auto x = acc.begin(), xe = acc.end();
      auto y = brow.begin(), ye = brow.end();
      while (x != xe || y != ye) {
        if (y == ye || (x != xe && x->first < y->first)) {
          merged.push_back(*x++);
        } else if (x == xe || y->first < x->first) {
          merged.push_back({y->first, y->second * av});
          ++y;
        } else {
          Scalar v = x->second + y->second * av;
          if (!v.is_zero()) merged.push_back({x->first, std::move(v)});
          ++x;
          ++y;
        }
      }
      acc = std::move(merged);
    }
    r.rows_[i] = std::move(acc);
  }
  return r;
}

SparseMat SparseMat::kron(const SparseMat& a, const SparseMat& b) {
  SparseMat r(a.n_ * b.n_);
  for (int64_t i = 0; i < a.n_; ++i) {
    for (const auto& [j, av] : a.rows_[i]) {
      for (int64_t k = 0; k < b.n_; ++k) {
        auto& out = r.rows_[i * b.n_ + k];
        for (const auto& [l, bv] : b.rows_[k])
          out.push_back({j * b.n_ + l, av * bv});
      }
    }
  }
  // columns within each output row need sorting when a's row has several entries
  for (auto& row : r.rows_)
    std::sort(row.begin(), row.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return r;
}

Scalar SparseMat::trace() const {
  Scalar t;
  for (int64_t i = 0; i < n_; ++i) t += get(i, i);
  return t;
}

Scalar SparseMat::trace_mul(const SparseMat& a, const SparseMat& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("sparse dimension mismatch");
  Scalar t;
  for (int64_t i = 0; i < a.n_; ++i)
    for (const auto& [j, av] : a.rows_[i]) {
      Scalar bv = b.get(j, i);
      if (!bv.is_zero()) t += av * bv;
    }
  return t;
}

Element ad_group(const Mat& g, const Element& u) {
  const int d = u.rank();
  if (g.rows != d || g.cols != d)
    throw std::invalid_argument("group element dimension mismatch");
  Mat ginv = g.inverse();

  // image of every generator slot as an element
  const int n = num_slots(d);
  std::vector<Element> image;
  image.reserve(n);
  for (int s = 0; s < n; ++s) {
    Generator gen = slot_generator(s, d);
    // rho(gen) as a dense matrix
    Mat m(d, d);
    switch (gen.kind) {
      case Generator::Kind::OffDiag:
        m.at(gen.i - 1, gen.j - 1) = Scalar::one();
        break;
      case Generator::Kind::Cartan:
        m.at(gen.i - 1, gen.i - 1) = Scalar::one();
        m.at(gen.i, gen.i) = -Scalar::one();
        break;
      case Generator::Kind::Central:
        m = Mat::identity(d);
        break;
    }
    Mat conj = g * m * ginv;
    Element img(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!conj.at(i, j).is_zero())
          img += Element::e(i + 1, j + 1, d) * conj.at(i, j);
    image.push_back(std::move(img));
  }

  Element out(d);
  for (const auto& [m, s] : u.terms()) {
    Element acc = Element::unit(d);
    for (size_t slot = 0; slot < m.exp.size(); ++slot)
      for (uint32_t k = 0; k < m.exp[slot]; ++k)
        acc = multiply(acc, image[slot]);
    acc *= s;
    out += acc;
  }
  return out;
}

}  // namespace uea
