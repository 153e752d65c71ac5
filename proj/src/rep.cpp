#include "uea/rep.hpp"

#include "uea/comm_poly.hpp"
#include "uea/hopf.hpp"
#include "uea/ito.hpp"

namespace uea {

namespace {

Mat rho_generator(const Generator& g) {
  const int d = g.d;
  Mat m(d, d);
  switch (g.kind) {
    case Generator::Kind::OffDiag:
      m.at(g.i - 1, g.j - 1) = Scalar::one();
      break;
    case Generator::Kind::Cartan:
      m.at(g.i - 1, g.i - 1) = Scalar::one();
      m.at(g.i, g.i) = -Scalar::one();
      break;
    case Generator::Kind::Central:
      m = Mat::identity(d);
      break;
  }
  return m;
}

Mat rho_monomial(const Monomial& m, int d) {
  Mat acc = Mat::identity(d);
  for (size_t slot = 0; slot < m.exp.size(); ++slot) {
    if (m.exp[slot] == 0) continue;
    Mat g = rho_generator(slot_generator(static_cast<int>(slot), d));
    for (uint32_t k = 0; k < m.exp[slot]; ++k) acc = acc * g;
  }
  return acc;
}

int64_t pow_i64(int64_t b, int e) {
  int64_t r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

Mat rho(const Element& u) {
  const int d = u.rank();
  Mat out(d, d);
  for (const auto& [m, s] : u.terms()) {
    Mat t = rho_monomial(m, d);
    t *= s;
    out += t;
  }
  return out;
}

int64_t TensorRep::dim(int n) const {
  if (n < 1) throw std::invalid_argument("tensor power needs n >= 1");
  int64_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= d_;
    if (dim > cap_) throw std::length_error("size cap exceeded: d^n > cap");
  }
  return dim;
}

SparseMat TensorRep::eval_mono(const Monomial& m, int n) {
  auto key = std::make_pair(m, n);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  SparseMat result;
  if (n == 1) {
    result = SparseMat::from_dense(rho_monomial(m, d_));
  } else {
    result = SparseMat(dim(n));
    TensorElement cp = coproduct(Element::monomial(m, Scalar::one(), d_));
    for (const auto& [legs, c] : cp.terms()) {
      SparseMat left = eval_mono(legs.first, n - 1);
      SparseMat right = SparseMat::from_dense(rho_monomial(legs.second, d_));
      result.add_scaled(SparseMat::kron(left, right), c);
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

SparseMat TensorRep::eval(const Element& u, int n) {
  if (u.rank() != d_) throw std::invalid_argument("rank mismatch");
  SparseMat out(dim(n));
  for (const auto& [m, s] : u.terms()) out.add_scaled(eval_mono(m, n), s);
  return out;
}

SparseMat TensorRep::eval_degree1(const Element& x, int n) {
  if (x.rank() != d_) throw std::invalid_argument("rank mismatch");
  if (x.degree() > 1)
    throw std::invalid_argument("eval_degree1 requires degree <= 1");
  const int64_t full = dim(n);
  SparseMat out(full);
  const int central = d_ * (d_ - 1) / 2 + d_ - 1;
  for (const auto& [m, s] : x.terms()) {
    if (m.is_unit()) {
      out.add_scaled(SparseMat::identity(full), s);
      continue;
    }
    const int slot = m.last_slot();
    if (slot == central) {  // grouplike: all legs identity
      out.add_scaled(SparseMat::identity(full), s);
      continue;
    }
    // primitive: sum over sites of I (x) ... (x) rho(g) (x) ... (x) I
    SparseMat g = SparseMat::from_dense(rho_generator(slot_generator(slot, d_)));
    for (int site = 1; site <= n; ++site) {
      SparseMat term = SparseMat::identity(1);
      for (int k = 1; k <= n; ++k)
        term = SparseMat::kron(
            term, k == site ? g : SparseMat::identity(d_));
      out.add_scaled(term, s);
    }
  }
  return out;
}

SparseMat rho_tensor(const Element& u, int n, int64_t cap) {
  TensorRep rep(u.rank(), cap);
  return rep.eval(u, n);
}

Scalar omega_moment(const Element& u, int n, int64_t cap) {
  TensorRep rep(u.rank(), cap);
  const int64_t dim = rep.dim(n);
  return rep.eval(u, n).trace() / Scalar(Rational(dim));
}

Scalar moment_via_P(const Element& u, int n) {
  if (n < 1) throw std::invalid_argument("moment needs n >= 1");
  return eta(apply_P_iter(u, n - 1));
}

Scalar omega_obs(const Element& u, int n, const std::vector<Mat>& obs,
                 int64_t cap) {
  const int d = u.rank();
  const int m = static_cast<int>(obs.size());
  if (m > n)
    throw std::invalid_argument("more site observables than tensor slots");
  for (const Mat& a : obs)
    if (a.rows != d || a.cols != d)
      throw std::invalid_argument("observable dimension mismatch");

  TensorRep rep(d, cap);
  const int64_t dim = rep.dim(n);
  SparseMat A = rep.eval(u, n);

  // tr(A * (a_1 (x) ... (x) a_m (x) I (x) ...)) via digit decomposition
  std::vector<int> di(n), dj(n);
  Scalar t;
  for (int64_t i = 0; i < dim; ++i) {
    for (const auto& [j, av] : A.row(i)) {
      int64_t ii = i, jj = j;
      for (int k = n - 1; k >= 0; --k) {
        di[k] = static_cast<int>(ii % d);
        dj[k] = static_cast<int>(jj % d);
        ii /= d;
        jj /= d;
      }
      bool id_ok = true;
      for (int k = m; k < n; ++k)
        if (di[k] != dj[k]) {
          id_ok = false;
          break;
        }
      if (!id_ok) continue;
      Scalar b = Scalar::one();
      for (int k = 0; k < m && !b.is_zero(); ++k)
        b *= obs[k].at(dj[k], di[k]);
      if (!b.is_zero()) t += av * b;
    }
  }
  return t / Scalar(Rational(dim));
}

PauliTriple pauli_triple() {
  const int d = 2;
  PauliTriple p;
  p.x = Element::e(1, 2, d) + Element::e(2, 1, d);
  p.y = Element::e(2, 1, d) * Scalar::imaginary() -
        Element::e(1, 2, d) * Scalar::imaginary();
  p.z = Element::h(1, d);
  return p;
}

Element traceless_entry(int i, int j, int d) {
  if (i < 1 || i > d || j < 1 || j > d)
    throw std::invalid_argument("entry index out of range");
  if (i != j) return Element::e(i, j, d);
  return desugar_eii(i, d) - Element::central(d) * Scalar::of(1, d);
}

Scalar traceless_scale(int d) {
  Scalar v;
  for (int i = 1; i <= d; ++i) {
    Mat r = rho(traceless_entry(i, i, d));
    Scalar tr = (r * r).trace() / Scalar(Rational(d));
    Scalar vi = Scalar::of(d, d - 1) * tr;
    if (i == 1)
      v = vi;
    else if (!(v == vi))
      throw std::logic_error("traceless scale depends on index");
  }
  return v;
}

WalkCltSession::WalkCltSession(int d, int n, int64_t cap)
    : d_(d), n_(n), rep_(d, cap), v_(traceless_scale(d)) {
  rep_.dim(n);
}

const SparseMat& WalkCltSession::factor(int i, int j) {
  auto key = std::make_pair(i, j);
  auto it = factors_.find(key);
  if (it == factors_.end())
    it = factors_
             .emplace(key, rep_.eval_degree1(traceless_entry(i, j, d_), n_))
             .first;
  return it->second;
}

WalkMoment WalkCltSession::moment(const std::vector<std::pair<int, int>>& word) {
  if (word.empty() || word.size() > 4)
    throw std::invalid_argument("word length must be 1..4");

  std::vector<const SparseMat*> f;
  f.reserve(word.size());
  for (auto [i, j] : word) f.push_back(&factor(i, j));

  Scalar tr;
  switch (f.size()) {
    case 1:
      tr = f[0]->trace();
      break;
    case 2:
      tr = SparseMat::trace_mul(*f[0], *f[1]);
      break;
    case 3:
      tr = SparseMat::trace_mul(*f[0] * *f[1], *f[2]);
      break;
    case 4:
      tr = SparseMat::trace_mul(*f[0] * *f[1], *f[2] * *f[3]);
      break;
  }
  Scalar omega = tr / Scalar(Rational(pow_i64(d_, n_)));

  // limit moment at t=1 from the traceless-projected entry covariance
  auto cov = [&](std::pair<int, int> a, std::pair<int, int> b) {
    CommPoly pa = traceless_entry_poly(a.first, a.second, d_);
    CommPoly pb = traceless_entry_poly(b.first, b.second, d_);
    return ito_covar(pa, pb, d_).constant_term();
  };
  Scalar limit;
  if (word.size() == 2) {
    limit = cov(word[0], word[1]);
  } else if (word.size() == 4) {
    limit = cov(word[0], word[1]) * cov(word[2], word[3]) +
            cov(word[0], word[2]) * cov(word[1], word[3]) +
            cov(word[0], word[3]) * cov(word[1], word[2]);
  }  // odd lengths: centered Gaussian, limit stays 0

  WalkMoment out;
  out.limit = limit;
  const Scalar nv = Scalar(Rational(n_)) * v_;
  if (word.size() % 2 == 0) {
    Scalar denom = nv;
    for (size_t k = 2; k < word.size() / 2 + 1; ++k) denom *= nv;
    out.scaled = omega / denom;
  } else if (omega.is_zero()) {
    out.scaled = Scalar::zero();
  } else {
    throw std::domain_error(
        "odd-length word with nonzero moment has irrational scaling");
  }
  return out;
}

WalkMoment scaled_walk_moment(const std::vector<std::pair<int, int>>& word,
                              int n, int d, int64_t cap) {
  WalkCltSession session(d, n, cap);
  return session.moment(word);
}

}  // namespace uea
