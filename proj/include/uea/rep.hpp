#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "uea/element.hpp"
#include "uea/matrix.hpp"

namespace uea {

// standard representation: e_ij -> matrix unit, h_i -> E_ii - E_{i+1,i+1},
// c -> identity, extended multiplicatively and linearly
Mat rho(const Element& u);

// Tensor-power evaluator rho^{(x)n}(x) = (rho^{(x)n-1} (x) rho) Delta(x),
// with per-monomial memoization. dim = d^n is bounded by the size cap.
class TensorRep {
 public:
  explicit TensorRep(int d, int64_t cap = 4096) : d_(d), cap_(cap) {}

  int64_t dim(int n) const;
  SparseMat eval(const Element& u, int n);
  // fast path for degree <= 1 elements (site-sum embedding)
  SparseMat eval_degree1(const Element& x, int n);

 private:
  SparseMat eval_mono(const Monomial& m, int n);

  int d_;
  int64_t cap_;
  std::map<std::pair<Monomial, int>,
           SparseMat,
           bool (*)(const std::pair<Monomial, int>&,
                    const std::pair<Monomial, int>&)>
      memo_{&TensorRep::key_less};

  static bool key_less(const std::pair<Monomial, int>& a,
                       const std::pair<Monomial, int>& b) {
    if (a.second != b.second) return a.second < b.second;
    return MonoLess{}(a.first, b.first);
  }
};

SparseMat rho_tensor(const Element& u, int n, int64_t cap = 4096);

// omega(j_n(u)) by dense tensor evaluation (normalized trace)
Scalar omega_moment(const Element& u, int n, int64_t cap = 4096);

// eta(P^{n-1}(u)); must agree with omega_moment
Scalar moment_via_P(const Element& u, int n);

// omega(j_n(u) * (a_1 (x) ... (x) a_m (x) I ...)) for m <= n observables;
// the Markov-property check passes the same n-1 observables on both sides
Scalar omega_obs(const Element& u, int n, const std::vector<Mat>& obs,
                 int64_t cap = 4096);

// d=2 noncommutative Bernoulli triple: x = e12+e21, y = i e21 - i e12, z = h1
struct PauliTriple {
  Element x, y, z;
};
PauliTriple pauli_triple();

// traceless entries x_ij = e_ij (i != j), x_ii = e_ii - c/d
Element traceless_entry(int i, int j, int d);

// v = d/(d-1) * tr(rho(x_ii)^2), verified independent of i
Scalar traceless_scale(int d);

struct WalkMoment {
  Scalar scaled;  // omega(prod_k j_n(x_{i_k j_k})) / (n v)^{len/2}
  Scalar limit;   // matching Hermitian-BM moment at t=1 (traceless covariance)
};

// Caches the j_n(x_ij) factor matrices so moment sweeps over many words at
// fixed (d, n) build each embedding once.
class WalkCltSession {
 public:
  WalkCltSession(int d, int n, int64_t cap = 65536);
  WalkMoment moment(const std::vector<std::pair<int, int>>& word);

 private:
  const SparseMat& factor(int i, int j);

  int d_, n_;
  TensorRep rep_;
  Scalar v_;
  std::map<std::pair<int, int>, SparseMat> factors_;
};

WalkMoment scaled_walk_moment(const std::vector<std::pair<int, int>>& word,
                              int n, int d, int64_t cap = 65536);

}  // namespace uea
