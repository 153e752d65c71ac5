#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "uea/element.hpp"

namespace uea {

// Commutative polynomial over the d^2 matrix-entry variables b_ij. The
// Hermitian relation b_ji = conj(b_ij) is imposed only at evaluation time.
class CommPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonoLess>;

  CommPoly() : d_(0) {}
  explicit CommPoly(int d) : d_(d) {}

  static int var_slot(int i, int j, int d);

  static CommPoly zero(int d) { return CommPoly(d); }
  static CommPoly unit(int d);
  static CommPoly constant(const Scalar& s, int d);
  static CommPoly variable(int i, int j, int d);  // b_ij
  static CommPoly monomial(const Monomial& m, const Scalar& s, int d);

  int rank() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  void add_term(const Monomial& m, const Scalar& s);
  Scalar constant_term() const;

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Scalar& s);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(CommPoly a, const Scalar& s) { return a *= s; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);

  CommPoly pow(unsigned k) const;

  // partial derivative with respect to b_ij
  CommPoly derivative(int i, int j) const;

  // evaluate on a complex matrix given row-major as entries[(i-1)d + (j-1)]
  std::complex<double> eval(
      const std::vector<std::complex<double>>& entries) const;

  bool operator==(const CommPoly& o) const {
    return d_ == o.d_ && terms_ == o.terms_;
  }
  bool operator!=(const CommPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int d_;
  TermMap terms_;
};

// b_ij - delta_ij * (sum_k b_kk)/d, the traceless-projected entry
CommPoly traceless_entry_poly(int i, int j, int d);

}  // namespace uea
