#pragma once

#include <map>
#include <utility>
#include <vector>

#include "uea/element.hpp"

namespace uea {

struct MonoPairLess {
  bool operator()(const std::pair<Monomial, Monomial>& a,
                  const std::pair<Monomial, Monomial>& b) const {
    MonoLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

// Element of U(gl_d) (x) U(gl_d) with both legs in PBW normal form.
class TensorElement {
 public:
  using TermMap =
      std::map<std::pair<Monomial, Monomial>, Scalar, MonoPairLess>;

  TensorElement() : d_(0) {}
  explicit TensorElement(int d) : d_(d) {}

  static TensorElement of(const Element& left, const Element& right);

  int rank() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& l, const Monomial& r, const Scalar& s);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  friend TensorElement operator*(TensorElement a, const Scalar& s) {
    return a *= s;
  }

  // (a (x) b)(c (x) e) = ac (x) be, both legs normal-ordered
  friend TensorElement operator*(const TensorElement& a,
                                 const TensorElement& b);

  bool operator==(const TensorElement& o) const {
    return d_ == o.d_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

 private:
  int d_;
  TermMap terms_;
};

// coproduct: e_ij, h_i primitive, c grouplike, extended as algebra morphism
TensorElement coproduct(const Element& u);

// one-site state eta = normalized trace of the standard representation
Scalar eta(const Element& u);

// quantum Markov operator P = (id (x) eta) o coproduct
Element apply_P(const Element& u);

// P^k, k >= 0
Element apply_P_iter(const Element& u, int k);

}  // namespace uea
