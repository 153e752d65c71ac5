#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "uea/comm_poly.hpp"
#include "uea/element.hpp"

namespace uea {

inline Element alg_mul(const Element& a, const Element& b) {
  return multiply(a, b);
}
inline CommPoly alg_mul(const CommPoly& a, const CommPoly& b) { return a * b; }
inline Element alg_unit(const Element& proto) {
  return Element::unit(proto.rank());
}
inline CommPoly alg_unit(const CommPoly& proto) {
  return CommPoly::unit(proto.rank());
}

enum class SpanVerdict { InSpan, NotInSpanUpToBound };

// InSpan certificates list generator-index product words with coefficients;
// re-expanding them reproduces the target exactly.
struct MembershipResult {
  SpanVerdict verdict = SpanVerdict::NotInSpanUpToBound;
  std::vector<std::pair<std::vector<int>, Scalar>> certificate;
  int bound = 0;

  bool in_span() const { return verdict == SpanVerdict::InSpan; }
};

struct SpanOptions {
  // guard for the exponential all-words enumeration of noncommuting families
  size_t max_products = 200000;
};

// Degree-bounded echelonized basis of the subalgebra generated by a family.
// Commuting families (detected by an exact pairwise precheck) enumerate
// ordered monomials in the generators; otherwise all words up to the bound.
template <class E>
class SpanBasis {
 public:
  SpanBasis(std::vector<E> gens, int degree_bound, SpanOptions opts = {});

  MembershipResult membership(const E& target) const;

  int bound() const { return bound_; }
  bool commutative() const { return commutative_; }
  size_t dimension() const { return rows_.size(); }
  const std::vector<E>& generators() const { return gens_; }
  const std::vector<std::vector<int>>& product_words() const { return words_; }

 private:
  using Key = Monomial;
  using Vec = std::vector<std::pair<Key, Scalar>>;  // sorted ascending

  struct Row {
    Vec vec;                          // leading term = back(), coeff 1
    std::map<int, Scalar> combo;      // row as combination of product words
  };

  static Vec to_vec(const E& e);
  // v -= s * r, sorted merge
  static void axpy(Vec& v, const Vec& r, const Scalar& s);

  void add_product(const E& value, std::vector<int> word);
  void enumerate_commutative(int idx, const E& current,
                             std::vector<int>& word, int deg_left);
  void enumerate_words(const E& current, std::vector<int>& word,
                       int deg_left);

  std::vector<E> gens_;
  int bound_;
  bool commutative_ = true;
  SpanOptions opts_;
  size_t enumerated_ = 0;

  std::vector<Row> rows_;
  std::map<Key, int, MonoLess> pivot_of_;
  std::vector<std::vector<int>> words_;
};

using UeaSpan = SpanBasis<Element>;
using CommSpan = SpanBasis<CommPoly>;

}  // namespace uea
