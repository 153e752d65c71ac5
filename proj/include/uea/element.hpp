#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uea/scalar.hpp"

namespace uea {

// Generators of U(gl_d): off-diagonal matrix units e_ij (i != j), Cartan
// differences h_i = e_ii - e_{i+1,i+1}, and the central element c = sum e_ii.
// User-level e_ii never exists internally; it desugars over {h_i, c}.
struct Generator {
  enum class Kind : uint8_t { OffDiag, Cartan, Central };
  Kind kind;
  int i = 0;  // OffDiag row / Cartan index
  int j = 0;  // OffDiag column
  int d = 0;  // rank

  static Generator off_diag(int i, int j, int d);
  static Generator cartan(int i, int d);
  static Generator central(int d);

  bool operator==(const Generator& o) const {
    return kind == o.kind && i == o.i && j == o.j && d == o.d;
  }
};

// Fixed PBW slot order: raising e_ij (i<j) lexicographic, then h_1..h_{d-1},
// then c, then lowering e_ij (i>j) lexicographic. Total d^2 slots.
int num_slots(int d);
int generator_slot(const Generator& g);
Generator slot_generator(int slot, int d);

// Exponent vector over the slot order; the empty monomial is the unit.
struct Monomial {
  std::vector<uint32_t> exp;
  uint32_t deg = 0;

  Monomial() = default;
  explicit Monomial(int d) : exp(num_slots(d), 0) {}

  bool is_unit() const { return deg == 0; }
  int degree() const { return static_cast<int>(deg); }

  Monomial& bump(int slot, uint32_t by = 1) {
    exp[slot] += by;
    deg += by;
    return *this;
  }

  int last_slot() const;  // highest slot with nonzero exponent, -1 if unit

  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// Graded lexicographic order; keys of an element iterate lowest degree first.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.exp < b.exp;
  }
};

struct MonoHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Element of U(gl_d) in PBW normal form: rank plus a canonical term map with
// no zero coefficients. Two elements are equal iff their term maps agree.
class Element {
 public:
  using TermMap = std::map<Monomial, Scalar, MonoLess>;

  Element() : d_(0) {}
  explicit Element(int d) : d_(d) {}

  static Element zero(int d) { return Element(d); }
  static Element unit(int d);
  static Element constant(const Scalar& s, int d);
  static Element generator(const Generator& g);
  // e_ij with i == j desugared over {h, c}
  static Element e(int i, int j, int d);
  static Element h(int i, int d);
  static Element central(int d);
  static Element monomial(const Monomial& m, const Scalar& s, int d);

  int rank() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // max term degree; -1 for the zero element
  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  void add_term(const Monomial& m, const Scalar& s);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }

  bool operator==(const Element& o) const {
    return d_ == o.d_ && terms_ == o.terms_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }

  Scalar coeff(const Monomial& m) const;

  std::string str() const;

 private:
  int d_;
  TermMap terms_;
};

void check_same_rank(const Element& a, const Element& b);

// --- pbw-core operations (rewriting engine in normal_order.cpp) ---

// e_ii = c/d + sum_{m>=i} h_m - (1/d) sum_m m*h_m
Element desugar_eii(int i, int d);

// [g1, g2] expanded over the generator set, diagonal units desugared
Element commutator_basis(const Generator& g1, const Generator& g2);

// PBW normal form of a linear combination of generator words
Element normal_order(
    const std::vector<std::pair<Scalar, std::vector<Generator>>>& word, int d);

// product in PBW normal form
Element multiply(const Element& a, const Element& b);

// right-multiplication by a single generator slot (hot path, memoized)
Element multiply_gen(const Element& a, int slot);

// ad(x)(u) = xu - ux for degree<=1 x with no constant term
Element ad_action(const Element& x, const Element& u);

// infinitesimal K-invariance for K = GL_{d-p} x (C*)^p
bool is_invariant(const Element& u, int p);

}  // namespace uea
