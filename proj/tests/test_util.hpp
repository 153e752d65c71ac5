#pragma once

#include <random>

#include "uea/element.hpp"
#include "uea/matrix.hpp"

namespace uea::test {

inline Scalar random_scalar(std::mt19937_64& rng, bool complex_part = true) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  Rational im(0);
  if (complex_part && num(rng) > 2) {
    im = Rational(num(rng), den(rng));
    im.canonicalize();
  }
  return Scalar(re, im);
}

inline Monomial random_monomial(std::mt19937_64& rng, int d, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> slot(0, num_slots(d) - 1);
  Monomial m(d);
  const int k = deg(rng);
  for (int t = 0; t < k; ++t) m.bump(slot(rng));
  return m;
}

inline Element random_element(std::mt19937_64& rng, int d, int max_deg,
                              int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  Element e(d);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Scalar s = random_scalar(rng);
    if (s.is_zero()) s = Scalar::one();
    e.add_term(random_monomial(rng, d, max_deg), s);
  }
  return e;
}

// random degree-1 element with zero constant term
inline Element random_lie_element(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> slot(0, num_slots(d) - 1);
  std::uniform_int_distribution<int> nterms(1, 3);
  Element e(d);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(d);
    m.bump(slot(rng));
    Scalar s = random_scalar(rng);
    if (s.is_zero()) s = Scalar::one();
    e.add_term(m, s);
  }
  return e;
}

// random product of integer elementary matrices; always invertible
inline Mat random_invertible(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> idx(0, d - 1);
  std::uniform_int_distribution<long> val(-2, 2);
  std::uniform_int_distribution<int> ops(2, 5);
  Mat g = Mat::identity(d);
  const int k = ops(rng);
  for (int t = 0; t < k; ++t) {
    Mat e = Mat::identity(d);
    int i = idx(rng), j = idx(rng);
    if (i == j) {
      e.at(i, i) = Scalar(Rational(val(rng) >= 0 ? 2 : -2));  // unit scaling
    } else {
      e.at(i, j) = Scalar(Rational(val(rng)));
    }
    g = g * e;
  }
  return g;
}

}  // namespace uea::test
