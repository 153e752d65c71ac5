#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "uea/blocks.hpp"
#include "uea/hopf.hpp"
#include "uea/rep.hpp"

using namespace uea;
using namespace uea::test;

TEST_CASE("rho on generators") {
  Mat e12 = rho(Element::e(1, 2, 2));
  CHECK(e12.at(0, 1) == Scalar::one());
  CHECK(e12.at(0, 0).is_zero());
  CHECK(e12.at(1, 0).is_zero());
  CHECK(e12.at(1, 1).is_zero());
  CHECK(rho(Element::central(3)) == Mat::identity(3));

  PauliTriple p = pauli_triple();
  Mat x = rho(p.x);
  CHECK(x.at(0, 1) == Scalar::one());
  CHECK(x.at(1, 0) == Scalar::one());
  Mat y = rho(p.y);
  CHECK(y.at(0, 1) == -Scalar::imaginary());
  CHECK(y.at(1, 0) == Scalar::imaginary());
  Mat z = rho(p.z);
  CHECK(z.at(0, 0) == Scalar::one());
  CHECK(z.at(1, 1) == -Scalar::one());
}

TEST_CASE("pauli commutation relations hold in the algebra itself") {
  PauliTriple p = pauli_triple();
  Scalar twoi = Scalar(Rational(2)) * Scalar::imaginary();
  CHECK(ad_action(p.x, p.y) == p.z * twoi);
  CHECK(ad_action(p.y, p.z) == p.x * twoi);
  CHECK(ad_action(p.z, p.x) == p.y * twoi);
}

TEST_CASE("rho_tensor basics") {
  const int d = 2;
  Element h = Element::h(1, d);
  // n = 1 reduces to rho
  CHECK(rho_tensor(h, 1) == SparseMat::from_dense(rho(h)));
  // primitive at n = 2: h (x) I + I (x) h
  SparseMat ht = rho_tensor(h, 2);
  SparseMat expect = SparseMat::kron(SparseMat::from_dense(rho(h)),
                                     SparseMat::identity(d));
  expect.add_scaled(SparseMat::kron(SparseMat::identity(d),
                                    SparseMat::from_dense(rho(h))),
                    Scalar::one());
  CHECK(ht == expect);
  // grouplike central element maps to the identity at every n
  for (int n : {1, 2, 3, 5})
    CHECK(rho_tensor(Element::central(d), n) ==
          SparseMat::identity(1 << n));
  CHECK_THROWS_AS(rho_tensor(h, 13), std::length_error);
}

TEST_CASE("rho_tensor is multiplicative") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    const int n = 2 + trial % 2;
    Element u = random_element(rng, d, 2, 3);
    Element v = random_element(rng, d, 2, 3);
    TensorRep rep(d);
    CHECK(rep.eval(multiply(u, v), n) == rep.eval(u, n) * rep.eval(v, n));
  }
}

TEST_CASE("eval_degree1 agrees with the coproduct recursion") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    const int n = 1 + trial % 3;
    Element x = random_lie_element(rng, d) +
                Element::constant(random_scalar(rng), d);
    TensorRep rep(d);
    CHECK(rep.eval_degree1(x, n) == rep.eval(x, n));
  }
}

TEST_CASE("bernoulli walk moments") {
  const int d = 2;
  Element h = Element::h(1, d);
  Element h2 = multiply(h, h);
  for (int n = 1; n <= 8; ++n) {
    CHECK(omega_moment(h, n) == Scalar::zero());
    CHECK(omega_moment(h2, n) == Scalar(Rational(n)));
  }
  PauliTriple p = pauli_triple();
  Element sum2 = multiply(p.x, p.x) + multiply(p.y, p.y) + multiply(p.z, p.z);
  for (int n = 1; n <= 6; ++n)
    CHECK(omega_moment(sum2, n) == Scalar(Rational(3 * n)));
}

TEST_CASE("moment oracle equivalence") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    const int n = 1 + trial % 5;
    Element u = random_element(rng, d, 3, 3);
    CHECK(omega_moment(u, n) == moment_via_P(u, n));
  }
  CHECK(moment_via_P(Element::central(2), 5) == Scalar::one());
  CHECK(moment_via_P(Element::e(1, 2, 3), 4) == Scalar::zero());
}

TEST_CASE("omega_obs basics and quantum markov identity") {
  std::mt19937_64 rng(59);
  const int d = 2;
  Element u = random_element(rng, d, 2, 3);
  // all-identity observables reduce to the plain moment
  std::vector<Mat> ids(2, Mat::identity(d));
  CHECK(omega_obs(u, 3, ids) == omega_moment(u, 3));
  // n = 1 with empty observables is the one-site state
  CHECK(omega_obs(u, 1, {}) == eta(u));

  for (int trial = 0; trial < 20; ++trial) {
    const int dd = trial % 2 ? 2 : 3;
    const int n = 2 + trial % 2;
    Element x = random_element(rng, dd, 3, 3);
    std::vector<Mat> obs;
    for (int k = 0; k < n - 1; ++k) {
      Mat a(dd, dd);
      for (int i = 0; i < dd; ++i)
        for (int j = 0; j < dd; ++j) a.at(i, j) = random_scalar(rng);
      obs.push_back(a);
    }
    // same observable word on both sides of the Markov identity
    CHECK(omega_obs(x, n, obs) == omega_obs(apply_P(x), n - 1, obs));
  }
}

TEST_CASE("traceless basis and scale") {
  for (int d : {2, 3, 4}) {
    CHECK(traceless_scale(d) == Scalar::of(1, d));
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        CHECK(eta(traceless_entry(i, j, d)) == Scalar::zero());
  }
}

TEST_CASE("scaled walk second moments match the limit covariance") {
  for (int d : {2, 3}) {
    for (int n : {1, 2, 4}) {
      for (int i1 = 1; i1 <= d; ++i1)
        for (int j1 = 1; j1 <= d; ++j1)
          for (int i2 = 1; i2 <= d; ++i2)
            for (int j2 = 1; j2 <= d; ++j2) {
              WalkMoment wm = scaled_walk_moment({{i1, j1}, {i2, j2}}, n, d);
              CHECK(wm.scaled == wm.limit);
            }
    }
  }
  // spot values: off-diagonal pair has moment 1, diagonal (d-1)/d
  WalkMoment off = scaled_walk_moment({{1, 2}, {2, 1}}, 3, 3);
  CHECK(off.scaled == Scalar::one());
  WalkMoment diag = scaled_walk_moment({{1, 1}, {1, 1}}, 3, 3);
  CHECK(diag.scaled == Scalar::of(2, 3));
  // centered single letters
  WalkMoment single = scaled_walk_moment({{1, 1}}, 4, 2);
  CHECK(single.scaled == Scalar::zero());
  CHECK(single.limit == Scalar::zero());
}
