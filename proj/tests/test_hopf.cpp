#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>

#include "test_util.hpp"
#include "uea/blocks.hpp"
#include "uea/hopf.hpp"
#include "uea/matrix.hpp"
#include "uea/rep.hpp"

using namespace uea;
using namespace uea::test;

namespace {

Element h1(int d) { return Element::h(1, d); }

// canonical three-leg expansion for the coassociativity check
using TripleKey = std::tuple<unsigned long, unsigned long, unsigned long>;
using TripleMap = std::map<TripleKey, Scalar>;

struct MonoIndexer {
  std::map<Monomial, unsigned long, MonoLess> ids;
  unsigned long id(const Monomial& m) {
    auto [it, fresh] = ids.try_emplace(m, ids.size());
    return it->second;
  }
};

TripleMap expand_left(const TensorElement& t, MonoIndexer& ix, int d) {
  // apply the coproduct to the left leg
  TripleMap out;
  for (const auto& [legs, s] : t.terms()) {
    TensorElement cp =
        coproduct(Element::monomial(legs.first, Scalar::one(), d));
    for (const auto& [inner, c] : cp.terms()) {
      TripleKey key{ix.id(inner.first), ix.id(inner.second),
                    ix.id(legs.second)};
      auto [it, fresh] = out.try_emplace(key, s * c);
      if (!fresh) it->second += s * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

TripleMap expand_right(const TensorElement& t, MonoIndexer& ix, int d) {
  TripleMap out;
  for (const auto& [legs, s] : t.terms()) {
    TensorElement cp =
        coproduct(Element::monomial(legs.second, Scalar::one(), d));
    for (const auto& [inner, c] : cp.terms()) {
      TripleKey key{ix.id(legs.first), ix.id(inner.first),
                    ix.id(inner.second)};
      auto [it, fresh] = out.try_emplace(key, s * c);
      if (!fresh) it->second += s * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TEST_CASE("coproduct on generators") {
  const int d = 2;
  TensorElement dh = coproduct(h1(d));
  TensorElement expect = TensorElement::of(h1(d), Element::unit(d)) +
                         TensorElement::of(Element::unit(d), h1(d));
  CHECK(dh == expect);

  TensorElement dc = coproduct(Element::central(d));
  CHECK(dc == TensorElement::of(Element::central(d), Element::central(d)));

  // square of a primitive
  TensorElement dh2 = coproduct(multiply(h1(d), h1(d)));
  TensorElement expect2 =
      TensorElement::of(multiply(h1(d), h1(d)), Element::unit(d)) +
      TensorElement::of(h1(d), h1(d)) * Scalar(Rational(2)) +
      TensorElement::of(Element::unit(d), multiply(h1(d), h1(d)));
  CHECK(dh2 == expect2);
}

TEST_CASE("coproduct is an algebra morphism") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    Element u = random_element(rng, d, 2, 3);
    Element v = random_element(rng, d, 2, 3);
    CHECK(coproduct(multiply(u, v)) == coproduct(u) * coproduct(v));
  }
}

TEST_CASE("coassociativity") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    Element u = random_element(rng, d, 3, 3);
    TensorElement cp = coproduct(u);
    MonoIndexer ix;
    CHECK(expand_left(cp, ix, d) == expand_right(cp, ix, d));
  }
}

TEST_CASE("eta examples") {
  CHECK(eta(Element::e(1, 2, 2)) == Scalar::zero());
  CHECK(eta(Element::central(3)) == Scalar::one());
  // eta(Tr(E^2)) at d = 2: rho of the quadratic Casimir is 2*I
  CHECK(eta(trace_power(2, 2, 2)) == Scalar(Rational(2)));
}

TEST_CASE("eta equals the normalized trace of rho") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    Element u = random_element(rng, d, 3);
    CHECK(eta(u) == rho(u).trace() / Scalar(Rational(d)));
  }
}

TEST_CASE("apply_P examples") {
  const int d = 2;
  CHECK(apply_P(Element::unit(d)) == Element::unit(d));
  Element h2 = multiply(h1(d), h1(d));
  CHECK(apply_P(h2) == h2 + Element::unit(d));
  CHECK(apply_P(Element::e(1, 2, d)) == Element::e(1, 2, d));
}

TEST_CASE("apply_P is linear, unital and filtration preserving") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    Element u = random_element(rng, d, 3);
    Element v = random_element(rng, d, 3);
    Scalar s = random_scalar(rng);
    CHECK(apply_P(u * s + v) == apply_P(u) * s + apply_P(v));
    CHECK(apply_P(u).degree() <= u.degree());
  }
}

TEST_CASE("apply_P_iter") {
  const int d = 2;
  Element h2 = multiply(h1(d), h1(d));
  Element u = h2 + Element::e(1, 2, d);
  CHECK(apply_P_iter(u, 0) == u);
  for (int k : {1, 2, 5, 12})
    CHECK(apply_P_iter(h2, k) ==
          h2 + Element::constant(Scalar(Rational(k)), d));
  CHECK(apply_P_iter(Element::central(d), 7) == Element::central(d));
  CHECK_THROWS_AS(apply_P_iter(u, -1), std::invalid_argument);
}

TEST_CASE("P commutes with the adjoint action") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const int d = trial % 2 ? 2 : 3;
    Mat g = random_invertible(rng, d);
    Element u = random_element(rng, d, 2, 3);
    CHECK(ad_group(g, apply_P(u)) == apply_P(ad_group(g, u)));
  }
}

TEST_CASE("P preserves invariant subalgebras") {
  // spot checks; the acceptance suite runs the bulk version
  for (int d : {2, 3}) {
    for (int p = 0; p <= std::min(2, d - 1); ++p) {
      BlockPartition part(d, p);
      for (const Element& u : named_family(part, FamilyKind::Klink, 2)) {
        REQUIRE(is_invariant(u, p));
        CHECK(is_invariant(apply_P(u), p));
      }
    }
  }
}
