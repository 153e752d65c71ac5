#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "uea/blocks.hpp"

using namespace uea;
using namespace uea::test;

TEST_CASE("block partition layout") {
  BlockPartition part(5, 2);
  CHECK(part.num_blocks() == 3);
  CHECK(part.block_range(1) == std::pair<int, int>{1, 3});
  CHECK(part.block_range(2) == std::pair<int, int>{4, 4});
  CHECK(part.block_range(3) == std::pair<int, int>{5, 5});
  CHECK_THROWS_AS(BlockPartition(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(part.block_range(4), std::invalid_argument);
}

TEST_CASE("trace_word examples") {
  // Tr(E) = c at any rank, any partition
  for (int d : {2, 3, 4}) {
    CHECK(trace_word(BlockPartition(d, 0), {1}) == Element::central(d));
  }
  // single matrix units at d = 3, p = 2
  CHECK(trace_word(BlockPartition(3, 2), {1, 2}) ==
        multiply(Element::e(1, 2, 3), Element::e(2, 1, 3)));
  // scalar corner at d = 2, p = 1 desugars
  CHECK(trace_word(BlockPartition(2, 1), {1}) == desugar_eii(1, 2));
  CHECK_THROWS_AS(trace_word(BlockPartition(3, 1), {1, 3}),
                  std::invalid_argument);
}

TEST_CASE("trace_power corners") {
  for (int d : {2, 3}) CHECK(trace_power(d, 1, d) == Element::central(d));
  CHECK(trace_power(1, 1, 3) == desugar_eii(1, 3));
  CHECK(trace_power(2, 0, 3) == Element::constant(Scalar(Rational(2)), 3));
  // corner trace power agrees with the sum of block trace words
  BlockPartition part(3, 1);
  Element sum(3);
  for (int i : {1, 2})
    for (int j : {1, 2}) sum += trace_word(part, {i, j});
  CHECK(sum == trace_power(3, 2, 3));
}

TEST_CASE("named families") {
  // p1 family at d = 2, kmax = 2: Tr(E_11), Tr(E), Tr(E^2)
  auto p1 = named_family(BlockPartition(2, 1), FamilyKind::P1, 2);
  REQUIRE(p1.size() == 3);
  CHECK(p1[0] == trace_power(1, 1, 2));
  CHECK(p1[1] == trace_power(2, 1, 2));
  CHECK(p1[2] == trace_power(2, 2, 2));

  auto cas = named_family(BlockPartition(3, 0), FamilyKind::Casimir, 3);
  REQUIRE(cas.size() == 3);
  for (int k = 1; k <= 3; ++k) CHECK(cas[k - 1] == trace_power(3, k, 3));

  auto nested = named_family(BlockPartition(3, 2), FamilyKind::P2Nested, 2);
  CHECK(nested.size() == 6);  // corners 1, 2, 3 with k = 1, 2

  auto klink = named_family(BlockPartition(3, 2), FamilyKind::Klink, 2);
  CHECK(klink.size() >= 9);  // 3 length-1 and 9 length-2 words, some may merge

  CHECK_THROWS_AS(named_family(BlockPartition(3, 0), FamilyKind::P1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(named_family(BlockPartition(3, 1), FamilyKind::P2Nested, 2),
                  std::invalid_argument);
}

TEST_CASE("families are invariant for their partition") {
  for (int d : {2, 3}) {
    for (int p = 0; p <= std::min(2, d - 1); ++p) {
      BlockPartition part(d, p);
      for (const auto& g : named_family(part, FamilyKind::Klink, 2))
        CHECK(is_invariant(g, p));
    }
  }
}

TEST_CASE("p1 family is pairwise commutative") {
  for (int d : {2, 3}) {
    auto fam = named_family(BlockPartition(d, 1), FamilyKind::P1, 3);
    for (size_t i = 0; i < fam.size(); ++i)
      for (size_t j = i + 1; j < fam.size(); ++j)
        CHECK(multiply(fam[i], fam[j]) == multiply(fam[j], fam[i]));
  }
}

TEST_CASE("trace commutator degree drop") {
  // Tr(AB) - Tr(BA) loses one degree for U-valued block matrices
  std::mt19937_64 rng(43);
  const int d = 3;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Element> a, b;
    int deg_a = 0, deg_b = 0;
    for (int k = 0; k < d * d; ++k) {
      a.push_back(random_element(rng, d, 2, 2));
      b.push_back(random_element(rng, d, 2, 2));
      deg_a = std::max(deg_a, a.back().degree());
      deg_b = std::max(deg_b, b.back().degree());
    }
    Element tr_ab(d), tr_ba(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        tr_ab += multiply(a[i * d + j], b[j * d + i]);
        tr_ba += multiply(b[i * d + j], a[j * d + i]);
      }
    CHECK((tr_ab - tr_ba).degree() <= deg_a + deg_b - 1);
  }
}

TEST_CASE("counterexample element") {
  Element a = counterexample_a(3);
  CHECK(a.degree() == 6);
  // explicit d = 3 form from the p = 2 partition
  Element inner = multiply(Element::e(3, 1, 3), Element::e(1, 3, 3)) +
                  multiply(Element::e(3, 2, 3), Element::e(2, 3, 3));
  Element direct = multiply(multiply(Element::e(2, 1, 3), Element::e(1, 2, 3)),
                            multiply(inner, inner));
  CHECK(a == direct);
  CHECK(is_invariant(a, 2));
  CHECK_THROWS_AS(counterexample_a(2), std::invalid_argument);
}
