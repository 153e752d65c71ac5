#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "uea/blocks.hpp"
#include "uea/hopf.hpp"
#include "uea/ito.hpp"
#include "uea/span.hpp"

using namespace uea;
using namespace uea::test;

namespace {

// independent rank oracle: dense Gauss elimination over a monomial-indexed
// coordinate matrix, no shared code with SpanBasis
int dense_rank(const std::vector<Element>& vecs) {
  std::map<Monomial, size_t, MonoLess> cols;
  for (const auto& v : vecs)
    for (const auto& [m, s] : v.terms()) cols.try_emplace(m, cols.size());
  std::vector<std::vector<Scalar>> rows;
  for (const auto& v : vecs) {
    std::vector<Scalar> row(cols.size());
    for (const auto& [m, s] : v.terms()) row[cols[m]] = s;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (size_t col = 0; col < cols.size(); ++col) {
    size_t piv = rows.size();
    for (size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col] / rows[rank][col];
      for (size_t cc = col; cc < cols.size(); ++cc)
        rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

Element expand_certificate(const MembershipResult& res,
                           const std::vector<Element>& gens, int d) {
  Element acc(d);
  for (const auto& [word, coeff] : res.certificate) {
    Element prod = Element::unit(d);
    for (int g : word) prod = multiply(prod, gens[g]);
    acc += prod * coeff;
  }
  return acc;
}

}  // namespace

TEST_CASE("span of the unit is the constants") {
  UeaSpan span({Element::unit(3)}, 4);
  CHECK(span.dimension() == 1);
  CHECK(span.commutative());
  auto r = span.membership(Element::constant(Scalar::of(7, 3), 3));
  CHECK(r.in_span());
  CHECK_FALSE(span.membership(Element::h(1, 3)).in_span());
}

TEST_CASE("p1 family span dimension at d=2 matches the dense oracle") {
  const int d = 2;
  auto fam = named_family(BlockPartition(d, 1), FamilyKind::P1, 2);
  UeaSpan span(fam, 2);

  // oracle: all products of family members with total degree <= 2
  std::vector<Element> prods{Element::unit(d)};
  for (const auto& g : fam) prods.push_back(g);
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i; j < fam.size(); ++j)
      if (fam[i].degree() + fam[j].degree() <= 2)
        prods.push_back(multiply(fam[i], fam[j]));
  CHECK(static_cast<int>(span.dimension()) == dense_rank(prods));
  CHECK(span.dimension() == 7);  // regression value fixed by the oracle run
}

TEST_CASE("commutative span dimension example") {
  const int d = 2;
  std::vector<CommPoly> gens{comm_trace_power(d, 1, d),
                             comm_trace_power(d, 2, d)};
  CommSpan span(gens, 2);
  CHECK(span.commutative());
  CHECK(span.dimension() == 4);  // 1, TrB, TrB^2, (TrB)^2
}

TEST_CASE("generators belong to their own span with sound certificates") {
  const int d = 3;
  auto fam = named_family(BlockPartition(d, 1), FamilyKind::P1, 3);
  UeaSpan span(fam, 3);
  for (const auto& g : fam) {
    auto r = span.membership(g);
    REQUIRE(r.in_span());
    CHECK(expand_certificate(r, span.generators(), d) == g);
  }
}

TEST_CASE("membership is monotone in the bound") {
  const int d = 3;
  auto fam = named_family(BlockPartition(d, 1), FamilyKind::P1, 2);
  Element target = apply_P(trace_power(d, 2, d));
  for (int D : {2, 3, 4}) {
    UeaSpan span(fam, D);
    auto r = span.membership(target);
    CHECK(r.in_span());
    CHECK(expand_certificate(r, span.generators(), d) == target);
  }
}

TEST_CASE("noncommuting generators trigger word enumeration") {
  const int d = 2;
  std::vector<Element> gens{Element::e(1, 2, d), Element::e(2, 1, d)};
  UeaSpan span(gens, 2);
  CHECK_FALSE(span.commutative());
  // h_1 = e12 e21 - e21 e12 needs both word orders
  auto r = span.membership(Element::h(1, d));
  REQUIRE(r.in_span());
  CHECK(expand_certificate(r, span.generators(), d) == Element::h(1, d));
}

TEST_CASE("bound and input validation") {
  const int d = 2;
  CHECK_THROWS_AS(UeaSpan({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(UeaSpan({Element::zero(d)}, 2), std::invalid_argument);
  // all generators above the bound: nothing fits
  CHECK_THROWS_AS(UeaSpan({trace_power(d, 2, d)}, 1), std::invalid_argument);
  UeaSpan span({Element::h(1, d)}, 2);
  CHECK_THROWS_AS(span.membership(trace_power(d, 3, d)),
                  std::invalid_argument);
  // generators above the bound are dropped, smaller ones kept
  UeaSpan mixed({Element::h(1, d), trace_power(d, 3, d)}, 1);
  CHECK(mixed.membership(Element::h(1, d)).in_span());
}

TEST_CASE("remark p>2 membership failures") {
  // Tr(E_13 E_31) stays outside the nested span at every tested bound
  const int d = 3;
  Element target = trace_word(BlockPartition(d, 2), {1, 3});
  for (int D : {2, 4}) {
    auto fam = named_family(BlockPartition(d, 2), FamilyKind::P2Nested, D);
    UeaSpan span(fam, D);
    auto r = span.membership(target);
    CHECK_FALSE(r.in_span());
    CHECK(r.bound == D);
  }
}
