#include "uea/blocks.hpp"

#include <map>

namespace uea {

namespace {

// shared-prefix sum over matrix-unit chains: state maps (a_1, a_k) to the
// normal form of sum over chains e_{a_1 a_2} ... e_{a_{k-1} a_k}
Element chain_trace(const std::vector<std::pair<int, int>>& ranges, int d) {
  const size_t q = ranges.size();
  std::map<std::pair<int, int>, Element> state;
  for (int a1 = ranges[0].first; a1 <= ranges[0].second; ++a1)
    state[{a1, a1}] = Element::unit(d);

  for (size_t k = 0; k < q; ++k) {
    const auto [lo, hi] =
        k + 1 < q ? ranges[k + 1] : std::pair<int, int>{0, 0};
    std::map<std::pair<int, int>, Element> next;
    for (const auto& [key, elem] : state) {
      const auto [a1, ak] = key;
      if (k + 1 < q) {
        for (int an = lo; an <= hi; ++an) {
          Element prod = multiply(elem, Element::e(ak, an, d));
          auto [it, fresh] = next.try_emplace({a1, an}, prod);
          if (!fresh) it->second += prod;
        }
      } else {  // close the cycle back to a1
        Element prod = multiply(elem, Element::e(ak, a1, d));
        auto [it, fresh] = next.try_emplace({a1, a1}, prod);
        if (!fresh) it->second += prod;
      }
    }
    state = std::move(next);
  }

  Element out(d);
  for (const auto& [key, elem] : state) out += elem;
  return out;
}

}  // namespace

Element trace_word(const BlockPartition& part, const BlockWord& w) {
  if (w.empty()) throw std::invalid_argument("empty block word");
  std::vector<std::pair<int, int>> ranges;
  ranges.reserve(w.size());
  for (int b : w) ranges.push_back(part.block_range(b));
  return chain_trace(ranges, part.d);
}

Element trace_power(int r, int k, int d) {
  if (r < 1 || r > d) throw std::invalid_argument("corner size out of range");
  if (k < 0) throw std::invalid_argument("negative power");
  if (k == 0) return Element::constant(Scalar(Rational(r)), d);
  std::vector<std::pair<int, int>> ranges(k, {1, r});
  return chain_trace(ranges, d);
}

std::vector<Element> named_family(const BlockPartition& part, FamilyKind kind,
                                  int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  const int d = part.d;
  std::vector<Element> out;
  switch (kind) {
    case FamilyKind::Casimir:
      for (int k = 1; k <= kmax; ++k) out.push_back(trace_power(d, k, d));
      break;
    case FamilyKind::P1:
      if (part.p < 1)
        throw std::invalid_argument("p1 family needs p >= 1");
      for (int k = 2; k <= kmax; ++k)
        out.push_back(trace_power(d - 1, k - 1, d));
      for (int k = 1; k <= kmax; ++k) out.push_back(trace_power(d, k, d));
      break;
    case FamilyKind::P2Nested:
      if (part.p < 2)
        throw std::invalid_argument("p2_nested family needs p >= 2");
      for (int r = d - part.p; r <= d; ++r)
        for (int k = 1; k <= kmax; ++k) out.push_back(trace_power(r, k, d));
      break;
    case FamilyKind::Klink: {
      const int nb = part.num_blocks();
      // all block words of length 1..kmax, deduplicated by normal form
      for (int q = 1; q <= kmax; ++q) {
        std::vector<int> idx(q, 1);
        while (true) {
          out.push_back(trace_word(part, idx));
          int pos = q - 1;
          while (pos >= 0 && idx[pos] == nb) idx[pos--] = 1;
          if (pos < 0) break;
          ++idx[pos];
        }
      }
      // drop exact duplicates
      std::vector<Element> unique;
      for (auto& e : out) {
        bool seen = false;
        for (const auto& u : unique)
          if (u == e) {
            seen = true;
            break;
          }
        if (!seen) unique.push_back(std::move(e));
      }
      out = std::move(unique);
      break;
    }
  }
  return out;
}

Element counterexample_a(int d) {
  if (d < 3) throw std::invalid_argument("counterexample needs d >= 3");
  const int r = d - 2;  // size of the leading block for p = 2
  Element s1(d), s2(d);
  for (int j = 1; j <= r; ++j) {
    s1 += multiply(Element::e(d - 1, j, d), Element::e(j, d - 1, d));
    s2 += multiply(Element::e(d, j, d), Element::e(j, d, d));
  }
  Element s3 = multiply(Element::e(d, d - 1, d), Element::e(d - 1, d, d));
  Element inner = s2 + s3;
  return multiply(s1, multiply(inner, inner));
}

}  // namespace uea
