#pragma once

#include <vector>

#include "uea/element.hpp"

namespace uea {

// Partition of the generator matrix E into a leading (d-p)x(d-p) block and
// p scalar blocks; block b >= 2 is the single index d-p+b-1.
struct BlockPartition {
  int d;
  int p;

  BlockPartition(int d_, int p_) : d(d_), p(p_) {
    if (d < 1) throw std::invalid_argument("rank must be positive");
    if (p < 0 || p > d - 1) throw std::invalid_argument("p out of range");
  }

  int num_blocks() const { return p + 1; }
  // 1-based inclusive index range of block b
  std::pair<int, int> block_range(int b) const {
    if (b < 1 || b > p + 1) throw std::invalid_argument("block out of range");
    if (b == 1) return {1, d - p};
    return {d - p + b - 1, d - p + b - 1};
  }
};

using BlockWord = std::vector<int>;

// Tr(E_{i1 i2} ... E_{iq i1}): sum of matrix-unit chains consistent with the
// block word, normal-ordered, diagonal units desugared
Element trace_word(const BlockPartition& part, const BlockWord& w);

// Tr(E_r^k) where E_r is the top-left r x r corner of the generator matrix;
// k = 0 gives the constant r
Element trace_power(int r, int k, int d);

enum class FamilyKind { Casimir, P1, P2Nested, Klink };

// Generator families of the invariant subalgebras:
//   Casimir:  Tr(E^k),                 k = 1..kmax
//   P1:       Tr(E_11^{k-1}), Tr(E^k), k = 1..kmax   (constants dropped)
//   P2Nested: Tr(E_r^k) for the nested corners r = d-p..d, k = 1..kmax
//   Klink:    Tr(E_{i1 i2}...E_{iq i1}) for all block words of length <= kmax
std::vector<Element> named_family(const BlockPartition& part, FamilyKind kind,
                                  int kmax);

// a = E_21 E_12 (E_31 E_13 + E_32 E_23)^2 for the p = 2 partition
Element counterexample_a(int d);

}  // namespace uea
