#pragma once

#include <complex>
#include <string>
#include <vector>

#include "uea/blocks.hpp"
#include "uea/comm_poly.hpp"
#include "uea/span.hpp"

namespace uea {

// Entry covariance rule for standard Brownian motion on H_d under the
// Tr(MN) scalar product: <db_ij, db_kl> = delta_il delta_jk dt. Both
// symbolic operators below and the path sampler use this one rule.

// drift of f(B): (1/2) sum_{i,j} d^2 f / db_ij db_ji
CommPoly ito_drift(const CommPoly& f, int d);

// quadratic covariation rate: sum_{i,j} (df/db_ij)(dh/db_ji)
CommPoly ito_covar(const CommPoly& f, const CommPoly& h, int d);

// commutative block trace word Tr(M_{i1 i2} ... M_{iq i1})
CommPoly comm_trace_word(int d, int p, const BlockWord& w);

// Tr over the top-left r x r corner of M^k
CommPoly comm_trace_power(int r, int k, int d);

std::vector<CommPoly> named_family_comm(const BlockPartition& part,
                                        FamilyKind kind, int kmax);

// Per-target closure verdicts: drift and pairwise covariation of a family
// tested against the span of the family itself up to the degree bound.
struct ClosureEntry {
  std::string kind;  // "drift" or "covar"
  int i = 0, j = 0;  // family indices
  MembershipResult result;
};

struct ClosureReport {
  std::vector<ClosureEntry> entries;
  bool all_in_span = true;
  int bound = 0;
};

ClosureReport closure_check(const std::vector<CommPoly>& family, int d,
                            int degree_bound);

// Factor forms of the trace-word factorization; i, j, k are scalar-block
// labels in {2..p+1} and the corner block is block 1.
struct WordFactor {
  enum class Type {
    TraceCornerPow,  // Tr(M_11^n)
    TraceLoop1,      // Tr(M_1i M_i1 M_11^n)
    TraceLoop2,      // Tr(M_1i M_ij M_j1 M_11^n)
    Diag,            // M_ii
    Pair,            // M_ij M_ji
    PairInv,         // (M_ij M_ji)^{-1}
    Triple,          // M_ij M_jk M_ki
  };
  Type type;
  int i = 0, j = 0, k = 0;
  int n = 0;
  std::string str() const;
};

using FactoredWord = std::vector<WordFactor>;

FactoredWord factor_trace_word(const BlockWord& w, int p);

// numeric check of the factorization identity on random Hermitian samples;
// returns the max relative error (near-singular inverse factors resampled)
double validate_factored_word(const BlockWord& w, const FactoredWord& fw,
                              int d, int p, int samples, uint64_t seed);

// numeric evaluation helpers shared with the validation hook
std::complex<double> eval_trace_word_numeric(
    const std::vector<std::complex<double>>& m, int d, int p,
    const BlockWord& w);
std::complex<double> eval_factor_numeric(
    const std::vector<std::complex<double>>& m, int d, int p,
    const WordFactor& f);

}  // namespace uea
