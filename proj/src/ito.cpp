#include "uea/ito.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace uea {

CommPoly ito_drift(const CommPoly& f, int d) {
  if (f.rank() != d) throw std::invalid_argument("rank mismatch");
  CommPoly out(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      out += f.derivative(i, j).derivative(j, i);
  return out * Scalar::of(1, 2);
}

CommPoly ito_covar(const CommPoly& f, const CommPoly& h, int d) {
  if (f.rank() != d || h.rank() != d)
    throw std::invalid_argument("rank mismatch");
  CommPoly out(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      out += f.derivative(i, j) * h.derivative(j, i);
  return out;
}

namespace {

CommPoly comm_chain_trace(const std::vector<std::pair<int, int>>& ranges,
                          int d) {
  const size_t q = ranges.size();
  // state[(a1, ak)] = sum over chains b_{a1 a2} ... b_{a_{k-1} a_k}
  std::map<std::pair<int, int>, CommPoly> state;
  for (int a1 = ranges[0].first; a1 <= ranges[0].second; ++a1)
    state[{a1, a1}] = CommPoly::unit(d);
  for (size_t k = 0; k < q; ++k) {
    std::map<std::pair<int, int>, CommPoly> next;
    for (const auto& [key, poly] : state) {
      const auto [a1, ak] = key;
      if (k + 1 < q) {
        for (int an = ranges[k + 1].first; an <= ranges[k + 1].second; ++an) {
          CommPoly prod = poly * CommPoly::variable(ak, an, d);
          auto [it, fresh] = next.try_emplace({a1, an}, prod);
          if (!fresh) it->second += prod;
        }
      } else {
        CommPoly prod = poly * CommPoly::variable(ak, a1, d);
        auto [it, fresh] = next.try_emplace({a1, a1}, prod);
        if (!fresh) it->second += prod;
      }
    }
    state = std::move(next);
  }
  CommPoly out(d);
  for (const auto& [key, poly] : state) out += poly;
  return out;
}

}  // namespace

CommPoly comm_trace_word(int d, int p, const BlockWord& w) {
  BlockPartition part(d, p);
  if (w.empty()) throw std::invalid_argument("empty block word");
  std::vector<std::pair<int, int>> ranges;
  for (int b : w) ranges.push_back(part.block_range(b));
  return comm_chain_trace(ranges, d);
}

CommPoly comm_trace_power(int r, int k, int d) {
  if (r < 1 || r > d) throw std::invalid_argument("corner size out of range");
  if (k < 0) throw std::invalid_argument("negative power");
  if (k == 0) return CommPoly::constant(Scalar(Rational(r)), d);
  std::vector<std::pair<int, int>> ranges(k, {1, r});
  return comm_chain_trace(ranges, d);
}

std::vector<CommPoly> named_family_comm(const BlockPartition& part,
                                        FamilyKind kind, int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  const int d = part.d;
  std::vector<CommPoly> out;
  switch (kind) {
    case FamilyKind::Casimir:
      for (int k = 1; k <= kmax; ++k) out.push_back(comm_trace_power(d, k, d));
      break;
    case FamilyKind::P1:
      if (part.p < 1) throw std::invalid_argument("p1 family needs p >= 1");
      for (int k = 2; k <= kmax; ++k)
        out.push_back(comm_trace_power(d - 1, k - 1, d));
      for (int k = 1; k <= kmax; ++k) out.push_back(comm_trace_power(d, k, d));
      break;
    case FamilyKind::P2Nested:
      if (part.p < 2)
        throw std::invalid_argument("p2_nested family needs p >= 2");
      for (int r = d - part.p; r <= d; ++r)
        for (int k = 1; k <= kmax; ++k) out.push_back(comm_trace_power(r, k, d));
      break;
    case FamilyKind::Klink: {
      const int nb = part.num_blocks();
      for (int q = 1; q <= kmax; ++q) {
        std::vector<int> idx(q, 1);
        while (true) {
          CommPoly t = comm_trace_word(d, part.p, idx);
          bool seen = false;
          for (const auto& u : out)
            if (u == t) {
              seen = true;
              break;
            }
          if (!seen) out.push_back(std::move(t));
          int pos = q - 1;
          while (pos >= 0 && idx[pos] == nb) idx[pos--] = 1;
          if (pos < 0) break;
          ++idx[pos];
        }
      }
      break;
    }
  }
  return out;
}

ClosureReport closure_check(const std::vector<CommPoly>& family, int d,
                            int degree_bound) {
  if (family.empty()) throw std::invalid_argument("empty family");
  CommSpan span(family, degree_bound);
  ClosureReport rep;
  rep.bound = degree_bound;
  for (size_t i = 0; i < family.size(); ++i) {
    ClosureEntry e;
    e.kind = "drift";
    e.i = static_cast<int>(i);
    e.result = span.membership(ito_drift(family[i], d));
    rep.all_in_span = rep.all_in_span && e.result.in_span();
    rep.entries.push_back(std::move(e));
  }
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = i; j < family.size(); ++j) {
      ClosureEntry e;
      e.kind = "covar";
      e.i = static_cast<int>(i);
      e.j = static_cast<int>(j);
      e.result = span.membership(ito_covar(family[i], family[j], d));
      rep.all_in_span = rep.all_in_span && e.result.in_span();
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

std::string WordFactor::str() const {
  std::ostringstream os;
  switch (type) {
    case Type::TraceCornerPow:
      os << "Tr(M11^" << n << ")";
      break;
    case Type::TraceLoop1:
      os << "Tr(M1" << i << " M" << i << "1 M11^" << n << ")";
      break;
    case Type::TraceLoop2:
      os << "Tr(M1" << i << " M" << i << j << " M" << j << "1 M11^" << n << ")";
      break;
    case Type::Diag:
      os << "M" << i << i;
      break;
    case Type::Pair:
      os << "M" << i << j << " M" << j << i;
      break;
    case Type::PairInv:
      os << "(M" << i << j << " M" << j << i << ")^-1";
      break;
    case Type::Triple:
      os << "M" << i << j << " M" << j << k << " M" << k << i;
      break;
  }
  return os.str();
}

namespace {

// cyclic scalar-block word (no index 1): peel adjacent repeats, pairs and
// triangles, dividing out pair factors when a triangle is split off
void factor_scalar_cycle(std::vector<int> w, FactoredWord& out) {
  while (true) {
    const size_t q = w.size();
    if (q == 0) return;
    if (q == 1) {
      out.push_back({WordFactor::Type::Diag, w[0], 0, 0, 0});
      return;
    }
    // adjacent equal pair (cyclically): M_aa factors out
    bool peeled = false;
    for (size_t t = 0; t < q; ++t) {
      if (w[t] == w[(t + 1) % q]) {
        out.push_back({WordFactor::Type::Diag, w[t], 0, 0, 0});
        w.erase(w.begin() + static_cast<long>(t));
        peeled = true;
        break;
      }
    }
    if (peeled) continue;
    if (q == 2) {
      out.push_back({WordFactor::Type::Pair, w[0], w[1], 0, 0});
      return;
    }
    // no adjacent repeats, length >= 3
    const int a = w[0], b = w[1], c = w[2];
    if (a == c) {
      // (a b a rest) = (M_ab M_ba) * (a rest)
      out.push_back({WordFactor::Type::Pair, a, b, 0, 0});
      w.erase(w.begin() + 1, w.begin() + 3);
    } else {
      // (a b c rest) = (M_ab M_bc M_ca) (M_ac M_ca)^{-1} (a c rest)
      out.push_back({WordFactor::Type::Triple, a, b, c, 0});
      out.push_back({WordFactor::Type::PairInv, a, c, 0, 0});
      w.erase(w.begin() + 1);
    }
  }
}

void factor_rec(std::vector<int> w, FactoredWord& out) {
  const size_t q = w.size();
  if (q == 0) return;
  size_t ones = 0;
  for (int x : w)
    if (x == 1) ++ones;
  if (ones == q) {
    out.push_back({WordFactor::Type::TraceCornerPow, 0, 0, 0,
                   static_cast<int>(q)});
    return;
  }
  if (ones == 0) {
    factor_scalar_cycle(std::move(w), out);
    return;
  }
  // locate a maximal cyclic run of 1s ending at position re (inclusive)
  size_t rs = 0;
  while (w[rs] != 1) ++rs;
  // extend run start backwards cyclically
  while (w[(rs + q - 1) % q] == 1) rs = (rs + q - 1) % q;
  size_t k = 0;
  while (w[(rs + k) % q] == 1) ++k;
  // rotate so that the word reads (j, mid..., m, 1^k)
  std::vector<int> rot;
  rot.reserve(q);
  for (size_t t = 0; t < q; ++t) rot.push_back(w[(rs + k + t) % q]);
  // rot = (j, ..., m, 1, 1, ..., 1) with k trailing ones
  std::vector<int> chunk(rot.begin(), rot.end() - static_cast<long>(k));
  const int j = chunk.front();
  const int m = chunk.back();
  const int pow11 = static_cast<int>(k) - 1;
  if (chunk.size() == 1) {
    out.push_back({WordFactor::Type::TraceLoop1, j, 0, 0, pow11});
    return;
  }
  if (m == j) {
    // Tr(w) = Tr(chunk minus last) * Tr(M_1j M_j1 M_11^{k-1})
    out.push_back({WordFactor::Type::TraceLoop1, j, 0, 0, pow11});
    chunk.pop_back();
    factor_rec(std::move(chunk), out);
  } else {
    // Tr(w) = Tr(chunk) * Tr(M_1j M_jm M_m1 M_11^{k-1}) * (M_jm M_mj)^{-1}
    out.push_back({WordFactor::Type::TraceLoop2, j, m, 0, pow11});
    out.push_back({WordFactor::Type::PairInv, j, m, 0, 0});
    factor_rec(std::move(chunk), out);
  }
}

}  // namespace

FactoredWord factor_trace_word(const BlockWord& w, int p) {
  if (w.empty()) throw std::invalid_argument("empty block word");
  for (int b : w)
    if (b < 1 || b > p + 1)
      throw std::invalid_argument("block index out of range");
  FactoredWord out;
  factor_rec(w, out);
  return out;
}

namespace {

struct BlockIdx {
  int lo, hi;  // 0-based inclusive matrix index range
};

BlockIdx block_idx(int b, int d, int p) {
  BlockPartition part(d, p);
  auto [lo, hi] = part.block_range(b);
  return {lo - 1, hi - 1};
}

using CMat = std::vector<std::complex<double>>;  // d x d row-major

std::complex<double> ent(const CMat& m, int d, int i, int j) {
  return m[static_cast<size_t>(i) * d + j];
}

// corner r x r power trace
std::complex<double> corner_pow_trace(const CMat& m, int d, int r, int n) {
  if (n == 0) return static_cast<double>(r);
  std::vector<std::complex<double>> acc(static_cast<size_t>(r) * r, 0.0),
      tmp(static_cast<size_t>(r) * r, 0.0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) acc[i * r + j] = ent(m, d, i, j);
  for (int s = 1; s < n; ++s) {
    std::fill(tmp.begin(), tmp.end(), 0.0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j)
          tmp[i * r + j] += acc[i * r + k] * ent(m, d, k, j);
    acc.swap(tmp);
  }
  std::complex<double> t = 0.0;
  for (int i = 0; i < r; ++i) t += acc[i * r + i];
  return t;
}

}  // namespace

std::complex<double> eval_trace_word_numeric(const CMat& m, int d, int p,
                                             const BlockWord& w) {
  // chain DP over matrix indices restricted to the block ranges
  std::vector<BlockIdx> rng;
  for (int b : w) rng.push_back(block_idx(b, d, p));
  std::complex<double> total = 0.0;
  const size_t q = w.size();
  for (int a1 = rng[0].lo; a1 <= rng[0].hi; ++a1) {
    // vec[x] = sum over partial chains from a1 to x
    std::map<int, std::complex<double>> vec{{a1, 1.0}};
    for (size_t k = 0; k < q; ++k) {
      std::map<int, std::complex<double>> next;
      const int lo = k + 1 < q ? rng[k + 1].lo : a1;
      const int hi = k + 1 < q ? rng[k + 1].hi : a1;
      for (const auto& [x, v] : vec)
        for (int y = lo; y <= hi; ++y) next[y] += v * ent(m, d, x, y);
      vec = std::move(next);
    }
    total += vec.count(a1) ? vec[a1] : 0.0;
  }
  return total;
}

std::complex<double> eval_factor_numeric(const CMat& m, int d, int p,
                                         const WordFactor& f) {
  const int r = d - p;
  auto scalar_at = [&](int b) {  // matrix index of scalar block b >= 2
    return r + (b - 2);
  };
  switch (f.type) {
    case WordFactor::Type::TraceCornerPow:
      return corner_pow_trace(m, d, r, f.n);
    case WordFactor::Type::TraceLoop1: {
      // M_i1 M_11^n M_1i
      const int si = scalar_at(f.i);
      std::vector<std::complex<double>> v(r);
      for (int a = 0; a < r; ++a) v[a] = ent(m, d, a, si);  // column M_1i
      for (int s = 0; s < f.n; ++s) {
        std::vector<std::complex<double>> nv(r, 0.0);
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) nv[a] += ent(m, d, a, b) * v[b];
        v.swap(nv);
      }
      std::complex<double> t = 0.0;
      for (int a = 0; a < r; ++a) t += ent(m, d, si, a) * v[a];
      return t;
    }
    case WordFactor::Type::TraceLoop2: {
      const int si = scalar_at(f.i), sj = scalar_at(f.j);
      std::vector<std::complex<double>> v(r);
      for (int a = 0; a < r; ++a) v[a] = ent(m, d, a, si);  // M_1i
      for (int s = 0; s < f.n; ++s) {
        std::vector<std::complex<double>> nv(r, 0.0);
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) nv[a] += ent(m, d, a, b) * v[b];
        v.swap(nv);
      }
      std::complex<double> t = 0.0;
      for (int a = 0; a < r; ++a) t += ent(m, d, sj, a) * v[a];  // M_j1 ...
      return t * ent(m, d, si, sj);                              // * M_ij
    }
    case WordFactor::Type::Diag: {
      const int si = scalar_at(f.i);
      return ent(m, d, si, si);
    }
    case WordFactor::Type::Pair: {
      const int si = scalar_at(f.i), sj = scalar_at(f.j);
      return ent(m, d, si, sj) * ent(m, d, sj, si);
    }
    case WordFactor::Type::PairInv: {
      const int si = scalar_at(f.i), sj = scalar_at(f.j);
      return 1.0 / (ent(m, d, si, sj) * ent(m, d, sj, si));
    }
    case WordFactor::Type::Triple: {
      const int si = scalar_at(f.i), sj = scalar_at(f.j), sk = scalar_at(f.k);
      return ent(m, d, si, sj) * ent(m, d, sj, sk) * ent(m, d, sk, si);
    }
  }
  throw std::logic_error("bad factor type");
}

double validate_factored_word(const BlockWord& w, const FactoredWord& fw,
                              int d, int p, int samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  int done = 0;
  int attempts = 0;
  while (done < samples && attempts < samples * 50) {
    ++attempts;
    CMat m(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
      m[static_cast<size_t>(i) * d + i] = gauss(rng);
      for (int j = i + 1; j < d; ++j) {
        std::complex<double> z(gauss(rng) / std::sqrt(2.0),
                               gauss(rng) / std::sqrt(2.0));
        m[static_cast<size_t>(i) * d + j] = z;
        m[static_cast<size_t>(j) * d + i] = std::conj(z);
      }
    }
    // resample when an inverse factor is nearly singular
    bool bad = false;
    for (const auto& f : fw)
      if (f.type == WordFactor::Type::PairInv &&
          std::abs(eval_factor_numeric(m, d, p,
                                       {WordFactor::Type::Pair, f.i, f.j, 0,
                                        0})) < 0.05)
        bad = true;
    if (bad) continue;
    std::complex<double> lhs = eval_trace_word_numeric(m, d, p, w);
    std::complex<double> rhs = 1.0;
    for (const auto& f : fw) rhs *= eval_factor_numeric(m, d, p, f);
    double scale = std::max(1.0, std::abs(lhs));
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
    ++done;
  }
  if (done < samples)
    throw std::runtime_error("could not draw enough non-singular samples");
  return worst;
}

}  // namespace uea
