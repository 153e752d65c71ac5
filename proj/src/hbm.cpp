#include "uea/hbm.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace uea {

namespace {

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// deterministic per-path Gaussian stream (xorshift + Box-Muller), so path
// generation order never affects the draw
struct GaussStream {
  uint64_t state;
  bool have_spare = false;
  double spare = 0.0;

  explicit GaussStream(uint64_t seed) : state(seed ? seed : 0x106689d45497fdb5ull) {}

  uint64_t next_u64() {
    uint64_t x = state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state = x;
    return x;
  }

  double uniform01() {  // in (0, 1]
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare = r * std::sin(a);
    have_spare = true;
    return r * std::cos(a);
  }
};

}  // namespace

PathEnsemble sample_hbm(int d, const std::vector<double>& times, int paths,
                        uint64_t seed, bool traceless,
                        HbmConvention convention) {
  if (d < 1) throw std::invalid_argument("rank must be positive");
  if (paths < 1) throw std::invalid_argument("need at least one path");
  if (times.empty()) throw std::invalid_argument("empty time grid");
  for (size_t k = 0; k < times.size(); ++k) {
    if (times[k] < 0.0) throw std::invalid_argument("negative time");
    if (k > 0 && times[k] <= times[k - 1])
      throw std::invalid_argument("time grid must be strictly increasing");
  }

  PathEnsemble ens;
  ens.d = d;
  ens.times = times;
  ens.n_paths = paths;
  ens.seed = seed;
  ens.traceless = traceless;
  ens.convention = convention;
  const size_t T = times.size();
  ens.data.assign(static_cast<size_t>(paths) * T * d * d, {0.0, 0.0});

  const double amp = convention == HbmConvention::Components ? std::sqrt(2.0)
                                                             : 1.0;

  for (int p = 0; p < paths; ++p) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (static_cast<uint64_t>(p) + 1));
    GaussStream g(splitmix64(s));
    std::vector<std::complex<double>> cur(static_cast<size_t>(d) * d,
                                          {0.0, 0.0});
    double prev_t = 0.0;
    for (size_t t = 0; t < T; ++t) {
      const double dt = times[t] - prev_t;
      prev_t = times[t];
      if (dt > 0.0) {
        const double sd = std::sqrt(dt);
        const double so = std::sqrt(dt / 2.0);
        for (int i = 0; i < d; ++i) {
          cur[static_cast<size_t>(i) * d + i] += amp * sd * g.gaussian();
          for (int j = i + 1; j < d; ++j) {
            std::complex<double> z(amp * so * g.gaussian(),
                                   amp * so * g.gaussian());
            cur[static_cast<size_t>(i) * d + j] += z;
            cur[static_cast<size_t>(j) * d + i] += std::conj(z);
          }
        }
      }
      std::complex<double>* out =
          ens.data.data() + (static_cast<size_t>(p) * T + t) * d * d;
      std::copy(cur.begin(), cur.end(), out);
      if (traceless) {
        std::complex<double> tr = 0.0;
        for (int i = 0; i < d; ++i) tr += out[static_cast<size_t>(i) * d + i];
        tr /= static_cast<double>(d);
        for (int i = 0; i < d; ++i) out[static_cast<size_t>(i) * d + i] -= tr;
      }
    }
  }
  return ens;
}

namespace {

std::vector<double> minor_eigs_desc(const std::complex<double>* m, int d,
                                    int k) {
  Eigen::MatrixXcd a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = m[static_cast<size_t>(i) * d + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed");
  std::vector<double> ev(k);
  for (int i = 0; i < k; ++i) ev[i] = es.eigenvalues()(k - 1 - i);
  return ev;
}

}  // namespace

SpectraReport minor_spectra(const PathEnsemble& ens,
                            const std::vector<int>& sizes, double tolerance) {
  if (sizes.empty()) throw std::invalid_argument("no minor sizes given");
  for (int k : sizes)
    if (k < 1 || k > ens.d)
      throw std::invalid_argument("minor size out of range");
  std::vector<int> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  SpectraReport rep;
  rep.sizes = sorted;
  rep.times = ens.times;
  rep.n_paths = ens.n_paths;
  rep.tolerance = tolerance;
  const size_t T = ens.times.size();
  rep.eig.resize(sorted.size());
  for (size_t s = 0; s < sorted.size(); ++s)
    rep.eig[s].resize(static_cast<size_t>(ens.n_paths) * T * sorted[s]);

  for (int p = 0; p < ens.n_paths; ++p) {
    for (size_t t = 0; t < T; ++t) {
      const std::complex<double>* m = ens.matrix(p, static_cast<int>(t));
      for (size_t s = 0; s < sorted.size(); ++s) {
        auto ev = minor_eigs_desc(m, ens.d, sorted[s]);
        std::copy(ev.begin(), ev.end(),
                  rep.eig[s].begin() +
                      (static_cast<size_t>(p) * T + t) * sorted[s]);
      }
    }
  }

  // generalized Cauchy interlacing between consecutive listed sizes:
  // lam_i(big) >= lam_i(small) >= lam_{i+r}(big) with r = big - small
  for (size_t s = 0; s + 1 < sorted.size(); ++s) {
    InterlacePair pair;
    pair.size_lo = sorted[s];
    pair.size_hi = sorted[s + 1];
    const int lo = sorted[s], hi = sorted[s + 1], r = hi - lo;
    for (int p = 0; p < ens.n_paths; ++p) {
      for (size_t t = 0; t < T; ++t) {
        const double* small =
            rep.eig[s].data() + (static_cast<size_t>(p) * T + t) * lo;
        const double* big =
            rep.eig[s + 1].data() + (static_cast<size_t>(p) * T + t) * hi;
        for (int i = 0; i < lo; ++i) {
          ++pair.checks;
          double v1 = small[i] - big[i];        // must be <= tol
          double v2 = big[i + r] - small[i];    // must be <= tol
          double v = std::max(v1, v2);
          if (v > tolerance) {
            ++pair.violations;
            pair.worst = std::max(pair.worst, v);
          }
        }
      }
    }
    rep.interlacing.push_back(pair);
  }
  return rep;
}

namespace {

size_t time_index(const PathEnsemble& ens, double t) {
  for (size_t k = 0; k < ens.times.size(); ++k)
    if (std::abs(ens.times[k] - t) < 1e-12) return k;
  throw std::invalid_argument("time not on the ensemble grid");
}

double path_statistic(const PathEnsemble& ens, int path, size_t tidx,
                      int size, const std::string& stat) {
  const std::complex<double>* m = ens.matrix(path, static_cast<int>(tidx));
  if (stat == "trace") {
    double tr = 0.0;
    for (int i = 0; i < size; ++i)
      tr += m[static_cast<size_t>(i) * ens.d + i].real();
    return tr;
  }
  auto ev = minor_eigs_desc(m, ens.d, size);
  if (stat == "top") return ev[0];
  if (stat == "gap") return size >= 2 ? ev[0] - ev[1] : 0.0;
  throw std::invalid_argument("unknown statistic: " + stat);
}

struct BinStat {
  double effect;
  bool ok;
};

// within a bin: residuals of s1 and s3 after removing the linear trend on
// s2, then their Pearson correlation
BinStat bin_effect(const std::vector<double>& s1, const std::vector<double>& s2,
                   const std::vector<double>& s3,
                   const std::vector<int>& idx) {
  const size_t n = idx.size();
  if (n < 3) return {0.0, false};
  auto mean_of = [&](const std::vector<double>& v) {
    double m = 0.0;
    for (int i : idx) m += v[i];
    return m / static_cast<double>(n);
  };
  const double m1 = mean_of(s1), m2 = mean_of(s2), m3 = mean_of(s3);
  double v2 = 0.0, c12 = 0.0, c32 = 0.0;
  for (int i : idx) {
    v2 += (s2[i] - m2) * (s2[i] - m2);
    c12 += (s1[i] - m1) * (s2[i] - m2);
    c32 += (s3[i] - m3) * (s2[i] - m2);
  }
  const double b1 = v2 > 0 ? c12 / v2 : 0.0;
  const double b3 = v2 > 0 ? c32 / v2 : 0.0;
  double num = 0.0, den1 = 0.0, den3 = 0.0;
  for (int i : idx) {
    const double r1 = (s1[i] - m1) - b1 * (s2[i] - m2);
    const double r3 = (s3[i] - m3) - b3 * (s2[i] - m2);
    num += r1 * r3;
    den1 += r1 * r1;
    den3 += r3 * r3;
  }
  if (den1 <= 0 || den3 <= 0) return {0.0, false};
  return {num / std::sqrt(den1 * den3), true};
}

double aggregate_effect(const std::vector<double>& s1,
                        const std::vector<double>& s2,
                        const std::vector<double>& s3,
                        const std::vector<int>& order, int nbins,
                        int min_count, std::vector<MarkovDiagBin>* bins) {
  const size_t n = order.size();
  double num = 0.0, den = 0.0;
  for (int b = 0; b < nbins; ++b) {
    size_t lo = n * b / nbins, hi = n * (b + 1) / nbins;
    std::vector<int> idx(order.begin() + lo, order.begin() + hi);
    BinStat st = bin_effect(s1, s2, s3, idx);
    bool used = st.ok && static_cast<int>(idx.size()) >= min_count;
    if (bins) {
      MarkovDiagBin mb;
      mb.count = static_cast<long>(idx.size());
      mb.s2_lo = idx.empty() ? 0.0 : s2[idx.front()];
      mb.s2_hi = idx.empty() ? 0.0 : s2[idx.back()];
      mb.effect = st.effect;
      mb.used = used;
      bins->push_back(mb);
    }
    if (used) {
      num += st.effect * static_cast<double>(idx.size());
      den += static_cast<double>(idx.size());
    }
  }
  return den > 0 ? num / den : 0.0;
}

}  // namespace

MarkovDiagReport markov_diagnostic(const PathEnsemble& ens,
                                   const std::vector<int>& sizes, double t1,
                                   double t2, double t3,
                                   const MarkovDiagOptions& opts) {
  if (!(t1 < t2 && t2 < t3))
    throw std::invalid_argument("need t1 < t2 < t3");
  const size_t i1 = time_index(ens, t1), i2 = time_index(ens, t2),
               i3 = time_index(ens, t3);
  if (sizes.empty()) throw std::invalid_argument("no minor sizes given");
  const int size = *std::max_element(sizes.begin(), sizes.end());
  if (size < 1 || size > ens.d)
    throw std::invalid_argument("minor size out of range");

  const int n = ens.n_paths;
  std::vector<double> s1(n), s2(n), s3(n);
  for (int p = 0; p < n; ++p) {
    s1[p] = path_statistic(ens, p, i1, size, opts.statistic);
    s2[p] = path_statistic(ens, p, i2, size, opts.statistic);
    s3[p] = path_statistic(ens, p, i3, size, opts.statistic);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return s2[a] < s2[b]; });

  MarkovDiagReport rep;
  rep.statistic = opts.statistic;
  rep.t1 = t1;
  rep.t2 = t2;
  rep.t3 = t3;
  rep.bootstrap = opts.bootstrap;
  rep.effect = aggregate_effect(s1, s2, s3, order, opts.bins,
                                opts.min_bin_count, &rep.bins);
  for (const auto& b : rep.bins)
    if (b.used) rep.used_samples += b.count;
  rep.note =
      "binned residual correlation; exploratory diagnostic, no pass/fail "
      "claim implied";

  // nonparametric bootstrap over paths
  std::vector<double> boot;
  boot.reserve(opts.bootstrap);
  uint64_t bs = opts.seed;
  for (int b = 0; b < opts.bootstrap; ++b) {
    std::vector<double> r1(n), r2(n), r3(n);
    for (int k = 0; k < n; ++k) {
      uint64_t z = splitmix64(bs);
      int pick = static_cast<int>(z % static_cast<uint64_t>(n));
      r1[k] = s1[pick];
      r2[k] = s2[pick];
      r3[k] = s3[pick];
    }
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(),
              [&](int a, int c) { return r2[a] < r2[c]; });
    boot.push_back(aggregate_effect(r1, r2, r3, ord, opts.bins,
                                    opts.min_bin_count, nullptr));
  }
  std::sort(boot.begin(), boot.end());
  if (!boot.empty()) {
    rep.ci_lo = boot[static_cast<size_t>(0.025 * (boot.size() - 1))];
    rep.ci_hi = boot[static_cast<size_t>(0.975 * (boot.size() - 1))];
  }
  return rep;
}

void write_ensemble_csv(const PathEnsemble& ens, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "path,time,i,j,re,im\n";
  char buf[128];
  for (int p = 0; p < ens.n_paths; ++p)
    for (size_t t = 0; t < ens.times.size(); ++t) {
      const std::complex<double>* m = ens.matrix(p, static_cast<int>(t));
      for (int i = 0; i < ens.d; ++i)
        for (int j = 0; j < ens.d; ++j) {
          const auto z = m[static_cast<size_t>(i) * ens.d + j];
          std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%d,%.17g,%.17g\n", p,
                        ens.times[t], i + 1, j + 1, z.real(), z.imag());
          out << buf;
        }
    }
}

namespace {
constexpr char kMagic[4] = {'H', 'B', 'M', 'E'};
}

void write_ensemble_binary(const PathEnsemble& ens, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write(kMagic, 4);
  uint32_t version = 1, d = ens.d, T = static_cast<uint32_t>(ens.times.size()),
           paths = ens.n_paths;
  uint32_t flags = (ens.traceless ? 1u : 0u) |
                   (ens.convention == HbmConvention::Components ? 2u : 0u);
  out.write(reinterpret_cast<const char*>(&version), 4);
  out.write(reinterpret_cast<const char*>(&d), 4);
  out.write(reinterpret_cast<const char*>(&T), 4);
  out.write(reinterpret_cast<const char*>(&paths), 4);
  out.write(reinterpret_cast<const char*>(&ens.seed), 8);
  out.write(reinterpret_cast<const char*>(&flags), 4);
  out.write(reinterpret_cast<const char*>(ens.times.data()),
            static_cast<std::streamsize>(8 * ens.times.size()));
  out.write(reinterpret_cast<const char*>(ens.data.data()),
            static_cast<std::streamsize>(16 * ens.data.size()));
}

PathEnsemble read_ensemble_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not an ensemble file: " + path);
  uint32_t version, d, T, paths, flags;
  uint64_t seed;
  in.read(reinterpret_cast<char*>(&version), 4);
  if (version != 1) throw std::runtime_error("unsupported ensemble version");
  in.read(reinterpret_cast<char*>(&d), 4);
  in.read(reinterpret_cast<char*>(&T), 4);
  in.read(reinterpret_cast<char*>(&paths), 4);
  in.read(reinterpret_cast<char*>(&seed), 8);
  in.read(reinterpret_cast<char*>(&flags), 4);
  PathEnsemble ens;
  ens.d = static_cast<int>(d);
  ens.times.resize(T);
  ens.n_paths = static_cast<int>(paths);
  ens.seed = seed;
  ens.traceless = flags & 1u;
  ens.convention =
      flags & 2u ? HbmConvention::Components : HbmConvention::TraceInner;
  in.read(reinterpret_cast<char*>(ens.times.data()), 8 * T);
  ens.data.resize(static_cast<size_t>(paths) * T * d * d);
  in.read(reinterpret_cast<char*>(ens.data.data()),
          static_cast<std::streamsize>(16 * ens.data.size()));
  if (!in) throw std::runtime_error("truncated ensemble file");
  return ens;
}

}  // namespace uea
