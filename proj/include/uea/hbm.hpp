#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace uea {

// Entry normalization of the sampled Brownian motion. TraceInner follows the
// Tr(MN) scalar product (diagonal variance t, off-diagonal re/im variance
// t/2); Components scales entries by sqrt(2), matching the d=2 construction
// from independent standard component processes.
enum class HbmConvention { TraceInner, Components };

// Sampled Hermitian Brownian trajectories. Regenerating with the same
// parameters reproduces the data bit-identically; paths draw from
// independent streams keyed off the master seed.
struct PathEnsemble {
  int d = 0;
  std::vector<double> times;
  int n_paths = 0;
  uint64_t seed = 0;
  bool traceless = false;
  HbmConvention convention = HbmConvention::TraceInner;
  // entry (i,j) of path p at time index t:
  // data[((p * times.size() + t) * d + i) * d + j]
  std::vector<std::complex<double>> data;

  const std::complex<double>* matrix(int path, int t) const {
    return data.data() +
           (static_cast<size_t>(path) * times.size() + t) * d * d;
  }
};

PathEnsemble sample_hbm(int d, const std::vector<double>& times, int paths,
                        uint64_t seed, bool traceless = false,
                        HbmConvention convention = HbmConvention::TraceInner);

struct InterlacePair {
  int size_lo = 0, size_hi = 0;
  long checks = 0;
  long violations = 0;
  double worst = 0.0;  // largest violation beyond tolerance
};

struct SpectraReport {
  std::vector<int> sizes;
  std::vector<double> times;
  int n_paths = 0;
  double tolerance = 0.0;
  // eig[s][(path * n_times + t) * sizes[s] + m], descending within a minor
  std::vector<std::vector<double>> eig;
  std::vector<InterlacePair> interlacing;
  bool interlacing_ok() const {
    for (const auto& p : interlacing)
      if (p.violations > 0) return false;
    return true;
  }
};

// eigenvalues of the top-left principal minors plus interlacing verdicts
SpectraReport minor_spectra(const PathEnsemble& ens,
                            const std::vector<int>& sizes,
                            double tolerance = 1e-10);

struct MarkovDiagOptions {
  std::string statistic = "top";  // top | trace | gap
  int bins = 8;
  int bootstrap = 200;
  uint64_t seed = 12345;
  int min_bin_count = 8;
};

struct MarkovDiagBin {
  long count = 0;
  double s2_lo = 0.0, s2_hi = 0.0;
  double effect = 0.0;
  bool used = true;  // false when below the per-bin sample floor
};

// Exploratory diagnostic: within quantile bins of the statistic at t2,
// correlation of t1 and t3 residuals after removing the linear dependence
// on t2. Emits effect sizes with bootstrap intervals, no pass/fail claim.
struct MarkovDiagReport {
  std::string statistic;
  double t1 = 0, t2 = 0, t3 = 0;
  std::vector<MarkovDiagBin> bins;
  double effect = 0.0;
  double ci_lo = 0.0, ci_hi = 0.0;
  int bootstrap = 0;
  long used_samples = 0;
  std::string note;
};

MarkovDiagReport markov_diagnostic(const PathEnsemble& ens,
                                   const std::vector<int>& sizes, double t1,
                                   double t2, double t3,
                                   const MarkovDiagOptions& opts = {});

// ensemble export: CSV one row per path/time/entry, and a compact binary
// layout (documented in the README) that round-trips exactly
void write_ensemble_csv(const PathEnsemble& ens, const std::string& path);
void write_ensemble_binary(const PathEnsemble& ens, const std::string& path);
PathEnsemble read_ensemble_binary(const std::string& path);

}  // namespace uea
