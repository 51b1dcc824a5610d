#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rscsim/decoder.hpp"

namespace rscsim {

struct ExperimentConfig {
  std::vector<int> distances;
  std::vector<double> rates;  // physical error rates p
  NoiseKind model = NoiseKind::CircuitLevel;
  double q = -1.0;    // phenomenological syndrome flip rate; < 0 means q = p
  int rounds = -1;    // < 0 means T = d
  long shots = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
  Basis memory = Basis::Z;
  Weighting weighting = Weighting::LogLikelihood;

  void validate() const;  // throws std::invalid_argument
};

struct LogicalErrorEstimate {
  NoiseKind model = NoiseKind::CircuitLevel;
  int d = 0;
  double p = 0.0;
  double q = 0.0;
  int rounds = 0;
  long shots = 0;
  long failures = 0;
  double p_l = 0.0;
  double ci_low = 0.0;   // Wilson 95%
  double ci_high = 0.0;
  double p_l_per_round = 0.0;  // 1 - (1 - p_l)^(1/T)
  std::uint64_t seed = 0;
  bool low_stats = false;  // fewer than 10 failures observed
};

/// Wilson score interval for a binomial proportion at 95% confidence.
void wilson_interval(long successes, long trials, double& low, double& high);

/// Runs `shots` memory shots at one (d, p) point, decoding each and counting
/// logical failures. Shot s draws from the stream keyed by
/// (seed, d, p, q, model, rounds, s), so results are identical at any thread
/// count.
LogicalErrorEstimate estimate_logical_error_rate(const ExperimentConfig& config, int d,
                                                 double p);

/// Full distances x rates cross product.
std::vector<LogicalErrorEstimate> threshold_scan(const ExperimentConfig& config);

/// CSV with the stable column schema
/// model,d,p,q,rounds,shots,failures,p_L,ci_low,ci_high,p_L_per_round,seed,low_stats.
void write_csv(std::ostream& out, const std::vector<LogicalErrorEstimate>& table);
std::string to_csv(const std::vector<LogicalErrorEstimate>& table);

struct ThresholdFit {
  double p_th = 0.0;
  double spread = 0.0;  // half-range of the pairwise crossings
  std::vector<double> pair_crossings;
};

struct NoCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Threshold from pairwise crossings of log-log interpolated p_L(p) curves,
/// averaged across distance pairs. Throws NoCrossingError when no pair of
/// curves crosses inside the scanned window.
ThresholdFit fit_threshold(const std::vector<LogicalErrorEstimate>& table);

/// Deterministic log-spaced grid in [lo, hi].
std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace rscsim
