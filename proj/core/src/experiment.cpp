#include "rscsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rscsim {

void ExperimentConfig::validate() const {
  if (distances.empty()) throw std::invalid_argument("no distances given");
  for (int d : distances) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("distances must be odd and positive");
  }
  if (rates.empty()) throw std::invalid_argument("no physical rates given");
  for (double p : rates) {
    if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("rates must lie in (0, 0.5)");
  }
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
}

void wilson_interval(long successes, long trials, double& low, double& high) {
  if (trials <= 0) {
    low = high = 0.0;
    return;
  }
  constexpr double z = 1.959963984540054;  // 97.5th percentile of the normal
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = phat + z2 / (2.0 * n);
  const double margin = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  low = std::max(0.0, (centre - margin) / denom);
  high = std::min(1.0, (centre + margin) / denom);
}

namespace {

NoiseModel make_model(const ExperimentConfig& config, double p) {
  switch (config.model) {
    case NoiseKind::CodeCapacity: return NoiseModel::code_capacity(p);
    case NoiseKind::Phenomenological: return NoiseModel::phenomenological(p, config.q);
    case NoiseKind::CircuitLevel: return NoiseModel::circuit_level(p);
  }
  throw std::logic_error("unknown noise kind");
}

std::uint64_t shot_key_word(const ExperimentConfig& config, int d, double p, int rounds) {
  std::uint64_t h = RngStream::mix64(static_cast<std::uint64_t>(d));
  h ^= RngStream::mix64(std::bit_cast<std::uint64_t>(p) + 0x1349u);
  h ^= RngStream::mix64(std::bit_cast<std::uint64_t>(
           config.model == NoiseKind::Phenomenological ? config.q : p) +
       0x517cu);
  h ^= RngStream::mix64(static_cast<std::uint64_t>(config.model) * 0x10001u +
                        static_cast<std::uint64_t>(rounds));
  return h;
}

}  // namespace

LogicalErrorEstimate estimate_logical_error_rate(const ExperimentConfig& config, int d,
                                                 double p) {
  config.validate();
  const RscLattice lattice = build_lattice(d);
  const RoundSchedule schedule = build_round_schedule(lattice);
  const std::vector<FaultLocation> locations = fault_locations(schedule);
  const NoiseModel model = make_model(config, p);
  const int rounds = config.model == NoiseKind::CodeCapacity ? 1
                     : (config.rounds > 0 ? config.rounds : d);
  const MatchingGraph graph =
      build_matching_graph(lattice, schedule, model, rounds, config.memory, config.weighting);
  const std::uint64_t key = shot_key_word(config, d, p, rounds);

  std::atomic<long> failures{0};
  auto worker = [&](int tid) {
    long local = 0;
    for (long shot = tid; shot < config.shots; shot += config.threads) {
      const SyndromeHistory hist =
          run_memory(lattice, schedule, locations, model, rounds, config.seed ^ key,
                     static_cast<std::uint64_t>(shot), config.memory);
      const bool parity = decode(graph, extract_detection_events(lattice, hist));
      if (score_shot(lattice, hist, parity)) ++local;
    }
    failures += local;
  };
  if (config.threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(config.threads);
    for (int t = 0; t < config.threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  LogicalErrorEstimate est;
  est.model = config.model;
  est.d = d;
  est.p = p;
  est.q = config.model == NoiseKind::Phenomenological ? (config.q < 0 ? p : config.q)
          : config.model == NoiseKind::CircuitLevel   ? p
                                                      : 0.0;
  est.rounds = rounds;
  est.shots = config.shots;
  est.failures = failures.load();
  est.p_l = static_cast<double>(est.failures) / static_cast<double>(est.shots);
  wilson_interval(est.failures, est.shots, est.ci_low, est.ci_high);
  est.p_l_per_round = 1.0 - std::pow(1.0 - est.p_l, 1.0 / static_cast<double>(rounds));
  est.seed = config.seed;
  est.low_stats = est.failures < 10;
  return est;
}

std::vector<LogicalErrorEstimate> threshold_scan(const ExperimentConfig& config) {
  config.validate();
  std::vector<LogicalErrorEstimate> table;
  for (int d : config.distances) {
    for (double p : config.rates) {
      table.push_back(estimate_logical_error_rate(config, d, p));
    }
  }
  return table;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<LogicalErrorEstimate>& table) {
  out << "model,d,p,q,rounds,shots,failures,p_L,ci_low,ci_high,p_L_per_round,seed,low_stats\n";
  for (const LogicalErrorEstimate& e : table) {
    out << to_string(e.model) << ',' << e.d << ',' << fmt_double(e.p) << ','
        << fmt_double(e.q) << ',' << e.rounds << ',' << e.shots << ',' << e.failures << ','
        << fmt_double(e.p_l) << ',' << fmt_double(e.ci_low) << ',' << fmt_double(e.ci_high)
        << ',' << fmt_double(e.p_l_per_round) << ',' << e.seed << ','
        << (e.low_stats ? 1 : 0) << '\n';
  }
}

std::string to_csv(const std::vector<LogicalErrorEstimate>& table) {
  std::ostringstream ss;
  write_csv(ss, table);
  return ss.str();
}

ThresholdFit fit_threshold(const std::vector<LogicalErrorEstimate>& table) {
  // Group by distance, order rates ascending.
  std::map<int, std::map<double, double>> curves;
  for (const LogicalErrorEstimate& e : table) curves[e.d][e.p] = e.p_l;
  if (curves.size() < 2) throw std::invalid_argument("need at least two distances to fit");

  ThresholdFit fit;
  std::vector<int> ds;
  for (const auto& [d, _] : curves) ds.push_back(d);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      const auto& lo = curves[ds[i]];
      const auto& hi = curves[ds[j]];
      // Common grid with positive estimates on both curves; log-log
      // interpolation needs them.
      std::vector<std::pair<double, double>> diff;  // (ln p, ln pL_lo - ln pL_hi)
      for (const auto& [p, pl_lo] : lo) {
        auto it = hi.find(p);
        if (it == hi.end()) continue;
        if (pl_lo <= 0.0 || it->second <= 0.0) continue;
        diff.push_back({std::log(p), std::log(pl_lo) - std::log(it->second)});
      }
      for (std::size_t k = 0; k + 1 < diff.size(); ++k) {
        const auto [x0, y0] = diff[k];
        const auto [x1, y1] = diff[k + 1];
        if (y0 == 0.0) {
          fit.pair_crossings.push_back(std::exp(x0));
          break;
        }
        if ((y0 < 0.0) != (y1 < 0.0)) {
          const double x = x0 + (x1 - x0) * (0.0 - y0) / (y1 - y0);
          fit.pair_crossings.push_back(std::exp(x));
          break;
        }
      }
    }
  }
  if (fit.pair_crossings.empty()) {
    throw NoCrossingError("no curve crossing inside the scanned rate window");
  }
  double sum = 0.0, mn = fit.pair_crossings.front(), mx = mn;
  for (double c : fit.pair_crossings) {
    sum += c;
    mn = std::min(mn, c);
    mx = std::max(mx, c);
  }
  fit.p_th = sum / static_cast<double>(fit.pair_crossings.size());
  fit.spread = (mx - mn) / 2.0;
  return fit;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2) {
    throw std::invalid_argument("log_spaced needs 0 < lo < hi and count >= 2");
  }
  std::vector<double> out;
  out.reserve(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < count; ++i) {
    out.push_back(std::exp(a + (b - a) * static_cast<double>(i) / (count - 1)));
  }
  return out;
}

}  // namespace rscsim
