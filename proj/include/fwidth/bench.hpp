#pragma once

#include <chrono>
#include <cstddef>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fwidth/error.hpp"
#include "fwidth/fw.hpp"
#include "fwidth/sequence.hpp"
#include "fwidth/text_io.hpp"

namespace fwidth {

struct BenchSequence {
  std::string label;
  Sequence sequence;
};

/// Labelled (block)^t sequences for t in [t_min, t_max], e.g. block "abc".
inline std::vector<BenchSequence> power_family(const std::string& block, std::size_t t_min, std::size_t t_max) {
  std::vector<BenchSequence> out;
  for (std::size_t t = t_min; t <= t_max; ++t) {
    std::string word;
    for (std::size_t i = 0; i < t; ++i) word += block;
    out.push_back({t == 1 ? "(" + block + ")" : "(" + block + ")^" + std::to_string(t), normalize(word)});
  }
  return out;
}

struct BenchConfig {
  std::vector<BenchSequence> sequences;
  std::size_t trials = 20;
  std::vector<Algorithm> algorithms{Algorithm::tree, Algorithm::pv};
  /// Each trial repeats the call until roughly this much time has passed
  /// and records the per-call average; 0 times one call per trial.
  double min_trial_seconds = 1e-3;
};

struct AlgorithmTiming {
  Algorithm algorithm = Algorithm::pv;
  std::vector<double> seconds;
  double mean_seconds = 0.0;
  std::size_t calls_per_trial = 1;
};

struct BenchRow {
  std::string label;
  Sequence sequence;
  std::size_t fw = 0;
  std::vector<AlgorithmTiming> timings;

  const AlgorithmTiming& timing(Algorithm a) const {
    for (const auto& t : timings) {
      if (t.algorithm == a) return t;
    }
    throw Error(Errc::invalid_argument, "algorithm not timed");
  }
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// Times every algorithm on every sequence with a monotonic clock. One
/// unrecorded warmup call per (sequence, algorithm) also establishes the
/// fw value, and all algorithms must agree before anything is recorded.
/// A second unrecorded call sizes the per-trial batch.
inline BenchReport run_bench(const BenchConfig& config) {
  if (config.trials < 1) throw Error(Errc::invalid_argument, "trials must be at least 1");
  if (config.algorithms.empty()) throw Error(Errc::invalid_argument, "no algorithms to time");
  using Clock = std::chrono::steady_clock;
  BenchReport report;
  for (const auto& item : config.sequences) {
    BenchRow row{item.label, item.sequence, 0, {}};
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      const std::size_t width = run_algorithm(item.sequence, config.algorithms[a]).s;
      if (a == 0) {
        row.fw = width;
      } else if (width != row.fw) {
        throw Error(Errc::crosscheck_mismatch, item.label + ": algorithms disagree (" + std::to_string(row.fw) +
                                                   " vs " + std::to_string(width) + ")");
      }
    }
    for (Algorithm algo : config.algorithms) {
      AlgorithmTiming timing{algo, {}, 0.0, 1};
      const auto probe = Clock::now();
      run_algorithm(item.sequence, algo);
      const double once = std::chrono::duration<double>(Clock::now() - probe).count();
      if (once > 0.0 && once < config.min_trial_seconds) {
        timing.calls_per_trial = static_cast<std::size_t>(config.min_trial_seconds / once) + 1;
      }
      timing.seconds.reserve(config.trials);
      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        bool stable = true;
        const auto start = Clock::now();
        for (std::size_t call = 0; call < timing.calls_per_trial; ++call) {
          stable = run_algorithm(item.sequence, algo).s == row.fw && stable;
        }
        const auto stop = Clock::now();
        if (!stable) throw Error(Errc::crosscheck_mismatch, item.label + ": result changed between trials");
        timing.seconds.push_back(std::chrono::duration<double>(stop - start).count() /
                                 static_cast<double>(timing.calls_per_trial));
      }
      timing.mean_seconds =
          std::accumulate(timing.seconds.begin(), timing.seconds.end(), 0.0) / static_cast<double>(config.trials);
      row.timings.push_back(std::move(timing));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Per-trial section, a blank line, then the per-algorithm means.
inline void write_bench_csv(const BenchReport& report, std::ostream& out) {
  out << "sequence,algorithm,trial,seconds\n";
  char buf[64];
  for (const auto& row : report.rows) {
    for (const auto& t : row.timings) {
      for (std::size_t i = 0; i < t.seconds.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9f", t.seconds[i]);
        out << row.label << ',' << to_string(t.algorithm) << ',' << i + 1 << ',' << buf << '\n';
      }
    }
  }
  out << "\nsequence,algorithm,mean_seconds\n";
  for (const auto& row : report.rows) {
    for (const auto& t : row.timings) {
      std::snprintf(buf, sizeof buf, "%.9f", t.mean_seconds);
      out << row.label << ',' << to_string(t.algorithm) << ',' << buf << '\n';
    }
  }
}

inline void write_bench_table(const BenchReport& report, std::ostream& out) {
  if (report.rows.empty()) {
    out << "(no sequences)\n";
    return;
  }
  char buf[128];
  out << "Sequence           fw";
  for (const auto& t : report.rows.front().timings) {
    std::snprintf(buf, sizeof buf, "  %14s", ("Mean (" + std::string(to_string(t.algorithm)) + ")").c_str());
    out << buf;
  }
  out << '\n';
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof buf, "%-16s %4zu", row.label.c_str(), row.fw);
    out << buf;
    for (const auto& t : row.timings) {
      std::snprintf(buf, sizeof buf, "  %14.6f", t.mean_seconds);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace fwidth
