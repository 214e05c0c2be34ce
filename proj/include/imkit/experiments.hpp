#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imkit/classify.hpp"
#include "imkit/construct.hpp"
#include "imkit/containment.hpp"
#include "imkit/criticality.hpp"
#include "imkit/json.hpp"
#include "imkit/parallel.hpp"

namespace imkit {

struct ExperimentResult {
  bool pass = true;
  ordered_json details = ordered_json::object();
};

/// For each Q_i and p in [2, max_p]: the unboundedness witness avoids its
/// pattern, its marker row survives saturation, and the saturated matrix is
/// a critical avoider with row complexity at least p.
inline ExperimentResult experiment_dichotomy(int max_p = 5) {
  ExperimentResult result;
  ordered_json checks = ordered_json::array();
  for (int qi = 1; qi <= 4; ++qi) {
    BinaryMatrix pattern = pattern_q(qi);
    for (int p = 2; p <= max_p; ++p) {
      OrientedWitness w = witness_any_q(pattern, p);
      bool avoids = !contains(w.matrix, pattern);
      if (w.matrix.rows() * w.matrix.cols() <= 36)
        avoids = avoids && !contains_oracle(w.matrix, pattern);
      BinaryMatrix sat = saturate(w.matrix, {pattern});
      bool row_intact = sat.row_bits(w.marked.index) == w.matrix.row_bits(w.marked.index);
      bool critical = is_critical(sat, {pattern});
      bool complexity_ok = row_complexity(sat) >= p;
      bool ok = avoids && row_intact && critical && complexity_ok;
      result.pass = result.pass && ok;
      checks.push_back({{"q", qi},
                        {"p", p},
                        {"avoids", avoids},
                        {"markerRowIntact", row_intact},
                        {"saturatedCritical", critical},
                        {"rowComplexity", row_complexity(sat)},
                        {"pass", ok}});
    }
  }
  result.details["checks"] = checks;
  return result;
}

/// Exhaustive scan of Av({Q1, Q2}) on size x size hosts: at most two 0-runs
/// per row are critical for entry (1,2) of Q1, and at most two per column
/// for entry (2,1).
inline ExperimentResult experiment_pro_unbinter(int size = 4) {
  if (size * size > 25) throw UsageError("scan size guard exceeded");
  std::vector<BinaryMatrix> f{pattern_q(1), pattern_q(2)};
  BinaryMatrix q1 = pattern_q(1);
  std::uint64_t total = std::uint64_t{1} << (size * size);
  std::uint64_t scanned = 0;
  int max_row = 0, max_col = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    BinaryMatrix m = BinaryMatrix::from_encoding(size, size, code);
    if (!avoids_all(m, f)) continue;
    ++scanned;
    max_row = std::max(max_row, relative_row_complexity(m, q1, {1, 2}));
    max_col = std::max(max_col, relative_column_complexity(m, q1, {2, 1}));
  }
  ExperimentResult result;
  result.pass = max_row <= 2 && max_col <= 2;
  result.details = {{"avoidersScanned", scanned},
                    {"maxCriticalRowRuns", max_row},
                    {"maxCriticalColumnRuns", max_col}};
  return result;
}

/// Witness side of the non-principal counterexample: the column witness
/// avoids both D4 and the 4x3 pattern and saturates to column complexity at
/// least p; additionally, over all critical members of the class at scan
/// size, each row has at most two 0-runs critical for entry (1,2).
inline ExperimentResult experiment_pro_counter(int max_p = 5, int scan_size = 4) {
  BinaryMatrix pattern = counterexample_pattern();
  std::vector<BinaryMatrix> f{diagonal(4), pattern};
  ExperimentResult result;
  ordered_json witnesses = ordered_json::array();
  for (int p = 2; p <= max_p; ++p) {
    BinaryMatrix w = counterexample_column_witness(p);
    bool avoids = avoids_all(w, f);
    BinaryMatrix sat = saturate(w, f);
    int cc = column_complexity(sat);
    bool ok = avoids && cc >= p;
    result.pass = result.pass && ok;
    witnesses.push_back(
        {{"p", p}, {"avoidsBoth", avoids}, {"saturatedColumnComplexity", cc}, {"pass", ok}});
  }
  int max_runs = 0;
  std::uint64_t critical_count = 0;
  for (const BinaryMatrix& m : enumerate_critical(f, scan_size, scan_size)) {
    ++critical_count;
    max_runs = std::max(max_runs, relative_row_complexity(m, pattern, {1, 2}));
  }
  result.pass = result.pass && max_runs <= 2;
  result.details = {{"witnesses", witnesses},
                    {"criticalMatricesScanned", critical_count},
                    {"maxCriticalRowRuns", max_runs}};
  return result;
}

/// Exhaustive normal-form scan: every pattern up to max_dim x max_dim that
/// avoids Q1..Q4, contains D2 and its mirror, and needs three covering
/// lines matches one of the two templates under some symmetry.
inline ExperimentResult experiment_lem_2types(int max_dim = 4) {
  std::uint64_t scanned = 0, eligible = 0, matched = 0;
  bool pass = true;
  for (int k = 1; k <= max_dim && pass; ++k)
    for (int l = 1; l <= max_dim && pass; ++l) {
      std::uint64_t total = std::uint64_t{1} << (k * l);
      for (std::uint64_t code = 0; code < total; ++code) {
        BinaryMatrix p = BinaryMatrix::from_encoding(k, l, code);
        ++scanned;
        if (!is_row_bounding(p)) continue;
        if (avoids_dk(p, 2) || avoids_anti_dk(p, 2)) continue;
        if (min_line_cover(p).size < 3) continue;
        ++eligible;
        if (normal_form_2types(p))
          ++matched;
        else
          pass = false;
      }
    }
  ExperimentResult result;
  result.pass = pass;
  result.details = {
      {"patternsScanned", scanned}, {"eligible", eligible}, {"matched", matched}};
  return result;
}

inline ExperimentResult run_experiment(const std::string& name, int param) {
  if (name == "dichotomy") return experiment_dichotomy(param > 0 ? param : 5);
  if (name == "pro-unbinter") return experiment_pro_unbinter(param > 0 ? param : 4);
  if (name == "pro-counter") return experiment_pro_counter(param > 0 ? param : 5);
  if (name == "lem-2types") return experiment_lem_2types(param > 0 ? param : 4);
  throw UsageError("unknown experiment: " + name);
}

}  // namespace imkit
