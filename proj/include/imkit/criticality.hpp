#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "imkit/containment.hpp"
#include "imkit/matrix.hpp"
#include "imkit/parallel.hpp"

namespace imkit {

/// Order in which saturation visits 0-entries. An explicit list may name
/// any subset of the 0-entries (each at most once); the remaining ones are
/// visited in row-major order afterwards, so the result is always critical.
struct SaturationOrder {
  enum class Strategy { RowMajor, ColumnMajor, Explicit };
  Strategy strategy = Strategy::RowMajor;
  std::vector<Cell> entries;

  static SaturationOrder row_major() { return {Strategy::RowMajor, {}}; }
  static SaturationOrder column_major() { return {Strategy::ColumnMajor, {}}; }
  static SaturationOrder explicit_order(std::vector<Cell> entries) {
    return {Strategy::Explicit, std::move(entries)};
  }
};

/// Full criticality analysis of one matrix against a forbidden set.
struct CriticalityReport {
  BinaryMatrix matrix;
  bool is_critical = false;
  // 0-entry -> the (pattern index, pattern 1-entry) pairs it is critical for.
  std::map<Cell, std::vector<std::pair<int, Cell>>> per_zero_entry;
  // (pattern index, pattern 1-entry) -> max over rows of critical 0-runs.
  std::map<std::pair<int, Cell>, int> relative_row_complexity;
  int row_complexity = 0;
  int column_complexity = 0;
};

namespace detail {

inline void require_avoider(const BinaryMatrix& m, const std::vector<BinaryMatrix>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (contains(m, f[i]))
      throw UsageError("matrix contains forbidden pattern #" + std::to_string(i + 1));
}

inline std::vector<Cell> zero_entries_in_order(const BinaryMatrix& m,
                                               const SaturationOrder& order) {
  std::vector<Cell> cells;
  auto push_zeros_row_major = [&](auto skip) {
    for (int i = 1; i <= m.rows(); ++i)
      for (int j = 1; j <= m.cols(); ++j)
        if (!m.at(i, j) && !skip(Cell{i, j})) cells.push_back({i, j});
  };
  switch (order.strategy) {
    case SaturationOrder::Strategy::RowMajor:
      push_zeros_row_major([](Cell) { return false; });
      break;
    case SaturationOrder::Strategy::ColumnMajor:
      for (int j = 1; j <= m.cols(); ++j)
        for (int i = 1; i <= m.rows(); ++i)
          if (!m.at(i, j)) cells.push_back({i, j});
      break;
    case SaturationOrder::Strategy::Explicit: {
      std::vector<Cell> seen;
      for (const Cell& e : order.entries) {
        if (m.at(e)) throw UsageError("explicit saturation order lists a 1-entry");
        for (const Cell& s : seen)
          if (s == e) throw UsageError("explicit saturation order repeats an entry");
        seen.push_back(e);
        cells.push_back(e);
      }
      push_zeros_row_major([&](Cell c) {
        for (const Cell& s : seen)
          if (s == c) return true;
        return false;
      });
      break;
    }
  }
  return cells;
}

}  // namespace detail

/// True iff flipping any single 0-entry of `m` creates a copy of some
/// forbidden pattern. Defined only for members of the avoidance class.
inline bool is_critical(const BinaryMatrix& m, const std::vector<BinaryMatrix>& f) {
  detail::require_avoider(m, f);
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) {
      if (m.at(i, j)) continue;
      if (avoids_all(m.with(i, j, true), f)) return false;
    }
  return true;
}

/// Greedy saturation: flips 0-entries in the given order whenever the
/// result still avoids every forbidden pattern. One pass suffices because
/// containment is monotone under adding 1-entries, so a rejected flip stays
/// rejected and the result is critical.
inline BinaryMatrix saturate(const BinaryMatrix& m, const std::vector<BinaryMatrix>& f,
                             const SaturationOrder& order = SaturationOrder::row_major()) {
  detail::require_avoider(m, f);
  BinaryMatrix cur = m;
  for (const Cell& e : detail::zero_entries_in_order(m, order)) {
    BinaryMatrix next = cur.with(e.row, e.col, true);
    if (avoids_all(next, f)) cur = std::move(next);
  }
  return cur;
}

/// All pairs (pattern index, pattern 1-entry e) such that some embedding of
/// the pattern into the flipped matrix maps e to `f`.
inline std::vector<std::pair<int, Cell>> critical_entries_for(
    const BinaryMatrix& m, const std::vector<BinaryMatrix>& forbidden, Cell f) {
  if (m.at(f)) throw UsageError("critical-entry query needs a 0-entry");
  detail::require_avoider(m, forbidden);
  BinaryMatrix flipped = m.flipped(f);
  std::vector<std::pair<int, Cell>> result;
  for (std::size_t idx = 0; idx < forbidden.size(); ++idx)
    for (const Cell& e : forbidden[idx].support())
      if (contains_pinned(flipped, forbidden[idx], e, f))
        result.push_back({static_cast<int>(idx), e});
  return result;
}

/// Max over rows of the number of 0-runs containing at least one 0-entry
/// critical for `e` (with respect to a single pattern).
inline int relative_row_complexity(const BinaryMatrix& m, const BinaryMatrix& pattern, Cell e) {
  if (e.row < 1 || e.row > pattern.rows() || e.col < 1 || e.col > pattern.cols() ||
      !pattern.at(e))
    throw UsageError("relative complexity needs a 1-entry of the pattern");
  if (contains(m, pattern)) throw UsageError("matrix contains the pattern");
  int best = 0;
  for (int i = 1; i <= m.rows(); ++i) {
    int critical_runs = 0;
    for (const Interval& run : zero_runs(m, {Axis::Row, i})) {
      for (int j = run.lo; j <= run.hi; ++j) {
        Cell f{i, j};
        if (contains_pinned(m.flipped(f), pattern, e, f)) {
          ++critical_runs;
          break;
        }
      }
    }
    best = std::max(best, critical_runs);
  }
  return best;
}

inline int relative_column_complexity(const BinaryMatrix& m, const BinaryMatrix& pattern,
                                      Cell e) {
  return relative_row_complexity(transpose(m), transpose(pattern), {e.col, e.row});
}

namespace detail {

/// avoid[code] = true iff the matrix with that bit encoding avoids every
/// forbidden pattern. Shared by the enumeration entry points; sharded
/// across workers.
inline std::vector<char> avoidance_table(const std::vector<BinaryMatrix>& f, int rows,
                                         int cols) {
  std::uint64_t total = std::uint64_t{1} << (rows * cols);
  std::vector<char> avoid(total);
  parallel_shards(total, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t code = begin; code < end; ++code)
      avoid[code] = avoids_all(BinaryMatrix::from_encoding(rows, cols, code), f);
  });
  return avoid;
}

}  // namespace detail

/// Exactly the critical avoiders of the forbidden set among all rows x cols
/// matrices, in ascending order of bit encoding.
inline std::vector<BinaryMatrix> enumerate_critical(const std::vector<BinaryMatrix>& f,
                                                    int rows, int cols, int guard_cells = 25) {
  if (rows < 1 || cols < 1) throw UsageError("matrix dimensions must be positive");
  if (rows * cols > guard_cells)
    throw UsageError("enumeration size guard exceeded; use sampling via saturate instead");
  std::vector<char> avoid = detail::avoidance_table(f, rows, cols);
  std::vector<BinaryMatrix> result;
  std::uint64_t total = std::uint64_t{1} << (rows * cols);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!avoid[code]) continue;
    bool critical = true;
    for (int b = 0; b < rows * cols && critical; ++b)
      if (!((code >> b) & 1) && avoid[code | (std::uint64_t{1} << b)]) critical = false;
    if (critical) result.push_back(BinaryMatrix::from_encoding(rows, cols, code));
  }
  return result;
}

/// Maximum row complexity over all critical avoiders at the given size,
/// with the first attaining matrix in enumeration order.
inline std::pair<int, BinaryMatrix> class_row_complexity(const std::vector<BinaryMatrix>& f,
                                                         int rows, int cols,
                                                         int guard_cells = 25) {
  std::vector<BinaryMatrix> critical = enumerate_critical(f, rows, cols, guard_cells);
  if (critical.empty())
    throw UsageError("no critical avoiders exist; the class itself is empty at this size");
  int best = -1;
  const BinaryMatrix* witness = nullptr;
  for (const BinaryMatrix& m : critical) {
    int rc = row_complexity(m);
    if (rc > best) {
      best = rc;
      witness = &m;
    }
  }
  return {best, *witness};
}

inline CriticalityReport analyze_criticality(const BinaryMatrix& m,
                                             const std::vector<BinaryMatrix>& f) {
  detail::require_avoider(m, f);
  CriticalityReport report{m, true, {}, {}, row_complexity(m), column_complexity(m)};
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) {
      if (m.at(i, j)) continue;
      auto entries = critical_entries_for(m, f, {i, j});
      if (entries.empty()) report.is_critical = false;
      report.per_zero_entry[{i, j}] = std::move(entries);
    }
  for (std::size_t idx = 0; idx < f.size(); ++idx)
    for (const Cell& e : f[idx].support())
      report.relative_row_complexity[{static_cast<int>(idx), e}] =
          relative_row_complexity(m, f[idx], e);
  return report;
}

}  // namespace imkit
