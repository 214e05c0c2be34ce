#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imkit/construct.hpp"
#include "imkit/containment.hpp"
#include "imkit/matrix.hpp"

namespace imkit {

/// A set of lines meeting every 1-entry.
struct LineCover {
  std::vector<LineRef> lines;
  int size = 0;
};

/// Increasing walks from the bottom-left corner to the top-right corner
/// whose union covers the support.
struct WalkCover {
  std::vector<std::vector<Cell>> walks;
};

enum class StructureCase { AvoidsD2, AvoidsAntiD2, CoverableBy3Lines, NotQAvoiding };

inline std::string to_string(StructureCase c) {
  switch (c) {
    case StructureCase::AvoidsD2: return "AvoidsD2";
    case StructureCase::AvoidsAntiD2: return "AvoidsAntiD2";
    case StructureCase::CoverableBy3Lines: return "CoverableBy3Lines";
    case StructureCase::NotQAvoiding: return "NotQAvoiding";
  }
  throw UsageError("unknown structure case");
}

/// Normal form of a Q-avoider that contains both diagonal 2-patterns and
/// needs at least three covering lines: a transform of the pattern matches
/// one of two support templates. `rows` holds r < r' < r'' for Type 1 and
/// r < r' for Type 2; `cols` holds c < c'.
struct NormalForm {
  Transform transform = Transform::Identity;
  int type = 1;
  std::vector<int> rows;
  std::vector<int> cols;
};

struct ClassificationReport {
  BinaryMatrix pattern;
  bool row_bounding = false;
  std::optional<std::pair<int, QOccurrence>> q_witness;
  std::vector<StructureCase> structure_cases;
  bool two_line_coverable = false;
  std::optional<NormalForm> normal_form;
  std::map<Cell, std::vector<std::string>> entry_certificates;
};

namespace detail {

// Kuhn's augmenting-path matching between rows and columns through
// 1-entries. match_of_col[j-1] = matched row or 0.
inline std::vector<int> max_matching(const BinaryMatrix& m) {
  std::vector<int> match_of_col(static_cast<std::size_t>(m.cols()), 0);
  std::vector<char> visited;
  auto try_augment = [&](auto&& self, int row) -> bool {
    for (int j = 1; j <= m.cols(); ++j) {
      if (!m.at(row, j) || visited[static_cast<std::size_t>(j - 1)]) continue;
      visited[static_cast<std::size_t>(j - 1)] = 1;
      int other = match_of_col[static_cast<std::size_t>(j - 1)];
      if (other == 0 || self(self, other)) {
        match_of_col[static_cast<std::size_t>(j - 1)] = row;
        return true;
      }
    }
    return false;
  };
  for (int i = 1; i <= m.rows(); ++i) {
    visited.assign(static_cast<std::size_t>(m.cols()), 0);
    try_augment(try_augment, i);
  }
  return match_of_col;
}

}  // namespace detail

/// The matched 1-entries of a maximum row-column matching: a largest set of
/// 1-entries pairwise in distinct rows and columns.
inline std::vector<Cell> max_independent_set(const BinaryMatrix& m) {
  std::vector<int> match_of_col = detail::max_matching(m);
  std::vector<Cell> cells;
  for (int j = 1; j <= m.cols(); ++j)
    if (int i = match_of_col[static_cast<std::size_t>(j - 1)]; i != 0) cells.push_back({i, j});
  std::sort(cells.begin(), cells.end());
  return cells;
}

inline int max_independent_ones(const BinaryMatrix& m) {
  return static_cast<int>(max_independent_set(m).size());
}

/// Minimum line cover via the matching: rows not reached by an alternating
/// search from unmatched rows, plus columns that are reached.
inline LineCover min_line_cover(const BinaryMatrix& m) {
  std::vector<int> match_of_col = detail::max_matching(m);
  std::vector<int> match_of_row(static_cast<std::size_t>(m.rows()), 0);
  for (int j = 1; j <= m.cols(); ++j)
    if (int i = match_of_col[static_cast<std::size_t>(j - 1)]; i != 0)
      match_of_row[static_cast<std::size_t>(i - 1)] = j;
  std::vector<char> row_seen(static_cast<std::size_t>(m.rows()), 0);
  std::vector<char> col_seen(static_cast<std::size_t>(m.cols()), 0);
  std::vector<int> stack;
  for (int i = 1; i <= m.rows(); ++i)
    if (match_of_row[static_cast<std::size_t>(i - 1)] == 0) {
      row_seen[static_cast<std::size_t>(i - 1)] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 1; j <= m.cols(); ++j) {
      if (!m.at(i, j) || col_seen[static_cast<std::size_t>(j - 1)]) continue;
      col_seen[static_cast<std::size_t>(j - 1)] = 1;
      int other = match_of_col[static_cast<std::size_t>(j - 1)];
      if (other != 0 && !row_seen[static_cast<std::size_t>(other - 1)]) {
        row_seen[static_cast<std::size_t>(other - 1)] = 1;
        stack.push_back(other);
      }
    }
  }
  LineCover cover;
  for (int i = 1; i <= m.rows(); ++i)
    if (match_of_row[static_cast<std::size_t>(i - 1)] != 0 &&
        !row_seen[static_cast<std::size_t>(i - 1)])
      cover.lines.push_back({Axis::Row, i});
  for (int j = 1; j <= m.cols(); ++j)
    if (col_seen[static_cast<std::size_t>(j - 1)]) cover.lines.push_back({Axis::Column, j});
  cover.size = static_cast<int>(cover.lines.size());
  return cover;
}

/// Length of the longest sequence of 1-entries strictly increasing in both
/// coordinates (a chain realizing a D_k occurrence).
inline int longest_increasing_chain(const BinaryMatrix& m) {
  std::vector<Cell> supp = m.support();  // already row-major sorted
  std::vector<int> len(supp.size(), 1);
  int best = 0;
  for (std::size_t a = 0; a < supp.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (supp[b].row < supp[a].row && supp[b].col < supp[a].col)
        len[a] = std::max(len[a], len[b] + 1);
    best = std::max(best, len[a]);
  }
  return best;
}

inline int longest_decreasing_chain(const BinaryMatrix& m) {
  return longest_increasing_chain(apply_transform(m, Transform::FlipHorizontal));
}

inline bool avoids_dk(const BinaryMatrix& m, int k) { return longest_increasing_chain(m) < k; }

inline bool avoids_anti_dk(const BinaryMatrix& m, int k) {
  return longest_decreasing_chain(m) < k;
}

namespace detail {

// Extends a sequence of cells with nonincreasing rows and nondecreasing
// columns to a full (m,1) -> (1,n) walk, moving column-first between
// consecutive anchors.
inline std::vector<Cell> complete_walk(int rows, int cols, const std::vector<Cell>& anchors) {
  std::vector<Cell> walk;
  Cell cur{rows, 1};
  walk.push_back(cur);
  auto advance_to = [&](Cell target) {
    while (cur.col < target.col) walk.push_back(cur = {cur.row, cur.col + 1});
    while (cur.row > target.row) walk.push_back(cur = {cur.row - 1, cur.col});
  };
  for (const Cell& a : anchors) advance_to(a);
  advance_to({1, cols});
  return walk;
}

}  // namespace detail

/// For a D_k-avoiding matrix: k-1 increasing walks covering the support,
/// one per antichain level of the chain order. Absent when D_k is present.
inline std::optional<WalkCover> walk_cover(const BinaryMatrix& m, int k) {
  if (k < 2) throw UsageError("walk cover needs k >= 2");
  std::vector<Cell> supp = m.support();
  std::vector<int> level(supp.size(), 1);
  int max_level = 0;
  for (std::size_t a = 0; a < supp.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (supp[b].row < supp[a].row && supp[b].col < supp[a].col)
        level[a] = std::max(level[a], level[b] + 1);
    max_level = std::max(max_level, level[a]);
  }
  if (max_level >= k) return std::nullopt;
  WalkCover cover;
  for (int lvl = 1; lvl <= k - 1; ++lvl) {
    std::vector<Cell> anchors;
    for (std::size_t a = 0; a < supp.size(); ++a)
      if (level[a] == lvl) anchors.push_back(supp[a]);
    // An antichain never has two cells with both coordinates strictly
    // increasing, so this order makes rows nonincreasing.
    std::sort(anchors.begin(), anchors.end(), [](Cell x, Cell y) {
      return x.col != y.col ? x.col < y.col : x.row > y.row;
    });
    cover.walks.push_back(detail::complete_walk(m.rows(), m.cols(), anchors));
  }
  return cover;
}

/// Lowest-numbered Q_i contained in the pattern together with its
/// lexicographically smallest occurrence.
inline std::optional<std::pair<int, QOccurrence>> q_witness(const BinaryMatrix& p) {
  for (int i = 1; i <= 4; ++i)
    if (auto occ = find_q_occurrence(p, i)) return std::make_pair(i, *occ);
  return std::nullopt;
}

inline bool is_row_bounding(const BinaryMatrix& p) {
  for (int i = 1; i <= 4; ++i)
    if (contains(p, pattern_q(i))) return false;
  return true;
}

/// The structure cases of a Q-avoiding pattern; {NotQAvoiding} otherwise.
inline std::vector<StructureCase> structure_classify(const BinaryMatrix& p) {
  if (!is_row_bounding(p)) return {StructureCase::NotQAvoiding};
  std::vector<StructureCase> cases;
  if (avoids_dk(p, 2)) cases.push_back(StructureCase::AvoidsD2);
  if (avoids_anti_dk(p, 2)) cases.push_back(StructureCase::AvoidsAntiD2);
  if (min_line_cover(p).size <= 3) cases.push_back(StructureCase::CoverableBy3Lines);
  return cases;
}

namespace detail {

inline bool fits_type1(const BinaryMatrix& p, int r, int rp, int rpp, int c, int cp) {
  for (const Cell& e : p.support()) {
    if (e.row == rp && e.col >= c && e.col <= cp) continue;
    if ((e.row == r || e.row == rpp) && (e.col == c || e.col == cp)) continue;
    return false;
  }
  return true;
}

inline bool fits_type2(const BinaryMatrix& p, int r, int rp, int c, int cp) {
  for (const Cell& e : p.support()) {
    if (e.row == r && e.col >= c && e.col <= cp) continue;
    if (e.row == rp && e.col <= c) continue;
    if (e.col == cp && e.row <= r) continue;
    if (e.row == rp && e.col == cp) continue;
    return false;
  }
  return true;
}

}  // namespace detail

/// Normal form of Q-avoiders containing D2 and its mirror and not coverable
/// by two lines: the first transform (in the fixed enum order) and the
/// lexicographically first parameter tuple whose template contains the
/// transformed support. Type 1 is tried before Type 2 for each transform.
inline std::optional<NormalForm> normal_form_2types(const BinaryMatrix& p) {
  if (!is_row_bounding(p)) throw UsageError("pattern contains one of Q1..Q4");
  if (avoids_dk(p, 2)) throw UsageError("pattern does not contain D2");
  if (avoids_anti_dk(p, 2)) throw UsageError("pattern does not contain the mirror of D2");
  if (min_line_cover(p).size < 3) throw UsageError("pattern is coverable by two lines");
  for (Transform t : kAllTransforms) {
    BinaryMatrix q = apply_transform(p, t);
    int k = q.rows(), l = q.cols();
    for (int r = 1; r <= k - 2; ++r)
      for (int rp = r + 1; rp <= k - 1; ++rp)
        for (int rpp = rp + 1; rpp <= k; ++rpp)
          for (int c = 1; c <= l - 1; ++c)
            for (int cp = c + 1; cp <= l; ++cp)
              if (detail::fits_type1(q, r, rp, rpp, c, cp))
                return NormalForm{t, 1, {r, rp, rpp}, {c, cp}};
    for (int r = 1; r <= k - 1; ++r)
      for (int rp = r + 1; rp <= k; ++rp)
        for (int c = 1; c <= l - 1; ++c)
          for (int cp = c + 1; cp <= l; ++cp)
            if (detail::fits_type2(q, r, rp, c, cp)) return NormalForm{t, 2, {r, rp}, {c, cp}};
  }
  return std::nullopt;
}

namespace detail {

// The certificate predicates below implement the structural hypotheses on
// the support shape around a 1-entry e = (i, j). Empty regions satisfy
// "all entries are in ..." conditions vacuously.

inline bool cert_leftmost_interval(const BinaryMatrix& p, Cell e) {
  for (const Cell& s : p.support())
    if (s.row != e.row && s.col < e.col) return false;
  return true;
}

inline bool cert_leftmost_column(const BinaryMatrix& p, Cell e) {
  for (const Cell& s : p.support())
    if (s.col < e.col) return false;
  return true;
}

// Row-interval criterion: all row-i 1-entries inside [c1, c2], interior
// columns empty apart from row i, and one of three conditions on the
// entries above and below row i.
inline bool cert_h(const BinaryMatrix& p, Cell e, int type) {
  int k = p.rows(), l = p.cols();
  auto supp = p.support();
  for (int c1 = 1; c1 <= e.col; ++c1)
    for (int c2 = std::max(e.col, c1 + 1); c2 <= l; ++c2) {
      bool ok = true;
      int above_row = 0, below_row = 0;
      bool above_single = true, below_single = true;
      bool above_left = true, below_right = true;
      for (const Cell& s : supp) {
        if (s.row == e.row) {
          if (s.col < c1 || s.col > c2) ok = false;
        } else if (s.col > c1 && s.col < c2) {
          ok = false;
        }
        if (!ok) break;
        if (s.row < e.row) {
          if (above_row == 0) above_row = s.row;
          if (s.row != above_row) above_single = false;
          if (s.col > c1) above_left = false;
        } else if (s.row > e.row) {
          if (below_row == 0) below_row = s.row;
          if (s.row != below_row) below_single = false;
          if (s.col < c2) below_right = false;
        }
      }
      (void)k;
      if (!ok) continue;
      bool above_ok = type == 3 ? above_left : above_single;
      bool below_ok = type == 1 ? below_single : below_right;
      if (above_ok && below_ok) return true;
    }
  return false;
}

// Column-interval criterion: rows r1..r2 have their only possible 1-entry
// in column j, with three variants for the rows above r1 and below r2.
inline bool cert_i(const BinaryMatrix& p, Cell e, int type) {
  auto supp = p.support();
  for (int r1 = 1; r1 <= e.row; ++r1)
    for (int r2 = e.row; r2 <= p.rows(); ++r2) {
      bool ok = true;
      bool above_ok = true, below_ok = true;
      for (const Cell& s : supp) {
        if (s.row >= r1 && s.row <= r2) {
          if (s.col != e.col) ok = false;
        } else if (s.row < r1) {
          bool narrow = s.col == e.col || s.row == r1 - 1;
          bool left = s.col <= e.col;
          if (!(type == 3 ? left : narrow)) above_ok = false;
        } else {
          bool narrow = s.col == e.col || s.row == r2 + 1;
          bool right = s.col >= e.col;
          if (!(type == 1 ? narrow : right)) below_ok = false;
        }
        if (!ok) break;
      }
      if (ok && above_ok && below_ok) return true;
    }
  return false;
}

// Hook-shaped criterion around e = (r1, c1) with a second row r2 > r1 and
// column c2 > c1.
inline bool cert_i2(const BinaryMatrix& p, Cell e, int type) {
  auto supp = p.support();
  for (int r2 = e.row + 1; r2 <= p.rows(); ++r2)
    for (int c2 = e.col + 1; c2 <= p.cols(); ++c2) {
      bool ok = true;
      for (const Cell& s : supp) {
        if (s.col == e.col && s.row >= e.row && s.row <= r2) continue;
        bool arm = s.col <= e.col || s.col == c2;
        if (type == 1) {
          if ((s.row == e.row || s.row == r2) && arm) continue;
        } else {
          if (s.row == r2 && arm) continue;
          if (s.col == c2 && s.row <= e.row) continue;
        }
        ok = false;
        break;
      }
      if (ok) return true;
    }
  return false;
}

}  // namespace detail

/// Names of the structural row-bounding criteria that apply to a 1-entry,
/// evaluated in every orientation that preserves the row axis (identity,
/// upside down, mirrored, and rotated 180 degrees).
inline std::vector<std::string> entry_certificates(const BinaryMatrix& p, Cell e) {
  if (e.row < 1 || e.row > p.rows() || e.col < 1 || e.col > p.cols() || !p.at(e))
    throw UsageError("certificates are defined for 1-entries only");
  constexpr Transform kOrientations[] = {Transform::Identity, Transform::FlipVertical,
                                         Transform::FlipHorizontal, Transform::Rotate180};
  std::vector<std::string> names;
  auto add = [&](const std::string& name) {
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  };
  for (Transform t : kOrientations) {
    BinaryMatrix q = apply_transform(p, t);
    Cell f = transform_cell(e, p.rows(), p.cols(), t);
    if (detail::cert_leftmost_interval(q, f)) add("LeftmostInterval");
    if (detail::cert_leftmost_column(q, f)) add("LeftmostColumn");
    for (int type = 1; type <= 3; ++type) {
      if (detail::cert_h(q, f, type)) add("H-Type" + std::to_string(type));
      if (detail::cert_i(q, f, type)) add("I-Type" + std::to_string(type));
    }
    for (int type = 1; type <= 2; ++type)
      if (detail::cert_i2(q, f, type)) add("I2-Type" + std::to_string(type));
  }
  return names;
}

inline ClassificationReport classify(const BinaryMatrix& p) {
  ClassificationReport report{p, is_row_bounding(p), {}, {}, false, {}, {}};
  if (!report.row_bounding) report.q_witness = q_witness(p);
  report.structure_cases = structure_classify(p);
  report.two_line_coverable = min_line_cover(p).size <= 2;
  if (report.row_bounding && !avoids_dk(p, 2) && !avoids_anti_dk(p, 2) &&
      !report.two_line_coverable)
    report.normal_form = normal_form_2types(p);
  for (const Cell& e : p.support()) report.entry_certificates[e] = entry_certificates(p, e);
  return report;
}

}  // namespace imkit
