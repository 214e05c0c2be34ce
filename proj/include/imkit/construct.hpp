#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "imkit/containment.hpp"
#include "imkit/matrix.hpp"

namespace imkit {

/// An occurrence of some Q_i inside a pattern: three rows and three columns
/// whose selected cells are all 1-entries.
struct QOccurrence {
  std::array<int, 3> rows;  // r1 < r2 < r3
  std::array<int, 3> cols;  // c1 < c2 < c3
  friend bool operator==(const QOccurrence&, const QOccurrence&) = default;
};

/// Parameters of the unbounded-complexity witness built from a Q1
/// occurrence inside the forbidden pattern.
struct WitnessSpec {
  BinaryMatrix pattern;
  QOccurrence occ;
  int p = 1;
  int out_rows = 0;
  int out_cols = 0;
};

inline BinaryMatrix pattern_q(int index) {
  switch (index) {
    case 1: return BinaryMatrix::from_support(3, 3, {{1, 2}, {2, 1}, {3, 3}});
    case 2: return BinaryMatrix::from_support(3, 3, {{1, 2}, {2, 3}, {3, 1}});
    case 3: return BinaryMatrix::from_support(3, 3, {{1, 1}, {2, 3}, {3, 2}});
    case 4: return BinaryMatrix::from_support(3, 3, {{1, 3}, {2, 1}, {3, 2}});
  }
  throw UsageError("Q index must be 1..4");
}

inline BinaryMatrix diagonal(int k) {
  if (k < 1) throw UsageError("diagonal size must be positive");
  std::vector<Cell> supp;
  for (int i = 1; i <= k; ++i) supp.push_back({i, i});
  return BinaryMatrix::from_support(k, k, supp);
}

inline BinaryMatrix anti_diagonal(int k) {
  if (k < 1) throw UsageError("anti-diagonal size must be positive");
  std::vector<Cell> supp;
  for (int i = 1; i <= k; ++i) supp.push_back({i, k - i + 1});
  return BinaryMatrix::from_support(k, k, supp);
}

/// R_k: a single all-ones row of length k.
inline BinaryMatrix row_pattern(int k) {
  if (k < 1) throw UsageError("row pattern length must be positive");
  std::vector<Cell> supp;
  for (int j = 1; j <= k; ++j) supp.push_back({1, j});
  return BinaryMatrix::from_support(1, k, supp);
}

inline BinaryMatrix all_ones(int rows, int cols) {
  BinaryMatrix m(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) m = m.with(i, j, true);
  return m;
}

/// The 4x3 pattern whose avoidance class is row-bounded but not
/// column-bounded when combined with Av(D4).
inline BinaryMatrix counterexample_pattern() {
  return BinaryMatrix::from_support(4, 3, {{1, 2}, {2, 1}, {3, 2}, {4, 3}});
}

/// Resolves the CLI pattern grammar: "Q1".."Q4", "Dk:<k>", "aDk:<k>",
/// "Rk:<k>", "ones:<a>x<b>".
inline BinaryMatrix pattern_from_name(std::string_view name) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw UsageError("missing size parameter in pattern name");
    int v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw UsageError("invalid size parameter in pattern name");
      v = v * 10 + (ch - '0');
      if (v > 1000) throw UsageError("pattern size parameter too large");
    }
    if (v < 1) throw UsageError("pattern size parameter must be positive");
    return v;
  };
  if (name.size() == 2 && name[0] == 'Q' && name[1] >= '1' && name[1] <= '4')
    return pattern_q(name[1] - '0');
  if (name.starts_with("Dk:")) return diagonal(parse_int(name.substr(3)));
  if (name.starts_with("aDk:")) return anti_diagonal(parse_int(name.substr(4)));
  if (name.starts_with("Rk:")) return row_pattern(parse_int(name.substr(3)));
  if (name.starts_with("ones:")) {
    std::string_view dims = name.substr(5);
    std::size_t x = dims.find('x');
    if (x == std::string_view::npos) throw UsageError("ones pattern needs <a>x<b> dimensions");
    return all_ones(parse_int(dims.substr(0, x)), parse_int(dims.substr(x + 1)));
  }
  throw UsageError("unknown pattern name: " + std::string(name));
}

/// Lexicographically smallest (r1,r2,r3,c1,c2,c3) with P(r1,c2), P(r2,c1)
/// and P(r3,c3) all 1-entries; for the permutation pattern Q1 this triple
/// scan coincides with interval-minor containment.
inline std::optional<QOccurrence> find_q1_occurrence(const BinaryMatrix& p) {
  int k = p.rows(), l = p.cols();
  for (int r1 = 1; r1 <= k - 2; ++r1)
    for (int r2 = r1 + 1; r2 <= k - 1; ++r2)
      for (int r3 = r2 + 1; r3 <= k; ++r3)
        for (int c1 = 1; c1 <= l - 2; ++c1)
          for (int c2 = c1 + 1; c2 <= l - 1; ++c2)
            for (int c3 = c2 + 1; c3 <= l; ++c3)
              if (p.at(r1, c2) && p.at(r2, c1) && p.at(r3, c3))
                return QOccurrence{{r1, r2, r3}, {c1, c2, c3}};
  return std::nullopt;
}

/// Like find_q1_occurrence, for any of the four patterns: cell (r_a, c_b)
/// must be a 1-entry whenever Q_index has a 1 at (a, b).
inline std::optional<QOccurrence> find_q_occurrence(const BinaryMatrix& p, int index) {
  BinaryMatrix q = pattern_q(index);
  int k = p.rows(), l = p.cols();
  auto matches = [&](const std::array<int, 3>& r, const std::array<int, 3>& c) {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        if (q.at(a, b) &&
            !p.at(r[static_cast<std::size_t>(a - 1)], c[static_cast<std::size_t>(b - 1)]))
          return false;
    return true;
  };
  for (int r1 = 1; r1 <= k - 2; ++r1)
    for (int r2 = r1 + 1; r2 <= k - 1; ++r2)
      for (int r3 = r2 + 1; r3 <= k; ++r3)
        for (int c1 = 1; c1 <= l - 2; ++c1)
          for (int c2 = c1 + 1; c2 <= l - 1; ++c2)
            for (int c3 = c2 + 1; c3 <= l; ++c3)
              if (matches({r1, r2, r3}, {c1, c2, c3}))
                return QOccurrence{{r1, r2, r3}, {c1, c2, c3}};
  return std::nullopt;
}

inline WitnessSpec witness_spec(const BinaryMatrix& pattern, int p) {
  if (p < 1) throw UsageError("repetition count must be at least 1");
  auto occ = find_q1_occurrence(pattern);
  if (!occ) throw UsageError("pattern does not contain Q1");
  int k = pattern.rows(), l = pattern.cols();
  auto [r1, r2, r3] = occ->rows;
  auto [c1, c2, c3] = occ->cols;
  (void)r2;
  (void)c2;
  WitnessSpec spec{pattern, *occ, p, 0, 0};
  spec.out_rows = r1 + p * (r3 - r1) + (k - r3);
  spec.out_cols = (c1 - 1) + p * (c3 - c1 + 1) + (l - c3);
  return spec;
}

/// The unbounded-complexity witness for a Q1-containing pattern: an
/// all-ones frame, a marker row r1 with exactly p 0-runs, and a p x p grid
/// of interior blocks that are all-ones exactly on the rising diagonal
/// i + j = p - 1.
inline BinaryMatrix witness(const BinaryMatrix& pattern, int p) {
  WitnessSpec spec = witness_spec(pattern, p);
  auto [r1, r2, r3] = spec.occ.rows;
  auto [c1, c2, c3] = spec.occ.cols;
  (void)r2;
  int bh = r3 - r1, bw = c3 - c1 + 1;
  BinaryMatrix m = all_ones(spec.out_rows, spec.out_cols);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i + j == p - 1) continue;
      int top = r1 + 1 + i * bh, left = c1 + j * bw;
      for (int r = top; r < top + bh; ++r)
        for (int c = left; c < left + bw; ++c) m = m.with(r, c, false);
    }
  for (int i = 0; i < p; ++i) m = m.with(r1, c2 + i * bw, false);
  if (contains(m, pattern)) throw std::logic_error("witness construction contains its pattern");
  if (line_complexity(m, {Axis::Row, r1}) != p)
    throw std::logic_error("witness marker row has the wrong number of 0-runs");
  return m;
}

/// Witness for a pattern containing any Q_i, returned in the pattern's own
/// orientation together with the marker line and the transform that was
/// used to reduce to the Q1 case.
struct OrientedWitness {
  BinaryMatrix matrix;
  LineRef marked;
  Transform orientation;
};

inline OrientedWitness witness_any_q(const BinaryMatrix& pattern, int p) {
  // Each listed transform maps the corresponding Q_i onto Q1 and is an
  // involution, so it also maps the built witness back.
  constexpr Transform kOrientations[] = {Transform::Identity, Transform::FlipHorizontal,
                                         Transform::Rotate180, Transform::FlipVertical};
  for (Transform t : kOrientations) {
    BinaryMatrix oriented = apply_transform(pattern, t);
    auto occ = find_q1_occurrence(oriented);
    if (!occ) continue;
    BinaryMatrix w = witness(oriented, p);
    Cell marked_cell = transform_cell({occ->rows[0], 1}, w.rows(), w.cols(), t);
    return {apply_transform(w, t), {Axis::Row, marked_cell.row}, t};
  }
  throw UsageError("pattern avoids Q1, Q2, Q3 and Q4; no witness exists");
}

/// A canonical critical R_k-avoider: the rightmost min(k-1, n) columns full
/// of ones.
inline BinaryMatrix critical_rk(int rows, int cols, int k) {
  if (k < 1) throw UsageError("row pattern length must be positive");
  BinaryMatrix m(rows, cols);
  int full = std::min(k - 1, cols);
  for (int j = cols - full + 1; j <= cols; ++j)
    for (int i = 1; i <= rows; ++i) m = m.with(i, j, true);
  return m;
}

/// Matrix whose support is exactly one increasing walk. The walk starts at
/// `start` and takes the given steps, 'U' (up) or 'R' (right).
inline BinaryMatrix walk_matrix(int rows, int cols, Cell start, std::string_view steps) {
  BinaryMatrix m(rows, cols);
  if (start.row < 1 || start.row > rows || start.col < 1 || start.col > cols)
    throw UsageError("walk start out of bounds");
  Cell cur = start;
  m = m.with(cur.row, cur.col, true);
  for (char ch : steps) {
    if (ch == 'U')
      --cur.row;
    else if (ch == 'R')
      ++cur.col;
    else
      throw UsageError("walk steps must be 'U' or 'R'");
    if (cur.row < 1 || cur.col > cols) throw UsageError("walk leaves the matrix");
    m = m.with(cur.row, cur.col, true);
  }
  return m;
}

/// Witness for the non-principal counterexample class Av({D4, P}) with a
/// high-complexity column: the transposed unboundedness construction for
/// the transpose of the counterexample pattern.
inline BinaryMatrix counterexample_column_witness(int p) {
  BinaryMatrix pattern_t = transpose(counterexample_pattern());
  OrientedWitness w = witness_any_q(pattern_t, p);
  return transpose(w.matrix);
}

}  // namespace imkit
