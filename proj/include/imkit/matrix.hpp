#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imkit {

/// Thrown on contract violations: bad indices, malformed input, exceeded
/// guards. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 1-based cell coordinate; row 1 is the topmost row.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Axis { Row, Column };

/// A single row or column of a matrix.
struct LineRef {
  Axis axis = Axis::Row;
  int index = 1;
  friend bool operator==(const LineRef&, const LineRef&) = default;
};

/// A run of consecutive cells inside one line, [lo, hi] inclusive.
struct Interval {
  LineRef line;
  int lo = 1;
  int hi = 1;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// The dihedral symmetries of the grid. AntiTranspose is transpose
/// composed with a 180-degree rotation.
enum class Transform {
  Identity,
  Rotate90,  // clockwise
  Rotate180,
  Rotate270,
  FlipHorizontal,  // reverse column order
  FlipVertical,    // reverse row order (upside down)
  Transpose,
  AntiTranspose,
};

inline constexpr Transform kAllTransforms[] = {
    Transform::Identity,       Transform::Rotate90,
    Transform::Rotate180,      Transform::Rotate270,
    Transform::FlipHorizontal, Transform::FlipVertical,
    Transform::Transpose,      Transform::AntiTranspose,
};

/// Dense 0/1 matrix with 1-based indexing. Values are immutable after
/// construction; every operation below is a pure function, so matrices can
/// be shared freely between worker threads. Each row is stored as a bit
/// mask, which caps the column count at 64 — far beyond the desk scale
/// this library targets.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw UsageError("matrix dimensions must be positive");
    if (cols > 64) throw UsageError("column count exceeds the 64-column storage limit");
    bits_.assign(static_cast<std::size_t>(rows), 0);
  }

  static BinaryMatrix from_support(int rows, int cols, std::initializer_list<Cell> support) {
    return from_support(rows, cols, std::vector<Cell>(support));
  }

  static BinaryMatrix from_support(int rows, int cols, const std::vector<Cell>& support) {
    BinaryMatrix m(rows, cols);
    for (const Cell& e : support) {
      m.check_cell(e);
      m.bits_[static_cast<std::size_t>(e.row - 1)] |= bit(e.col);
    }
    return m;
  }

  /// Builds the matrix whose cell (i, j) is bit (i-1)*cols + (j-1) of `code`.
  static BinaryMatrix from_encoding(int rows, int cols, std::uint64_t code) {
    if (rows < 1 || cols < 1 || rows * cols > 64)
      throw UsageError("encoding only supports up to 64 cells");
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      m.bits_[static_cast<std::size_t>(i)] =
          (code >> (i * cols)) & mask_low(cols);
    return m;
  }

  /// Parses the text format: one line per row, '0'/'.' for 0 and '1'/'*'
  /// for 1; a blank line or end of input terminates the matrix.
  static BinaryMatrix parse(std::string_view text) {
    std::vector<std::uint64_t> rows;
    int cols = -1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty()) break;
      if (cols < 0) {
        cols = static_cast<int>(line.size());
        if (cols > 64) throw UsageError("matrix wider than 64 columns");
      } else if (static_cast<int>(line.size()) != cols) {
        throw UsageError("matrix rows have unequal lengths");
      }
      std::uint64_t mask = 0;
      for (int j = 0; j < cols; ++j) {
        char ch = line[static_cast<std::size_t>(j)];
        if (ch == '1' || ch == '*')
          mask |= bit(j + 1);
        else if (ch != '0' && ch != '.')
          throw UsageError(std::string("invalid matrix character '") + ch + "'");
      }
      rows.push_back(mask);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (rows.empty() || cols < 1) throw UsageError("empty matrix");
    BinaryMatrix m(static_cast<int>(rows.size()), cols);
    m.bits_ = std::move(rows);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int i, int j) const {
    check_cell({i, j});
    return (bits_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1;
  }

  bool at(Cell e) const { return at(e.row, e.col); }

  /// Row i as a bit mask (bit j-1 set iff cell (i,j) is a 1-entry).
  std::uint64_t row_bits(int i) const {
    if (i < 1 || i > rows_) throw UsageError("row index out of bounds");
    return bits_[static_cast<std::size_t>(i - 1)];
  }

  BinaryMatrix with(int i, int j, bool value) const {
    check_cell({i, j});
    BinaryMatrix m = *this;
    std::uint64_t& row = m.bits_[static_cast<std::size_t>(i - 1)];
    if (value)
      row |= bit(j);
    else
      row &= ~bit(j);
    return m;
  }

  /// The matrix with the value of a single entry toggled.
  BinaryMatrix flipped(Cell e) const { return with(e.row, e.col, !at(e)); }

  std::vector<Cell> support() const {
    std::vector<Cell> supp;
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j)
        if ((bits_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1) supp.push_back({i, j});
    return supp;
  }

  int ones_count() const {
    int total = 0;
    for (std::uint64_t row : bits_) total += std::popcount(row);
    return total;
  }

  bool empty_support() const {
    for (std::uint64_t row : bits_)
      if (row != 0) return false;
    return true;
  }

  std::uint64_t encoding() const {
    if (rows_ * cols_ > 64) throw UsageError("matrix too large to encode in 64 bits");
    std::uint64_t code = 0;
    for (int i = 0; i < rows_; ++i) code |= bits_[static_cast<std::size_t>(i)] << (i * cols_);
    return code;
  }

  std::string to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (static_cast<std::size_t>(cols_) + 1));
    for (int i = 1; i <= rows_; ++i) {
      for (int j = 1; j <= cols_; ++j)
        out += ((bits_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1) ? '1' : '0';
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  void check_cell(Cell e) const {
    if (e.row < 1 || e.row > rows_ || e.col < 1 || e.col > cols_)
      throw UsageError("cell index out of bounds");
  }

  static std::uint64_t bit(int col) { return std::uint64_t{1} << (col - 1); }
  static std::uint64_t mask_low(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  int rows_;
  int cols_;
  std::vector<std::uint64_t> bits_;
};

inline int line_length(const BinaryMatrix& m, LineRef line) {
  return line.axis == Axis::Row ? m.cols() : m.rows();
}

inline bool line_at(const BinaryMatrix& m, LineRef line, int pos) {
  return line.axis == Axis::Row ? m.at(line.index, pos) : m.at(pos, line.index);
}

/// True iff `a` and `b` have equal dimensions and every 1-entry of `b` is a
/// 1-entry of `a`. Dimension mismatch is simply false, not an error.
inline bool dominates(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 1; i <= a.rows(); ++i)
    if ((b.row_bits(i) & ~a.row_bits(i)) != 0) return false;
  return true;
}

/// Submatrix induced by sorted row and column index sets.
inline BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<int>& row_set,
                              const std::vector<int>& col_set) {
  if (row_set.empty() || col_set.empty()) throw UsageError("submatrix index sets must be nonempty");
  for (int r : row_set)
    if (r < 1 || r > m.rows()) throw UsageError("submatrix row index out of bounds");
  for (int c : col_set)
    if (c < 1 || c > m.cols()) throw UsageError("submatrix column index out of bounds");
  std::vector<Cell> supp;
  for (std::size_t i = 0; i < row_set.size(); ++i)
    for (std::size_t j = 0; j < col_set.size(); ++j)
      if (m.at(row_set[i], col_set[j]))
        supp.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
  return BinaryMatrix::from_support(static_cast<int>(row_set.size()),
                                    static_cast<int>(col_set.size()), supp);
}

/// Image of cell (i, j) of an m x n matrix under a transform.
inline Cell transform_cell(Cell e, int m, int n, Transform t) {
  switch (t) {
    case Transform::Identity: return e;
    case Transform::Rotate90: return {e.col, m + 1 - e.row};
    case Transform::Rotate180: return {m + 1 - e.row, n + 1 - e.col};
    case Transform::Rotate270: return {n + 1 - e.col, e.row};
    case Transform::FlipHorizontal: return {e.row, n + 1 - e.col};
    case Transform::FlipVertical: return {m + 1 - e.row, e.col};
    case Transform::Transpose: return {e.col, e.row};
    case Transform::AntiTranspose: return {n + 1 - e.col, m + 1 - e.row};
  }
  throw UsageError("unknown transform");
}

inline bool transform_swaps_axes(Transform t) {
  return t == Transform::Rotate90 || t == Transform::Rotate270 ||
         t == Transform::Transpose || t == Transform::AntiTranspose;
}

inline BinaryMatrix apply_transform(const BinaryMatrix& m, Transform t) {
  int out_rows = transform_swaps_axes(t) ? m.cols() : m.rows();
  int out_cols = transform_swaps_axes(t) ? m.rows() : m.cols();
  std::vector<Cell> supp;
  for (const Cell& e : m.support()) supp.push_back(transform_cell(e, m.rows(), m.cols(), t));
  return BinaryMatrix::from_support(out_rows, out_cols, supp);
}

inline Transform inverse(Transform t) {
  if (t == Transform::Rotate90) return Transform::Rotate270;
  if (t == Transform::Rotate270) return Transform::Rotate90;
  return t;  // all other transforms are involutions
}

/// Composition: apply `first`, then `second`. The table is derived from the
/// coordinate maps by probing the action on a generic 2x3 grid.
inline Transform compose(Transform first, Transform second) {
  static const auto table = [] {
    std::vector<std::vector<Transform>> tab(8, std::vector<Transform>(8));
    const int m = 2, n = 3;
    auto action = [&](Transform t, Transform u, Cell e) {
      Cell mid = transform_cell(e, m, n, t);
      int mm = transform_swaps_axes(t) ? n : m;
      int nn = transform_swaps_axes(t) ? m : n;
      return transform_cell(mid, mm, nn, u);
    };
    for (Transform t : kAllTransforms)
      for (Transform u : kAllTransforms) {
        bool both_swap = transform_swaps_axes(t) != transform_swaps_axes(u);
        for (Transform v : kAllTransforms) {
          if (transform_swaps_axes(v) != both_swap) continue;
          bool match = true;
          for (int i = 1; i <= m && match; ++i)
            for (int j = 1; j <= n && match; ++j)
              match = action(t, u, {i, j}) == transform_cell({i, j}, m, n, v);
          if (match) {
            tab[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] = v;
            break;
          }
        }
      }
    return tab;
  }();
  return table[static_cast<std::size_t>(first)][static_cast<std::size_t>(second)];
}

/// Merges line `index` with line `index + 1` on the given axis, keeping the
/// entrywise maximum of the two.
inline BinaryMatrix contract_line(const BinaryMatrix& m, Axis axis, int index) {
  int len = axis == Axis::Row ? m.rows() : m.cols();
  if (len < 2 || index < 1 || index >= len)
    throw UsageError("contraction needs two adjacent lines in bounds");
  std::vector<Cell> supp;
  for (const Cell& e : m.support()) {
    int pos = axis == Axis::Row ? e.row : e.col;
    int moved = pos > index ? pos - 1 : pos;
    supp.push_back(axis == Axis::Row ? Cell{moved, e.col} : Cell{e.row, moved});
  }
  int out_rows = axis == Axis::Row ? m.rows() - 1 : m.rows();
  int out_cols = axis == Axis::Column ? m.cols() - 1 : m.cols();
  return BinaryMatrix::from_support(out_rows, out_cols, supp);
}

/// Maximal runs of consecutive 0-entries in one line, sorted left to right
/// (top to bottom for columns). Their count is the line's complexity.
inline std::vector<Interval> zero_runs(const BinaryMatrix& m, LineRef line) {
  int len = line_length(m, line);
  if (line.index < 1 ||
      line.index > (line.axis == Axis::Row ? m.rows() : m.cols()))
    throw UsageError("line index out of bounds");
  std::vector<Interval> runs;
  int start = 0;
  for (int pos = 1; pos <= len + 1; ++pos) {
    bool one = pos > len || line_at(m, line, pos);
    if (!one && start == 0) start = pos;
    if (one && start != 0) {
      runs.push_back({line, start, pos - 1});
      start = 0;
    }
  }
  return runs;
}

inline int line_complexity(const BinaryMatrix& m, LineRef line) {
  return static_cast<int>(zero_runs(m, line).size());
}

inline int row_complexity(const BinaryMatrix& m) {
  int best = 0;
  for (int i = 1; i <= m.rows(); ++i)
    best = std::max(best, line_complexity(m, {Axis::Row, i}));
  return best;
}

inline int column_complexity(const BinaryMatrix& m) {
  int best = 0;
  for (int j = 1; j <= m.cols(); ++j)
    best = std::max(best, line_complexity(m, {Axis::Column, j}));
  return best;
}

}  // namespace imkit
