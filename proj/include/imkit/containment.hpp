#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "imkit/matrix.hpp"

namespace imkit {

/// Boundary sequences witnessing interval-minor containment: blocks are
/// (row_bounds[i-1], row_bounds[i]] x (col_bounds[j-1], col_bounds[j]].
/// Canonical witnesses start at 0 and end at the host dimension.
struct Partition {
  std::vector<int> row_bounds;
  std::vector<int> col_bounds;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Assignment of pattern entries to host entries. A full embedding maps
/// every entry of the pattern; a partial embedding maps a nonempty set of
/// entries that includes the whole support.
struct EmbeddingMap {
  enum class Kind { Full, Partial };
  Kind kind = Kind::Full;
  std::map<Cell, Cell> mapping;
};

namespace detail {

// Enumerates strictly increasing vectors of length `count` with values in
// [1, hi], in lexicographic order. Stops early when fn returns true and
// reports whether that happened.
template <class Fn>
bool for_each_increasing(int count, int hi, Fn&& fn) {
  if (count == 0) {
    std::vector<int> empty;
    return fn(empty);
  }
  if (count > hi) return false;
  std::vector<int> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (fn(v)) return true;
    int i = count - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == hi - (count - 1 - i)) --i;
    if (i < 0) return false;
    ++v[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < count; ++j)
      v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline double boundary_choice_count(int host_len, int pattern_len) {
  // C(host_len - 1, pattern_len - 1), in floating point; only used to pick
  // the cheaper enumeration axis.
  double r = 1.0;
  for (int i = 1; i <= pattern_len - 1; ++i)
    r = r * static_cast<double>(host_len - i) / static_cast<double>(i);
  return r;
}

inline std::uint64_t col_block_mask(int lo_exclusive, int hi_inclusive) {
  std::uint64_t hi = hi_inclusive >= 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << hi_inclusive) - 1;
  std::uint64_t lo = (std::uint64_t{1} << lo_exclusive) - 1;
  return hi & ~lo;
}

// Given full column bounds (c_0 = 0 < ... < c_l = n), finds row bounds by
// earliest closure: block i is closed at the first host row where every
// 1-entry (i, j) of the pattern already has a 1 in column block j, leaving
// room for the remaining blocks. Closing a block earlier never removes a
// later option, so this finds row bounds whenever any exist.
inline std::optional<std::vector<int>> greedy_row_fit(const BinaryMatrix& host,
                                                      const BinaryMatrix& pattern,
                                                      const std::vector<int>& col_bounds) {
  int k = pattern.rows(), l = pattern.cols(), m = host.rows();
  std::vector<std::uint64_t> block_masks(static_cast<std::size_t>(l));
  for (int j = 1; j <= l; ++j)
    block_masks[static_cast<std::size_t>(j - 1)] =
        col_block_mask(col_bounds[static_cast<std::size_t>(j - 1)],
                       col_bounds[static_cast<std::size_t>(j)]);
  std::vector<int> bounds;
  bounds.reserve(static_cast<std::size_t>(k) + 1);
  bounds.push_back(0);
  int cur = 0;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t need = 0;  // column blocks still missing a 1 for row block i
    std::uint64_t pat_row = pattern.row_bits(i);
    for (int j = 1; j <= l; ++j)
      if ((pat_row >> (j - 1)) & 1) need |= std::uint64_t{1} << (j - 1);
    int limit = m - (k - i);
    int r = cur;
    std::uint64_t seen = 0;
    while (need != 0 || r == cur) {
      if (r >= limit) {
        if (need != 0) return std::nullopt;
        break;
      }
      ++r;
      std::uint64_t host_row = host.row_bits(r);
      std::uint64_t still = need;
      while (still) {
        int j = std::countr_zero(still);
        still &= still - 1;
        if (host_row & block_masks[static_cast<std::size_t>(j)])
          need &= ~(std::uint64_t{1} << j);
      }
      (void)seen;
    }
    if (r == cur) r = cur + 1;  // empty pattern row: close immediately
    cur = r;
    bounds.push_back(cur);
  }
  bounds.back() = m;  // extend the last block; extra rows never hurt
  return bounds;
}

// Decides containment with column boundaries enumerated and rows fitted
// greedily.
inline bool contains_enumerating_columns(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  int l = pattern.cols(), n = host.cols();
  bool found = for_each_increasing(l - 1, n - 1, [&](const std::vector<int>& inner) {
    std::vector<int> col_bounds;
    col_bounds.reserve(static_cast<std::size_t>(l) + 1);
    col_bounds.push_back(0);
    col_bounds.insert(col_bounds.end(), inner.begin(), inner.end());
    col_bounds.push_back(n);
    return greedy_row_fit(host, pattern, col_bounds).has_value();
  });
  return found;
}

}  // namespace detail

inline BinaryMatrix transpose(const BinaryMatrix& m) {
  return apply_transform(m, Transform::Transpose);
}

/// Decides whether `pattern` is an interval minor of `host`. Enumerates
/// boundary vectors on the axis with the smaller combination count and fits
/// the other axis greedily.
inline bool contains(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  int k = pattern.rows(), l = pattern.cols(), m = host.rows(), n = host.cols();
  if (k > m || l > n) return false;
  if (pattern.empty_support()) return true;
  if (detail::boundary_choice_count(m, k) < detail::boundary_choice_count(n, l))
    return detail::contains_enumerating_columns(transpose(host), transpose(pattern));
  return detail::contains_enumerating_columns(host, pattern);
}

/// Checks a partition witness: bounds must be well formed, and the block of
/// every 1-entry of the pattern must contain a 1-entry of the host.
inline bool verify_partition(const BinaryMatrix& host, const BinaryMatrix& pattern,
                             const Partition& part) {
  int k = pattern.rows(), l = pattern.cols(), m = host.rows(), n = host.cols();
  auto well_formed = [](const std::vector<int>& b, int count, int max) {
    if (static_cast<int>(b.size()) != count + 1) return false;
    if (b.front() < 0 || b.back() > max) return false;
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i] <= b[i - 1]) return false;
    return true;
  };
  if (!well_formed(part.row_bounds, k, m) || !well_formed(part.col_bounds, l, n))
    throw UsageError("malformed partition bounds");
  for (const Cell& e : pattern.support()) {
    std::uint64_t mask = detail::col_block_mask(
        part.col_bounds[static_cast<std::size_t>(e.col - 1)],
        part.col_bounds[static_cast<std::size_t>(e.col)]);
    bool hit = false;
    for (int r = part.row_bounds[static_cast<std::size_t>(e.row - 1)] + 1;
         r <= part.row_bounds[static_cast<std::size_t>(e.row)] && !hit; ++r)
      hit = (host.row_bits(r) & mask) != 0;
    if (!hit) return false;
  }
  return true;
}

/// Canonical partition witness: the lexicographically smallest
/// (row_bounds, col_bounds) pair among canonical witnesses, or nothing when
/// the pattern is not contained.
inline std::optional<Partition> find_partition(const BinaryMatrix& host,
                                               const BinaryMatrix& pattern) {
  int k = pattern.rows(), l = pattern.cols(), m = host.rows(), n = host.cols();
  if (k > m || l > n) return std::nullopt;
  // Transposed roles: enumerate row bounds lexicographically, complete the
  // columns by earliest closure (which is itself lexicographically minimal).
  BinaryMatrix host_t = transpose(host);
  BinaryMatrix pattern_t = transpose(pattern);
  std::optional<Partition> result;
  detail::for_each_increasing(k - 1, m - 1, [&](const std::vector<int>& inner) {
    std::vector<int> row_bounds;
    row_bounds.push_back(0);
    row_bounds.insert(row_bounds.end(), inner.begin(), inner.end());
    row_bounds.push_back(m);
    auto cols = detail::greedy_row_fit(host_t, pattern_t, row_bounds);
    if (!cols) return false;
    result = Partition{row_bounds, *cols};
    return true;
  });
  return result;
}

/// Checks a full embedding: every pattern entry mapped, 1-entries land on
/// 1-entries, and strict row/column order is preserved.
inline bool verify_embedding(const BinaryMatrix& host, const BinaryMatrix& pattern,
                             const EmbeddingMap& e) {
  if (e.kind != EmbeddingMap::Kind::Full) throw UsageError("expected a full embedding");
  int k = pattern.rows(), l = pattern.cols();
  if (static_cast<int>(e.mapping.size()) != k * l)
    throw UsageError("full embedding must map every pattern entry");
  for (const auto& [from, to] : e.mapping) {
    if (from.row < 1 || from.row > k || from.col < 1 || from.col > l)
      throw UsageError("embedding domain entry out of pattern bounds");
    if (to.row < 1 || to.row > host.rows() || to.col < 1 || to.col > host.cols()) return false;
    if (pattern.at(from) && !host.at(to)) return false;
  }
  for (const auto& [a, ia] : e.mapping)
    for (const auto& [b, ib] : e.mapping) {
      if (a.row < b.row && ia.row >= ib.row) return false;
      if (a.col < b.col && ia.col >= ib.col) return false;
    }
  return true;
}

/// Checks a partial embedding: domain covers the support, 1-entries land on
/// 1-entries, margins to all four edges are preserved, and spacing between
/// mapped entries does not shrink.
inline bool verify_partial_embedding(const BinaryMatrix& host, const BinaryMatrix& pattern,
                                     const EmbeddingMap& e) {
  if (e.kind != EmbeddingMap::Kind::Partial) throw UsageError("expected a partial embedding");
  if (e.mapping.empty()) throw UsageError("partial embedding domain must be nonempty");
  int k = pattern.rows(), l = pattern.cols(), m = host.rows(), n = host.cols();
  for (const Cell& s : pattern.support())
    if (!e.mapping.contains(s)) return false;
  for (const auto& [from, to] : e.mapping) {
    if (from.row < 1 || from.row > k || from.col < 1 || from.col > l)
      throw UsageError("embedding domain entry out of pattern bounds");
    if (to.row < 1 || to.row > m || to.col < 1 || to.col > n) return false;
    if (pattern.at(from) && !host.at(to)) return false;
    if (from.row > to.row || from.col > to.col) return false;
    if (k - from.row > m - to.row || l - from.col > n - to.col) return false;
  }
  for (const auto& [a, ia] : e.mapping)
    for (const auto& [b, ib] : e.mapping) {
      if (a.row < b.row && b.row - a.row > ib.row - ia.row) return false;
      if (a.col < b.col && b.col - a.col > ib.col - ia.col) return false;
    }
  return true;
}

/// Builds a full embedding from a verified partition by picking one
/// representative host cell per block: a 1-entry for pattern 1-entries
/// (with `pin` honored when given), the top-left cell otherwise.
inline EmbeddingMap embedding_from_partition(
    const BinaryMatrix& host, const BinaryMatrix& pattern, const Partition& part,
    std::optional<std::pair<Cell, Cell>> pin = std::nullopt) {
  EmbeddingMap e;
  e.kind = EmbeddingMap::Kind::Full;
  for (int i = 1; i <= pattern.rows(); ++i)
    for (int j = 1; j <= pattern.cols(); ++j) {
      int r_lo = part.row_bounds[static_cast<std::size_t>(i - 1)] + 1;
      int r_hi = part.row_bounds[static_cast<std::size_t>(i)];
      int c_lo = part.col_bounds[static_cast<std::size_t>(j - 1)] + 1;
      int c_hi = part.col_bounds[static_cast<std::size_t>(j)];
      Cell target{r_lo, c_lo};
      if (pin && pin->first == Cell{i, j}) {
        target = pin->second;
      } else if (pattern.at(i, j)) {
        bool found = false;
        for (int r = r_lo; r <= r_hi && !found; ++r)
          for (int c = c_lo; c <= c_hi && !found; ++c)
            if (host.at(r, c)) {
              target = {r, c};
              found = true;
            }
        if (!found) throw UsageError("partition does not contain the pattern");
      }
      e.mapping[{i, j}] = target;
    }
  return e;
}

/// Ground-truth containment decision by exhaustive search over all
/// canonical partitions. Deliberately naive and independent of the greedy
/// path above; guarded to small hosts.
inline bool contains_oracle(const BinaryMatrix& host, const BinaryMatrix& pattern,
                            int guard_cells = 36) {
  int k = pattern.rows(), l = pattern.cols(), m = host.rows(), n = host.cols();
  if (m * n > guard_cells) throw UsageError("host exceeds the oracle size guard");
  if (k > m || l > n) return false;
  auto supp = pattern.support();
  return detail::for_each_increasing(k - 1, m - 1, [&](const std::vector<int>& ri) {
    std::vector<int> rb{0};
    rb.insert(rb.end(), ri.begin(), ri.end());
    rb.push_back(m);
    return detail::for_each_increasing(l - 1, n - 1, [&](const std::vector<int>& ci) {
      std::vector<int> cb{0};
      cb.insert(cb.end(), ci.begin(), ci.end());
      cb.push_back(n);
      for (const Cell& e : supp) {
        bool hit = false;
        for (int r = rb[static_cast<std::size_t>(e.row - 1)] + 1;
             r <= rb[static_cast<std::size_t>(e.row)] && !hit; ++r)
          for (int c = cb[static_cast<std::size_t>(e.col - 1)] + 1;
               c <= cb[static_cast<std::size_t>(e.col)] && !hit; ++c)
            hit = host.at(r, c);
        if (!hit) return false;
      }
      return true;
    });
  });
}

/// Canonical partition witness constrained so that the host entry `f` lies
/// inside the block of pattern entry `e`.
inline std::optional<Partition> find_pinned_partition(const BinaryMatrix& host,
                                                      const BinaryMatrix& pattern, Cell e,
                                                      Cell f) {
  int k = pattern.rows(), l = pattern.cols(), m = host.rows(), n = host.cols();
  if (e.row < 1 || e.row > k || e.col < 1 || e.col > l)
    throw UsageError("pinned pattern entry out of bounds");
  if (f.row < 1 || f.row > m || f.col < 1 || f.col > n)
    throw UsageError("pinned host entry out of bounds");
  if (k > m || l > n) return std::nullopt;
  std::optional<Partition> result;
  detail::for_each_increasing(k - 1, m - 1, [&](const std::vector<int>& ri) {
    std::vector<int> rb{0};
    rb.insert(rb.end(), ri.begin(), ri.end());
    rb.push_back(m);
    if (!(rb[static_cast<std::size_t>(e.row - 1)] < f.row &&
          f.row <= rb[static_cast<std::size_t>(e.row)]))
      return false;
    return detail::for_each_increasing(l - 1, n - 1, [&](const std::vector<int>& ci) {
      std::vector<int> cb{0};
      cb.insert(cb.end(), ci.begin(), ci.end());
      cb.push_back(n);
      if (!(cb[static_cast<std::size_t>(e.col - 1)] < f.col &&
            f.col <= cb[static_cast<std::size_t>(e.col)]))
        return false;
      Partition part{rb, cb};
      if (!verify_partition(host, pattern, part)) return false;
      result = part;
      return true;
    });
  });
  return result;
}

/// True iff an embedding of `pattern` into `host` exists mapping `pat_entry`
/// to `host_entry`. When the pinned pattern entry is a 1-entry, the host
/// entry must be a 1-entry as well (callers flip the host first when
/// pinning a 0-entry).
inline bool contains_pinned(const BinaryMatrix& host, const BinaryMatrix& pattern,
                            Cell pat_entry, Cell host_entry) {
  if (pat_entry.row < 1 || pat_entry.row > pattern.rows() || pat_entry.col < 1 ||
      pat_entry.col > pattern.cols())
    throw UsageError("pinned pattern entry out of bounds");
  if (host_entry.row < 1 || host_entry.row > host.rows() || host_entry.col < 1 ||
      host_entry.col > host.cols())
    throw UsageError("pinned host entry out of bounds");
  if (pattern.at(pat_entry) && !host.at(host_entry)) return false;
  return find_pinned_partition(host, pattern, pat_entry, host_entry).has_value();
}

/// True iff `host` avoids every pattern in the set; vacuously true for an
/// empty set.
inline bool avoids_all(const BinaryMatrix& host, std::span<const BinaryMatrix> patterns) {
  for (const BinaryMatrix& p : patterns)
    if (contains(host, p)) return false;
  return true;
}

inline bool avoids_all(const BinaryMatrix& host, const std::vector<BinaryMatrix>& patterns) {
  return avoids_all(host, std::span<const BinaryMatrix>(patterns));
}

}  // namespace imkit
