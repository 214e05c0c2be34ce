#pragma once

// Independent brute-force reference implementations used only by the test
// suite. These deliberately avoid sharing logic with the library: pinned
// containment is re-decided by a backtracking search over partial
// embeddings, and line covers by trying every subset of lines.

#include <algorithm>
#include <vector>

#include "imkit/matrix.hpp"

namespace oracle {

using imkit::BinaryMatrix;
using imkit::Cell;

// True iff a partial embedding of `pattern` into `host` exists whose domain
// is supp(pattern) plus the pinned entry, mapping the pinned entry to
// `host_entry`. By the equivalence of containment formulations this decides
// the same predicate as the library's pinned partition search.
inline bool pinned_embedding(const BinaryMatrix& host, const BinaryMatrix& pattern,
                             Cell pat_entry, Cell host_entry) {
  int k = pattern.rows(), l = pattern.cols(), m = host.rows(), n = host.cols();
  std::vector<Cell> domain = pattern.support();
  if (std::find(domain.begin(), domain.end(), pat_entry) == domain.end())
    domain.push_back(pat_entry);
  std::sort(domain.begin(), domain.end());
  std::vector<Cell> image(domain.size());

  auto margins_ok = [&](Cell from, Cell to) {
    return from.row <= to.row && from.col <= to.col && k - from.row <= m - to.row &&
           l - from.col <= n - to.col;
  };
  auto spacing_ok = [&](Cell a, Cell ia, Cell b, Cell ib) {
    if (a.row < b.row && b.row - a.row > ib.row - ia.row) return false;
    if (b.row < a.row && a.row - b.row > ia.row - ib.row) return false;
    if (a.col < b.col && b.col - a.col > ib.col - ia.col) return false;
    if (b.col < a.col && a.col - b.col > ia.col - ib.col) return false;
    return true;
  };

  auto search = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == domain.size()) return true;
    Cell from = domain[idx];
    auto feasible = [&](Cell to) {
      if (pattern.at(from) && !host.at(to)) return false;
      if (!margins_ok(from, to)) return false;
      for (std::size_t prev = 0; prev < idx; ++prev)
        if (!spacing_ok(domain[prev], image[prev], from, to)) return false;
      return true;
    };
    if (from == pat_entry) {
      if (!feasible(host_entry)) return false;
      image[idx] = host_entry;
      return self(self, idx + 1);
    }
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= n; ++c) {
        if (!feasible({r, c})) continue;
        image[idx] = {r, c};
        if (self(self, idx + 1)) return true;
      }
    return false;
  };
  return search(search, 0);
}

// Minimum number of lines covering all 1-entries, by trying every subset of
// rows and columns.
inline int min_cover_size(const BinaryMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  int best = rows + cols;
  for (std::uint32_t rmask = 0; rmask < (1u << rows); ++rmask)
    for (std::uint32_t cmask = 0; cmask < (1u << cols); ++cmask) {
      int size = std::popcount(rmask) + std::popcount(cmask);
      if (size >= best) continue;
      bool covers = true;
      for (const Cell& e : m.support())
        if (!((rmask >> (e.row - 1)) & 1) && !((cmask >> (e.col - 1)) & 1)) {
          covers = false;
          break;
        }
      if (covers) best = size;
    }
  return best;
}

}  // namespace oracle
