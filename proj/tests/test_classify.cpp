#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "imkit/classify.hpp"
#include "imkit/construct.hpp"
#include "imkit/criticality.hpp"
#include "oracle.hpp"

using namespace imkit;

namespace {

BinaryMatrix random_matrix(int rows, int cols, std::mt19937& rng, double density = 0.5) {
  BinaryMatrix m(rows, cols);
  std::bernoulli_distribution bit(density);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if (bit(rng)) m = m.with(i, j, true);
  return m;
}

bool cover_is_valid(const BinaryMatrix& m, const LineCover& cover) {
  for (const Cell& e : m.support()) {
    bool hit = false;
    for (const LineRef& line : cover.lines)
      if ((line.axis == Axis::Row && line.index == e.row) ||
          (line.axis == Axis::Column && line.index == e.col))
        hit = true;
    if (!hit) return false;
  }
  return static_cast<int>(cover.lines.size()) == cover.size;
}

// A valid walk starts at the bottom-left corner, ends at the top-right
// corner, and every step moves one cell up or one cell right.
bool walk_is_valid(const BinaryMatrix& m, const std::vector<Cell>& walk) {
  if (walk.empty() || walk.front() != Cell{m.rows(), 1} || walk.back() != Cell{1, m.cols()})
    return false;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    Cell a = walk[i - 1], b = walk[i];
    bool up = b.row == a.row - 1 && b.col == a.col;
    bool right = b.col == a.col + 1 && b.row == a.row;
    if (!up && !right) return false;
  }
  return true;
}

std::set<Cell> walk_union(const WalkCover& cover) {
  std::set<Cell> cells;
  for (const auto& walk : cover.walks) cells.insert(walk.begin(), walk.end());
  return cells;
}

bool matches_template(const BinaryMatrix& p, const NormalForm& nf) {
  BinaryMatrix q = apply_transform(p, nf.transform);
  for (const Cell& e : q.support()) {
    if (nf.type == 1) {
      int r = nf.rows[0], rp = nf.rows[1], rpp = nf.rows[2];
      int c = nf.cols[0], cp = nf.cols[1];
      bool interval = e.row == rp && e.col >= c && e.col <= cp;
      bool corner = (e.row == r || e.row == rpp) && (e.col == c || e.col == cp);
      if (!interval && !corner) return false;
    } else {
      int r = nf.rows[0], rp = nf.rows[1];
      int c = nf.cols[0], cp = nf.cols[1];
      bool interval = e.row == r && e.col >= c && e.col <= cp;
      bool left_arm = e.row == rp && e.col <= c;
      bool top_arm = e.col == cp && e.row <= r;
      bool corner = e.row == rp && e.col == cp;
      if (!interval && !left_arm && !top_arm && !corner) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("minLineCover fixtures") {
  CHECK(min_line_cover(diagonal(4)).size == 4);
  CHECK(min_line_cover(pattern_q(1)).size == 3);
  CHECK(min_line_cover(row_pattern(5)).size == 1);
  CHECK(min_line_cover(BinaryMatrix(3, 3)).size == 0);
  CHECK(min_line_cover(all_ones(3, 2)).size == 2);
}

TEST_CASE("cover size, matching and independent set agree, exhaustive 3x3") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    BinaryMatrix m = BinaryMatrix::from_encoding(3, 3, code);
    LineCover cover = min_line_cover(m);
    CHECK(cover_is_valid(m, cover));
    CHECK(cover.size == oracle::min_cover_size(m));
    std::vector<Cell> ind = max_independent_set(m);
    CHECK(static_cast<int>(ind.size()) == cover.size);
    for (std::size_t a = 0; a < ind.size(); ++a) {
      CHECK(m.at(ind[a]));
      for (std::size_t b = a + 1; b < ind.size(); ++b) {
        CHECK(ind[a].row != ind[b].row);
        CHECK(ind[a].col != ind[b].col);
      }
    }
  }
}

TEST_CASE("cover agrees with the subset oracle on random matrices") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    BinaryMatrix m = random_matrix(5, 5, rng, 0.35);
    LineCover cover = min_line_cover(m);
    CHECK(cover_is_valid(m, cover));
    CHECK(cover.size == oracle::min_cover_size(m));
  }
}

TEST_CASE("chains and diagonal avoidance") {
  CHECK(longest_increasing_chain(diagonal(4)) == 4);
  CHECK(longest_increasing_chain(anti_diagonal(4)) == 1);
  CHECK(longest_decreasing_chain(anti_diagonal(4)) == 4);
  CHECK(longest_increasing_chain(BinaryMatrix(3, 3)) == 0);
  CHECK(avoids_dk(diagonal(3), 4));
  CHECK_FALSE(avoids_dk(diagonal(3), 3));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryMatrix m = random_matrix(4, 5, rng, 0.4);
    for (int k = 2; k <= 4; ++k) {
      CHECK(avoids_dk(m, k) == !contains(m, diagonal(k)));
      CHECK(avoids_anti_dk(m, k) == !contains(m, anti_diagonal(k)));
    }
  }
}

TEST_CASE("walkCover fixtures") {
  auto cover = walk_cover(diagonal(3), 4);
  REQUIRE(cover.has_value());
  REQUIRE(cover->walks.size() == 3);
  for (const auto& walk : cover->walks) CHECK(walk_is_valid(diagonal(3), walk));
  std::set<Cell> covered = walk_union(*cover);
  for (const Cell& e : diagonal(3).support()) CHECK(covered.count(e) == 1);

  CHECK_FALSE(walk_cover(diagonal(3), 3).has_value());
  CHECK_FALSE(walk_cover(diagonal(3), 2).has_value());
  CHECK_THROWS_AS(walk_cover(diagonal(3), 1), UsageError);

  // a matrix whose support is one walk is covered by that exact walk
  BinaryMatrix w = walk_matrix(3, 3, {3, 1}, "URUR");
  auto single = walk_cover(w, 2);
  REQUIRE(single.has_value());
  REQUIRE(single->walks.size() == 1);
  std::vector<Cell> path = w.support();
  bool exact = walk_union(*single) == std::set<Cell>(path.begin(), path.end());
  CHECK(exact);
}

TEST_CASE("walk covers exist exactly below the chain threshold, exhaustive 3x3") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    BinaryMatrix m = BinaryMatrix::from_encoding(3, 3, code);
    for (int k = 2; k <= 4; ++k) {
      auto cover = walk_cover(m, k);
      CHECK(cover.has_value() == avoids_dk(m, k));
      if (!cover) continue;
      CHECK(cover->walks.size() == static_cast<std::size_t>(k - 1));
      for (const auto& walk : cover->walks) CHECK(walk_is_valid(m, walk));
      std::set<Cell> covered = walk_union(*cover);
      for (const Cell& e : m.support()) CHECK(covered.count(e) == 1);
    }
  }
}

TEST_CASE("critical diagonal avoiders are unions of their cover walks") {
  for (int k = 2; k <= 3; ++k)
    for (const BinaryMatrix& m : enumerate_critical({diagonal(k)}, 4, 4)) {
      auto cover = walk_cover(m, k);
      REQUIRE(cover.has_value());
      std::set<Cell> covered = walk_union(*cover);
      std::vector<Cell> cells = m.support();
      std::set<Cell> supp(cells.begin(), cells.end());
      CHECK(covered == supp);
    }
}

TEST_CASE("qWitness and rowBounding") {
  auto w1 = q_witness(pattern_q(1));
  REQUIRE(w1.has_value());
  CHECK(w1->first == 1);
  CHECK(w1->second == QOccurrence{{1, 2, 3}, {1, 2, 3}});
  auto w2 = q_witness(pattern_q(2));
  REQUIRE(w2.has_value());
  CHECK(w2->first == 2);
  CHECK_FALSE(q_witness(diagonal(4)).has_value());

  CHECK(is_row_bounding(diagonal(4)));
  CHECK(is_row_bounding(anti_diagonal(4)));
  // the counterexample class is only row-bounded jointly with Av(D4); the
  // pattern alone contains Q1
  CHECK_FALSE(is_row_bounding(counterexample_pattern()));
  CHECK_FALSE(is_row_bounding(pattern_q(3)));
  CHECK_FALSE(is_row_bounding(all_ones(3, 3)));
}

TEST_CASE("occurrence scan matches containment, exhaustive 3x4") {
  for (std::uint64_t code = 0; code < (1u << 12); ++code) {
    BinaryMatrix m = BinaryMatrix::from_encoding(3, 4, code);
    for (int i = 1; i <= 4; ++i)
      CHECK(find_q_occurrence(m, i).has_value() == contains(m, pattern_q(i)));
  }
}

TEST_CASE("structureClassify fixtures") {
  CHECK(structure_classify(diagonal(3)) ==
        std::vector<StructureCase>{StructureCase::AvoidsAntiD2,
                                   StructureCase::CoverableBy3Lines});
  CHECK(structure_classify(row_pattern(5)) ==
        std::vector<StructureCase>{StructureCase::AvoidsD2, StructureCase::AvoidsAntiD2,
                                   StructureCase::CoverableBy3Lines});
  CHECK(structure_classify(pattern_q(1)) ==
        std::vector<StructureCase>{StructureCase::NotQAvoiding});
  CHECK(structure_classify(diagonal(4)) ==
        std::vector<StructureCase>{StructureCase::AvoidsAntiD2});
}

TEST_CASE("normalForm2Types fixture") {
  BinaryMatrix p = BinaryMatrix::from_support(
      3, 3, {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 3}});
  auto nf = normal_form_2types(p);
  REQUIRE(nf.has_value());
  CHECK(nf->transform == Transform::Identity);
  CHECK(nf->type == 1);
  CHECK(nf->rows == std::vector<int>{1, 2, 3});
  CHECK(nf->cols == std::vector<int>{1, 3});
  CHECK(matches_template(p, *nf));

  auto nft = normal_form_2types(transpose(p));
  REQUIRE(nft.has_value());
  CHECK(matches_template(transpose(p), *nft));
}

TEST_CASE("normalForm2Types rejects patterns outside its preconditions") {
  CHECK_THROWS_AS(normal_form_2types(pattern_q(1)), UsageError);
  CHECK_THROWS_AS(normal_form_2types(diagonal(4)), UsageError);         // avoids anti-D2
  CHECK_THROWS_AS(normal_form_2types(anti_diagonal(4)), UsageError);    // avoids D2
  CHECK_THROWS_AS(normal_form_2types(all_ones(3, 2)), UsageError);      // two-line coverable
}

TEST_CASE("every eligible 3x3 pattern has a normal form") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    BinaryMatrix p = BinaryMatrix::from_encoding(3, 3, code);
    if (!is_row_bounding(p) || avoids_dk(p, 2) || avoids_anti_dk(p, 2) ||
        min_line_cover(p).size < 3)
      continue;
    auto nf = normal_form_2types(p);
    REQUIRE(nf.has_value());
    CHECK(matches_template(p, *nf));
  }
}

TEST_CASE("entryCertificates fixtures") {
  auto r3 = entry_certificates(row_pattern(3), {1, 1});
  CHECK(std::find(r3.begin(), r3.end(), "LeftmostColumn") != r3.end());

  for (const Cell& e : diagonal(3).support()) {
    auto certs = entry_certificates(diagonal(3), e);
    CHECK(std::find(certs.begin(), certs.end(), "H-Type3") != certs.end());
    CHECK(std::find(certs.begin(), certs.end(), "I-Type3") != certs.end());
  }

  auto hook = entry_certificates(all_ones(2, 3), {1, 2});
  CHECK(std::find(hook.begin(), hook.end(), "I2-Type1") != hook.end());

  CHECK_THROWS_AS(entry_certificates(pattern_q(1), Cell{1, 1}), UsageError);
  CHECK_THROWS_AS(entry_certificates(pattern_q(1), Cell{0, 1}), UsageError);
}

TEST_CASE("row-bounding patterns certify every 1-entry at small sizes") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    BinaryMatrix p = BinaryMatrix::from_encoding(3, 3, code);
    if (!is_row_bounding(p)) continue;
    for (const Cell& e : p.support()) CHECK_FALSE(entry_certificates(p, e).empty());
  }
}

TEST_CASE("classify report") {
  ClassificationReport d4 = classify(diagonal(4));
  CHECK(d4.row_bounding);
  CHECK_FALSE(d4.q_witness.has_value());
  CHECK(d4.structure_cases == std::vector<StructureCase>{StructureCase::AvoidsAntiD2});
  CHECK_FALSE(d4.two_line_coverable);
  CHECK_FALSE(d4.normal_form.has_value());
  CHECK(d4.entry_certificates.size() == 4);

  ClassificationReport q1 = classify(pattern_q(1));
  CHECK_FALSE(q1.row_bounding);
  REQUIRE(q1.q_witness.has_value());
  CHECK(q1.q_witness->first == 1);
  CHECK(q1.structure_cases == std::vector<StructureCase>{StructureCase::NotQAvoiding});
}
