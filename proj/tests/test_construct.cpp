#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "imkit/classify.hpp"
#include "imkit/construct.hpp"
#include "imkit/containment.hpp"
#include "imkit/criticality.hpp"

using namespace imkit;

TEST_CASE("named pattern builders") {
  CHECK(pattern_q(1) == BinaryMatrix::parse("010\n100\n001\n"));
  CHECK(pattern_q(2) == BinaryMatrix::parse("010\n001\n100\n"));
  CHECK(pattern_q(3) == BinaryMatrix::parse("100\n001\n010\n"));
  CHECK(pattern_q(4) == BinaryMatrix::parse("001\n100\n010\n"));
  CHECK_THROWS_AS(pattern_q(5), UsageError);
  CHECK(diagonal(2) == BinaryMatrix::parse("10\n01\n"));
  CHECK(anti_diagonal(2) == BinaryMatrix::parse("01\n10\n"));
  CHECK(row_pattern(3) == BinaryMatrix::parse("111\n"));
  CHECK(all_ones(2, 3) == BinaryMatrix::parse("111\n111\n"));
  CHECK(counterexample_pattern() == BinaryMatrix::parse("010\n100\n010\n001\n"));
}

TEST_CASE("pattern name grammar") {
  CHECK(pattern_from_name("Q3") == pattern_q(3));
  CHECK(pattern_from_name("Dk:4") == diagonal(4));
  CHECK(pattern_from_name("aDk:2") == anti_diagonal(2));
  CHECK(pattern_from_name("Rk:5") == row_pattern(5));
  CHECK(pattern_from_name("ones:2x3") == all_ones(2, 3));
  CHECK_THROWS_AS(pattern_from_name("Q5"), UsageError);
  CHECK_THROWS_AS(pattern_from_name("Dk:"), UsageError);
  CHECK_THROWS_AS(pattern_from_name("Dk:0"), UsageError);
  CHECK_THROWS_AS(pattern_from_name("ones:3"), UsageError);
  CHECK_THROWS_AS(pattern_from_name("spiral"), UsageError);
}

TEST_CASE("q1 occurrence scan") {
  auto occ = find_q1_occurrence(pattern_q(1));
  REQUIRE(occ.has_value());
  CHECK(occ->rows == std::array<int, 3>{1, 2, 3});
  CHECK(occ->cols == std::array<int, 3>{1, 2, 3});

  auto counter = find_q1_occurrence(counterexample_pattern());
  REQUIRE(counter.has_value());
  CHECK(counter->rows == std::array<int, 3>{1, 2, 4});
  CHECK(counter->cols == std::array<int, 3>{1, 2, 3});

  CHECK_FALSE(find_q1_occurrence(diagonal(3)).has_value());
  CHECK_FALSE(find_q1_occurrence(pattern_q(2)).has_value());
}

TEST_CASE("witness dimensions follow the frame formula") {
  for (int p = 1; p <= 4; ++p) {
    WitnessSpec spec = witness_spec(pattern_q(1), p);
    CHECK(spec.out_rows == 1 + 2 * p);
    CHECK(spec.out_cols == 3 * p);
    BinaryMatrix w = witness(pattern_q(1), p);
    CHECK(w.rows() == spec.out_rows);
    CHECK(w.cols() == spec.out_cols);
  }
  CHECK_THROWS_AS(witness_spec(pattern_q(1), 0), UsageError);
  CHECK_THROWS_AS(witness_spec(diagonal(3), 2), UsageError);
}

TEST_CASE("witness marker row and avoidance") {
  BinaryMatrix w = witness(pattern_q(1), 4);
  CHECK(w.rows() == 9);
  CHECK(w.cols() == 12);
  std::vector<int> zero_cols;
  for (int j = 1; j <= 12; ++j)
    if (!w.at(1, j)) zero_cols.push_back(j);
  CHECK(zero_cols == std::vector<int>{2, 5, 8, 11});
  CHECK(line_complexity(w, {Axis::Row, 1}) == 4);
  CHECK_FALSE(contains(w, pattern_q(1)));

  BinaryMatrix tiny = witness(pattern_q(1), 1);
  CHECK(tiny.ones_count() == tiny.rows() * tiny.cols() - 1);
  CHECK_FALSE(tiny.at(1, 2));
  CHECK_FALSE(contains_oracle(tiny, pattern_q(1)));
}

TEST_CASE("witness avoidance for larger source patterns") {
  BinaryMatrix p = all_ones(3, 3);
  for (int reps = 1; reps <= 3; ++reps) {
    BinaryMatrix w = witness(p, reps);
    CHECK_FALSE(contains(w, p));
    CHECK(line_complexity(w, {Axis::Row, find_q1_occurrence(p)->rows[0]}) == reps);
  }
}

TEST_CASE("witnessAnyQ handles each orientation") {
  for (int i = 1; i <= 4; ++i) {
    OrientedWitness w = witness_any_q(pattern_q(i), 3);
    CHECK_FALSE(contains(w.matrix, pattern_q(i)));
    CHECK(w.marked.axis == Axis::Row);
    CHECK(line_complexity(w.matrix, w.marked) == 3);
  }
  CHECK(witness_any_q(pattern_q(1), 2).orientation == Transform::Identity);
  CHECK(witness_any_q(pattern_q(2), 2).orientation == Transform::FlipHorizontal);
  CHECK(witness_any_q(pattern_q(3), 2).orientation == Transform::Rotate180);
  CHECK(witness_any_q(pattern_q(4), 2).orientation == Transform::FlipVertical);
  CHECK_THROWS_AS(witness_any_q(diagonal(4), 2), UsageError);
}

TEST_CASE("criticalRk fixtures") {
  CHECK(critical_rk(3, 3, 2) == BinaryMatrix::parse("001\n001\n001\n"));
  CHECK(critical_rk(2, 5, 10) == all_ones(2, 5));
  CHECK(critical_rk(2, 2, 1) == BinaryMatrix(2, 2));
  CHECK(is_critical(critical_rk(4, 5, 3), {row_pattern(3)}));
  CHECK_THROWS_AS(critical_rk(2, 2, 0), UsageError);
}

TEST_CASE("walkMatrix") {
  BinaryMatrix w = walk_matrix(3, 3, {3, 1}, "URUR");
  CHECK(w == BinaryMatrix::from_support(3, 3, {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}));
  CHECK(avoids_dk(w, 2));
  CHECK(walk_matrix(2, 2, {1, 1}, "") == BinaryMatrix::from_support(2, 2, {{1, 1}}));
  CHECK_THROWS_AS(walk_matrix(3, 3, {4, 1}, "U"), UsageError);
  CHECK_THROWS_AS(walk_matrix(3, 3, {1, 1}, "U"), UsageError);
  CHECK_THROWS_AS(walk_matrix(3, 3, {3, 3}, "R"), UsageError);
  CHECK_THROWS_AS(walk_matrix(3, 3, {3, 1}, "UX"), UsageError);
}

TEST_CASE("counterexample column witness avoids its class patterns") {
  for (int p : {1, 3}) {
    BinaryMatrix w = counterexample_column_witness(p);
    CHECK_FALSE(contains(w, counterexample_pattern()));
    int best = 0;
    for (int j = 1; j <= w.cols(); ++j)
      best = std::max(best, line_complexity(w, {Axis::Column, j}));
    CHECK(best >= p);
  }
}
