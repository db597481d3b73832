#include <doctest.h>

#include "runfree/tight.hpp"

using namespace runfree;

TEST_CASE("tight path anchors") {
  PathCounter pc;
  CHECK(t_tight(pc, 3, 3, 2, 0) == 1);
  // 4-vertex tight path, forbid 3 consecutive blue vertices
  CHECK(t_tight(pc, 3, 2, 1, 3) ==
        oracle_count({Family::TightPath, 3, 2}, 1, 3));
  CHECK(t_tight(pc, 3, 2, 1, 3) == 2);
  CHECK_THROWS_AS(t_tight(pc, 2, 3, 1, 0), std::invalid_argument);
}

TEST_CASE("tight path reduction equals the m = r-1 oracle") {
  PathCounter pc;
  for (int r = 3; r <= 4; ++r)
    for (int k = 1; k <= 2; ++k)
      for (int n = 2; n <= 6; ++n) {
        StructureSpec spec{Family::MTightPath, r, n, r - 1};
        auto table = oracle_table(spec, k);
        for (long j = 0; j < static_cast<long>(table.size()); ++j) {
          CAPTURE(r);
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(j);
          CHECK(t_tight(pc, r, n, k, j) == table[j]);
        }
      }
}

TEST_CASE("tight cycle reduction equals the oracle") {
  PathCounter pc;
  CHECK(tc_tight(pc, 3, 8, 1, 0) == 1);
  CHECK(tc_tight(pc, 3, 8, 1, 8) == 0);
  CHECK_THROWS_AS(tc_tight(pc, 3, 5, 1, 0), std::invalid_argument);
  for (int k = 1; k <= 2; ++k)
    for (int n = 6; n <= 9; ++n) {
      auto table = oracle_table({Family::TightCycle, 3, n}, k);
      for (long j = 0; j < static_cast<long>(table.size()); ++j) {
        CAPTURE(k);
        CAPTURE(n);
        CAPTURE(j);
        CHECK(tc_tight(pc, 3, n, k, j) == table[j]);
      }
    }
}

TEST_CASE("the printed tight cycle identity fails on real instances") {
  PathCounter pc;
  bool differs = false;
  auto table = oracle_table({Family::TightCycle, 3, 8}, 1);
  for (long j = 0; j < static_cast<long>(table.size()); ++j)
    if (tc_tight_as_printed(pc, 3, 8, 1, j) != table[j]) differs = true;
  CHECK(differs);
}

TEST_CASE("overlap 1 oracle count coincides with the loose recurrence") {
  PathCounter pc;
  for (int n = 2; n <= 4; ++n)
    for (long j = 0; j <= 2 * n + 1; ++j)
      CHECK(m_tight_oracle_count(3, 1, n, 2, j) == pc.f_loose(3, n, 2, j));
}

TEST_CASE("general overlap oracle counts") {
  CHECK(m_tight_oracle_count(4, 2, 3, 1, 0) == 1);
  // 8-vertex structure: count by hand-checkable brute force elsewhere
  CHECK(m_tight_oracle_count(4, 2, 3, 1, 5) ==
        oracle_count({Family::MTightPath, 4, 3, 2}, 1, 5));
}

TEST_CASE("conjecture sweep reports no violations on the desk grid") {
  for (int r = 3; r <= 4; ++r)
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k <= 2; ++k) {
        auto report = check_conjecture(r, n, k);
        CAPTURE(r);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(report.skipped.empty());
        CHECK(report.violations == 0);
        CHECK_FALSE(report.entries.empty());
      }
}

TEST_CASE("conjecture sweep records budget-exceeded instances") {
  OracleOptions tiny;
  tiny.vertex_budget = 6;
  auto report = check_conjecture(3, 5, 1, tiny);
  CHECK_FALSE(report.skipped.empty());
}
