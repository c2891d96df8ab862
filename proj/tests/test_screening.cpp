// Copyright 2026 The dcmkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "dcm/error.hpp"
#include "dcm/random.hpp"
#include "dcm/recognizer.hpp"
#include "dcm/reduction.hpp"
#include "dcm/screening.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace dcm;
using namespace dcm::testing;

namespace {

bool has_rule(const ScreenReport& r, ScreenRule rule) {
  for (const auto& f : r.failures) {
    if (f.rule == rule) return true;
  }
  return false;
}

ScreenConfig config(Orientation o, BoundMode mode) {
  ScreenConfig cfg;
  cfg.orientation = o;
  cfg.bounds.mode = mode;
  return cfg;
}

// Every mode a graph's own matrices must pass in: its orientation, and
// directed as well when it is undirected.
std::vector<Orientation> applicable(const Graph& g) {
  if (g.is_directed()) return {Orientation::directed};
  return {Orientation::directed, Orientation::undirected};
}

}  // namespace

TEST_CASE("check_basic") {
  const auto ok = check_basic(example_cdcm(), true);
  CHECK(ok.passed());
  CHECK(ok.in_degrees == std::vector<Count>{2, 1, 2, 2, 3, 1, 2, 2});

  const CdcMatrix two(std::vector<std::vector<Count>>{{2, 2}, {1, 2}});
  CHECK(has_rule(check_basic(two), ScreenRule::column_zero));

  const CdcMatrix bad(std::vector<std::vector<Count>>{
      {1, 2, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}});
  const auto r = check_basic(bad);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].rule == ScreenRule::goodness);
  CHECK(r.failures[0].row == 0);

  const CdcMatrix weak(std::vector<std::vector<Count>>{{1, 1}, {1, 2}});
  CHECK(check_basic(weak).passed());
  CHECK(has_rule(check_basic(weak, true), ScreenRule::very_good));
}

TEST_CASE("predecessor bounds on the example") {
  for (auto mode : {BoundMode::relaxed, BoundMode::exact}) {
    PredecessorBoundConfig cfg;
    cfg.mode = mode;
    const auto r = check_predecessor_bounds(example_cdcm(), cfg);
    CHECK(r.passed());
    CHECK(r.budget_exhausted_rows.empty());
  }
}

TEST_CASE("predecessor bounds reject too few candidates") {
  // Row 0 has one predecessor, but both other balls are already too wide.
  const CdcMatrix m(std::vector<std::vector<Count>>{{1, 2, 2}, {1, 3, 3}, {1, 3, 3}});
  CHECK(has_rule(check_predecessor_bounds(m), ScreenRule::pred_candidates));
}

TEST_CASE("predecessor sum bound") {
  // Node 0 has one predecessor whose ball cannot account for three nodes at radius 2.
  const CdcMatrix m(std::vector<std::vector<Count>>{
      {1, 2, 4, 4}, {1, 1, 1, 1}, {1, 2, 3, 4}, {1, 2, 4, 4}});
  const auto r = check_predecessor_bounds(m);
  REQUIRE_FALSE(r.passed());
  CHECK(r.failures[0].row == 0);
}

TEST_CASE("exact mode catches what the relaxation misses") {
  // Row 2 needs two predecessors. Per column some pair is large enough,
  // but no single pair is large enough in every column.
  const CdcMatrix m(std::vector<std::vector<Count>>{
      {1, 2, 2, 2, 2},
      {1, 1, 1, 1, 1},
      {1, 2, 4, 5, 5},
      {1, 3, 3, 3, 3},
      {1, 2, 4, 4, 4},
  });
  PredecessorBoundConfig exact;
  exact.mode = BoundMode::exact;
  CHECK(check_predecessor_bounds(m).passed());
  const auto e = check_predecessor_bounds(m, exact);
  REQUIRE(e.failures.size() == 1);
  CHECK(e.failures[0].rule == ScreenRule::pred_subset);
  CHECK(recognize(AnyMatrix(m), Orientation::directed).verdict == Verdict::no);
}

TEST_CASE("exact mode budget falls back to relaxed and is flagged") {
  PredecessorBoundConfig cfg;
  cfg.mode = BoundMode::exact;
  cfg.subset_budget = 1;
  const auto r = check_predecessor_bounds(example_cdcm(), cfg);
  CHECK(r.passed());
  CHECK_FALSE(r.budget_exhausted_rows.empty());
  CHECK(render_text(r).find("budget exhausted") != std::string::npos);
  CHECK(render_machine(r).find("note=budget-exhausted") != std::string::npos);
}

TEST_CASE("check_columns_graphical") {
  const auto g = path_graph(5);
  CHECK(check_columns_graphical(dcm_of(g), Orientation::undirected).passed());
  const DcMatrix odd(std::vector<std::vector<Count>>{
      {1, 3, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}});
  const auto r = check_columns_graphical(odd, Orientation::undirected);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].column == 1);
  CHECK_FALSE(r.failures[0].row.has_value());
  CHECK_THROWS_AS(check_columns_graphical(example_dcm(), Orientation::directed), ModeError);
}

TEST_CASE("screen pipeline examples") {
  CHECK(screen(AnyMatrix(example_dcm()), config(Orientation::directed, BoundMode::exact)).passed());
  CHECK(screen(AnyMatrix(example_cdcm())).passed());

  const auto gadget = build_matrix(TppInstance({9, 7, 6, 5, 2, 1}));
  CHECK(screen(AnyMatrix(gadget), config(Orientation::undirected, BoundMode::relaxed)).passed());

  const DcMatrix zero(3);
  const auto r = screen(AnyMatrix(zero));
  CHECK_FALSE(r.passed());
  CHECK(r.failures.size() == 3);
  CHECK(r.failures[0].rule == ScreenRule::column_zero);
  CHECK(render_text(r).rfind("REJECT column-0 row=0 col=0", 0) == 0);
  CHECK(render_machine(r).rfind("verdict=reject\nrule=column-0 row=0 col=0", 0) == 0);
  CHECK(render_text(screen(AnyMatrix(example_dcm()))) == "PASS\n");
}

TEST_CASE("screen is sound on every graph with at most 5 nodes (undirected) and 4 nodes (directed)") {
  for (auto orientation : {Orientation::directed, Orientation::undirected}) {
    const std::size_t top = orientation == Orientation::directed ? 4 : 5;
    for (std::size_t n = 1; n <= top; ++n) {
      const auto pairs = pair_count(n, orientation);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const auto g = graph_from_code(n, code, orientation);
        const AnyMatrix N = dcm_of(g);
        const AnyMatrix M = cdcm_of(g);
        for (auto mode : applicable(g)) {
          const auto cfg = config(mode, BoundMode::exact);
          REQUIRE(screen(N, cfg).passed());
          REQUIRE(screen(M, cfg).passed());
        }
      }
    }
  }
}

TEST_CASE("screen is sound on random graphs up to 8 nodes") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    const auto orientation = trial % 2 ? Orientation::directed : Orientation::undirected;
    const std::size_t n = 4 + trial % 5;
    const auto g = random_graph(n, 0.15 + 0.1 * (trial % 5), orientation, rng);
    for (auto mode : applicable(g)) {
      for (auto bound : {BoundMode::relaxed, BoundMode::exact}) {
        auto cfg = config(mode, bound);
        cfg.require_strong = is_strongly_connected(g);
        REQUIRE(screen(AnyMatrix(dcm_of(g)), cfg).passed());
        REQUIRE(screen(AnyMatrix(cdcm_of(g)), cfg).passed());
      }
    }
  }
}

TEST_CASE("relaxed rejections are also exact rejections") {
  std::mt19937_64 rng(77);
  int rejected = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto orientation = trial % 2 ? Orientation::directed : Orientation::undirected;
    const std::size_t n = 3 + trial % 5;
    const auto g = random_graph(n, 0.35, orientation, rng);
    auto rows = cdcm_of(g).rows();
    // Bump one entry by one and repair the row so it stays nondecreasing.
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const auto i = pick(rng);
    const auto k = 1 + pick(rng) % (n - 1);
    for (std::size_t c = k; c < n; ++c) rows[i][c] = std::max(rows[i][c], rows[i][k] + 1);
    const CdcMatrix m(rows);
    PredecessorBoundConfig relaxed;
    relaxed.orientation = orientation;
    auto exact = relaxed;
    exact.mode = BoundMode::exact;
    const auto r = check_predecessor_bounds(m, relaxed);
    const auto e = check_predecessor_bounds(m, exact);
    if (!r.passed()) {
      ++rejected;
      REQUIRE_FALSE(e.passed());
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("screen is deterministic") {
  const auto m = AnyMatrix(build_matrix(TppInstance({3, 3, 3, 1, 1, 1})));
  const auto cfg = config(Orientation::undirected, BoundMode::exact);
  CHECK(render_machine(screen(m, cfg)) == render_machine(screen(m, cfg)));
}
