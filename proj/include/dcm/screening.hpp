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

#ifndef DCM_SCREENING_HPP
#define DCM_SCREENING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcm/graph.hpp"
#include "dcm/matrix.hpp"

namespace dcm {

// Necessary conditions for a matrix to be a (C)DCM. Every check here is
// sound: a matrix computed from a graph is never rejected. None of them is
// complete.

enum class ScreenRule {
  column_zero,       // column 0 must be all ones
  goodness,          // every CDCM row must be good
  very_good,         // strongly connected: every row reaches n
  pred_candidates,   // fewer admissible predecessor rows than the in-degree
  pred_sum,          // the nu largest shifted rows cannot cover the row
  pred_subset,       // no actual nu-subset of shifted rows covers the row
  column_graphical,  // a DCM column is not a graphical degree sequence
  conversion,        // the DCM / CDCM conversion failed
};

const char* rule_name(ScreenRule rule);

struct ScreenFailure {
  ScreenRule rule;
  std::optional<std::size_t> row;
  std::optional<std::size_t> column;
  std::string detail;
};

struct ScreenReport {
  std::vector<ScreenFailure> failures;
  /// In-degree nu(i) = m_1(i) - 1 read off each row by check_basic.
  std::vector<Count> in_degrees;
  /// Rows where the exact subset search ran out of budget; the relaxed
  /// verdict stands for them.
  std::vector<std::size_t> budget_exhausted_rows;

  bool passed() const noexcept { return failures.empty(); }
  void merge(ScreenReport other);
};

enum class BoundMode { relaxed, exact };

struct PredecessorBoundConfig {
  BoundMode mode = BoundMode::relaxed;
  /// Search nodes per row for the exact subset search.
  std::uint64_t subset_budget = 1'000'000;
  /// Undirected graphs allow a tighter covering bound: every predecessor's
  /// neighbourhood already contains the row's own node.
  Orientation orientation = Orientation::directed;
};

struct ScreenConfig {
  Orientation orientation = Orientation::directed;
  bool require_strong = false;
  PredecessorBoundConfig bounds{};
};

/// Column 0 all ones, every row good (very good with `require_strong`).
ScreenReport check_basic(const CdcMatrix& m, bool require_strong = false);

/// Each row i needs nu = m_1(i) - 1 distinct rows j != i with
/// m_{p-1}(j) <= m_p(i) for all p, whose shifted sum covers row i.
/// Expects a matrix that passed check_basic.
ScreenReport check_predecessor_bounds(const CdcMatrix& m, const PredecessorBoundConfig& cfg = {});

/// Every column k >= 1, sorted, must be a graphical degree sequence.
/// Throws ModeError for directed candidates.
ScreenReport check_columns_graphical(const DcMatrix& m, Orientation orientation);

/// Full pipeline for a DCM or CDCM candidate.
ScreenReport screen(const AnyMatrix& m, const ScreenConfig& cfg = {});

/// `PASS`, or one `REJECT <rule> row=<i> [col=<p>] <detail>` line per
/// failure. Rule-wide failures print `row=*`.
std::string render_text(const ScreenReport& report);

/// One `key=value` record per line: `verdict=...`, then `rule=...` records
/// and `note=budget-exhausted` records.
std::string render_machine(const ScreenReport& report);

}  // namespace dcm

#endif  // DCM_SCREENING_HPP
