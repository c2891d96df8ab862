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

#include "dcm/screening.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dcm/sequences.hpp"

namespace dcm {

const char* rule_name(ScreenRule rule) {
  switch (rule) {
    case ScreenRule::column_zero: return "column-0";
    case ScreenRule::goodness: return "goodness";
    case ScreenRule::very_good: return "very-good";
    case ScreenRule::pred_candidates: return "pred-candidates";
    case ScreenRule::pred_sum: return "pred-sum";
    case ScreenRule::pred_subset: return "pred-subset";
    case ScreenRule::column_graphical: return "column-graphical";
    case ScreenRule::conversion: return "conversion";
  }
  return "unknown";
}

void ScreenReport::merge(ScreenReport other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  if (in_degrees.empty()) in_degrees = std::move(other.in_degrees);
  budget_exhausted_rows.insert(budget_exhausted_rows.end(), other.budget_exhausted_rows.begin(),
                               other.budget_exhausted_rows.end());
  std::stable_sort(failures.begin(), failures.end(),
                   [](const ScreenFailure& a, const ScreenFailure& b) {
                     return a.row.value_or(SIZE_MAX) < b.row.value_or(SIZE_MAX);
                   });
  std::sort(budget_exhausted_rows.begin(), budget_exhausted_rows.end());
}

ScreenReport check_basic(const CdcMatrix& m, bool require_strong) {
  ScreenReport report;
  const std::size_t n = m.size();
  report.in_degrees.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, 0) != 1) {
      report.failures.push_back({ScreenRule::column_zero, i, 0,
                                 "entry is " + std::to_string(m(i, 0)) + ", expected 1"});
      continue;
    }
    if (n > 1) report.in_degrees[i] = m(i, 1) - 1;
    const auto verdict = goodness(m.row(i));
    if (!verdict.is_good) {
      report.failures.push_back({ScreenRule::goodness, i, std::nullopt, "row is not good"});
    } else if (require_strong && !verdict.is_very_good) {
      report.failures.push_back({ScreenRule::very_good, i, std::nullopt,
                                 "row plateaus at " + std::to_string(verdict.plateau_value) +
                                     " < n = " + std::to_string(n)});
    }
  }
  return report;
}

namespace {

// Branch and bound over nu-subsets of the candidate rows. Column p of the
// target needs need[p] <= sum over the subset of m_{p-1}(j).
class SubsetSearch {
 public:
  SubsetSearch(const CdcMatrix& m, std::vector<std::size_t> candidates,
               std::vector<std::int64_t> need, std::size_t nu, std::uint64_t budget)
      : m_(m), candidates_(std::move(candidates)), need_(std::move(need)), nu_(nu),
        budget_(budget), partial_(m.size(), 0) {
    const std::size_t n = m.size();
    // Rows with larger entries first so a covering subset is met early.
    std::stable_sort(candidates_.begin(), candidates_.end(), [&m](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(m.row(b).begin(), m.row(b).end(), m.row(a).begin(),
                                          m.row(a).end());
    });
    suffix_max_.assign((candidates_.size() + 1) * n, 0);
    for (std::size_t c = candidates_.size(); c-- > 0;) {
      for (std::size_t p = 1; p < n; ++p) {
        suffix_max_[c * n + p] =
            std::max<std::int64_t>(suffix_max_[(c + 1) * n + p], m(candidates_[c], p - 1));
      }
    }
  }

  enum class Result { found, exhausted_space, out_of_budget };

  Result run() {
    if (search(0, 0)) return Result::found;
    return out_of_budget_ ? Result::out_of_budget : Result::exhausted_space;
  }

 private:
  bool feasible(std::size_t next, std::size_t chosen) const {
    const std::size_t n = m_.size();
    const auto remaining = static_cast<std::int64_t>(nu_ - chosen);
    for (std::size_t p = 1; p < n; ++p) {
      if (partial_[p] + remaining * suffix_max_[next * n + p] < need_[p]) return false;
    }
    return true;
  }

  bool search(std::size_t next, std::size_t chosen) {
    if (++explored_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    if (chosen == nu_) return feasible(next, chosen);
    if (candidates_.size() - next < nu_ - chosen) return false;
    if (!feasible(next, chosen)) return false;
    const std::size_t n = m_.size();
    for (std::size_t c = next; c < candidates_.size(); ++c) {
      const auto row = m_.row(candidates_[c]);
      for (std::size_t p = 1; p < n; ++p) partial_[p] += row[p - 1];
      const bool found = search(c + 1, chosen + 1);
      for (std::size_t p = 1; p < n; ++p) partial_[p] -= row[p - 1];
      if (found) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const CdcMatrix& m_;
  std::vector<std::size_t> candidates_;
  std::vector<std::int64_t> need_;
  std::size_t nu_;
  std::uint64_t budget_;
  std::uint64_t explored_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::int64_t> partial_;
  std::vector<std::int64_t> suffix_max_;
};

}  // namespace

ScreenReport check_predecessor_bounds(const CdcMatrix& m, const PredecessorBoundConfig& cfg) {
  ScreenReport report;
  const std::size_t n = m.size();
  if (n < 2) return report;
  std::vector<std::int64_t> column;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, 1) == 0) continue;  // check_basic territory
    const std::size_t nu = m(i, 1) - 1;

    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      bool admissible = true;
      for (std::size_t p = 1; p < n && admissible; ++p) admissible = m(j, p - 1) <= m(i, p);
      if (admissible) candidates.push_back(j);
    }
    if (candidates.size() < nu) {
      report.failures.push_back({ScreenRule::pred_candidates, i, std::nullopt,
                                 "in-degree " + std::to_string(nu) + " but only " +
                                     std::to_string(candidates.size()) +
                                     " admissible predecessor rows"});
      continue;
    }

    // From radius 2 on, the row's own node already lies in a neighbour's
    // ball when the graph is undirected; otherwise it is counted apart.
    const std::int64_t own =
        (cfg.orientation == Orientation::undirected && nu > 0) ? 0 : 1;
    std::vector<std::int64_t> need(n, 0);
    need[1] = static_cast<std::int64_t>(nu);
    for (std::size_t p = 2; p < n; ++p) need[p] = static_cast<std::int64_t>(m(i, p)) - own;

    bool relaxed_failed = false;
    for (std::size_t p = 1; p < n && !relaxed_failed; ++p) {
      column.clear();
      for (std::size_t j : candidates) column.push_back(m(j, p - 1));
      std::partial_sort(column.begin(), column.begin() + static_cast<std::ptrdiff_t>(nu),
                        column.end(), std::greater<>());
      std::int64_t best = 0;
      for (std::size_t k = 0; k < nu; ++k) best += column[k];
      if (best < need[p]) {
        report.failures.push_back({ScreenRule::pred_sum, i, p,
                                   "largest " + std::to_string(nu) +
                                       " shifted rows cover at most " + std::to_string(best) +
                                       " of the " + std::to_string(need[p]) + " nodes needed"});
        relaxed_failed = true;
      }
    }
    if (relaxed_failed || cfg.mode == BoundMode::relaxed) continue;

    SubsetSearch search(m, candidates, need, nu, cfg.subset_budget);
    switch (search.run()) {
      case SubsetSearch::Result::found:
        break;
      case SubsetSearch::Result::exhausted_space:
        report.failures.push_back({ScreenRule::pred_subset, i, std::nullopt,
                                   "no " + std::to_string(nu) +
                                       " admissible rows cover this row termwise"});
        break;
      case SubsetSearch::Result::out_of_budget:
        report.budget_exhausted_rows.push_back(i);
        break;
    }
  }
  return report;
}

ScreenReport check_columns_graphical(const DcMatrix& m, Orientation orientation) {
  if (orientation == Orientation::directed) {
    throw ModeError("column graphicality only applies to undirected candidates");
  }
  ScreenReport report;
  const std::size_t n = m.size();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Count> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = m(i, k);
    if (!erdos_gallai_check(DegreeSequence::sorted(std::move(column)))) {
      report.failures.push_back({ScreenRule::column_graphical, std::nullopt, k,
                                 "column is not a graphical degree sequence"});
      break;
    }
  }
  return report;
}

ScreenReport screen(const AnyMatrix& candidate, const ScreenConfig& cfg) {
  ScreenReport report;
  CdcMatrix cumulative;
  if (const auto* dcm = std::get_if<DcMatrix>(&candidate)) {
    for (std::size_t i = 0; i < dcm->size(); ++i) {
      if ((*dcm)(i, 0) != 1) {
        report.failures.push_back({ScreenRule::column_zero, i, 0,
                                   "entry is " + std::to_string((*dcm)(i, 0)) + ", expected 1"});
      }
    }
    if (!report.passed()) return report;
    cumulative = dcm_to_cdcm(*dcm);
  } else {
    cumulative = std::get<CdcMatrix>(candidate);
  }

  report.merge(check_basic(cumulative, cfg.require_strong));
  if (report.passed()) {
    auto bounds = cfg.bounds;
    bounds.orientation = cfg.orientation;
    report.merge(check_predecessor_bounds(cumulative, bounds));
  }
  if (cfg.orientation == Orientation::undirected) {
    if (const auto* dcm = std::get_if<DcMatrix>(&candidate)) {
      report.merge(check_columns_graphical(*dcm, cfg.orientation));
    }
  }
  return report;
}

std::string render_text(const ScreenReport& report) {
  std::ostringstream out;
  if (report.passed()) out << "PASS\n";
  for (const auto& f : report.failures) {
    out << "REJECT " << rule_name(f.rule) << " row=";
    if (f.row) {
      out << *f.row;
    } else {
      out << '*';
    }
    if (f.column) out << " col=" << *f.column;
    out << ' ' << f.detail << '\n';
  }
  for (std::size_t row : report.budget_exhausted_rows) {
    out << "# row " << row << ": exact subset search budget exhausted, relaxed verdict used\n";
  }
  return out.str();
}

std::string render_machine(const ScreenReport& report) {
  std::ostringstream out;
  out << "verdict=" << (report.passed() ? "pass" : "reject") << '\n';
  for (const auto& f : report.failures) {
    out << "rule=" << rule_name(f.rule) << " row=";
    if (f.row) {
      out << *f.row;
    } else {
      out << '*';
    }
    if (f.column) out << " col=" << *f.column;
    out << " detail=\"" << f.detail << "\"\n";
  }
  for (std::size_t row : report.budget_exhausted_rows) {
    out << "note=budget-exhausted row=" << row << '\n';
  }
  return out.str();
}

}  // namespace dcm
