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

#ifndef DCM_SEQUENCES_HPP
#define DCM_SEQUENCES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcm/graph.hpp"
#include "dcm/matrix.hpp"

namespace dcm {

/// Nonincreasing list of naturals.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Throws DomainError if `values` increases anywhere.
  explicit DegreeSequence(std::vector<Count> values);
  /// Sorts nonincreasingly first.
  static DegreeSequence sorted(std::vector<Count> values);

  std::span<const Count> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Count operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<Count> values_;
};

bool erdos_gallai_check(const DegreeSequence& d);

struct HavelHakimiResult {
  /// Undirected graph where node i has degree d[i]; empty on rejection.
  std::optional<Graph> graph;
  /// 0 when rejected before any reduction (degree >= p), otherwise the
  /// 1-based reduction step that failed.
  std::size_t failed_step = 0;
  std::string reason;

  bool accepted() const noexcept { return graph.has_value(); }
};

/// Repeatedly joins the node of largest residual degree to the nodes of the
/// next-largest residual degrees (ties: smallest node id).
HavelHakimiResult havel_hakimi(const DegreeSequence& d);

/// Directed graph where node i has in-degree d[i]; its tails are the d[i]
/// smallest ids other than i. Throws DomainError if some d[i] >= p.
Graph indegree_realize(const DegreeSequence& d);

/// Positive integer sequence satisfying the goodness predicate.
class GoodSequence {
 public:
  /// Throws DomainError unless `values` is good.
  explicit GoodSequence(std::vector<Count> values);

  std::span<const Count> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Count plateau() const noexcept { return values_.back(); }

 private:
  std::vector<Count> values_;
};

/// Undirected graph on length(a) nodes whose CDCM row 0 equals a: a tree
/// rooted at 0 built as a chain of stars from the first differences of a,
/// followed by isolated nodes up to the length when a never reaches it.
Graph realize_good_sequence(const GoodSequence& a);

/// Sequence text format: whitespace-separated integers on a single line.
std::vector<std::int64_t> parse_sequence(std::istream& in);
std::vector<std::int64_t> parse_sequence(const std::string& text);

}  // namespace dcm

#endif  // DCM_SEQUENCES_HPP
