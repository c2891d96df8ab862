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

#ifndef DCM_RECOGNIZER_HPP
#define DCM_RECOGNIZER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "dcm/graph.hpp"
#include "dcm/matrix.hpp"

namespace dcm {

enum class MatchPolicy {
  fixed_rows,         // row i of the matrix belongs to node i
  up_to_permutation,  // any row order
};

enum class Verdict { yes, no, unknown };

const char* verdict_name(Verdict v);

struct SearchLimits {
  std::size_t max_n = 10;
  std::chrono::milliseconds time_budget{60'000};
  std::uint64_t node_budget = 500'000'000;
  MatchPolicy policy = MatchPolicy::fixed_rows;
};

struct SearchStats {
  std::uint64_t explored = 0;
  std::uint64_t elapsed_ms = 0;
};

struct RecognitionOutcome {
  Verdict verdict = Verdict::unknown;
  std::optional<Graph> witness;  // present iff verdict == yes
  SearchStats stats;
  std::string reason;  // why no / unknown, for humans
};

/// Decides whether `m` is the DCM (or CDCM) of a graph of the given
/// orientation by exhaustive search with pruning.
///
/// Arcs are decided head by head, smallest in-degree first. After every
/// decision two graphs bracket the final one: the arcs already chosen and
/// those plus every arc still open. Their distance balls bound each row's
/// cumulative counts from below and above, and a branch dies as soon as
/// some row leaves that bracket. Nodes that are interchangeable in the
/// current state (equal rows, equal incidence) are only ever chosen in id
/// order. A budget trip yields `unknown`, never a guess.
RecognitionOutcome recognize(const AnyMatrix& m, Orientation orientation,
                             const SearchLimits& limits = {});

/// Recomputes the (C)DCM of `g` and compares it with `m` under `policy`.
/// Throws DomainError on a dimension mismatch.
bool verify_witness(const Graph& g, const AnyMatrix& m, MatchPolicy policy);

}  // namespace dcm

#endif  // DCM_RECOGNIZER_HPP
