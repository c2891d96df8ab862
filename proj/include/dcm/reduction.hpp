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

#ifndef DCM_REDUCTION_HPP
#define DCM_REDUCTION_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcm/graph.hpp"
#include "dcm/matrix.hpp"

namespace dcm {

// Three-partition instances and the gadget that turns one into a DCM
// candidate: the candidate is a DCM exactly when the instance splits into
// triples of equal sum.

/// 3m positive integers kept in nonincreasing order.
class TppInstance {
 public:
  /// Sorts `values` nonincreasingly. Throws DomainError if the list is
  /// empty, its length is not a multiple of 3, or some value is not positive.
  explicit TppInstance(std::vector<std::int64_t> values);

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t groups() const noexcept { return values_.size() / 3; }
  std::int64_t sum() const noexcept { return sum_; }
  /// s / m when it is an integer.
  std::optional<std::int64_t> target() const;

  friend bool operator==(const TppInstance&, const TppInstance&) = default;

 private:
  std::vector<std::int64_t> values_;
  std::int64_t sum_ = 0;
};

struct ValidationLevel {
  enum class Kind { lenient, tpp, hardened };
  Kind kind = Kind::lenient;
  std::int64_t gap = 0;  // K for hardened

  static ValidationLevel lenient() { return {Kind::lenient, 0}; }
  static ValidationLevel tpp() { return {Kind::tpp, 0}; }
  static ValidationLevel hardened(std::int64_t k) { return {Kind::hardened, k}; }
};

struct ValidationVerdict {
  bool ok = true;
  std::string rule;  // first violated rule, empty when ok
  std::string detail;
};

/// lenient: nonempty, nonincreasing, positive, length 3m, integer t.
/// tpp: additionally t/4 < a_i < t/2.
/// hardened(K): additionally distinct, t >= 4, a_3m >= K and gaps >= K.
ValidationVerdict validate_instance(std::span<const std::int64_t> a, ValidationLevel level);

/// Every entry multiplied by k >= 1. Throws DomainError on overflow.
TppInstance scale(const TppInstance& a, std::int64_t k);
/// Every entry increased by c >= 0; t grows by 3c. Throws on overflow.
TppInstance shift(const TppInstance& a, std::int64_t c);

/// m triples of indices into the sorted instance, each sorted ascending.
struct TppSolution {
  std::vector<std::array<std::size_t, 3>> triples;
  friend bool operator==(const TppSolution&, const TppSolution&) = default;
};

/// Throws DomainError unless `sol` partitions the indices of `a` into
/// triples that each sum to t.
void check_solution(const TppInstance& a, const TppSolution& sol);

enum class TppStatus { positive, negative, unknown };

struct TppOutcome {
  TppStatus status = TppStatus::unknown;
  std::optional<TppSolution> solution;  // present iff positive
};

struct TppLimits {
  std::size_t max_items = 24;
};

/// Exact search: triples summing to t, exact cover over the indices, the
/// largest uncovered entry branched on first. Unknown above the item limit.
TppOutcome solve_tpp(const TppInstance& a, const TppLimits& limits = {});

/// The reduction matrix on n = 4m + s nodes: 3m rows [1, a_i, 1, t-a_i, 2],
/// s rows [1, 2, t-1, 2], m rows [1, t, 3], zero padded. Requires an
/// integer t >= a_1 + 1.
DcMatrix build_matrix(const TppInstance& a);

struct NodeRole {
  enum class Kind { x, y, z };
  Kind kind = Kind::x;
  std::size_t index = 0;  // i for x_i, u for y_u^j (both 1-based)
  std::size_t group = 0;  // j for y_u^j and z_j (1-based)

  /// `x_<i>`, `y_<u>^<j>` or `z_<j>`.
  std::string label() const;
};

struct GadgetLayout {
  std::vector<NodeRole> roles;  // indexed by node id
};

struct Gadget {
  Graph graph;
  GadgetLayout layout;
};

/// Undirected witness graph for a solved instance: x-nodes 0..3m-1 in
/// instance order, then t y-nodes per triple, then one z-node per triple.
Gadget build_gadget(const TppInstance& a, const TppSolution& sol);

/// TPP text format: line 1 `m`, line 2 the 3m integers in any order.
TppInstance parse_tpp(std::istream& in);
TppInstance parse_tpp(const std::string& text);

/// Solution text format: one line of three 0-based indices per triple.
TppSolution parse_solution(std::istream& in);
TppSolution parse_solution(const std::string& text);
void write_solution(std::ostream& out, const TppInstance& a, const TppSolution& sol);

}  // namespace dcm

#endif  // DCM_REDUCTION_HPP
