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

#include "dcm/reduction.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "text_util.hpp"

namespace dcm {

namespace {

__extension__ typedef __int128 Wide;

// Matrices beyond this many nodes would not fit comfortably in memory.
constexpr std::size_t kMaxMatrixNodes = 4096;

std::int64_t checked_sum(std::span<const std::int64_t> values) {
  std::int64_t total = 0;
  for (auto v : values) {
    if (__builtin_add_overflow(total, v, &total)) throw DomainError("instance sum overflows");
  }
  return total;
}

}  // namespace

TppInstance::TppInstance(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("instance is empty");
  if (values_.size() % 3 != 0) {
    throw DomainError("instance length " + std::to_string(values_.size()) +
                      " is not a multiple of 3");
  }
  for (auto v : values_) {
    if (v <= 0) throw DomainError("instance entries must be positive, got " + std::to_string(v));
  }
  std::sort(values_.begin(), values_.end(), std::greater<>());
  sum_ = checked_sum(values_);
}

std::optional<std::int64_t> TppInstance::target() const {
  const auto m = static_cast<std::int64_t>(groups());
  if (sum_ % m != 0) return std::nullopt;
  return sum_ / m;
}

ValidationVerdict validate_instance(std::span<const std::int64_t> a, ValidationLevel level) {
  auto fail = [](std::string rule, std::string detail) {
    return ValidationVerdict{false, std::move(rule), std::move(detail)};
  };
  if (a.empty()) return fail("empty", "instance has no entries");
  if (a.size() % 3 != 0) {
    return fail("length", "length " + std::to_string(a.size()) + " is not a multiple of 3");
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[i - 1]) return fail("order", "entry " + std::to_string(i + 1) + " increases");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) return fail("positive", "entry " + std::to_string(i + 1) + " is not positive");
  }
  const auto m = static_cast<Wide>(a.size() / 3);
  Wide s = 0;
  for (auto v : a) s += v;
  if (s % m != 0) return fail("integer-t", "s = " + std::to_string(static_cast<long long>(s)) +
                                               " is not divisible by m");
  if (level.kind == ValidationLevel::Kind::lenient) return {};

  // t/4 < a_i < t/2 with t = s/m, cleared of denominators.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Wide scaled = static_cast<Wide>(a[i]) * m;
    if (!(s < 4 * scaled) || !(2 * scaled < s)) {
      return fail("bounds", "a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                                " is outside (t/4, t/2)");
    }
  }
  if (level.kind == ValidationLevel::Kind::tpp) return {};

  const auto t = static_cast<std::int64_t>(s / m);
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] == a[i - 1]) return fail("distinct", "a_" + std::to_string(i + 1) + " repeats");
  }
  if (t < 4) return fail("t-min", "t = " + std::to_string(t) + " < 4");
  if (a.back() < level.gap) {
    return fail("min-entry", "smallest entry " + std::to_string(a.back()) + " < K = " +
                                 std::to_string(level.gap));
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i - 1] - a[i] < level.gap) {
      return fail("gap", "a_" + std::to_string(i) + " - a_" + std::to_string(i + 1) + " < K = " +
                             std::to_string(level.gap));
    }
  }
  return {};
}

TppInstance scale(const TppInstance& a, std::int64_t k) {
  if (k < 1) throw DomainError("scale factor must be >= 1");
  std::vector<std::int64_t> out(a.values().begin(), a.values().end());
  for (auto& v : out) {
    if (__builtin_mul_overflow(v, k, &v)) throw DomainError("scaling overflows");
  }
  return TppInstance(std::move(out));
}

TppInstance shift(const TppInstance& a, std::int64_t c) {
  if (c < 0) throw DomainError("shift must be >= 0");
  std::vector<std::int64_t> out(a.values().begin(), a.values().end());
  for (auto& v : out) {
    if (__builtin_add_overflow(v, c, &v)) throw DomainError("shifting overflows");
  }
  return TppInstance(std::move(out));
}

void check_solution(const TppInstance& a, const TppSolution& sol) {
  const auto t = a.target();
  if (!t) throw DomainError("t is not an integer");
  if (sol.triples.size() != a.groups()) {
    throw DomainError("expected " + std::to_string(a.groups()) + " triples, got " +
                      std::to_string(sol.triples.size()));
  }
  std::vector<bool> used(a.size(), false);
  for (const auto& triple : sol.triples) {
    std::int64_t total = 0;
    for (std::size_t idx : triple) {
      if (idx >= a.size()) throw DomainError("index " + std::to_string(idx) + " out of range");
      if (used[idx]) throw DomainError("index " + std::to_string(idx) + " used twice");
      used[idx] = true;
      total += a[idx];
    }
    if (total != *t) {
      throw DomainError("triple sums to " + std::to_string(total) + ", expected t = " +
                        std::to_string(*t));
    }
  }
}

namespace {

class TppSearch {
 public:
  TppSearch(std::span<const std::int64_t> a, std::int64_t t) : a_(a), t_(t) {}

  bool run() { return cover(0); }
  const std::vector<std::array<std::size_t, 3>>& triples() const { return triples_; }

 private:
  bool cover(std::uint32_t mask) {
    const std::size_t n = a_.size();
    std::size_t first = 0;
    while (first < n && (mask >> first & 1U)) ++first;
    if (first == n) return true;
    if (failed_.contains(mask)) return false;
    const std::int64_t rest = t_ - a_[first];
    // Values are nonincreasing, so equal values sit next to each other and
    // trying one of a run of equal free entries covers the whole run.
    std::int64_t last_j = -1;
    for (std::size_t j = first + 1; j < n; ++j) {
      if ((mask >> j & 1U) || a_[j] == last_j) continue;
      last_j = a_[j];
      const std::int64_t want = rest - a_[j];
      if (want > a_[j]) break;
      if (want <= 0) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if ((mask >> k & 1U) || a_[k] != want) continue;
        const std::uint32_t next = mask | (1U << first) | (1U << j) | (1U << k);
        triples_.push_back({first, j, k});
        if (cover(next)) return true;
        triples_.pop_back();
        break;
      }
    }
    failed_.insert(mask);
    return false;
  }

  std::span<const std::int64_t> a_;
  std::int64_t t_;
  std::vector<std::array<std::size_t, 3>> triples_;
  std::unordered_set<std::uint32_t> failed_;
};

}  // namespace

TppOutcome solve_tpp(const TppInstance& a, const TppLimits& limits) {
  if (a.size() > limits.max_items || a.size() > 32) return {TppStatus::unknown, std::nullopt};
  const auto t = a.target();
  if (!t) return {TppStatus::negative, std::nullopt};
  TppSearch search(a.values(), *t);
  if (!search.run()) return {TppStatus::negative, std::nullopt};
  return {TppStatus::positive, TppSolution{search.triples()}};
}

DcMatrix build_matrix(const TppInstance& a) {
  const auto t = a.target();
  if (!t) throw DomainError("t = s/m is not an integer");
  if (*t < a[0] + 1) {
    throw DomainError("t = " + std::to_string(*t) + " must exceed the largest entry " +
                      std::to_string(a[0]));
  }
  const std::size_t m = a.groups();
  const auto s = static_cast<std::size_t>(a.sum());
  const std::size_t n = 4 * m + s;
  if (n > kMaxMatrixNodes) {
    throw DomainError("matrix would have " + std::to_string(n) + " rows, limit is " +
                      std::to_string(kMaxMatrixNodes));
  }
  const auto tc = static_cast<Count>(*t);
  DcMatrix out(n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 3 * m; ++i, ++row) {
    const auto ai = static_cast<Count>(a[i]);
    const Count pattern[] = {1, ai, 1, tc - ai, 2};
    std::copy(std::begin(pattern), std::end(pattern), out.row(row).begin());
  }
  for (std::size_t u = 0; u < s; ++u, ++row) {
    const Count pattern[] = {1, 2, tc - 1, 2};
    std::copy(std::begin(pattern), std::end(pattern), out.row(row).begin());
  }
  for (std::size_t j = 0; j < m; ++j, ++row) {
    const Count pattern[] = {1, tc, 3};
    std::copy(std::begin(pattern), std::end(pattern), out.row(row).begin());
  }
  return out;
}

std::string NodeRole::label() const {
  switch (kind) {
    case Kind::x: return "x_" + std::to_string(index);
    case Kind::y: return "y_" + std::to_string(index) + "^" + std::to_string(group);
    case Kind::z: return "z_" + std::to_string(group);
  }
  return {};
}

Gadget build_gadget(const TppInstance& a, const TppSolution& sol) {
  check_solution(a, sol);
  const auto t = static_cast<std::size_t>(*a.target());
  const std::size_t m = a.groups();
  const std::size_t n = 4 * m + static_cast<std::size_t>(a.sum());
  Gadget gadget{Graph(n, Orientation::undirected), {}};
  auto& roles = gadget.layout.roles;
  roles.resize(n);
  for (std::size_t i = 0; i < 3 * m; ++i) roles[i] = {NodeRole::Kind::x, i + 1, 0};

  const std::size_t y_base = 3 * m;
  const std::size_t z_base = y_base + m * t;
  for (std::size_t j = 0; j < m; ++j) {
    auto triple = sol.triples[j];
    std::sort(triple.begin(), triple.end());
    const auto z = static_cast<Node>(z_base + j);
    roles[z] = {NodeRole::Kind::z, 0, j + 1};
    std::size_t u = 0;
    for (std::size_t idx : triple) {
      for (std::int64_t c = 0; c < a[idx]; ++c, ++u) {
        const auto y = static_cast<Node>(y_base + j * t + u);
        roles[y] = {NodeRole::Kind::y, u + 1, j + 1};
        gadget.graph.add_arc(static_cast<Node>(idx), y);
        gadget.graph.add_arc(y, z);
      }
    }
  }
  return gadget;
}

TppInstance parse_tpp(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError("missing group count line", 0);
  if (tokens.size() != 1) throw ParseError("expected the group count `m`", reader.line());
  const auto m = detail::parse_natural(tokens[0], reader.line());
  if (m == 0) throw ParseError("group count must be positive", reader.line());
  if (!reader.next(tokens)) throw ParseError("missing instance line", reader.line());
  if (tokens.size() != 3 * m) {
    throw ParseError("expected " + std::to_string(3 * m) + " integers, got " +
                         std::to_string(tokens.size()),
                     reader.line());
  }
  std::vector<std::int64_t> values;
  for (const auto& tok : tokens) {
    const auto v = detail::parse_integer(tok, reader.line());
    if (v <= 0) throw ParseError("instance entries must be positive", reader.line());
    values.push_back(v);
  }
  std::vector<std::string> extra;
  if (reader.next(extra)) throw ParseError("unexpected trailing content", reader.line());
  return TppInstance(std::move(values));
}

TppInstance parse_tpp(const std::string& text) {
  std::istringstream in(text);
  return parse_tpp(in);
}

TppSolution parse_solution(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tokens;
  TppSolution sol;
  while (reader.next(tokens)) {
    if (tokens.size() != 3) throw ParseError("expected three indices", reader.line());
    auto& triple = sol.triples.emplace_back();
    for (std::size_t c = 0; c < 3; ++c) {
      triple[c] = static_cast<std::size_t>(detail::parse_natural(tokens[c], reader.line()));
    }
    std::sort(triple.begin(), triple.end());
  }
  if (sol.triples.empty()) throw ParseError("solution has no triples", reader.line());
  return sol;
}

TppSolution parse_solution(const std::string& text) {
  std::istringstream in(text);
  return parse_solution(in);
}

void write_solution(std::ostream& out, const TppInstance& a, const TppSolution& sol) {
  if (const auto t = a.target()) out << "# t=" << *t << '\n';
  for (const auto& [i, j, k] : sol.triples) {
    out << "# " << a[i] << '+' << a[j] << '+' << a[k] << '\n';
    out << i << ' ' << j << ' ' << k << '\n';
  }
}

}  // namespace dcm
