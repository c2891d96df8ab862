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

#ifndef DCM_MATRIX_HPP
#define DCM_MATRIX_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dcm/error.hpp"
#include "dcm/graph.hpp"

namespace dcm {

using Count = std::uint32_t;

enum class MatrixKind { dcm, cdcm };

/// Dense n x n matrix of counts. Rows are nodes, columns are distances
/// 0..n-1. The tag keeps distance-count and cumulative matrices apart at
/// compile time; no invariant beyond squareness is enforced, since
/// candidate matrices are exactly what the screening and recognition code
/// has to judge.
template <class Tag>
class CountMatrix {
 public:
  CountMatrix() = default;
  explicit CountMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  /// Throws DomainError unless `rows` is square.
  explicit CountMatrix(const std::vector<std::vector<Count>>& rows) : CountMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (rows[i].size() != n_) {
        throw DomainError("matrix is not square: row " + std::to_string(i) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " +
                          std::to_string(n_));
      }
      std::copy(rows[i].begin(), rows[i].end(), row(i).begin());
    }
  }

  std::size_t size() const noexcept { return n_; }

  Count& operator()(std::size_t i, std::size_t k) { return data_[i * n_ + k]; }
  Count operator()(std::size_t i, std::size_t k) const { return data_[i * n_ + k]; }

  std::span<Count> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const Count> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  std::vector<std::vector<Count>> rows() const {
    std::vector<std::vector<Count>> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
  }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Count> data_;
};

struct DcmTag {};
struct CdcmTag {};

/// entries(i, k) = number of nodes at distance exactly k to node i.
using DcMatrix = CountMatrix<DcmTag>;
/// entries(i, k) = number of nodes at distance at most k to node i.
using CdcMatrix = CountMatrix<CdcmTag>;

using AnyMatrix = std::variant<DcMatrix, CdcMatrix>;

DcMatrix dcm_of(const Graph& g);
CdcMatrix cdcm_of(const Graph& g);

/// Row-wise prefix sums. Throws DomainError unless column 0 is all ones.
CdcMatrix dcm_to_cdcm(const DcMatrix& dcm);

/// Row-wise first differences. Throws DomainError on a decreasing row.
DcMatrix cdcm_to_dcm(const CdcMatrix& cdcm);

/// Sorts rows ascending in lexicographic order. Idempotent.
template <class Tag>
CountMatrix<Tag> canonicalize(const CountMatrix<Tag>& m) {
  auto rows = m.rows();
  std::sort(rows.begin(), rows.end());
  return CountMatrix<Tag>(rows);
}

struct GoodnessVerdict {
  bool is_good = false;
  bool is_very_good = false;
  /// Plateau value and the index where it is first reached; both 0 when
  /// the sequence is not good.
  std::int64_t plateau_value = 0;
  std::size_t plateau_start = 0;
};

/// A sequence is good when it starts at 1, increases strictly up to some
/// value k <= length, and stays at k afterwards; very good when k == length.
template <std::integral T>
GoodnessVerdict goodness(std::span<const T> a) {
  GoodnessVerdict v;
  if (a.empty() || a[0] != 1) return v;
  std::size_t j = 0;
  while (j + 1 < a.size() && a[j + 1] > a[j]) ++j;
  for (std::size_t r = j + 1; r < a.size(); ++r) {
    if (a[r] != a[j]) return v;
  }
  const auto k = static_cast<std::int64_t>(a[j]);
  if (k > static_cast<std::int64_t>(a.size())) return v;
  v.is_good = true;
  v.is_very_good = k == static_cast<std::int64_t>(a.size());
  v.plateau_value = k;
  v.plateau_start = j;
  return v;
}

template <std::integral T>
GoodnessVerdict goodness(const std::vector<T>& a) {
  return goodness(std::span<const T>(a));
}

const char* kind_name(MatrixKind kind);
inline MatrixKind kind_of(const DcMatrix&) { return MatrixKind::dcm; }
inline MatrixKind kind_of(const CdcMatrix&) { return MatrixKind::cdcm; }
inline MatrixKind kind_of(const AnyMatrix& m) {
  return m.index() == 0 ? MatrixKind::dcm : MatrixKind::cdcm;
}

/// Matrix text format: a `DCM` or `CDCM` marker line followed by n lines of
/// n non-negative integers; `#` starts a comment line.
AnyMatrix parse_matrix(std::istream& in);
AnyMatrix parse_matrix(const std::string& text);

void write_matrix(std::ostream& out, const DcMatrix& m);
void write_matrix(std::ostream& out, const CdcMatrix& m);
void write_matrix(std::ostream& out, const AnyMatrix& m);
std::string to_string(const AnyMatrix& m);

}  // namespace dcm

#endif  // DCM_MATRIX_HPP
