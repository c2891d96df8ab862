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

#include "dcm/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "text_util.hpp"

namespace dcm {

DcMatrix dcm_of(const Graph& g) {
  const std::size_t n = g.size();
  DcMatrix m(n);
  for (Node i = 0; i < n; ++i) {
    for (Distance d : distances_to(g, i).dist) {
      if (d != kInfinite) ++m(i, d);
    }
  }
  return m;
}

CdcMatrix cdcm_of(const Graph& g) { return dcm_to_cdcm(dcm_of(g)); }

CdcMatrix dcm_to_cdcm(const DcMatrix& dcm) {
  const std::size_t n = dcm.size();
  CdcMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dcm(i, 0) != 1) {
      throw DomainError("row " + std::to_string(i) + ": column 0 is " +
                        std::to_string(dcm(i, 0)) + ", expected 1");
    }
    Count running = 0;
    for (std::size_t k = 0; k < n; ++k) {
      running += dcm(i, k);
      m(i, k) = running;
    }
  }
  return m;
}

DcMatrix cdcm_to_dcm(const CdcMatrix& cdcm) {
  const std::size_t n = cdcm.size();
  DcMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    Count previous = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (cdcm(i, k) < previous) {
        throw DomainError("row " + std::to_string(i) + " decreases at column " +
                          std::to_string(k));
      }
      m(i, k) = cdcm(i, k) - previous;
      previous = cdcm(i, k);
    }
  }
  return m;
}

const char* kind_name(MatrixKind kind) { return kind == MatrixKind::dcm ? "DCM" : "CDCM"; }

AnyMatrix parse_matrix(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError("missing `DCM` or `CDCM` marker", 0);
  if (tokens.size() != 1 || (tokens[0] != "DCM" && tokens[0] != "CDCM")) {
    throw ParseError("expected `DCM` or `CDCM` marker line", reader.line());
  }
  const bool cumulative = tokens[0] == "CDCM";
  std::vector<std::vector<Count>> rows;
  while (reader.next(tokens)) {
    if (!rows.empty() && tokens.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       reader.line());
    }
    auto& row = rows.emplace_back();
    for (const auto& tok : tokens) {
      row.push_back(static_cast<Count>(detail::parse_natural(tok, reader.line())));
    }
  }
  if (rows.empty()) throw ParseError("matrix has no rows", reader.line());
  if (rows.size() != rows.front().size()) {
    throw ParseError("matrix is not square: " + std::to_string(rows.size()) + " rows of " +
                         std::to_string(rows.front().size()) + " entries",
                     reader.line());
  }
  if (cumulative) return CdcMatrix(rows);
  return DcMatrix(rows);
}

AnyMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

namespace {

template <class Tag>
void write_rows(std::ostream& out, const CountMatrix<Tag>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) out << ' ';
      out << m(i, k);
    }
    out << '\n';
  }
}

}  // namespace

void write_matrix(std::ostream& out, const DcMatrix& m) {
  out << "DCM\n";
  write_rows(out, m);
}

void write_matrix(std::ostream& out, const CdcMatrix& m) {
  out << "CDCM\n";
  write_rows(out, m);
}

void write_matrix(std::ostream& out, const AnyMatrix& m) {
  std::visit([&out](const auto& x) { write_matrix(out, x); }, m);
}

std::string to_string(const AnyMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace dcm
