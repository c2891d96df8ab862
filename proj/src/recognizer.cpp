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

#include "dcm/recognizer.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dcm {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxNodes = 64;

constexpr Mask bit(std::size_t x) { return Mask{1} << x; }

int count(Mask m) { return std::popcount(m); }

// One search over a fixed-row target DCM. Node masks hold in-neighbours:
// lo_[x] are the arcs into x already chosen, hi_[x] additionally every arc
// into x not yet ruled out. For undirected targets both stay symmetric.
class Search {
 public:
  Search(const DcMatrix& target, Orientation orientation, const SearchLimits& limits)
      : target_(target),
        directed_(orientation == Orientation::directed),
        n_(target.size()),
        limits_(limits),
        start_(std::chrono::steady_clock::now()) {
    cumulative_.assign(n_, std::vector<std::int64_t>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      std::int64_t running = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        running += target(i, k);
        cumulative_[i][k] = running;
      }
    }
    degree_.assign(n_, 0);
    if (n_ > 1) {
      for (std::size_t i = 0; i < n_; ++i) degree_[i] = target(i, 1);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Node{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [this](Node a, Node b) { return degree_[a] < degree_[b]; });
    const Mask all = n_ == kMaxNodes ? ~Mask{0} : bit(n_) - 1;
    lo_.assign(n_, 0);
    hi_.resize(n_);
    lower_scratch_.resize(n_);
    upper_scratch_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) hi_[x] = all & ~bit(x);
    // An arc j -> i puts j's (p-1)-ball inside i's p-ball.
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == i) continue;
        bool fits = nested(j, i);
        if (!directed_) fits = fits && nested(i, j);
        if (!fits) hi_[i] &= ~bit(j);
      }
    }
  }

  Verdict run() {
    bool found = consistent() && (directed_ ? head(0) : vertex(0));
    if (found) return Verdict::yes;
    return out_of_budget_ ? Verdict::unknown : Verdict::no;
  }

  std::optional<Graph> take_witness() { return std::move(witness_); }
  std::uint64_t explored() const { return explored_; }
  const std::string& budget_reason() const { return budget_reason_; }

 private:
  struct Saved {
    std::size_t node;
    Mask lo;
    Mask hi;
  };

  void set(std::size_t x, Mask lo, Mask hi) {
    undo_.push_back({x, lo_[x], hi_[x]});
    lo_[x] = lo;
    hi_[x] = hi;
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      const auto& s = undo_.back();
      lo_[s.node] = s.lo;
      hi_[s.node] = s.hi;
      undo_.pop_back();
    }
  }

  bool tick() {
    if (out_of_budget_) return false;
    if (++explored_ > limits_.node_budget) {
      out_of_budget_ = true;
      budget_reason_ = "node budget exhausted";
      return false;
    }
    if ((explored_ & 0x3ff) == 0 && std::chrono::steady_clock::now() - start_ > limits_.time_budget) {
      out_of_budget_ = true;
      budget_reason_ = "time budget exhausted";
      return false;
    }
    return true;
  }

  // Balls grown over lo_ can only widen as arcs are added, so they bound
  // every row's cumulative counts from below; balls over hi_ bound them
  // from above. A lower ball that already holds its full count is closed:
  // no arc may bring an outside node one step closer, so such open arcs
  // are dropped and the check repeats until nothing changes.
  bool consistent() {
    auto& balls = lower_scratch_;
    auto& uppers = upper_scratch_;
    for (bool changed = true; changed;) {
      changed = false;
      // A node whose chosen or possible in-arcs match its degree is settled.
      for (std::size_t x = 0; x < n_; ++x) {
        const auto have = static_cast<std::size_t>(count(lo_[x]));
        const auto could = static_cast<std::size_t>(count(hi_[x]));
        if (have > degree_[x] || could < degree_[x]) return false;
        if (have == could) continue;
        if (have == degree_[x]) {
          if (!directed_) {
            for (Mask d = hi_[x] & ~lo_[x]; d; d &= d - 1) {
              const auto y = static_cast<std::size_t>(std::countr_zero(d));
              set(y, lo_[y], hi_[y] & ~bit(x));
            }
          }
          set(x, lo_[x], lo_[x]);
          changed = true;
        } else if (could == degree_[x]) {
          if (!directed_) {
            for (Mask d = hi_[x] & ~lo_[x]; d; d &= d - 1) {
              const auto y = static_cast<std::size_t>(std::countr_zero(d));
              set(y, lo_[y] | bit(x), hi_[y]);
            }
          }
          set(x, hi_[x], hi_[x]);
          changed = true;
        }
      }
      if (changed) continue;
      for (std::size_t i = 0; i < n_; ++i) {
        const auto& want = cumulative_[i];
        balls[0] = bit(i);
        if (want[0] != 1) return false;
        std::size_t depth = 1;
        for (; depth < n_; ++depth) {
          Mask reach = balls[depth - 1];
          for (Mask f = balls[depth - 1]; f; f &= f - 1) reach |= lo_[std::countr_zero(f)];
          balls[depth] = reach;
          if (count(reach) > want[depth]) return false;
        }
        // Upper balls. One that holds exactly its count must be the final
        // ball, so each of its members needs an arc into the ball one
        // step smaller; a member with a single option gets that arc.
        uppers[0] = bit(i);
        for (std::size_t k = 1; k < n_; ++k) {
          Mask reach = uppers[k - 1];
          for (Mask f = uppers[k - 1]; f; f &= f - 1) reach |= hi_[std::countr_zero(f)];
          uppers[k] = reach;
          if (count(reach) < want[k]) return false;
        }
        for (std::size_t k = 1; k < n_; ++k) {
          if (count(uppers[k]) != want[k]) continue;
          for (Mask f = uppers[k] & ~balls[k]; f; f &= f - 1) {
            const auto y = static_cast<std::size_t>(std::countr_zero(f));
            std::size_t options = 0;
            std::size_t via = 0;
            for (Mask g = uppers[k - 1]; g && options < 2; g &= g - 1) {
              const auto z = static_cast<std::size_t>(std::countr_zero(g));
              if (hi_[z] & bit(y)) {
                ++options;
                via = z;
              }
            }
            if (options != 1 || (lo_[via] & bit(y))) continue;
            set(via, lo_[via] | bit(y), hi_[via]);
            if (!directed_) set(y, lo_[y] | bit(via), hi_[y]);
            changed = true;
          }
        }
        for (std::size_t k = 1; k < n_; ++k) {
          if (count(balls[k]) != want[k]) continue;
          for (Mask f = balls[k - 1]; f; f &= f - 1) {
            const auto z = static_cast<std::size_t>(std::countr_zero(f));
            const Mask drop = hi_[z] & ~lo_[z] & ~balls[k];
            if (!drop) continue;
            set(z, lo_[z], hi_[z] & ~drop);
            if (!directed_) {
              for (Mask d = drop; d; d &= d - 1) {
                const auto y = static_cast<std::size_t>(std::countr_zero(d));
                set(y, lo_[y], hi_[y] & ~bit(z));
              }
            }
            changed = true;
          }
        }
      }
    }

    for (std::size_t i = 0; i < n_; ++i) {
      const auto& want = cumulative_[i];
      Mask ball = bit(i);
      Mask frontier = ball;
      for (std::size_t k = 1; k < n_; ++k) {
        Mask reach = 0;
        for (Mask f = frontier; f; f &= f - 1) reach |= hi_[std::countr_zero(f)];
        frontier = reach & ~ball;
        ball |= reach;
        if (!frontier) {
          // Stable from here on; the target only grows to the right.
          if (count(ball) < want[n_ - 1]) return false;
          break;
        }
        if (count(ball) < want[k]) return false;
      }
    }
    return true;
  }

  bool nested(std::size_t tail, std::size_t head) const {
    for (std::size_t p = 1; p < n_; ++p) {
      if (cumulative_[tail][p - 1] > cumulative_[head][p]) return false;
    }
    return true;
  }

  bool same_row(std::size_t a, std::size_t b) const {
    const auto ra = target_.row(a);
    const auto rb = target_.row(b);
    return std::equal(ra.begin(), ra.end(), rb.begin());
  }

  // rep[x] is the first member of x's class among `members` (in the given
  // order); members of a class are swappable by an automorphism of the
  // current state that also fixes the target.
  std::vector<std::size_t> twin_classes(const std::vector<std::size_t>& members) const {
    std::vector<Mask> out(n_, 0);
    if (directed_) {
      for (std::size_t x = 0; x < n_; ++x) {
        for (Mask f = lo_[x]; f; f &= f - 1) out[std::countr_zero(f)] |= bit(x);
      }
    }
    std::vector<std::size_t> rep(n_);
    std::iota(rep.begin(), rep.end(), std::size_t{0});
    for (std::size_t a = 0; a < members.size(); ++a) {
      const std::size_t u = members[a];
      if (rep[u] != u) continue;
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const std::size_t w = members[b];
        if (rep[w] != w) continue;
        const Mask pair = bit(u) | bit(w);
        if (lo_[u] != lo_[w] || ((hi_[u] ^ hi_[w]) & ~pair) != 0) continue;
        if (((processed_ >> u) & 1) != ((processed_ >> w) & 1)) continue;
        if (directed_ && out[u] != out[w]) continue;
        if (!same_row(u, w)) continue;
        rep[w] = u;
      }
    }
    return rep;
  }

  bool leaf() {
    Graph g(n_, directed_ ? Orientation::directed : Orientation::undirected);
    for (std::size_t head = 0; head < n_; ++head) {
      for (Mask f = lo_[head]; f; f &= f - 1) {
        const auto tail = static_cast<std::size_t>(std::countr_zero(f));
        if (directed_ || tail < head) g.add_arc(static_cast<Node>(tail), static_cast<Node>(head));
      }
    }
    if (dcm_of(g) != target_) return false;
    witness_ = std::move(g);
    return true;
  }

  // Directed: heads one at a time, the one with the fewest ways to pick
  // its remaining in-neighbours first, then its tails in id order.
  bool head(std::size_t depth) {
    if (depth == n_) return leaf();
    std::size_t h = n_;
    double fewest = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      if (processed_ & bit(x)) continue;
      const auto open = static_cast<std::size_t>(count(hi_[x] & ~lo_[x]));
      const std::size_t need = degree_[x] - static_cast<std::size_t>(count(lo_[x]));
      double ways = 1;
      for (std::size_t r = 0; r < need; ++r) ways = ways * double(open - r) / double(r + 1);
      if (h == n_ || ways < fewest) {
        h = x;
        fewest = ways;
      }
    }
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x != h) members.push_back(x);
    }
    const auto rep = twin_classes(members);
    return tails(depth, h, 0, 0, rep);
  }

  bool tails(std::size_t depth, std::size_t h, std::size_t u, Mask closed,
             const std::vector<std::size_t>& rep) {
    if (!tick()) return false;
    // Propagation may have settled arcs into h since the caller looked.
    const std::size_t need = degree_[h] - static_cast<std::size_t>(count(lo_[h]));
    if (need == 0) {
      const auto mark = undo_.size();
      set(h, lo_[h], lo_[h]);
      processed_ |= bit(h);
      if (consistent() && head(depth + 1)) return true;
      processed_ &= ~bit(h);
      rollback(mark);
      return false;
    }
    const Mask open = u >= n_ ? 0 : hi_[h] & ~lo_[h] & ~(bit(u) - 1);
    const auto remaining = static_cast<std::size_t>(count(open));
    if (remaining < need) return false;
    u = static_cast<std::size_t>(std::countr_zero(open));

    if (!(closed & bit(rep[u]))) {
      const auto mark = undo_.size();
      set(h, lo_[h] | bit(u), hi_[h]);
      if (consistent() && tails(depth, h, u + 1, closed, rep)) return true;
      rollback(mark);
      if (out_of_budget_) return false;
    }
    if (remaining - 1 >= need) {
      const auto mark = undo_.size();
      set(h, lo_[h], hi_[h] & ~bit(u));
      if (consistent() && tails(depth, h, u + 1, closed | bit(rep[u]), rep)) return true;
      rollback(mark);
    }
    return false;
  }

  // Undirected: for each vertex in order, decide its edges to later vertices.
  bool vertex(std::size_t idx) {
    if (idx == n_) return leaf();
    const std::size_t v = order_[idx];
    const auto have = static_cast<std::size_t>(count(lo_[v]));
    if (have > degree_[v]) return false;
    std::vector<std::size_t> members(order_.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                                     order_.end());
    const auto rep = twin_classes(members);
    return edges(idx, v, idx + 1, 0, rep);
  }

  // Removes every still-open edge at x, fixing its neighbourhood to lo_[x].
  void close_vertex(std::size_t x) {
    for (Mask f = hi_[x] & ~lo_[x]; f; f &= f - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(f));
      set(y, lo_[y], hi_[y] & ~bit(x));
    }
    set(x, lo_[x], lo_[x]);
  }

  bool edges(std::size_t idx, std::size_t v, std::size_t pos, Mask closed,
             const std::vector<std::size_t>& rep) {
    if (!tick()) return false;
    const std::size_t need = degree_[v] - static_cast<std::size_t>(count(lo_[v]));
    if (need == 0) {
      const auto mark = undo_.size();
      close_vertex(v);
      processed_ |= bit(v);
      if (consistent() && vertex(idx + 1)) return true;
      processed_ &= ~bit(v);
      rollback(mark);
      return false;
    }
    Mask later = 0;
    for (std::size_t p = pos; p < n_; ++p) later |= bit(order_[p]);
    const auto open = static_cast<std::size_t>(count(hi_[v] & ~lo_[v] & later));
    if (open < need) return false;
    const std::size_t w = order_[pos];
    if (!(hi_[v] & ~lo_[v] & bit(w))) return edges(idx, v, pos + 1, closed, rep);

    if (!(closed & bit(rep[w]))) {
      const auto mark = undo_.size();
      set(v, lo_[v] | bit(w), hi_[v]);
      set(w, lo_[w] | bit(v), hi_[w]);
      if (static_cast<std::size_t>(count(lo_[w])) == degree_[w]) close_vertex(w);
      if (consistent() && edges(idx, v, pos + 1, closed, rep)) return true;
      rollback(mark);
      if (out_of_budget_) return false;
    }
    if (open - 1 >= need) {
      const auto mark = undo_.size();
      set(v, lo_[v], hi_[v] & ~bit(w));
      set(w, lo_[w], hi_[w] & ~bit(v));
      if (consistent() && edges(idx, v, pos + 1, closed | bit(rep[w]), rep)) return true;
      rollback(mark);
    }
    return false;
  }

  const DcMatrix& target_;
  bool directed_;
  std::size_t n_;
  SearchLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<std::int64_t>> cumulative_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> order_;
  std::vector<Mask> lo_;
  std::vector<Mask> hi_;
  std::vector<Saved> undo_;
  std::vector<Mask> lower_scratch_;
  std::vector<Mask> upper_scratch_;
  Mask processed_ = 0;
  std::uint64_t explored_ = 0;
  bool out_of_budget_ = false;
  std::string budget_reason_;
  std::optional<Graph> witness_;
};

}  // namespace

RecognitionOutcome recognize(const AnyMatrix& m, Orientation orientation,
                             const SearchLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  RecognitionOutcome outcome;
  auto finish = [&](RecognitionOutcome& o) -> RecognitionOutcome& {
    o.stats.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count());
    return o;
  };

  DcMatrix target;
  if (const auto* cdcm = std::get_if<CdcMatrix>(&m)) {
    try {
      target = cdcm_to_dcm(*cdcm);
    } catch (const DomainError& e) {
      outcome.verdict = Verdict::no;
      outcome.reason = std::string("not cumulative: ") + e.what();
      return finish(outcome);
    }
  } else {
    target = std::get<DcMatrix>(m);
  }
  if (target.size() > limits.max_n || target.size() > kMaxNodes) {
    outcome.verdict = Verdict::unknown;
    outcome.reason = "n = " + std::to_string(target.size()) + " exceeds the limit of " +
                     std::to_string(std::min(limits.max_n, kMaxNodes));
    return finish(outcome);
  }
  if (limits.policy == MatchPolicy::up_to_permutation) target = canonicalize(target);

  Search search(target, orientation, limits);
  outcome.verdict = search.run();
  outcome.stats.explored = search.explored();
  switch (outcome.verdict) {
    case Verdict::yes: outcome.witness = search.take_witness(); break;
    case Verdict::no: outcome.reason = "search space exhausted"; break;
    case Verdict::unknown: outcome.reason = search.budget_reason(); break;
  }
  return finish(outcome);
}

bool verify_witness(const Graph& g, const AnyMatrix& m, MatchPolicy policy) {
  return std::visit(
      [&](const auto& target) {
        using T = std::decay_t<decltype(target)>;
        if (g.size() != target.size()) {
          throw DomainError("witness has " + std::to_string(g.size()) + " nodes, matrix is " +
                            std::to_string(target.size()) + " x " +
                            std::to_string(target.size()));
        }
        T actual;
        if constexpr (std::is_same_v<T, DcMatrix>) {
          actual = dcm_of(g);
        } else {
          actual = cdcm_of(g);
        }
        if (policy == MatchPolicy::fixed_rows) return actual == target;
        return canonicalize(actual) == canonicalize(target);
      },
      m);
}

}  // namespace dcm
