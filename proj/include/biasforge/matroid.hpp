// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIASFORGE_MATROID_HPP_
#define BIASFORGE_MATROID_HPP_

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <vector>

#include "biasforge/core.hpp"

namespace biasforge {

using RankFunction = std::function<int(EdgeSet)>;

// Minimal dependent subsets of `ground` under `rank`, by exhaustive subset
// scan. Exponential; meant for small ground sets and as a test oracle.
inline std::vector<EdgeSet> minimal_dependent_sets(EdgeSet ground, const RankFunction& rank, int cap = 24) {
  const std::vector<EdgeId> ids = ground.to_vector();
  const int m = static_cast<int>(ids.size());
  if (m > cap) fail(ErrorCode::kCapExceeded, "ground set too large for subset scan");
  const std::uint32_t total = std::uint32_t{1} << m;
  std::vector<std::uint8_t> independent(total, 0);
  std::vector<EdgeSet> out;
  independent[0] = 1;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    bool all_sub = true;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      if (!independent[mask & ~(rest & (~rest + 1))]) {
        all_sub = false;
        break;
      }
    }
    if (!all_sub) continue;
    EdgeSet x;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) x.insert(ids[static_cast<std::size_t>(i)]);
    }
    if (rank(x) == x.size()) {
      independent[mask] = 1;
    } else {
      out.push_back(x);
    }
  }
  sort_canonical(out);
  return out;
}

class Matroid {
 public:
  using CircuitSource = std::function<std::vector<EdgeSet>()>;

  Matroid() : Matroid(EdgeSet(), [](EdgeSet) { return 0; }) {}
  Matroid(EdgeSet ground, RankFunction rank, CircuitSource circuits = {})
      : s_(std::make_shared<State>()) {
    s_->ground = ground;
    s_->rank = std::move(rank);
    s_->source = std::move(circuits);
  }

  static Matroid from_circuits(EdgeSet ground, std::vector<EdgeSet> circuits) {
    sort_canonical(circuits);
    auto list = std::make_shared<const std::vector<EdgeSet>>(circuits);
    RankFunction rank = [list](EdgeSet x) {
      EdgeSet basis;
      for (EdgeId e : x) {
        EdgeSet next = basis | EdgeSet::single(e);
        bool dependent = false;
        for (EdgeSet c : *list) {
          if (c.subset_of(next)) {
            dependent = true;
            break;
          }
        }
        if (!dependent) basis = next;
      }
      return basis.size();
    };
    return Matroid(ground, std::move(rank), [list] { return *list; });
  }

  static Matroid uniform(int r, EdgeSet ground) {
    return Matroid(ground, [r](EdgeSet x) { return std::min(r, x.size()); });
  }

  EdgeSet ground() const { return s_->ground; }
  int size() const { return s_->ground.size(); }
  int rank(EdgeSet x) const { return s_->rank(x & s_->ground); }
  int rank() const { return rank(s_->ground); }
  const RankFunction& rank_function() const { return s_->rank; }

  // Minimal dependent sets, canonically sorted; materialized on first use.
  const std::vector<EdgeSet>& circuits() const& {
    std::call_once(s_->once, [this] {
      std::vector<EdgeSet> cs = s_->source ? s_->source() : minimal_dependent_sets(s_->ground, s_->rank);
      sort_canonical(cs);
      s_->circuits = std::move(cs);
    });
    return s_->circuits;
  }
  std::vector<EdgeSet> circuits() && { return static_cast<const Matroid&>(*this).circuits(); }

  bool is_independent(EdgeSet x) const { return rank(x) == x.size(); }
  bool is_circuit(EdgeSet x) const {
    if (x.empty() || rank(x) != x.size() - 1) return false;
    for (EdgeId e : x) {
      if (rank(x - EdgeSet::single(e)) != x.size() - 1) return false;
    }
    return true;
  }
  EdgeSet closure(EdgeSet x) const {
    const int r = rank(x);
    EdgeSet out = x & ground();
    for (EdgeId e : ground() - x) {
      if (rank(x | EdgeSet::single(e)) == r) out.insert(e);
    }
    return out;
  }
  bool is_flat(EdgeSet x) const { return closure(x) == (x & ground()); }
  bool is_hyperplane(EdgeSet x) const { return x.subset_of(ground()) && rank(x) == rank() - 1 && is_flat(x); }
  bool is_cocircuit(EdgeSet x) const { return !x.empty() && is_hyperplane(ground() - x); }

  int dual_rank(EdgeSet x) const { return x.size() + rank(ground() - x) - rank(); }

  Matroid restrict_to(EdgeSet keep) const {
    auto s = s_;
    return Matroid(keep & ground(), [s](EdgeSet x) { return s->rank(x); });
  }
  Matroid contract(EdgeSet c) const {
    auto s = s_;
    const int rc = rank(c);
    return Matroid(ground() - c, [s, c, rc](EdgeSet x) { return s->rank((x - c) | c) - rc; });
  }
  Matroid minor(EdgeSet contract_set, EdgeSet delete_set) const {
    return contract(contract_set).restrict_to(ground() - contract_set - delete_set);
  }

  // Connected components (separators) of the matroid.
  std::vector<EdgeSet> components() const {
    UnionFind uf;
    for (EdgeSet c : circuits()) {
      for (EdgeId e : c) uf.unite(c.first(), e);
    }
    std::array<EdgeSet, kMaxIds> groups{};
    EdgeSet roots;
    for (EdgeId e : ground()) {
      int r = uf.find(e);
      groups[static_cast<std::size_t>(r)].insert(e);
      roots.insert(r);
    }
    std::vector<EdgeSet> out;
    for (int r : roots) out.push_back(groups[static_cast<std::size_t>(r)]);
    return out;
  }
  bool is_connected() const { return components().size() <= 1; }

 private:
  struct State {
    EdgeSet ground;
    RankFunction rank;
    CircuitSource source;
    std::once_flag once;
    std::vector<EdgeSet> circuits;
  };
  std::shared_ptr<State> s_;
};

inline bool matroid_equal(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) fail(ErrorCode::kGroundMismatch, "matroids have different ground sets");
  return a.circuits() == b.circuits();
}

// Calls f on each independent set of size k, in lexicographic order.
template <class F>
void for_each_independent_set(const Matroid& m, int k, F&& f) {
  const std::vector<EdgeId> ids = m.ground().to_vector();
  auto rec = [&](auto&& self, std::size_t from, EdgeSet cur) -> bool {
    if (cur.size() == k) return f(cur);
    for (std::size_t i = from; i < ids.size(); ++i) {
      if (ids.size() - i < static_cast<std::size_t>(k - cur.size())) return false;
      EdgeSet next = cur | EdgeSet::single(ids[i]);
      if (m.rank(next) != next.size()) continue;
      if (self(self, i + 1, next)) return true;
    }
    return false;
  };
  rec(rec, 0, EdgeSet());
}

inline std::vector<EdgeSet> hyperplanes(const Matroid& m) {
  std::vector<EdgeSet> out;
  const int r = m.rank();
  if (r == 0) return out;
  std::unordered_set<EdgeSet> seen;
  for_each_independent_set(m, r - 1, [&](EdgeSet basis) {
    EdgeSet h = m.closure(basis);
    if (seen.insert(h).second) out.push_back(h);
    return false;
  });
  sort_canonical(out);
  return out;
}

inline std::vector<EdgeSet> cocircuits(const Matroid& m, const Limits& limits = default_limits()) {
  if (m.size() > std::max(limits.u24_ground, limits.census_ground) + 16) {
    fail(ErrorCode::kCapExceeded, "ground set too large for cocircuit enumeration");
  }
  std::vector<EdgeSet> out;
  for (EdgeSet h : hyperplanes(m)) out.push_back(m.ground() - h);
  sort_canonical(out);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

using ElementMap = std::map<EdgeId, EdgeId>;

inline std::optional<ElementMap> matroid_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  const auto& ca = a.circuits();
  const auto& cb = b.circuits();
  if (ca.size() != cb.size()) return std::nullopt;
  const int m = a.size();
  auto profile = [&](const Matroid& x, EdgeId e) {
    std::vector<int> counts(static_cast<std::size_t>(m + 2), 0);
    for (EdgeSet c : x.circuits()) {
      if (c.contains(e)) ++counts[static_cast<std::size_t>(c.size())];
    }
    return counts;
  };
  std::map<std::vector<int>, std::vector<EdgeId>> classes_b;
  for (EdgeId e : b.ground()) classes_b[profile(b, e)].push_back(e);
  std::vector<std::pair<EdgeId, std::vector<EdgeId>>> order;
  for (EdgeId e : a.ground()) {
    auto it = classes_b.find(profile(a, e));
    if (it == classes_b.end()) return std::nullopt;
    order.emplace_back(e, it->second);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });
  std::array<int, kMaxIds> position{};
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i].first)] = static_cast<int>(i);
  std::vector<std::vector<EdgeSet>> closing(order.size());
  for (EdgeSet c : ca) {
    int last = 0;
    for (EdgeId e : c) last = std::max(last, position[static_cast<std::size_t>(e)]);
    closing[static_cast<std::size_t>(last)].push_back(c);
  }
  std::unordered_set<EdgeSet> target(cb.begin(), cb.end());
  std::array<EdgeId, kMaxIds> image{};
  EdgeSet used;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    for (EdgeId cand : order[i].second) {
      if (used.contains(cand)) continue;
      image[static_cast<std::size_t>(order[i].first)] = cand;
      bool ok = true;
      for (EdgeSet c : closing[i]) {
        EdgeSet mapped;
        for (EdgeId e : c) mapped.insert(image[static_cast<std::size_t>(e)]);
        if (!target.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used.insert(cand);
      if (self(self, i + 1)) return true;
      used.erase(cand);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  ElementMap out;
  for (EdgeId e : a.ground()) out[e] = image[static_cast<std::size_t>(e)];
  return out;
}

// ---------------------------------------------------------------------------
// U(2,4) minors

struct U24Witness {
  EdgeSet contract;
  EdgeSet deleted;
  std::array<EdgeId, 4> elements{};
};

// Confirms that contracting `contract` and restricting to the four elements
// leaves a rank-2 matroid in which every pair is independent.
inline bool verify_u24_witness(const Matroid& m, const U24Witness& w) {
  EdgeSet four = EdgeSet::of(w.elements);
  if (four.size() != 4 || four.intersects(w.contract) || !four.subset_of(m.ground())) return false;
  if ((four | w.contract | w.deleted) != m.ground() || w.contract.intersects(w.deleted)) return false;
  const int rc = m.rank(w.contract);
  auto r = [&](EdgeSet x) { return m.rank(x | w.contract) - rc; };
  if (r(four) != 2) return false;
  for (EdgeId a : four) {
    for (EdgeId b : four) {
      if (a < b && r(EdgeSet{a, b}) != 2) return false;
    }
  }
  return true;
}

// Every minor is M/C\D with C independent, so it suffices to scan
// independent sets of size r-2 and count parallel classes of the rank-2
// contraction.
inline std::optional<U24Witness> find_u24_minor(const Matroid& m, const Limits& limits = default_limits()) {
  if (m.size() > limits.u24_ground) {
    fail(ErrorCode::kCapExceeded, "U(2,4) search limited to " + std::to_string(limits.u24_ground) + " elements");
  }
  const int r = m.rank();
  if (r < 2 || m.size() < 4) return std::nullopt;
  std::optional<U24Witness> found;
  for_each_independent_set(m, r - 2, [&](EdgeSet c) {
    const int rc = c.size();
    std::vector<EdgeId> reps;
    for (EdgeId e : m.ground() - c) {
      if (m.rank(c | EdgeSet::single(e)) == rc) continue;
      bool parallel = false;
      for (EdgeId f : reps) {
        if (m.rank(c | EdgeSet{e, f}) == rc + 1) {
          parallel = true;
          break;
        }
      }
      if (parallel) continue;
      reps.push_back(e);
      if (reps.size() == 4) {
        U24Witness w;
        w.contract = c;
        std::copy(reps.begin(), reps.end(), w.elements.begin());
        w.deleted = m.ground() - c - EdgeSet::of(reps);
        found = w;
        return true;
      }
    }
    return false;
  });
  return found;
}

inline bool has_u24_minor(const Matroid& m, const Limits& limits = default_limits()) {
  return find_u24_minor(m, limits).has_value();
}

}  // namespace biasforge

#endif  // BIASFORGE_MATROID_HPP_
