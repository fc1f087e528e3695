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

#ifndef BIASFORGE_REPRESENTATIONS_HPP_
#define BIASFORGE_REPRESENTATIONS_HPP_

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "biasforge/frame_matroid.hpp"

namespace biasforge {

// Endpoint pairs listed in edge-id order.
using LabeledKey = std::vector<std::pair<VertexId, VertexId>>;

struct CanonicalLabeling {
  LabeledKey key;
  std::array<VertexId, kMaxIds> relabel{};  // old vertex -> canonical vertex
};

// Least endpoint sequence over vertex relabelings that number vertices in
// order of first appearance along the edge ids. Isolated vertices come last.
inline CanonicalLabeling canonical_labeling(const MultiGraph& g) {
  const std::vector<EdgeId> ids = g.edges().to_vector();
  CanonicalLabeling best;
  bool have = false;
  std::array<VertexId, kMaxIds> map{};
  map.fill(-1);
  LabeledKey cur;
  auto rec = [&](auto&& self, std::size_t i, int next) -> void {
    if (i == ids.size()) {
      if (!have || cur < best.key) {
        best.key = cur;
        best.relabel = map;
        have = true;
      }
      return;
    }
    if (have && std::lexicographical_compare(best.key.begin(), best.key.begin() + static_cast<std::ptrdiff_t>(i),
                                             cur.begin(), cur.end())) {
      return;
    }
    Endpoints p = g.ends(ids[i]);
    auto& mu = map[static_cast<std::size_t>(p.u)];
    auto& mv = map[static_cast<std::size_t>(p.v)];
    auto emit = [&](int nxt) {
      VertexId a = map[static_cast<std::size_t>(p.u)], b = map[static_cast<std::size_t>(p.v)];
      cur.emplace_back(std::min(a, b), std::max(a, b));
      self(self, i + 1, nxt);
      cur.pop_back();
    };
    if (p.is_loop()) {
      if (mu >= 0) {
        emit(next);
      } else {
        mu = next;
        emit(next + 1);
        mu = -1;
      }
    } else if (mu >= 0 && mv >= 0) {
      emit(next);
    } else if (mu >= 0 || mv >= 0) {
      auto& fresh = mu >= 0 ? mv : mu;
      fresh = next;
      emit(next + 1);
      fresh = -1;
    } else {
      mu = next;
      mv = next + 1;
      emit(next + 2);
      mu = next + 1;
      mv = next;
      emit(next + 2);
      mu = mv = -1;
    }
  };
  rec(rec, 0, 0);
  if (!have) best.relabel.fill(-1);
  int next = 0;
  for (VertexId v : g.vertices()) {
    if (best.relabel[static_cast<std::size_t>(v)] >= 0) next = std::max(next, best.relabel[static_cast<std::size_t>(v)] + 1);
  }
  for (VertexId v : g.vertices()) {
    if (best.relabel[static_cast<std::size_t>(v)] < 0) best.relabel[static_cast<std::size_t>(v)] = next++;
  }
  return best;
}

inline MultiGraph relabel_vertices(const MultiGraph& g, const std::array<VertexId, kMaxIds>& to) {
  MultiGraph h;
  for (VertexId v : g.vertices()) h.add_vertex(to[static_cast<std::size_t>(v)]);
  for (EdgeId e : g.edges()) {
    Endpoints p = g.ends(e);
    h.add_edge(e, to[static_cast<std::size_t>(p.u)], to[static_cast<std::size_t>(p.v)]);
  }
  return h;
}

// Relabels the vertices of a biased graph; bias follows the edges.
inline BiasedGraph relabel_vertices(const BiasedGraph& w, const std::array<VertexId, kMaxIds>& to) {
  return BiasedGraph::from_predicate(
      relabel_vertices(w.graph(), to), [&](EdgeSet c) { return w.is_balanced_cycle(c); }, false);
}

inline BiasedGraph canonical_form(const BiasedGraph& w) {
  return relabel_vertices(w, canonical_labeling(w.graph()).relabel);
}

struct RepresentationQuery {
  int vertices = 0;
  bool balanced_only = false;
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
};

namespace detail {

// Depth-first placement of matroid elements as edges on a fixed vertex set.
// A cycle is balanced exactly when it is a circuit of the target.
class RepresentationSearch {
 public:
  RepresentationSearch(const Matroid& target, RepresentationQuery query)
      : m_(target), q_(query), ground_(target.ground()) {
    const auto& cs = m_.circuits();
    circuits_.insert(cs.begin(), cs.end());
    sorted_circuits_ = cs;
    std::sort(sorted_circuits_.begin(), sorted_circuits_.end(), [](EdgeSet a, EdgeSet b) { return a < b; });
    choose_order();
    for (EdgeId e : ground_) {
      rank1_[static_cast<std::size_t>(e)] = m_.rank(EdgeSet::single(e));
    }
  }

  // Calls f(canonical graph) on every new labeled representation.
  template <class F>
  void run(F&& f) {
    MultiGraph g;
    for (int v = 0; v < q_.vertices; ++v) g.add_vertex(v);
    g_ = g;
    if (ground_.empty()) {
      if (q_.vertices <= 1) emit(f);
      return;
    }
    descend(0, 0, f);
  }

 private:
  void choose_order() {
    std::vector<EdgeSet> small;
    for (EdgeSet c : m_.circuits()) {
      if (c.size() <= 5) small.push_back(c);
    }
    EdgeSet placed;
    EdgeSet left = ground_;
    while (!left.empty()) {
      EdgeId best = -1;
      long best_score = -1;
      for (EdgeId e : left) {
        EdgeSet with = placed | EdgeSet::single(e);
        long score = 0;
        for (EdgeSet c : small) {
          if (c.contains(e) && c.subset_of(with)) score += 1000;
          else if (c.contains(e)) score += (c & placed).size();
        }
        if (score > best_score) {
          best_score = score;
          best = e;
        }
      }
      order_.push_back(best);
      placed.insert(best);
      left.erase(best);
    }
    position_.fill(-1);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    closing_.resize(order_.size());
    for (EdgeSet c : m_.circuits()) {
      if (c.size() > 6) continue;
      int last = 0;
      for (EdgeId e : c) last = std::max(last, position_[static_cast<std::size_t>(e)]);
      closing_[static_cast<std::size_t>(last)].push_back(c);
    }
  }

  bool is_circuit(EdgeSet c) const { return circuits_.count(c) != 0; }

  // Frame rank of x in the partial graph, where x lies inside the placed set.
  int partial_rank(EdgeSet x) const {
    detail::SmallUnionFind uf;
    VertexSet vs;
    for (EdgeId e : x) {
      Endpoints p = g_.ends(e);
      uf.unite(p.u, p.v);
      vs.insert(p.u);
      vs.insert(p.v);
    }
    VertexSet roots;
    for (VertexId v : vs) roots.insert(uf.find(v));
    VertexSet unbalanced;
    for (EdgeSet c : unbalanced_) {
      if (c.subset_of(x)) unbalanced.insert(uf.find(g_.ends(c.first()).u));
    }
    return vs.size() - roots.size() + unbalanced.size();
  }

  // Cycles of the partial graph through e.
  std::vector<EdgeSet> cycles_through(EdgeId e, EdgeSet placed) const {
    std::vector<EdgeSet> out;
    Endpoints p = g_.ends(e);
    if (p.is_loop()) {
      out.push_back(EdgeSet::single(e));
      return out;
    }
    const EdgeSet links = placed - g_.loops() - EdgeSet::single(e);
    auto dfs = [&](auto&& self, VertexId x, VertexSet visited, EdgeSet path) -> void {
      for (EdgeId f : g_.incident(x) & links) {
        if (path.contains(f)) continue;
        VertexId y = g_.ends(f).other(x);
        if (y == p.u) {
          out.push_back(path | EdgeSet::single(f));
        } else if (!visited.contains(y)) {
          VertexSet nv = visited;
          nv.insert(y);
          self(self, y, nv, path | EdgeSet::single(f));
        }
      }
    };
    VertexSet start;
    start.insert(p.u);
    start.insert(p.v);
    dfs(dfs, p.v, start, EdgeSet::single(e));
    return out;
  }

  bool accept_placement(std::size_t depth, EdgeId e, EdgeSet placed) {
    // Each new cycle must be a circuit or independent.
    std::vector<EdgeSet> fresh = cycles_through(e, placed);
    for (EdgeSet c : fresh) {
      if (is_circuit(c)) continue;
      if (q_.balanced_only) return false;
      if (m_.rank(c) != c.size()) return false;
      unbalanced_.push_back(c);
    }
    // Theta property over thetas through e.
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      for (std::size_t j = i + 1; j < fresh.size(); ++j) {
        EdgeSet third = fresh[i] ^ fresh[j];
        if (!theta_of(g_, fresh[i], fresh[j])) continue;
        int balanced = (is_circuit(fresh[i]) ? 1 : 0) + (is_circuit(fresh[j]) ? 1 : 0) + (is_circuit(third) ? 1 : 0);
        if (balanced == 2) return false;
      }
    }
    // Rank of the component that now holds e.
    detail::SmallUnionFind uf;
    for (EdgeId f : placed) uf.unite(g_.ends(f).u, g_.ends(f).v);
    const int root = uf.find(g_.ends(e).u);
    EdgeSet component;
    VertexSet cv;
    for (EdgeId f : placed) {
      if (uf.find(g_.ends(f).u) == root) {
        component.insert(f);
        cv.insert(g_.ends(f).u);
        cv.insert(g_.ends(f).v);
      }
    }
    bool component_unbalanced = false;
    for (EdgeSet c : unbalanced_) {
      if (c.intersects(component)) {
        component_unbalanced = true;
        break;
      }
    }
    if (m_.rank(component) != cv.size() - (component_unbalanced ? 0 : 1)) return false;
    // Small circuits that close at this element must stay circuits.
    for (EdgeSet c : closing_[depth]) {
      if (partial_rank(c) != c.size() - 1) return false;
    }
    // Pairs with e must have matching rank.
    for (EdgeId f : placed - EdgeSet::single(e)) {
      EdgeSet pair{e, f};
      int expected = is_circuit(pair) ? 1 : std::min(2, rank1_[static_cast<std::size_t>(e)] + rank1_[static_cast<std::size_t>(f)]);
      if (partial_rank(pair) != expected) return false;
    }
    return true;
  }

  template <class F>
  bool descend(std::size_t depth, int used, F& f) {
    if (depth == order_.size()) {
      if (used != q_.vertices) return false;
      return emit(f);
    }
    const int remaining = static_cast<int>(order_.size() - depth);
    if (used + 2 * remaining < q_.vertices) return false;
    const EdgeId e = order_[depth];
    const EdgeSet placed = placed_ | EdgeSet::single(e);
    auto attempt = [&](VertexId a, VertexId b, int next_used) -> bool {
      g_.add_edge(e, a, b);
      const std::size_t mark = unbalanced_.size();
      bool stop = false;
      if (accept_placement(depth, e, placed)) {
        EdgeSet saved = placed_;
        placed_ = placed;
        stop = descend(depth + 1, next_used, f);
        placed_ = saved;
      }
      unbalanced_.resize(mark);
      g_.remove_edge(e);
      return stop;
    };
    for (VertexId a = 0; a < used; ++a) {
      for (VertexId b = a; b < used; ++b) {
        if (attempt(a, b, used)) return true;
      }
      if (used < q_.vertices && attempt(a, used, used + 1)) return true;
    }
    if (used < q_.vertices && attempt(used, used, used + 1)) return true;
    if (used + 1 < q_.vertices && attempt(used, used + 1, used + 2)) return true;
    return false;
  }

  template <class F>
  bool emit(F& f) {
    BiasedGraph w = BiasedGraph::from_predicate(g_, [&](EdgeSet c) { return is_circuit(c); }, false);
    if (!q_.balanced_only) {
      std::vector<EdgeSet> cs = circuit_sets(w);
      std::sort(cs.begin(), cs.end());
      if (cs != sorted_circuits_) return false;
    } else if (!matroid_equal(matroid_of(w), m_)) {
      return false;
    }
    CanonicalLabeling cl = canonical_labeling(g_);
    if (!seen_.insert(cl.key).second) return false;
    BiasedGraph canon = relabel_vertices(w, cl.relabel);
    return f(canon) || seen_.size() >= q_.max_results;
  }

  Matroid m_;
  RepresentationQuery q_;
  EdgeSet ground_;
  std::unordered_set<EdgeSet> circuits_;
  std::vector<EdgeSet> sorted_circuits_;
  std::vector<EdgeId> order_;
  std::array<int, kMaxIds> position_{};
  std::array<int, kMaxIds> rank1_{};
  std::vector<std::vector<EdgeSet>> closing_;
  MultiGraph g_;
  EdgeSet placed_;
  std::vector<EdgeSet> unbalanced_;
  std::set<LabeledKey> seen_;
};

}  // namespace detail

// Every biased graph on exactly query.vertices vertices, none isolated, whose
// frame matroid is the target; one per vertex relabeling class, canonically
// labeled and sorted by labeled key.
inline std::vector<BiasedGraph> labeled_representations(const Matroid& target, const RepresentationQuery& query) {
  std::vector<std::pair<LabeledKey, BiasedGraph>> found;
  detail::RepresentationSearch search(target, query);
  search.run([&](const BiasedGraph& w) {
    found.emplace_back(canonical_labeling(w.graph()).key, w);
    return false;
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BiasedGraph> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

// A graph whose cycle matroid is m, searched over connected graphs on
// rank + 1 vertices with matroid loops as loops.
inline std::optional<MultiGraph> is_graphic_bruteforce(const Matroid& m, const Limits& limits = default_limits()) {
  if (m.size() > limits.graphic_ground || m.rank() > limits.graphic_rank) {
    fail(ErrorCode::kCapExceeded, "graphic search limited to " + std::to_string(limits.graphic_ground) +
                                      " elements and rank " + std::to_string(limits.graphic_rank));
  }
  RepresentationQuery q;
  q.vertices = m.rank() + 1;
  q.balanced_only = true;
  q.max_results = 1;
  std::optional<MultiGraph> out;
  detail::RepresentationSearch search(m, q);
  search.run([&](const BiasedGraph& w) {
    out = w.graph();
    return true;
  });
  return out;
}

}  // namespace biasforge

#endif  // BIASFORGE_REPRESENTATIONS_HPP_
