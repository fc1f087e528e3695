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

#ifndef BIASFORGE_BIAS_HPP_
#define BIASFORGE_BIAS_HPP_

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "biasforge/multigraph.hpp"

namespace biasforge {

inline std::string describe(EdgeSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (EdgeId e : s) {
    os << (first ? "" : " ") << e;
    first = false;
  }
  os << '}';
  return os.str();
}

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<EdgeSet> classes) : classes_(std::move(classes)) {
    EdgeSet seen;
    for (EdgeSet c : classes_) {
      if (c.intersects(seen)) fail(ErrorCode::kPrecondition, "signature classes must be disjoint");
      seen |= c;
    }
  }

  const std::vector<EdgeSet>& classes() const { return classes_; }
  EdgeSet support() const {
    EdgeSet s;
    for (EdgeSet c : classes_) s |= c;
    return s;
  }
  bool is_balanced(EdgeSet cycle) const {
    for (EdgeSet c : classes_) {
      if ((cycle & c).size() % 2 != 0) return false;
    }
    return true;
  }
  Signature without_class(std::size_t i) const {
    std::vector<EdgeSet> rest = classes_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    return Signature(std::move(rest));
  }

 private:
  std::vector<EdgeSet> classes_;
};

// A multigraph together with its balanced cycles. Cycles are materialized
// once and shared between copies.
class BiasedGraph {
 public:
  BiasedGraph() : d_(std::make_shared<const Data>()) {}

  static BiasedGraph from_balanced_cycles(MultiGraph g, std::vector<EdgeSet> balanced,
                                          const Limits& limits = default_limits()) {
    for (EdgeSet c : balanced) {
      if (!is_cycle(g, c)) fail(ErrorCode::kNotACycle, describe(c) + " is not a cycle");
    }
    std::sort(balanced.begin(), balanced.end());
    balanced.erase(std::unique(balanced.begin(), balanced.end()), balanced.end());
    return from_predicate(
        std::move(g),
        [&](EdgeSet c) { return std::binary_search(balanced.begin(), balanced.end(), c); },
        true, limits);
  }

  static BiasedGraph from_signature(MultiGraph g, const Signature& s,
                                    const Limits& limits = default_limits()) {
    return from_predicate(std::move(g), [&](EdgeSet c) { return s.is_balanced(c); }, true, limits);
  }

  static BiasedGraph balanced(MultiGraph g, const Limits& limits = default_limits()) {
    return from_predicate(std::move(g), [](EdgeSet) { return true; }, false, limits);
  }

  static BiasedGraph contrabalanced(MultiGraph g, const Limits& limits = default_limits()) {
    return from_predicate(std::move(g), [](EdgeSet) { return false; }, false, limits);
  }

  template <class Pred>
  static BiasedGraph from_predicate(MultiGraph g, Pred&& is_balanced, bool validate = true,
                                    const Limits& limits = default_limits()) {
    auto d = std::make_shared<Data>();
    d->cycles = all_cycles(g, limits.max_cycles);
    d->graph = std::move(g);
    for (EdgeSet c : d->cycles) {
      if (is_balanced(c)) {
        d->balanced.push_back(c);
      } else {
        d->unbalanced.push_back(c);
        d->unbalanced_vertices.push_back(d->graph.vertices_of(c));
      }
    }
    if (validate) check_theta_property(d->graph, d->balanced);
    BiasedGraph out;
    out.d_ = std::move(d);
    return out;
  }

  // Throws ThetaViolation when two balanced cycles form a theta whose third
  // cycle is unbalanced.
  static void check_theta_property(const MultiGraph& g, const std::vector<EdgeSet>& balanced_sorted) {
    std::vector<EdgeSet> bs;
    for (EdgeSet c : balanced_sorted) {
      if (c.size() > 1) bs.push_back(c);
    }
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        if (!bs[i].intersects(bs[j])) continue;
        EdgeSet third = bs[i] ^ bs[j];
        if (std::binary_search(balanced_sorted.begin(), balanced_sorted.end(), third)) continue;
        if (theta_of(g, bs[i], bs[j])) {
          fail(ErrorCode::kThetaViolation, "theta " + describe(bs[i] | bs[j]) + " has exactly two balanced cycles " +
                                               describe(bs[i]) + " and " + describe(bs[j]));
        }
      }
    }
  }

  const MultiGraph& graph() const { return d_->graph; }
  const std::vector<EdgeSet>& cycles() const { return d_->cycles; }
  const std::vector<EdgeSet>& balanced_cycles() const { return d_->balanced; }
  const std::vector<EdgeSet>& unbalanced_cycles() const { return d_->unbalanced; }
  const std::vector<VertexSet>& unbalanced_cycle_vertices() const { return d_->unbalanced_vertices; }
  EdgeSet edges() const { return d_->graph.edges(); }
  VertexSet vertices() const { return d_->graph.vertices(); }

  bool is_balanced_cycle(EdgeSet c) const {
    if (std::binary_search(d_->balanced.begin(), d_->balanced.end(), c)) return true;
    if (!std::binary_search(d_->unbalanced.begin(), d_->unbalanced.end(), c)) {
      fail(ErrorCode::kNotACycle, describe(c) + " is not a cycle");
    }
    return false;
  }

  bool is_balanced() const { return d_->unbalanced.empty(); }
  bool is_contrabalanced() const { return d_->balanced.empty(); }

  // True when no unbalanced cycle lies inside x.
  bool is_balanced_subgraph(EdgeSet x) const {
    for (EdgeSet c : d_->unbalanced) {
      if (c.subset_of(x)) return false;
    }
    return true;
  }

  EdgeSet unbalanced_loops() const {
    EdgeSet out;
    for (EdgeSet c : d_->unbalanced) {
      if (c.size() == 1) out |= c;
    }
    return out;
  }
  EdgeSet balanced_loops() const { return d_->graph.loops() - unbalanced_loops(); }

  // Deletion: all vertices stay, cycles meeting x disappear.
  BiasedGraph without_edges(EdgeSet x) const { return restrict_to(d_->graph.without_edges(x)); }
  BiasedGraph restricted_to(EdgeSet keep) const { return without_edges(edges() - keep); }
  BiasedGraph without_vertex(VertexId v) const { return restrict_to(d_->graph.without_vertex(v)); }

  bool operator==(const BiasedGraph& o) const {
    return graph() == o.graph() && balanced_cycles() == o.balanced_cycles();
  }

 private:
  struct Data {
    MultiGraph graph;
    std::vector<EdgeSet> cycles;
    std::vector<EdgeSet> balanced;
    std::vector<EdgeSet> unbalanced;
    std::vector<VertexSet> unbalanced_vertices;
  };

  BiasedGraph restrict_to(MultiGraph g) const {
    auto d = std::make_shared<Data>();
    const EdgeSet keep = g.edges();
    d->graph = std::move(g);
    for (EdgeSet c : d_->cycles) {
      if (c.subset_of(keep)) d->cycles.push_back(c);
    }
    for (EdgeSet c : d_->balanced) {
      if (c.subset_of(keep)) d->balanced.push_back(c);
    }
    for (std::size_t i = 0; i < d_->unbalanced.size(); ++i) {
      if (d_->unbalanced[i].subset_of(keep)) {
        d->unbalanced.push_back(d_->unbalanced[i]);
        d->unbalanced_vertices.push_back(d_->unbalanced_vertices[i]);
      }
    }
    BiasedGraph out;
    out.d_ = std::move(d);
    return out;
  }

  std::shared_ptr<const Data> d_;
};

// Vertices whose deletion leaves no unbalanced cycle.
inline VertexSet balancing_vertices(const BiasedGraph& w) {
  VertexSet out = w.vertices();
  for (VertexSet vs : w.unbalanced_cycle_vertices()) out &= vs;
  return out;
}

inline bool is_balancing_vertex(const BiasedGraph& w, VertexId v) {
  return balancing_vertices(w).contains(v);
}

struct UnbalancingPartition {
  VertexId vertex = -1;
  std::vector<EdgeSet> classes;  // ordered by least edge id

  int class_of(EdgeId e) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].contains(e)) return static_cast<int>(i);
    }
    return -1;
  }
};

inline UnbalancingPartition unbalancing_classes(const BiasedGraph& w, VertexId u) {
  if (!w.vertices().contains(u)) fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(u));
  if (!is_balancing_vertex(w, u)) {
    fail(ErrorCode::kNotBalancing, "vertex " + std::to_string(u) + " is not balancing");
  }
  const MultiGraph& g = w.graph();
  const EdgeSet star = g.links_at(u);
  UnionFind uf;
  for (EdgeSet c : w.balanced_cycles()) {
    EdgeSet at = c & star;
    if (at.size() == 2) uf.unite(at.first(), at.last());
  }
  std::array<EdgeSet, kMaxIds> groups{};
  EdgeSet roots;
  for (EdgeId e : star) {
    int r = uf.find(e);
    groups[static_cast<std::size_t>(r)].insert(e);
    roots.insert(r);
  }
  UnbalancingPartition p;
  p.vertex = u;
  for (int r : roots) p.classes.push_back(groups[static_cast<std::size_t>(r)]);
  for (EdgeSet c : w.cycles()) {
    EdgeSet at = c & star;
    if (at.size() != 2) continue;
    bool same = p.class_of(at.first()) == p.class_of(at.last());
    if (same != w.is_balanced_cycle(c)) {
      fail(ErrorCode::kInvariantViolation, "cycle " + describe(c) + " contradicts the unbalancing classes");
    }
  }
  return p;
}

// A single-class signature reproducing the bias, when one exists.
inline std::optional<Signature> is_signed(const BiasedGraph& w) {
  const MultiGraph& g = w.graph();
  UnionFind uf;
  EdgeSet tree;
  for (EdgeId e : g.links()) {
    if (uf.unite(g.ends(e).u, g.ends(e).v)) tree.insert(e);
  }
  auto tree_path = [&](VertexId from, VertexId to) {
    std::array<EdgeId, kMaxIds> via{};
    std::array<VertexId, kMaxIds> prev{};
    via.fill(-1);
    VertexSet seen = VertexSet::single(from);
    std::vector<VertexId> queue{from};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      VertexId x = queue[i];
      for (EdgeId e : g.incident(x) & tree) {
        VertexId y = g.ends(e).other(x);
        if (seen.contains(y)) continue;
        seen.insert(y);
        via[static_cast<std::size_t>(y)] = e;
        prev[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    }
    EdgeSet path;
    for (VertexId x = to; x != from; x = prev[static_cast<std::size_t>(x)]) {
      path.insert(via[static_cast<std::size_t>(x)]);
    }
    return path;
  };
  EdgeSet sigma;
  for (EdgeId e : g.edges() - tree) {
    Endpoints p = g.ends(e);
    EdgeSet cycle = EdgeSet::single(e);
    if (!p.is_loop()) cycle |= tree_path(p.u, p.v);
    if (!w.is_balanced_cycle(cycle)) sigma.insert(e);
  }
  Signature s({sigma});
  for (EdgeSet c : w.cycles()) {
    if (s.is_balanced(c) != w.is_balanced_cycle(c)) return std::nullopt;
  }
  return s;
}

struct AlmostBalancedWitness {
  EdgeSet loops;
  VertexId vertex = -1;
};

inline std::optional<AlmostBalancedWitness> almost_balanced_witness(const BiasedGraph& w) {
  EdgeSet loops = w.unbalanced_loops();
  VertexSet b = balancing_vertices(w.without_edges(loops));
  if (b.empty()) return std::nullopt;
  return AlmostBalancedWitness{loops, b.first()};
}

// Balancing vertices of the graph obtained by deleting every unbalanced loop.
inline VertexSet almost_balancing_vertices(const BiasedGraph& w) {
  return balancing_vertices(w.without_edges(w.unbalanced_loops()));
}

// The signature {U, Σ1, ..., Σk} built from the unbalanced loops and the
// unbalancing classes at u.
inline Signature class_signature(const BiasedGraph& w, VertexId u) {
  EdgeSet loops = w.unbalanced_loops();
  UnbalancingPartition p = unbalancing_classes(w.without_edges(loops), u);
  std::vector<EdgeSet> classes{loops};
  classes.insert(classes.end(), p.classes.begin(), p.classes.end());
  return Signature(std::move(classes));
}

}  // namespace biasforge

#endif  // BIASFORGE_BIAS_HPP_
