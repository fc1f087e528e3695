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

#ifndef BIASFORGE_TRANSFORMS_HPP_
#define BIASFORGE_TRANSFORMS_HPP_

#include <string>
#include <vector>

#include "biasforge/frame_matroid.hpp"

namespace biasforge {

// Drops balanced loops and keeps the least edge of each parallel class.
inline BiasedGraph simplify(const BiasedGraph& w) {
  EdgeSet kept;
  for (EdgeId e : w.edges()) {
    const EdgeSet one = EdgeSet::single(e);
    if (rank(w, one) == 0) continue;
    bool parallel = false;
    for (EdgeId f : kept) {
      if (rank(w, one | EdgeSet::single(f)) == 1) {
        parallel = true;
        break;
      }
    }
    if (!parallel) kept.insert(e);
  }
  return w.restricted_to(kept);
}

// Identifies v into u. Cycles meeting both original stars are unbalanced.
inline BiasedGraph pinch(const MultiGraph& h, VertexId u, VertexId v) {
  if (!h.has_vertex(u) || !h.has_vertex(v)) fail(ErrorCode::kUnknownVertex, "pinch needs two vertices of the graph");
  if (u == v) fail(ErrorCode::kPrecondition, "cannot pinch a vertex with itself");
  const EdgeSet at_u = h.links_at(u);
  const EdgeSet at_v = h.links_at(v);
  MultiGraph g;
  for (VertexId x : h.vertices()) {
    if (x != v) g.add_vertex(x);
  }
  for (EdgeId e : h.edges()) {
    Endpoints p = h.ends(e);
    g.add_edge(e, p.u == v ? u : p.u, p.v == v ? u : p.v);
  }
  return BiasedGraph::from_predicate(
      std::move(g), [&](EdgeSet c) { return !(c.intersects(at_u) && c.intersects(at_v)); }, true);
}

// Inverse of pinch at a balancing vertex of a signed graph. The new vertex
// u2 takes the first free id; classes of each block at u go to u1 = u and
// u2 in order, and unbalanced loops at u become u1u2 links.
inline MultiGraph split(const BiasedGraph& w, VertexId u) {
  const MultiGraph& g = w.graph();
  if (!g.has_vertex(u)) fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(u));
  if (!is_signed(w)) fail(ErrorCode::kNotSigned, "biased graph is not signed");
  if (!is_balancing_vertex(w, u)) fail(ErrorCode::kNotBalancing, "vertex " + std::to_string(u) + " is not balancing");
  const EdgeSet loops_at_u = g.loops_at(u) & w.unbalanced_loops();
  const BiasedGraph core = w.without_edges(loops_at_u);
  UnbalancingPartition classes = unbalancing_classes(core, u);

  // Blocks at u: links whose far ends are connected in G - u.
  const MultiGraph rest = g.without_vertex(u);
  UnionFind reach;
  for (EdgeId e : rest.edges()) reach.unite(rest.ends(e).u, rest.ends(e).v);
  std::array<int, kMaxIds> seen_in_block{};
  std::array<int, kMaxIds> side{};
  side.fill(-1);
  for (const EdgeSet& cls : classes.classes) {
    int block = reach.find(g.ends(cls.first()).other(u));
    int& count = seen_in_block[static_cast<std::size_t>(block)];
    if (count == 2) fail(ErrorCode::kPrecondition, "a block at the vertex has more than two unbalancing classes");
    for (EdgeId e : cls) side[static_cast<std::size_t>(e)] = count;
    ++count;
  }

  MultiGraph h = g;
  const VertexId u2 = h.add_fresh_vertex();
  for (EdgeId e : g.links_at(u)) {
    if (side[static_cast<std::size_t>(e)] == 1) h.set_endpoints(e, u2, g.ends(e).other(u));
  }
  for (EdgeId e : loops_at_u) h.set_endpoints(e, u, u2);
  return h;
}

// Rolls up unbalancing class `class_index` (classes ordered by least edge id)
// of the links at u. Unbalanced loops may only sit at u itself.
inline BiasedGraph rollup(const BiasedGraph& w, VertexId u, int class_index) {
  const MultiGraph& g = w.graph();
  if (!g.has_vertex(u)) fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(u));
  const EdgeSet loops = w.unbalanced_loops();
  const BiasedGraph core = w.without_edges(loops);
  if (!is_balancing_vertex(core, u)) {
    fail(ErrorCode::kNotAlmostBalanced, "vertex " + std::to_string(u) + " is not balancing after deleting unbalanced loops");
  }
  if (!(loops - g.loops_at(u)).empty()) {
    fail(ErrorCode::kNotBalancing, "unbalanced loops away from vertex " + std::to_string(u) + " must be unrolled first");
  }
  UnbalancingPartition p = unbalancing_classes(core, u);
  if (class_index < 0 || class_index >= static_cast<int>(p.classes.size())) {
    fail(ErrorCode::kBadClass, "class index " + std::to_string(class_index) + " out of range; vertex has " +
                                   std::to_string(p.classes.size()) + " classes");
  }
  const EdgeSet rolled = p.classes[static_cast<std::size_t>(class_index)];
  MultiGraph h = g;
  for (EdgeId e : rolled) {
    VertexId x = g.ends(e).other(u);
    if (x == u) fail(ErrorCode::kPrecondition, "cannot roll up a loop");
    h.set_endpoints(e, x, x);
  }
  return BiasedGraph::from_predicate(
      std::move(h), [&](EdgeSet c) { return !c.intersects(rolled) && w.is_balanced_cycle(c); }, false);
}

// Turns every unbalanced loop away from u into a link to u, with the loops
// forming one more signature class at u.
inline BiasedGraph unroll(const BiasedGraph& w, VertexId u) {
  const MultiGraph& g = w.graph();
  if (!g.has_vertex(u)) fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(u));
  const EdgeSet loops = w.unbalanced_loops();
  const BiasedGraph core = w.without_edges(loops);
  if (!is_balancing_vertex(core, u)) {
    fail(ErrorCode::kNotAlmostBalanced, "vertex " + std::to_string(u) + " is not balancing after deleting unbalanced loops");
  }
  Signature s = class_signature(w, u);
  MultiGraph h = g;
  for (EdgeId e : loops) {
    VertexId x = g.ends(e).u;
    if (x != u) h.set_endpoints(e, x, u);
  }
  return BiasedGraph::from_signature(std::move(h), s);
}

struct RollupFamily {
  BiasedGraph base;
  VertexId vertex = -1;
  // members[0] rolls up the former loops (the base itself when there were
  // none); members[i] for i >= 1 rolls up the remaining classes in order.
  std::vector<BiasedGraph> members;
};

inline RollupFamily rollup_family(const BiasedGraph& w, VertexId u) {
  RollupFamily fam;
  fam.vertex = u;
  fam.base = unroll(w, u);
  const EdgeSet loops = w.unbalanced_loops() - w.graph().loops_at(u);
  UnbalancingPartition p = unbalancing_classes(fam.base.without_edges(fam.base.unbalanced_loops()), u);
  int loop_class = -1;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    if (!loops.empty() && p.classes[i].intersects(loops)) loop_class = static_cast<int>(i);
  }
  fam.members.push_back(loop_class >= 0 ? rollup(fam.base, u, loop_class) : fam.base);
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    if (static_cast<int>(i) != loop_class) fam.members.push_back(rollup(fam.base, u, static_cast<int>(i)));
  }
  return fam;
}

inline RollupFamily rollup_family(const BiasedGraph& w) {
  auto witness = almost_balanced_witness(w);
  if (!witness) fail(ErrorCode::kNotAlmostBalanced, "biased graph is not almost balanced");
  return rollup_family(w, witness->vertex);
}

}  // namespace biasforge

#endif  // BIASFORGE_TRANSFORMS_HPP_
