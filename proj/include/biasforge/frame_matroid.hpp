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

#ifndef BIASFORGE_FRAME_MATROID_HPP_
#define BIASFORGE_FRAME_MATROID_HPP_

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "biasforge/bias.hpp"
#include "biasforge/matroid.hpp"

namespace biasforge {

enum class CircuitKind { kBalancedCycle, kTightHandcuffs, kLooseHandcuffs, kContrabalancedTheta };

inline const char* circuit_kind_name(CircuitKind k) {
  switch (k) {
    case CircuitKind::kBalancedCycle: return "BalancedCycle";
    case CircuitKind::kTightHandcuffs: return "TightHandcuffs";
    case CircuitKind::kLooseHandcuffs: return "LooseHandcuffs";
    case CircuitKind::kContrabalancedTheta: return "ContrabalancedTheta";
  }
  return "?";
}

struct Circuit {
  EdgeSet edges;
  CircuitKind kind = CircuitKind::kBalancedCycle;
  bool operator==(const Circuit&) const = default;
};

namespace detail {

struct SmallUnionFind {
  std::array<std::int8_t, kMaxIds> parent;
  SmallUnionFind() {
    for (int i = 0; i < kMaxIds; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = static_cast<std::int8_t>(std::min(a, b));
  }
};

}  // namespace detail

// Number of balanced components of the subgraph (V(x), x).
inline int balanced_component_count(const BiasedGraph& w, EdgeSet x) {
  const MultiGraph& g = w.graph();
  if (!x.subset_of(g.edges())) fail(ErrorCode::kUnknownEdge, "edge set " + describe(x) + " not in graph");
  detail::SmallUnionFind uf;
  VertexSet vs;
  for (EdgeId e : x) {
    Endpoints p = g.ends(e);
    uf.unite(p.u, p.v);
    vs.insert(p.u);
    vs.insert(p.v);
  }
  VertexSet roots;
  for (VertexId v : vs) roots.insert(uf.find(v));
  VertexSet unbalanced;
  for (EdgeSet c : w.unbalanced_cycles()) {
    if (c.subset_of(x)) unbalanced.insert(uf.find(g.ends(c.first()).u));
  }
  return roots.size() - unbalanced.size();
}

// r(X) = |V(X)| - b(X).
inline int rank(const BiasedGraph& w, EdgeSet x) {
  return w.graph().vertices_of(x).size() - balanced_component_count(w, x);
}

inline std::vector<Circuit> circuits(const BiasedGraph& w) {
  const MultiGraph& g = w.graph();
  std::vector<Circuit> out;
  for (EdgeSet c : w.balanced_cycles()) out.push_back({c, CircuitKind::kBalancedCycle});

  const auto& un = w.unbalanced_cycles();
  const auto& uv = w.unbalanced_cycle_vertices();
  for (std::size_t i = 0; i < un.size(); ++i) {
    for (std::size_t j = i + 1; j < un.size(); ++j) {
      if (un[i].intersects(un[j])) {
        // Contrabalanced theta, reported once from its two smallest cycles.
        EdgeSet third = un[i] ^ un[j];
        if (third < un[j]) continue;
        if (!std::binary_search(un.begin(), un.end(), third)) continue;
        if (theta_of(g, un[i], un[j])) out.push_back({un[i] | un[j], CircuitKind::kContrabalancedTheta});
        continue;
      }
      VertexSet common = uv[i] & uv[j];
      if (common.size() == 1) {
        out.push_back({un[i] | un[j], CircuitKind::kTightHandcuffs});
      } else if (common.empty()) {
        const VertexSet from = uv[i];
        const VertexSet to = uv[j];
        const EdgeSet base = un[i] | un[j];
        auto dfs = [&](auto&& self, VertexId x, VertexSet visited, EdgeSet path) -> void {
          for (EdgeId f : g.links_at(x)) {
            if (path.contains(f)) continue;
            VertexId y = g.ends(f).other(x);
            if (to.contains(y)) {
              out.push_back({base | path | EdgeSet::single(f), CircuitKind::kLooseHandcuffs});
            } else if (!visited.contains(y)) {
              VertexSet nv = visited;
              nv.insert(y);
              self(self, y, nv, path | EdgeSet::single(f));
            }
          }
        };
        for (VertexId s : from) dfs(dfs, s, from, EdgeSet());
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
    return canonical_less(a.edges, b.edges);
  });
  return out;
}

inline std::vector<EdgeSet> circuit_sets(const BiasedGraph& w) {
  std::vector<EdgeSet> out;
  for (const Circuit& c : circuits(w)) out.push_back(c.edges);
  return out;
}

// F(Ω) with ground set E(Ω).
inline Matroid matroid_of(const BiasedGraph& w) {
  return Matroid(
      w.edges(), [w](EdgeSet x) { return rank(w, x); }, [w] { return circuit_sets(w); });
}

inline Matroid cycle_matroid(const MultiGraph& g) { return matroid_of(BiasedGraph::balanced(g)); }

// ---------------------------------------------------------------------------
// Separations

struct MatroidSeparationReport {
  EdgeSet x;
  EdgeSet y;
  int lambda_matroid = 0;
  int lambda_graph = 0;
  int b_x = 0;
  int b_y = 0;
  bool identity_applies = false;
};

inline MatroidSeparationReport matroid_connectivity(const BiasedGraph& w, EdgeSet x) {
  const MultiGraph& g = w.graph();
  MatroidSeparationReport r;
  r.x = x & g.edges();
  r.y = g.edges() - r.x;
  r.lambda_matroid = rank(w, r.x) + rank(w, r.y) - rank(w, g.edges()) + 1;
  r.lambda_graph = (g.vertices_of(r.x) & g.vertices_of(r.y)).size();
  r.b_x = balanced_component_count(w, r.x);
  r.b_y = balanced_component_count(w, r.y);
  r.identity_applies = is_connected(g) && !w.is_balanced() && !r.x.empty() && !r.y.empty() &&
                       is_edge_set_connected(g, r.x) && is_edge_set_connected(g, r.y);
  if (r.identity_applies && r.lambda_matroid != r.lambda_graph - r.b_x - r.b_y + 1) {
    fail(ErrorCode::kInvariantViolation, "separation identity fails for " + describe(r.x));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Minors

struct MinorResult {
  BiasedGraph graph;
  std::array<VertexId, kMaxIds> vertex_map{};  // old vertex -> surviving vertex
  EdgeSet contracted;                          // edges actually contracted
  EdgeSet deleted;                             // includes balanced loops met during contraction
};

// Ω\D/C. Contracting an edge that closes an unbalanced cycle with earlier
// contracted edges is a loop contraction and is rejected; one closing a
// balanced cycle is a matroid loop and is deleted.
inline MinorResult minor_with_map(const BiasedGraph& w, EdgeSet contract, EdgeSet del) {
  const MultiGraph& g = w.graph();
  if (!contract.subset_of(g.edges()) || !del.subset_of(g.edges())) {
    fail(ErrorCode::kUnknownEdge, "minor sets must be edges of the graph");
  }
  if (contract.intersects(del)) fail(ErrorCode::kPrecondition, "contract and delete sets overlap");

  detail::SmallUnionFind uf;
  EdgeSet forest;
  EdgeSet loops_deleted;
  for (EdgeId e : contract) {
    Endpoints p = g.ends(e);
    if (uf.find(p.u) != uf.find(p.v)) {
      uf.unite(p.u, p.v);
      forest.insert(e);
      continue;
    }
    // Closing cycle: e plus the forest path between its ends.
    EdgeSet cyc = forest | EdgeSet::single(e);
    bool pruned = true;
    while (pruned) {
      pruned = false;
      std::array<int, kMaxIds> deg{};
      for (EdgeId f : cyc) {
        ++deg[static_cast<std::size_t>(g.ends(f).u)];
        ++deg[static_cast<std::size_t>(g.ends(f).v)];
      }
      for (EdgeId f : cyc) {
        Endpoints q = g.ends(f);
        if (f != e && (deg[static_cast<std::size_t>(q.u)] == 1 || deg[static_cast<std::size_t>(q.v)] == 1)) {
          cyc.erase(f);
          pruned = true;
        }
      }
    }
    if (!w.is_balanced_cycle(cyc)) {
      fail(ErrorCode::kLoopContraction, "edge " + std::to_string(e) + " is an unbalanced loop when contracted");
    }
    loops_deleted.insert(e);
  }

  MinorResult out;
  out.vertex_map.fill(-1);
  std::array<VertexId, kMaxIds> rep{};
  rep.fill(kMaxIds);
  for (VertexId v : g.vertices()) {
    int r = uf.find(v);
    rep[static_cast<std::size_t>(r)] = std::min(rep[static_cast<std::size_t>(r)], v);
  }
  MultiGraph h;
  for (VertexId v : g.vertices()) {
    VertexId target = rep[static_cast<std::size_t>(uf.find(v))];
    out.vertex_map[static_cast<std::size_t>(v)] = target;
    if (!h.has_vertex(target)) h.add_vertex(target);
  }
  const EdgeSet kept = g.edges() - contract - del;
  for (EdgeId e : kept) {
    Endpoints p = g.ends(e);
    h.add_edge(e, out.vertex_map[static_cast<std::size_t>(p.u)], out.vertex_map[static_cast<std::size_t>(p.v)]);
  }
  auto lift = [&](EdgeSet c) {
    EdgeSet cyc = c | forest;
    bool pruned = true;
    while (pruned) {
      pruned = false;
      std::array<int, kMaxIds> deg{};
      for (EdgeId f : cyc) {
        ++deg[static_cast<std::size_t>(g.ends(f).u)];
        ++deg[static_cast<std::size_t>(g.ends(f).v)];
      }
      for (EdgeId f : cyc & forest) {
        Endpoints q = g.ends(f);
        if (deg[static_cast<std::size_t>(q.u)] == 1 || deg[static_cast<std::size_t>(q.v)] == 1) {
          cyc.erase(f);
          pruned = true;
        }
      }
    }
    return cyc;
  };
  out.graph = BiasedGraph::from_predicate(
      std::move(h), [&](EdgeSet c) { return w.is_balanced_cycle(lift(c)); }, false);
  out.contracted = forest;
  out.deleted = del | loops_deleted;
  return out;
}

inline BiasedGraph minor(const BiasedGraph& w, EdgeSet contract, EdgeSet del) {
  return minor_with_map(w, contract, del).graph;
}

}  // namespace biasforge

#endif  // BIASFORGE_FRAME_MATROID_HPP_
