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

#ifndef BIASFORGE_CENSUS_HPP_
#define BIASFORGE_CENSUS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "biasforge/analysis.hpp"
#include "biasforge/representations.hpp"
#include "biasforge/transforms.hpp"

namespace biasforge {

// ---------------------------------------------------------------------------
// Isomorphism of biased graphs

struct Isomorphism {
  std::array<VertexId, kMaxIds> vertex_map{};  // vertex of the first -> vertex of the second
  std::array<EdgeId, kMaxIds> edge_map{};      // edge of the first -> edge of the second
};

namespace detail {

// (links, balanced loops, unbalanced loops) at each vertex, sorted.
using VertexProfile = std::tuple<int, int, int>;

inline VertexProfile vertex_profile(const BiasedGraph& w, VertexId v) {
  const MultiGraph& g = w.graph();
  const EdgeSet loops = g.loops_at(v);
  const EdgeSet bad = loops & w.unbalanced_loops();
  return {g.links_at(v).size(), (loops - bad).size(), bad.size()};
}

struct IsoInvariant {
  std::vector<VertexProfile> profiles;
  std::vector<std::pair<int, int>> cycle_counts;  // (balanced, unbalanced) by length
  bool operator==(const IsoInvariant&) const = default;
  auto operator<=>(const IsoInvariant&) const = default;
};

inline IsoInvariant iso_invariant(const BiasedGraph& w) {
  IsoInvariant inv;
  for (VertexId v : w.vertices()) inv.profiles.push_back(vertex_profile(w, v));
  std::sort(inv.profiles.begin(), inv.profiles.end());
  inv.cycle_counts.assign(static_cast<std::size_t>(w.edges().size() + 1), {0, 0});
  for (EdgeSet c : w.balanced_cycles()) ++inv.cycle_counts[static_cast<std::size_t>(c.size())].first;
  for (EdgeSet c : w.unbalanced_cycles()) ++inv.cycle_counts[static_cast<std::size_t>(c.size())].second;
  return inv;
}

}  // namespace detail

// A vertex and edge bijection preserving incidence and bias, if one exists.
inline std::optional<Isomorphism> biased_graph_isomorphic(const BiasedGraph& a, const BiasedGraph& b) {
  const MultiGraph& ga = a.graph();
  const MultiGraph& gb = b.graph();
  if (ga.num_vertices() != gb.num_vertices() || ga.num_edges() != gb.num_edges()) return std::nullopt;
  if (detail::iso_invariant(a) != detail::iso_invariant(b)) return std::nullopt;

  const std::vector<VertexId> va = ga.vertices().to_vector();
  const std::vector<VertexId> vb = gb.vertices().to_vector();
  auto multiplicity = [](const MultiGraph& g, VertexId x, VertexId y) {
    return (g.incident(x) & g.incident(y) & (x == y ? g.loops_at(x) : g.links())).size();
  };

  // Cycles of a keyed by their largest edge in a's edge order.
  const std::vector<EdgeId> ea = ga.edges().to_vector();
  std::array<std::vector<EdgeSet>, kMaxIds> closing;
  for (EdgeSet c : a.cycles()) closing[static_cast<std::size_t>(c.last())].push_back(c);

  Isomorphism iso;
  iso.vertex_map.fill(-1);
  iso.edge_map.fill(-1);
  VertexSet used_b;
  EdgeSet used_e;

  auto edges_ok = [&](auto&& self, std::size_t i) -> bool {
    if (i == ea.size()) return true;
    const EdgeId e = ea[i];
    const Endpoints p = ga.ends(e);
    const VertexId x = iso.vertex_map[static_cast<std::size_t>(p.u)];
    const VertexId y = iso.vertex_map[static_cast<std::size_t>(p.v)];
    const EdgeSet options = (gb.incident(x) & gb.incident(y) & (x == y ? gb.loops_at(x) : gb.links())) - used_e;
    for (EdgeId f : options) {
      iso.edge_map[static_cast<std::size_t>(e)] = f;
      used_e.insert(f);
      bool ok = true;
      for (EdgeSet c : closing[static_cast<std::size_t>(e)]) {
        EdgeSet image;
        for (EdgeId d : c) image.insert(iso.edge_map[static_cast<std::size_t>(d)]);
        if (a.is_balanced_cycle(c) != b.is_balanced_cycle(image)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
      used_e.erase(f);
      iso.edge_map[static_cast<std::size_t>(e)] = -1;
    }
    return false;
  };

  auto vertices_ok = [&](auto&& self, std::size_t i) -> bool {
    if (i == va.size()) return edges_ok(edges_ok, 0);
    const VertexId x = va[i];
    const auto profile = detail::vertex_profile(a, x);
    for (VertexId y : vb) {
      if (used_b.contains(y) || detail::vertex_profile(b, y) != profile) continue;
      bool ok = multiplicity(ga, x, x) == multiplicity(gb, y, y);
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = multiplicity(ga, x, va[j]) == multiplicity(gb, y, iso.vertex_map[static_cast<std::size_t>(va[j])]);
      }
      if (!ok) continue;
      iso.vertex_map[static_cast<std::size_t>(x)] = y;
      used_b.insert(y);
      if (self(self, i + 1)) return true;
      used_b.erase(y);
      iso.vertex_map[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };

  if (vertices_ok(vertices_ok, 0)) return iso;
  return std::nullopt;
}

// One representative per isomorphism class, in input order.
inline std::vector<BiasedGraph> isomorphism_classes(const std::vector<BiasedGraph>& ws) {
  std::vector<BiasedGraph> reps;
  std::vector<detail::IsoInvariant> invs;
  for (const BiasedGraph& w : ws) {
    detail::IsoInvariant inv = detail::iso_invariant(w);
    bool seen = false;
    for (std::size_t i = 0; i < reps.size() && !seen; ++i) {
      seen = invs[i] == inv && biased_graph_isomorphic(reps[i], w).has_value();
    }
    if (!seen) {
      reps.push_back(w);
      invs.push_back(std::move(inv));
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Roll-up orbits

// Every biased graph reachable from w by one roll-up family at one
// almost-balancing vertex: the unrolled base and each member.
inline std::vector<BiasedGraph> rollup_neighbours(const BiasedGraph& w) {
  std::vector<BiasedGraph> out;
  for (VertexId u : almost_balancing_vertices(w)) {
    RollupFamily fam = rollup_family(w, u);
    out.push_back(fam.base);
    for (BiasedGraph& m : fam.members) out.push_back(std::move(m));
  }
  return out;
}

// Partition of reps (given as indices) where i ~ j when j is isomorphic to a
// member of a roll-up family of i, closed under transitivity. Reps that are
// not almost balanced form singleton blocks.
inline std::vector<std::vector<std::size_t>> rollup_orbits(const std::vector<BiasedGraph>& reps) {
  const std::size_t n = reps.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<detail::IsoInvariant> invs;
  for (const BiasedGraph& w : reps) invs.push_back(detail::iso_invariant(w));
  for (std::size_t i = 0; i < n; ++i) {
    for (const BiasedGraph& m : rollup_neighbours(reps[i])) {
      const detail::IsoInvariant inv = detail::iso_invariant(m);
      for (std::size_t j = 0; j < n; ++j) {
        if (find(i) == find(j) || invs[j] != inv) continue;
        if (biased_graph_isomorphic(m, reps[j])) parent[find(j)] = find(i);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Census

struct RepresentationSet {
  Matroid target;
  int vertices = 0;
  std::vector<BiasedGraph> labeled;  // one per vertex relabeling class
  std::vector<BiasedGraph> reps;     // one per isomorphism class
  std::vector<std::vector<std::size_t>> orbits;
};

// Throws GraphicTarget for graphic targets; a binary nongraphic target is
// accepted.
inline void require_nongraphic(const Matroid& target, const Limits& limits) {
  if (has_u24_minor(target, limits)) return;
  if (is_graphic_bruteforce(target, limits)) {
    fail(ErrorCode::kGraphicTarget, "target is graphic; graphic targets have their own classification");
  }
}

// Every biased graph, up to isomorphism, on rank(target) vertices whose frame
// matroid is the target, grouped into roll-up orbits.
inline RepresentationSet enumerate_representations(const Matroid& target, int max_vertices,
                                                   const Limits& limits = default_limits()) {
  if (target.size() > limits.census_ground) {
    fail(ErrorCode::kCapExceeded, "census limited to " + std::to_string(limits.census_ground) + " elements");
  }
  if (max_vertices > limits.census_vertices) {
    fail(ErrorCode::kCapExceeded, "census limited to " + std::to_string(limits.census_vertices) + " vertices");
  }
  if (target.size() == 0 || !target.is_connected()) {
    fail(ErrorCode::kDisconnectedTarget, "target matroid is not connected");
  }
  require_nongraphic(target, limits);
  RepresentationSet out;
  out.target = target;
  out.vertices = target.rank();
  if (out.vertices > max_vertices) {
    fail(ErrorCode::kCapExceeded, "representations need " + std::to_string(out.vertices) + " vertices; cap is " +
                                      std::to_string(max_vertices));
  }
  RepresentationQuery q;
  q.vertices = out.vertices;
  out.labeled = labeled_representations(target, q);
  out.reps = isomorphism_classes(out.labeled);
  out.orbits = rollup_orbits(out.reps);
  return out;
}

// ---------------------------------------------------------------------------
// End-to-end check of the representation theorem on one biased graph

enum class RepresentationOrigin { kRollUp, kEnlargement, kUnclassified };

inline const char* representation_origin_name(RepresentationOrigin o) {
  switch (o) {
    case RepresentationOrigin::kRollUp: return "roll-up";
    case RepresentationOrigin::kEnlargement: return "enlargement";
    case RepresentationOrigin::kUnclassified: return "unclassified";
  }
  return "?";
}

struct Theorem1Report {
  ReductionPlan plan;
  int reduced_vertices = 0;
  bool reduced_within_six = false;
  int reduced_representations = 0;
  int skipped_theta_triangles = 0;  // representations of the reduction with a lobe triangle as a contrabalanced theta
  std::vector<BiasedGraph> enlargements;
  std::vector<BiasedGraph> rollups;
  std::vector<BiasedGraph> direct;
  std::vector<RepresentationOrigin> origins;  // parallel to direct
  int rollup_count = 0;
  int enlargement_count = 0;
  int unclassified_count = 0;
  bool enlargements_are_representations = false;
  int isomorphism_classes = 0;
  int orbit_count = 0;

  bool holds() const {
    return reduced_within_six && unclassified_count == 0 && enlargements_are_representations && orbit_count <= 27;
  }
};

// Checks the theorem's hypotheses: 3-connected, almost balanced, no balanced
// loop, nongraphic frame matroid.
inline void require_theorem1_hypotheses(const BiasedGraph& w, const Limits& limits) {
  if (connectivity(w.graph()) < 3) fail(ErrorCode::kPrecondition, "graph is not 3-connected");
  if (!almost_balanced_witness(w)) fail(ErrorCode::kNotAlmostBalanced, "biased graph is not almost balanced");
  if (!w.balanced_loops().empty()) fail(ErrorCode::kPrecondition, "biased graph has a balanced loop");
  try {
    require_nongraphic(matroid_of(w), limits.with_ground(w.edges().size()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kGraphicTarget) fail(ErrorCode::kPrecondition, "frame matroid is graphic");
    throw;
  }
}

inline Theorem1Report verify_theorem1(const BiasedGraph& w, const Limits& limits = default_limits()) {
  require_theorem1_hypotheses(w, limits);
  Theorem1Report r;
  r.plan = find_lobes(w, limits);
  r.reduced_vertices = r.plan.reduced.vertices().size();
  r.reduced_within_six = r.reduced_vertices <= 6;

  std::set<LabeledKey> enlarged_keys;
  const Matroid reduced_target = matroid_of(r.plan.reduced);
  RepresentationQuery rq;
  rq.vertices = reduced_target.rank();
  for (const BiasedGraph& psi : labeled_representations(reduced_target, rq)) {
    ++r.reduced_representations;
    try {
      BiasedGraph omega = h_enlarge(r.plan, psi);
      if (enlarged_keys.insert(canonical_labeling(omega.graph()).key).second) r.enlargements.push_back(omega);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCircuitShapeUnsupported) throw;
      ++r.skipped_theta_triangles;
    }
  }

  std::set<LabeledKey> rollup_keys;
  std::vector<BiasedGraph> candidates{w};
  for (BiasedGraph& m : rollup_neighbours(w)) candidates.push_back(std::move(m));
  for (BiasedGraph& m : candidates) {
    if (rollup_keys.insert(canonical_labeling(m.graph()).key).second) r.rollups.push_back(std::move(m));
  }

  const Matroid target = matroid_of(w);
  RepresentationQuery q;
  q.vertices = target.rank();
  r.direct = labeled_representations(target, q);
  std::set<LabeledKey> direct_keys;
  for (const BiasedGraph& d : r.direct) {
    const LabeledKey key = canonical_labeling(d.graph()).key;
    direct_keys.insert(key);
    if (rollup_keys.count(key)) {
      r.origins.push_back(RepresentationOrigin::kRollUp);
      ++r.rollup_count;
    } else if (enlarged_keys.count(key)) {
      r.origins.push_back(RepresentationOrigin::kEnlargement);
      ++r.enlargement_count;
    } else {
      r.origins.push_back(RepresentationOrigin::kUnclassified);
      ++r.unclassified_count;
    }
  }
  r.enlargements_are_representations = std::all_of(enlarged_keys.begin(), enlarged_keys.end(),
                                                    [&](const LabeledKey& k) { return direct_keys.count(k) > 0; });
  const std::vector<BiasedGraph> classes = isomorphism_classes(r.direct);
  r.isomorphism_classes = static_cast<int>(classes.size());
  r.orbit_count = static_cast<int>(rollup_orbits(classes).size());
  return r;
}

}  // namespace biasforge

#endif  // BIASFORGE_CENSUS_HPP_
