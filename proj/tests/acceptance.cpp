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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "biasforge/biasforge.hpp"
#include "test_support.hpp"

namespace bf = biasforge;
namespace bt = biasforge::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures with a short description of the first few.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  int failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

// Rank computed from the formula with independent component counting.
int oracle_rank(const bf::BiasedGraph& w, bf::EdgeSet x) { return bt::oracle_rank_of(w, x); }

bool oracle_is_cocircuit(const bf::BiasedGraph& w, bf::EdgeSet d) {
  const bf::EdgeSet e = w.edges();
  if (d.empty()) return false;
  const int r = oracle_rank(w, e);
  if (oracle_rank(w, e - d) != r - 1) return false;
  for (bf::EdgeId f : d) {
    if (oracle_rank(w, (e - d) | bf::EdgeSet::single(f)) != r) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Check c;
  const bf::Matroid u24 = bf::Matroid::uniform(2, bf::EdgeSet{0, 1, 2, 3});
  const bf::RepresentationSet set = bf::enumerate_representations(u24, 4);
  c.expect(set.reps.size() == 3, "expected 3 representations, got " + std::to_string(set.reps.size()));
  for (const bf::BiasedGraph& w : set.reps) c.expect(w.is_contrabalanced(), "representation not contrabalanced");
  c.expect(set.orbits.size() == 1, "expected 1 orbit, got " + std::to_string(set.orbits.size()));
  std::vector<bf::BiasedGraph> shipped;
  for (const char* name : {"u24_four_links", "u24_three_links_loop", "u24_two_links_two_loops"}) {
    shipped.push_back(bf::fixture(name));
  }
  for (const bf::BiasedGraph& w : shipped) {
    bool found = false;
    for (const bf::BiasedGraph& r : set.reps) found |= bf::biased_graph_isomorphic(w, r).has_value();
    c.expect(found, "shipped U(2,4) representation missing from the census");
  }
  return c.outcome("3 representations, all contrabalanced, 1 roll-up orbit");
}

Outcome criterion2() {
  Check c;
  bt::Rng rng(2026);
  int pinches = 0, splits = 0, families = 0;
  for (int trial = 0; trial < 220; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int m = n + static_cast<int>(rng() % static_cast<unsigned>(15 - n));
    bf::MultiGraph h = bt::random_connected_graph(rng, n, m, 0.0);
    const bf::VertexId u = static_cast<bf::VertexId>(rng() % static_cast<unsigned>(n));
    bf::VertexId v = static_cast<bf::VertexId>(rng() % static_cast<unsigned>(n - 1));
    if (v >= u) ++v;
    const bf::BiasedGraph p = bf::pinch(h, u, v);
    ++pinches;
    c.expect(bf::matroid_equal(bf::matroid_of(p), bf::cycle_matroid(h)), "pinch changed the matroid");
    const bf::VertexId merged = std::min(u, v);
    if (bf::is_balancing_vertex(p, merged) && bf::is_signed(p)) {
      ++splits;
      c.expect(bf::matroid_equal(bf::cycle_matroid(bf::split(p, merged)), bf::matroid_of(p)), "split of a pinch");
    }
  }
  for (int trial = 0; trial < 220; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int base = n - 2 + static_cast<int>(rng() % 4);
    const int apex = 2 + static_cast<int>(rng() % 5);
    const int loops = static_cast<int>(rng() % 3);
    if (base + apex + loops > 14) continue;
    const int classes = 1 + static_cast<int>(rng() % 3);
    const bf::BiasedGraph w = bt::random_almost_balanced(rng, n, base, apex, classes, loops);
    if (!bf::is_connected(w.graph())) continue;
    const bf::Matroid f = bf::matroid_of(w);
    if (auto s = bf::is_signed(w); s && bf::is_balancing_vertex(w, 0) && loops == 0) {
      ++splits;
      c.expect(bf::matroid_equal(bf::cycle_matroid(bf::split(w, 0)), f), "split of a signed graph");
    }
    const auto ab = bf::almost_balanced_witness(w);
    if (!ab || w.is_balanced()) continue;
    const bf::RollupFamily fam = bf::rollup_family(w, ab->vertex);
    ++families;
    c.expect(bf::matroid_equal(bf::matroid_of(fam.base), f), "roll-up family base");
    for (const bf::BiasedGraph& member : fam.members) {
      c.expect(bf::matroid_equal(bf::matroid_of(member), f), "roll-up family member");
    }
  }
  const int total = pinches + splits + families;
  c.expect(total >= 500, "only " + std::to_string(total) + " instances");
  return c.outcome(std::to_string(pinches) + " pinches, " + std::to_string(splits) + " splits, " +
                   std::to_string(families) + " roll-up families");
}

Outcome criterion3() {
  Check c;
  bt::Rng rng(3033);
  int instances = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = n + static_cast<int>(rng() % static_cast<unsigned>(15 - n));
    bf::MultiGraph g = bt::random_connected_graph(rng, n, m, 0.15);
    const bf::BiasedGraph w = trial % 3 == 0   ? bt::random_gain_graph(rng, g, 3)
                              : trial % 3 == 1 ? bf::BiasedGraph::from_signature(g, bt::random_signature(rng, g, 2))
                                               : bf::BiasedGraph::contrabalanced(g);
    std::vector<bf::EdgeSet> catalog = bf::circuit_sets(w);
    std::vector<bf::EdgeSet> oracle = bt::oracle_circuits(w.edges(), [&](bf::EdgeSet x) { return oracle_rank(w, x); });
    std::sort(catalog.begin(), catalog.end());
    std::sort(oracle.begin(), oracle.end());
    c.expect(catalog == oracle, "catalog mismatch on trial " + std::to_string(trial));
    ++instances;
  }
  c.expect(instances >= 500, "too few instances");
  return c.outcome(std::to_string(instances) + " biased graphs, zero mismatches");
}

Outcome criterion4() {
  Check c;
  bt::Rng rng(4044);
  int separations = 0, mixed = 0, corollaries = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    bf::MultiGraph g = bt::random_connected_graph(rng, n, n + 2 + static_cast<int>(rng() % 6), 0.1);
    const bf::BiasedGraph w = bt::random_gain_graph(rng, g, 3);
    if (w.is_balanced()) continue;
    const bf::EdgeSet all = w.edges();
    const int full = oracle_rank(w, all);
    for (int k = 0; k < 40; ++k) {
      const bf::EdgeSet x(rng() & all.bits());
      const bf::EdgeSet y = all - x;
      if (x.empty() || y.empty()) continue;
      if (!bf::is_edge_set_connected(g, x) || !bf::is_edge_set_connected(g, y)) continue;
      ++separations;
      const int lambda_graph = bf::separation_of(g, x).order;
      const int lambda_matroid = oracle_rank(w, x) + oracle_rank(w, y) - full + 1;
      const bool bal_x = w.is_balanced_subgraph(x), bal_y = w.is_balanced_subgraph(y);
      const int identity = lambda_graph - (bal_x ? 1 : 0) - (bal_y ? 1 : 0) + 1;
      c.expect(lambda_matroid == identity, "identity fails on trial " + std::to_string(trial));
      const bf::MatroidSeparationReport r = bf::matroid_connectivity(w, x);
      c.expect(r.identity_applies && r.lambda_matroid == lambda_matroid && r.lambda_graph == lambda_graph,
               "library separation report disagrees");
      c.expect(std::abs(lambda_matroid - lambda_graph) <= 1, "orders differ by more than one");
      if (lambda_graph == 2 && bal_x != bal_y) {
        ++mixed;
        c.expect(lambda_matroid == 2, "balanced/unbalanced 2-separation is not a 2-separation of the matroid");
      }
      if (lambda_graph == 1) {
        ++corollaries;
        c.expect(lambda_matroid == ((bal_x || bal_y) ? 1 : 2), "order-1 corollary");
      }
      if (lambda_graph == 2 && bal_x && bal_y) {
        ++corollaries;
        c.expect(lambda_matroid == 1, "balanced/balanced order-2 corollary");
      }
      if (lambda_graph == 2 && !bal_x && !bal_y) {
        ++corollaries;
        c.expect(lambda_matroid == 3, "unbalanced/unbalanced order-2 corollary");
      }
    }
  }
  c.expect(separations >= 1000 && mixed >= 20 && corollaries >= 100, "too few separations exercised");
  return c.outcome(std::to_string(separations) + " separations, " + std::to_string(mixed) +
                   " balanced/unbalanced 2-separations, " + std::to_string(corollaries) + " corollary cases");
}

Outcome criterion5() {
  Check c;
  bt::Rng rng(5055);
  int instances = 0, vertices = 0, committed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 4000 && instances < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int base = n + static_cast<int>(rng() % 4);
    const int apex = 3 + static_cast<int>(rng() % 4);
    const int loops = static_cast<int>(rng() % 2);
    if (base + apex + loops > 12) continue;
    const bf::BiasedGraph w = bt::random_almost_balanced(rng, n, base, apex, 2 + static_cast<int>(rng() % 2), loops);
    if (w.edges().size() > 12 || bf::connectivity(w.graph()) < 3 || bf::balancing_vertices(w).empty()) continue;
    bf::CommitAnalyzer analyzer(w);
    if (!analyzer.uses_u24_equivalence()) continue;
    ++instances;
    for (bf::VertexId x : w.vertices()) {
      ++vertices;
      const bool minor_says = bf::has_u24_minor(bf::matroid_of(w.without_vertex(x)));
      const bool definition = bf::committed_by_definition(w, x);
      c.expect(minor_says == definition, "disagreement at vertex " + std::to_string(x) + " of trial " +
                                             std::to_string(trial));
      c.expect(analyzer.committed(x) == definition, "analyzer disagrees with the definition");
      committed += definition ? 1 : 0;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(instances >= 100 && committed > 0 && committed < vertices, "too few instances");
  return c.outcome(std::to_string(instances) + " instances, " + std::to_string(vertices) + " vertices (" +
                   std::to_string(committed) + " committed), zero disagreements in " + std::to_string(secs).substr(0, 5) +
                   " s");
}

Outcome criterion6() {
  Check c;
  bt::Rng rng(6066);
  int instances = 0, stars = 0;
  for (int trial = 0; trial < 3000 && instances < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    bf::MultiGraph g = bt::random_connected_graph(rng, n, n + static_cast<int>(rng() % 7), 0.15);
    const bf::BiasedGraph w = trial % 2 == 0 ? bt::random_gain_graph(rng, g, 3)
                                             : bf::BiasedGraph::from_signature(g, bt::random_signature(rng, g, 2));
    if (w.is_balanced() || !bf::is_k_connected(g, 2) || !w.balanced_loops().empty()) continue;
    ++instances;
    const bf::VertexSet balancing = bf::balancing_vertices(w);
    for (bf::VertexId v : g.vertices()) {
      ++stars;
      const bf::EdgeSet star = g.incident(v);
      c.expect(oracle_is_cocircuit(w, star) == !balancing.contains(v),
               "star at " + std::to_string(v) + " on trial " + std::to_string(trial));
    }
  }
  c.expect(instances >= 200, "too few instances");
  return c.outcome(std::to_string(instances) + " instances, " + std::to_string(stars) + " stars");
}

Outcome criterion7() {
  Check c;
  const bf::BiasedGraph w = bf::fixture("lobe_example");
  const bf::Theorem1Report r = bf::verify_theorem1(w);
  c.expect(r.plan.lobes.size() == 1, "expected one lobe");
  c.expect(r.reduced_within_six && r.reduced_vertices <= 6, "reduction has too many vertices");
  c.expect(r.unclassified_count == 0, std::to_string(r.unclassified_count) + " unclassified representations");
  c.expect(r.enlargements_are_representations, "an enlargement is not a representation");
  c.expect(r.holds(), "report does not hold");
  std::map<bf::LabeledKey, bf::RepresentationOrigin> origin;
  for (std::size_t i = 0; i < r.direct.size(); ++i) origin[bf::canonical_labeling(r.direct[i].graph()).key] = r.origins[i];
  const bf::Matroid reduced = bf::matroid_of(r.plan.reduced);
  std::set<bf::LabeledKey> reduced_keys;
  for (const bf::BiasedGraph& psi : bf::labeled_representations(reduced, bf::RepresentationQuery{reduced.rank()})) {
    reduced_keys.insert(bf::canonical_labeling(psi.graph()).key);
  }
  for (int i = 1; i <= 4; ++i) {
    const std::string k = std::to_string(i);
    const bf::BiasedGraph psi = bf::fixture("lobe_psi" + k);
    c.expect(reduced_keys.count(bf::canonical_labeling(psi.graph()).key) == 1, "psi" + k + " not enumerated");
    const bf::BiasedGraph omega = bf::fixture("lobe_omega" + k);
    auto it = origin.find(bf::canonical_labeling(omega.graph()).key);
    c.expect(it != origin.end(), "omega" + k + " not among the representations");
    if (it != origin.end()) {
      c.expect(it->second == bf::RepresentationOrigin::kEnlargement ||
                   it->second == bf::RepresentationOrigin::kRollUp,
               "omega" + k + " unclassified");
    }
    bool is_enlargement = false;
    for (const bf::BiasedGraph& e : r.enlargements) {
      is_enlargement |= bf::canonical_labeling(e.graph()).key == bf::canonical_labeling(omega.graph()).key;
    }
    c.expect(is_enlargement, "omega" + k + " is not produced as an enlargement");
  }
  return c.outcome("reduced to " + std::to_string(r.reduced_vertices) + " vertices; " + std::to_string(r.direct.size()) +
                   " representations: " + std::to_string(r.rollup_count) + " roll-ups, " +
                   std::to_string(r.enlargement_count) + " enlargements, 0 unclassified; omega1..omega4 found");
}

// Orbit counts produced by the census for fixtures meeting the hypotheses.
const std::map<std::string, int>& orbit_goldens() {
  static const std::map<std::string, int> goldens = {
      {"apex_k4_3", 1},
      {"apex_k5_3", 1},
      {"case_lobe_off_balancing_vertex", 2},
      {"case_pinch_lobe", 1},
      {"case_three_classes", 4},
      {"lobe_example", 2},
      {"lobe_example_reduced", 2},
      {"lobe_omega2", 2},
      {"lobe_omega4", 2},
      {"lobe_psi1", 2},
      {"lobe_psi2", 2},
      {"lobe_psi4", 2},
      {"rollup_omega", 1},
      {"rollup_omega0", 1},
      {"rollup_omega2", 1},
      {"u24_four_links", 1},
      {"u24_three_links_loop", 1},
      {"u24_two_links_two_loops", 1},
  };
  return goldens;
}

// Orbits of the representations found by the naive oracle.
int naive_orbit_count(const bf::Matroid& target) {
  std::vector<bf::BiasedGraph> naive;
  for (const bf::MultiGraph& g : bt::naive_representations(target.ground(), target.rank(), [&](bf::EdgeSet x) {
         return target.rank(x);
       })) {
    naive.push_back(bf::BiasedGraph::from_predicate(g, [&](bf::EdgeSet cyc) { return target.is_circuit(cyc); }));
  }
  return static_cast<int>(bf::rollup_orbits(bf::isomorphism_classes(naive)).size());
}

Outcome criterion8() {
  Check c;
  std::ostringstream counts;
  int fixtures = 0, naive_checked = 0;
  for (const bf::Fixture& f : bf::fixture_library()) {
    const bf::BiasedGraph w = bf::fixture(f.name);
    const bf::Limits limits = bf::default_limits().with_ground(w.edges().size());
    try {
      bf::require_theorem1_hypotheses(w, limits);
    } catch (const bf::Error&) {
      c.expect(orbit_goldens().count(f.name) == 0, std::string(f.name) + " should meet the hypotheses");
      continue;
    }
    ++fixtures;
    const bf::RepresentationSet set = bf::enumerate_representations(bf::matroid_of(w), w.vertices().size(), limits);
    const int orbits = static_cast<int>(set.orbits.size());
    counts << (fixtures > 1 ? ", " : "") << f.name << "=" << orbits;
    c.expect(orbits <= 27, std::string(f.name) + " has " + std::to_string(orbits) + " orbits");
    if (w.edges().size() <= 8 && set.vertices <= 4) {
      ++naive_checked;
      c.expect(naive_orbit_count(set.target) == orbits, std::string(f.name) + " naive orbit count differs");
    }
    auto it = orbit_goldens().find(f.name);
    c.expect(it != orbit_goldens().end() && it->second == orbits,
             std::string(f.name) + " orbit count " + std::to_string(orbits) + " differs from its golden");
  }
  c.expect(fixtures == static_cast<int>(orbit_goldens().size()), "fixture set changed");
  return c.outcome(std::to_string(fixtures) + " fixtures, all at most 27 orbits, " + std::to_string(naive_checked) +
                   " confirmed by the naive oracle (" + counts.str() + ")");
}

Outcome criterion9() {
  Check c;
  const bf::BiasedGraph w = bf::fixture("apex_k5_3");
  const bf::Limits limits = bf::default_limits().with_ground(w.edges().size());
  c.expect(bf::is_k_connected(w.graph(), 4), "fixture is not 4-connected");
  c.expect(bf::almost_balanced_witness(w).has_value(), "fixture is not almost balanced");
  const bf::RepresentationSet set = bf::enumerate_representations(bf::matroid_of(w), w.vertices().size(), limits);
  c.expect(set.orbits.size() == 1, "expected one orbit, got " + std::to_string(set.orbits.size()));
  return c.outcome("apex over K5 with 3 classes: " + std::to_string(set.reps.size()) + " representations in " +
                   std::to_string(set.orbits.size()) + " roll-up orbit");
}

Outcome criterion10() {
  Check c;
  std::vector<std::pair<std::string, bf::Matroid>> targets;
  targets.emplace_back("U(2,4)", bf::Matroid::uniform(2, bf::EdgeSet{0, 1, 2, 3}));
  targets.emplace_back("U(2,5)", bf::Matroid::uniform(2, bf::EdgeSet{0, 1, 2, 3, 4}));
  targets.emplace_back("U(3,5)", bf::Matroid::uniform(3, bf::EdgeSet{0, 1, 2, 3, 4}));
  targets.emplace_back("U(3,6)", bf::Matroid::uniform(3, bf::EdgeSet{0, 1, 2, 3, 4, 5}));
  targets.emplace_back("contrabalanced K4",
                       bf::matroid_of(bf::BiasedGraph::contrabalanced(bt::complete_graph(4))));
  bt::Rng rng(1010);
  for (int trial = 0; trial < 400 && targets.size() < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int m = n + 2 + static_cast<int>(rng() % static_cast<unsigned>(7 - n));
    bf::MultiGraph g = bt::random_connected_graph(rng, n, m, 0.15);
    const bf::BiasedGraph w = trial % 2 == 0 ? bt::random_gain_graph(rng, g, 3)
                                             : bf::BiasedGraph::from_signature(g, bt::random_signature(rng, g, 2));
    const bf::Matroid target = bf::matroid_of(w);
    if (target.size() > 8 || target.rank() > 4 || !target.is_connected() || !bf::has_u24_minor(target)) continue;
    targets.emplace_back("random " + std::to_string(trial), target);
  }
  int compared = 0;
  for (const auto& [name, target] : targets) {
    const int n = target.rank();
    const bf::RepresentationSet set = bf::enumerate_representations(target, 4);
    std::vector<bf::BiasedGraph> naive;
    for (const bf::MultiGraph& g : bt::naive_representations(target.ground(), n, [&](bf::EdgeSet x) {
           return target.rank(x);
         })) {
      naive.push_back(bf::BiasedGraph::from_predicate(g, [&](bf::EdgeSet cyc) { return target.is_circuit(cyc); }));
    }
    const std::vector<bf::BiasedGraph> naive_classes = bf::isomorphism_classes(naive);
    bool same = naive_classes.size() == set.reps.size();
    for (const bf::BiasedGraph& a : naive_classes) {
      bool found = false;
      for (const bf::BiasedGraph& b : set.reps) found |= bf::biased_graph_isomorphic(a, b).has_value();
      same &= found;
    }
    c.expect(same, name + ": census " + std::to_string(set.reps.size()) + " vs naive " +
                       std::to_string(naive_classes.size()));
    ++compared;
  }
  c.expect(compared >= 20, "too few targets");
  return c.outcome(std::to_string(compared) + " targets with at most 8 elements and 4 vertices agree exactly");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"U(2,4) census", criterion1},
      {"transform preservation", criterion2},
      {"circuit catalog equals rank oracle", criterion3},
      {"connectivity identity and separation corollaries", criterion4},
      {"committedness equivalence", criterion5},
      {"star cocircuit characterization", criterion6},
      {"representation theorem on the lobe example", criterion7},
      {"orbit bound on hypothesis fixtures", criterion8},
      {"unique orbit for the 4-connected apex", criterion9},
      {"naive oracle completeness", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << " [" << timing << "]" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
