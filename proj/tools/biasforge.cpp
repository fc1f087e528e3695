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

// biasforge command-line tool. Inputs are document files (text, or JSON when
// the name ends in .json) or names of built-in fixtures.
//
// Exit codes: 0 success, 1 validation failure, 2 cap exceeded, 3 usage error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biasforge/biasforge.hpp"

namespace bf = biasforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCap = 2;
constexpr int kExitUsage = 3;

int exit_code_for(bf::ErrorCode code) {
  switch (code) {
    case bf::ErrorCode::kCapExceeded: return kExitCap;
    case bf::ErrorCode::kUsage: return kExitUsage;
    default: return kExitInvalid;
  }
}

struct Input {
  std::string source;
  bf::Document doc;
};

Input load(const std::string& source) {
  Input in{source, {}};
  if (std::filesystem::exists(source)) {
    if (source.size() >= 5 && source.compare(source.size() - 5, 5, ".json") == 0) {
      std::ifstream f(source);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        bf::fail(bf::ErrorCode::kParse, source + ": " + e.what());
      }
      in.doc = bf::document_from_json(j);
    } else {
      in.doc = bf::read_document(source);
    }
    return in;
  }
  for (const bf::Fixture& f : bf::fixture_library()) {
    if (source == f.name) {
      in.doc = bf::fixture_document(source);
      return in;
    }
  }
  bf::fail(bf::ErrorCode::kUsage, "no such file or fixture: " + source);
}

bf::VertexId vertex_named(const bf::Document& doc, const std::string& name) {
  for (const auto& [id, n] : doc.names) {
    if (n == name) return id;
  }
  bf::fail(bf::ErrorCode::kUsage, "unknown vertex '" + name + "'");
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  bf::fail(bf::ErrorCode::kUsage, what + " must be an integer, got '" + s + "'");
}

// Names for every vertex of g: existing names are kept and new vertices get
// their id, primed until unique.
std::map<bf::VertexId, std::string> names_for(const bf::MultiGraph& g, const std::map<bf::VertexId, std::string>& known) {
  std::map<bf::VertexId, std::string> out;
  std::set<std::string> taken;
  for (bf::VertexId v : g.vertices()) {
    auto it = known.find(v);
    if (it != known.end()) {
      out[v] = it->second;
      taken.insert(it->second);
    }
  }
  for (bf::VertexId v : g.vertices()) {
    if (out.count(v)) continue;
    std::string name = std::to_string(v);
    while (taken.count(name)) name += "'";
    out[v] = name;
    taken.insert(name);
  }
  return out;
}

std::string set_text(bf::EdgeSet s) {
  std::string out = "{";
  bool first = true;
  for (bf::EdgeId e : s) {
    out += (first ? "" : " ") + std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string vertex_list(const bf::Document& doc, bf::VertexSet vs) {
  std::string out;
  for (bf::VertexId v : vs) out += (out.empty() ? "" : " ") + doc.name_of(v);
  return out.empty() ? "none" : out;
}

std::string connectivity_text(int k) { return k == bf::kInfiniteConnectivity ? "infinite" : std::to_string(k); }

void print_graph(const bf::BiasedGraph& w, const std::map<bf::VertexId, std::string>& names, bool json, bool dot,
                 const std::string& title) {
  if (dot) {
    std::cout << bf::emit_dot(w, names, title);
  } else if (json) {
    std::cout << bf::document_to_json(bf::document_of(w, names)).dump(2) << '\n';
  } else {
    std::cout << bf::emit_document(w, names);
  }
}

// ---------------------------------------------------------------------------

int cmd_validate(const Input& in, bool json) {
  bf::BiasedGraph w;
  try {
    w = in.doc.to_biased();
  } catch (const bf::Error& e) {
    if (e.code() == bf::ErrorCode::kCapExceeded) throw;
    if (json) {
      std::cout << nlohmann::json{{"valid", false}, {"error", bf::error_code_name(e.code())}, {"message", e.what()}}.dump(2)
                << '\n';
    } else {
      std::cout << "valid: no\n" << e.what() << '\n';
    }
    return kExitInvalid;
  }
  const bf::VertexSet balancing = w.is_balanced() ? w.vertices() : bf::balancing_vertices(w);
  const auto witness = bf::almost_balanced_witness(w);
  const int k = bf::connectivity(w.graph());
  nlohmann::json classes = nlohmann::json::object();
  std::ostringstream class_text;
  if (!w.is_balanced()) {
    for (bf::VertexId v : balancing) {
      const bf::UnbalancingPartition p = bf::unbalancing_classes(w, v);
      nlohmann::json list = nlohmann::json::array();
      class_text << "unbalancing classes at " << in.doc.name_of(v) << ":";
      for (bf::EdgeSet c : p.classes) {
        list.push_back(c.to_vector());
        class_text << ' ' << set_text(c);
      }
      class_text << '\n';
      classes[in.doc.name_of(v)] = list;
    }
  }
  if (json) {
    nlohmann::json j{{"valid", true},
                     {"vertices", w.vertices().size()},
                     {"edges", w.edges().size()},
                     {"balanced", w.is_balanced()},
                     {"balancing_vertices", nlohmann::json::array()},
                     {"unbalancing_classes", classes},
                     {"connectivity", connectivity_text(k)}};
    for (bf::VertexId v : balancing) j["balancing_vertices"].push_back(in.doc.name_of(v));
    if (witness) {
      j["almost_balanced"] = {{"vertex", in.doc.name_of(witness->vertex)}, {"unbalanced_loops", witness->loops.to_vector()}};
    } else {
      j["almost_balanced"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "valid: yes\n";
  std::cout << "vertices: " << w.vertices().size() << "\nedges: " << w.edges().size() << '\n';
  std::cout << "balanced: " << (w.is_balanced() ? "yes" : "no") << '\n';
  std::cout << "balancing vertices: " << vertex_list(in.doc, balancing) << '\n';
  std::cout << class_text.str();
  if (witness) {
    std::cout << "almost balanced: yes, at " << in.doc.name_of(witness->vertex) << " after deleting "
              << set_text(witness->loops) << '\n';
  } else {
    std::cout << "almost balanced: no\n";
  }
  std::cout << "connectivity: " << connectivity_text(k) << '\n';
  return kExitOk;
}

int cmd_circuits(const Input& in, bool json) {
  const bf::BiasedGraph w = in.doc.to_biased();
  const std::vector<bf::Circuit> cs = bf::circuits(w);
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const bf::Circuit& c : cs) j.push_back({{"kind", bf::circuit_kind_name(c.kind)}, {"edges", c.edges.to_vector()}});
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "circuits: " << cs.size() << '\n';
  for (const bf::Circuit& c : cs) std::cout << bf::circuit_kind_name(c.kind) << ' ' << set_text(c.edges) << '\n';
  return kExitOk;
}

int cmd_rank(const Input& in, const std::vector<int>& edges, bool json) {
  const bf::BiasedGraph w = in.doc.to_biased();
  bf::EdgeSet x = w.edges();
  if (!edges.empty()) {
    x = bf::EdgeSet();
    for (int e : edges) {
      if (e < 0 || e >= bf::kMaxIds || !w.edges().contains(e)) {
        bf::fail(bf::ErrorCode::kUsage, "unknown edge " + std::to_string(e));
      }
      x.insert(e);
    }
  }
  const int r = bf::rank(w, x);
  if (json) {
    std::cout << nlohmann::json{{"edges", x.to_vector()}, {"rank", r}}.dump(2) << '\n';
  } else {
    std::cout << "rank " << set_text(x) << " = " << r << '\n';
  }
  return kExitOk;
}

int cmd_cocircuits(const Input& in, bool json) {
  const bf::BiasedGraph w = in.doc.to_biased();
  std::vector<bf::EdgeSet> cs = bf::cocircuits(bf::matroid_of(w));
  bf::sort_canonical(cs);
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (bf::EdgeSet c : cs) j.push_back(c.to_vector());
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "cocircuits: " << cs.size() << '\n';
  for (bf::EdgeSet c : cs) std::cout << set_text(c) << '\n';
  return kExitOk;
}

int cmd_committed(const Input& in, bool json) {
  const bf::BiasedGraph w = in.doc.to_biased();
  bf::CommitAnalyzer analyzer(w);
  nlohmann::json j = nlohmann::json::array();
  if (!json) std::cout << "vertex committed route hyperplane connected nonbinary graphic witness\n";
  for (const bf::CommitReport& r : analyzer.all()) {
    std::string witness = "-";
    if (r.witness) {
      witness = "contract " + set_text(r.witness->contract) + " keep {";
      for (std::size_t i = 0; i < 4; ++i) witness += (i ? " " : "") + std::to_string(r.witness->elements[i]);
      witness += "}";
    }
    const std::string graphic = r.graphic ? (*r.graphic ? "yes" : "no") : "-";
    if (json) {
      nlohmann::json row{{"vertex", in.doc.name_of(r.vertex)},
                         {"committed", r.committed},
                         {"route", bf::commit_route_name(r.route)},
                         {"hyperplane", r.hyperplane},
                         {"connected", r.connected},
                         {"nonbinary", r.nonbinary}};
      row["graphic"] = r.graphic ? nlohmann::json(*r.graphic) : nlohmann::json(nullptr);
      if (r.witness) {
        row["witness"] = {{"contract", r.witness->contract.to_vector()},
                          {"elements", std::vector<int>(r.witness->elements.begin(), r.witness->elements.end())}};
      }
      j.push_back(row);
    } else {
      std::cout << in.doc.name_of(r.vertex) << ' ' << (r.committed ? "yes" : "no") << ' '
                << bf::commit_route_name(r.route) << ' ' << (r.hyperplane ? "yes" : "no") << ' '
                << (r.connected ? "yes" : "no") << ' ' << (r.nonbinary ? "yes" : "no") << ' ' << graphic << ' '
                << witness << '\n';
    }
  }
  if (json) std::cout << j.dump(2) << '\n';
  return kExitOk;
}

struct CensusOptions {
  int max_vertices = 0;
  bool orbits = false;
  bool verify = false;
  bool json = false;
  bool dot = false;
};

int cmd_census(const Input& in, const CensusOptions& opt) {
  const bf::BiasedGraph w = in.doc.to_biased();
  const bf::Limits& limits = bf::default_limits();
  const int max_vertices = opt.max_vertices > 0 ? opt.max_vertices : limits.census_vertices;
  const bf::RepresentationSet set = bf::enumerate_representations(bf::matroid_of(w), max_vertices, limits);
  std::vector<std::size_t> orbit_of(set.reps.size());
  for (std::size_t o = 0; o < set.orbits.size(); ++o) {
    for (std::size_t i : set.orbits[o]) orbit_of[i] = o;
  }
  std::optional<bf::Theorem1Report> report;
  if (opt.verify) report = bf::verify_theorem1(w, limits);

  if (opt.json) {
    nlohmann::json j{{"vertices", set.vertices},
                     {"labeled_representations", set.labeled.size()},
                     {"representations", nlohmann::json::array()}};
    for (std::size_t i = 0; i < set.reps.size(); ++i) {
      nlohmann::json rep = bf::document_to_json(bf::document_of(set.reps[i]));
      if (opt.orbits) rep["orbit"] = orbit_of[i];
      j["representations"].push_back(rep);
    }
    if (opt.orbits) j["orbits"] = set.orbits;
    if (report) {
      j["theorem"] = {{"holds", report->holds()},
                      {"lobes", report->plan.lobes.size()},
                      {"reduced_vertices", report->reduced_vertices},
                      {"reduced_representations", report->reduced_representations},
                      {"skipped_theta_triangles", report->skipped_theta_triangles},
                      {"rollups", report->rollup_count},
                      {"enlargements", report->enlargement_count},
                      {"unclassified", report->unclassified_count},
                      {"isomorphism_classes", report->isomorphism_classes},
                      {"orbits", report->orbit_count}};
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "representations: " << set.reps.size() << " (labeled: " << set.labeled.size()
              << ", vertices: " << set.vertices << ")\n";
    for (std::size_t i = 0; i < set.reps.size(); ++i) {
      const std::string title = "representation " + std::to_string(i + 1);
      std::cout << "# " << title;
      if (opt.orbits) std::cout << " (orbit " << orbit_of[i] + 1 << ")";
      std::cout << '\n';
      print_graph(set.reps[i], {}, false, opt.dot, title);
    }
    if (opt.orbits) {
      std::cout << "orbits: " << set.orbits.size() << '\n';
      for (std::size_t o = 0; o < set.orbits.size(); ++o) {
        std::cout << "orbit " << o + 1 << ":";
        for (std::size_t i : set.orbits[o]) std::cout << ' ' << i + 1;
        std::cout << '\n';
      }
    }
    if (report) {
      std::cout << "lobes: " << report->plan.lobes.size() << '\n';
      for (const bf::Lobe& l : report->plan.lobes) {
        std::cout << "  " << bf::lobe_kind_name(l.kind) << " lobe " << set_text(l.edges) << " boundary "
                  << vertex_list(in.doc, l.boundary) << " interior " << vertex_list(in.doc, l.interior) << '\n';
      }
      std::cout << "reduced vertices: " << report->reduced_vertices << '\n';
      std::cout << "reduced representations: " << report->reduced_representations << " (contrabalanced-theta triangles: "
                << report->skipped_theta_triangles << ")\n";
      std::cout << "direct representations: " << report->direct.size() << '\n';
      std::cout << "roll-ups: " << report->rollup_count << '\n';
      std::cout << "enlargements: " << report->enlargement_count << '\n';
      std::cout << "unclassified: " << report->unclassified_count << '\n';
      std::cout << "isomorphism classes: " << report->isomorphism_classes << '\n';
      std::cout << "roll-up orbits: " << report->orbit_count << '\n';
      std::cout << "theorem holds: " << (report->holds() ? "yes" : "no") << '\n';
    }
  }
  return report && !report->holds() ? kExitInvalid : kExitOk;
}

struct TransformOptions {
  std::vector<std::string> pinch;
  std::string split;
  std::vector<std::string> rollup;
  std::string unroll;
  bool simplify = false;
  bool reduce = false;
  std::string enlarge;
  bool assert_matroid = false;
  bool json = false;
  bool dot = false;
};

void require_matroid(bool ok, const std::string& what) {
  if (!ok) bf::fail(bf::ErrorCode::kInvariantViolation, "frame matroid not preserved by " + what);
}

int cmd_transform(const Input& in, const TransformOptions& opt) {
  const int chosen = (!opt.pinch.empty()) + (!opt.split.empty()) + (!opt.rollup.empty()) + (!opt.unroll.empty()) +
                     opt.simplify + opt.reduce + (!opt.enlarge.empty());
  if (chosen != 1) bf::fail(bf::ErrorCode::kUsage, "choose exactly one transform");
  const bf::BiasedGraph w = in.doc.to_biased();
  const bf::Matroid before = bf::matroid_of(w);
  bf::BiasedGraph out;
  std::map<bf::VertexId, std::string> known = in.doc.names;
  std::string title = "transform";

  if (!opt.pinch.empty()) {
    if (!w.is_balanced()) bf::fail(bf::ErrorCode::kPrecondition, "pinching needs a balanced input graph");
    out = bf::pinch(w.graph(), vertex_named(in.doc, opt.pinch[0]), vertex_named(in.doc, opt.pinch[1]));
    if (opt.assert_matroid) require_matroid(bf::matroid_equal(bf::matroid_of(out), before), "pinch");
    title = "pinch";
  } else if (!opt.split.empty()) {
    out = bf::BiasedGraph::balanced(bf::split(w, vertex_named(in.doc, opt.split)));
    if (opt.assert_matroid) require_matroid(bf::matroid_equal(bf::matroid_of(out), before), "split");
    title = "split";
  } else if (!opt.rollup.empty()) {
    out = bf::rollup(w, vertex_named(in.doc, opt.rollup[0]), parse_int(opt.rollup[1], "class index"));
    if (opt.assert_matroid) require_matroid(bf::matroid_equal(bf::matroid_of(out), before), "roll-up");
    title = "rollup";
  } else if (!opt.unroll.empty()) {
    out = bf::unroll(w, vertex_named(in.doc, opt.unroll));
    if (opt.assert_matroid) require_matroid(bf::matroid_equal(bf::matroid_of(out), before), "unroll");
    title = "unroll";
  } else if (opt.simplify) {
    out = bf::simplify(w);
    if (opt.assert_matroid) {
      require_matroid(bf::matroid_equal(bf::matroid_of(out), before.restrict_to(out.edges())), "simplify");
    }
    title = "simplify";
  } else if (opt.reduce) {
    const bf::ReductionPlan plan = bf::find_lobes(w);
    out = plan.reduced;
    if (opt.assert_matroid) {
      require_matroid(bf::matroid_equal(bf::matroid_of(out), before.minor(plan.contracted, plan.deleted)), "reduce");
    }
    title = "reduce";
  } else {
    const Input psi_in = load(opt.enlarge);
    const bf::BiasedGraph psi = psi_in.doc.to_biased();
    out = bf::h_enlarge(bf::find_lobes(w), psi);
    known = psi_in.doc.names;
    if (opt.assert_matroid) require_matroid(bf::matroid_equal(bf::matroid_of(out), before), "enlarge");
    title = "enlarge";
  }
  print_graph(out, names_for(out.graph(), known), opt.json, opt.dot, title);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biased graphs, frame matroids and their representations"};
  app.require_subcommand(1);
  std::string path;
  bool json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", path, "document file or fixture name")->required();
    sub->add_flag("--json", json, "JSON output");
  };
  CLI::App* validate = app.add_subcommand("validate", "check a document and report its bias structure");
  add_common(validate);
  CLI::App* circuits = app.add_subcommand("circuits", "list the circuits of the frame matroid");
  add_common(circuits);
  CLI::App* rank = app.add_subcommand("rank", "rank of an edge set (default: all edges)");
  add_common(rank);
  std::vector<int> rank_edges;
  rank->add_option("--edges", rank_edges, "edge ids, comma separated")->delimiter(',');
  CLI::App* cocircuits = app.add_subcommand("cocircuits", "list the cocircuits of the frame matroid");
  add_common(cocircuits);
  CLI::App* committed = app.add_subcommand("committed", "committed-vertex table");
  add_common(committed);

  CLI::App* census = app.add_subcommand("census", "enumerate representations of the frame matroid");
  add_common(census);
  CensusOptions census_opt;
  census->add_option("--max-vertices", census_opt.max_vertices, "vertex cap for representations");
  census->add_flag("--orbits", census_opt.orbits, "group representations into roll-up orbits");
  census->add_flag("--verify-theorem1", census_opt.verify, "classify representations as roll-ups or enlargements");
  census->add_flag("--dot", census_opt.dot, "emit each representation as DOT");

  CLI::App* transform = app.add_subcommand("transform", "apply one matroid-preserving transform");
  add_common(transform);
  TransformOptions topt;
  transform->add_option("--pinch", topt.pinch, "pinch vertices u and v of a balanced graph")->expected(2);
  transform->add_option("--split", topt.split, "split the balancing vertex u of a signed graph");
  transform->add_option("--rollup", topt.rollup, "roll up class i at the balancing vertex u")->expected(2);
  transform->add_option("--unroll", topt.unroll, "turn the unbalanced loops into links at u");
  transform->add_flag("--simplify", topt.simplify, "remove balanced loops and parallel copies");
  transform->add_flag("--reduce", topt.reduce, "replace every lobe by a triangle");
  transform->add_option("--enlarge", topt.enlarge, "enlarge the given reduced representation (file or fixture)");
  transform->add_flag("--assert-matroid", topt.assert_matroid, "check the frame matroid relation of the transform");
  transform->add_flag("--dot", topt.dot, "emit DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Input in = load(path);
    if (validate->parsed()) return cmd_validate(in, json);
    if (circuits->parsed()) return cmd_circuits(in, json);
    if (rank->parsed()) return cmd_rank(in, rank_edges, json);
    if (cocircuits->parsed()) return cmd_cocircuits(in, json);
    if (committed->parsed()) return cmd_committed(in, json);
    if (census->parsed()) {
      census_opt.json = json;
      return cmd_census(in, census_opt);
    }
    topt.json = json;
    return cmd_transform(in, topt);
  } catch (const bf::Error& e) {
    std::cerr << "biasforge: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
