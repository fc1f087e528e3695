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

#ifndef BIASFORGE_DOCUMENT_HPP_
#define BIASFORGE_DOCUMENT_HPP_

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "biasforge/bias.hpp"

namespace biasforge {

// Text format, one statement per line, `#` starts a comment:
//
//   vertices <name>...
//   edge <id> <name> <name>
//   bias balanced | contrabalanced | cycles | signature
//   cycle <id>...      (bias cycles: one balanced cycle per line)
//   class <id>...      (bias signature: one class per line)
//
// Vertex names that are all integers in [0, 64) are used as ids; otherwise
// ids follow declaration order.

enum class BiasMode { kBalanced, kContrabalanced, kCycles, kSignature };

inline const char* bias_mode_name(BiasMode m) {
  switch (m) {
    case BiasMode::kBalanced: return "balanced";
    case BiasMode::kContrabalanced: return "contrabalanced";
    case BiasMode::kCycles: return "cycles";
    case BiasMode::kSignature: return "signature";
  }
  return "?";
}

struct Document {
  std::vector<std::string> vertex_names;  // declaration order
  std::map<VertexId, std::string> names;
  MultiGraph graph;
  BiasMode mode = BiasMode::kBalanced;
  std::vector<EdgeSet> sets;  // balanced cycles or signature classes

  std::string name_of(VertexId v) const {
    auto it = names.find(v);
    return it == names.end() ? std::to_string(v) : it->second;
  }

  BiasedGraph to_biased(const Limits& limits = default_limits()) const {
    switch (mode) {
      case BiasMode::kBalanced: return BiasedGraph::balanced(graph, limits);
      case BiasMode::kContrabalanced: return BiasedGraph::contrabalanced(graph, limits);
      case BiasMode::kCycles: return BiasedGraph::from_balanced_cycles(graph, sets, limits);
      case BiasMode::kSignature: return BiasedGraph::from_signature(graph, Signature(sets), limits);
    }
    return BiasedGraph();
  }
};

namespace detail {

[[noreturn]] inline void parse_fail(int line, int column, const std::string& reason) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason);
}

struct Token {
  std::string text;
  int column = 0;
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline std::optional<int> small_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0 || v >= kMaxIds) return std::nullopt;
  return v;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_vertices = false, have_bias = false;
  std::map<std::string, VertexId> ids;
  struct PendingSet {
    int line;
    int column;
    EdgeSet set;
  };
  std::vector<PendingSet> pending;
  std::string set_keyword;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<detail::Token> t = detail::tokenize(line);
    if (t.empty()) continue;
    const std::string& kw = t[0].text;
    if (kw == "vertices") {
      if (have_vertices) detail::parse_fail(line_no, t[0].column, "duplicate vertices statement");
      have_vertices = true;
      bool numeric = true;
      for (std::size_t i = 1; i < t.size(); ++i) numeric = numeric && detail::small_int(t[i].text).has_value();
      if (t.size() - 1 > static_cast<std::size_t>(kMaxIds)) detail::parse_fail(line_no, t[0].column, "more than 64 vertices");
      for (std::size_t i = 1; i < t.size(); ++i) {
        const std::string& name = t[i].text;
        if (ids.count(name)) detail::parse_fail(line_no, t[i].column, "duplicate vertex '" + name + "'");
        const VertexId id = numeric ? *detail::small_int(name) : static_cast<VertexId>(i - 1);
        ids[name] = id;
        doc.vertex_names.push_back(name);
        doc.names[id] = name;
        doc.graph.add_vertex(id);
      }
    } else if (kw == "edge") {
      if (!have_vertices) detail::parse_fail(line_no, t[0].column, "edge before vertices statement");
      if (t.size() != 4) detail::parse_fail(line_no, t[0].column, "expected 'edge <id> <vertex> <vertex>'");
      auto id = detail::small_int(t[1].text);
      if (!id) detail::parse_fail(line_no, t[1].column, "edge id must be an integer in [0, 64)");
      if (doc.graph.edges().contains(*id)) detail::parse_fail(line_no, t[1].column, "duplicate edge id " + t[1].text);
      VertexId ends[2];
      for (int k = 0; k < 2; ++k) {
        auto it = ids.find(t[static_cast<std::size_t>(2 + k)].text);
        if (it == ids.end()) {
          detail::parse_fail(line_no, t[static_cast<std::size_t>(2 + k)].column,
                             "unknown vertex '" + t[static_cast<std::size_t>(2 + k)].text + "'");
        }
        ends[k] = it->second;
      }
      doc.graph.add_edge(*id, ends[0], ends[1]);
    } else if (kw == "bias") {
      if (have_bias) detail::parse_fail(line_no, t[0].column, "duplicate bias statement");
      if (t.size() != 2) detail::parse_fail(line_no, t[0].column, "expected 'bias <mode>'");
      have_bias = true;
      const std::string& m = t[1].text;
      if (m == "balanced") {
        doc.mode = BiasMode::kBalanced;
      } else if (m == "contrabalanced") {
        doc.mode = BiasMode::kContrabalanced;
      } else if (m == "cycles") {
        doc.mode = BiasMode::kCycles;
      } else if (m == "signature") {
        doc.mode = BiasMode::kSignature;
      } else {
        detail::parse_fail(line_no, t[1].column, "unknown bias mode '" + m + "'");
      }
    } else if (kw == "cycle" || kw == "class") {
      if (!set_keyword.empty() && set_keyword != kw) detail::parse_fail(line_no, t[0].column, "cannot mix cycle and class lines");
      set_keyword = kw;
      EdgeSet s;
      for (std::size_t i = 1; i < t.size(); ++i) {
        auto id = detail::small_int(t[i].text);
        if (!id) detail::parse_fail(line_no, t[i].column, "edge id must be an integer in [0, 64)");
        s.insert(*id);
      }
      pending.push_back({line_no, t[0].column, s});
    } else {
      detail::parse_fail(line_no, t[0].column, "unknown statement '" + kw + "'");
    }
  }
  if (!have_vertices) detail::parse_fail(line_no + 1, 1, "missing vertices statement");
  if (!have_bias) detail::parse_fail(line_no + 1, 1, "missing bias statement");
  const bool want_cycles = doc.mode == BiasMode::kCycles, want_classes = doc.mode == BiasMode::kSignature;
  EdgeSet seen;
  for (const PendingSet& p : pending) {
    if ((set_keyword == "cycle" && !want_cycles) || (set_keyword == "class" && !want_classes)) {
      detail::parse_fail(p.line, p.column, "'" + set_keyword + "' lines need 'bias " +
                                               (set_keyword == "cycle" ? "cycles" : "signature") + "'");
    }
    for (EdgeId e : p.set) {
      if (!doc.graph.edges().contains(e)) detail::parse_fail(p.line, p.column, "unknown edge " + std::to_string(e));
    }
    if (want_cycles && !is_cycle(doc.graph, p.set)) detail::parse_fail(p.line, p.column, describe(p.set) + " is not a cycle");
    if (want_classes && p.set.intersects(seen)) detail::parse_fail(p.line, p.column, "signature classes must be disjoint");
    seen |= p.set;
    doc.sets.push_back(p.set);
  }
  return doc;
}

inline Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kUsage, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.message());
  }
}

// Picks the most compact description reproducing the bias: balanced,
// contrabalanced, a signature (signed or by classes at an almost-balancing
// vertex), or the balanced cycles.
inline Document document_of(const BiasedGraph& w, const std::map<VertexId, std::string>& names = {}) {
  Document doc;
  doc.graph = w.graph();
  for (VertexId v : w.vertices()) {
    auto it = names.find(v);
    const std::string name = it == names.end() ? std::to_string(v) : it->second;
    doc.names[v] = name;
    doc.vertex_names.push_back(name);
  }
  auto reproduces = [&](const Signature& s) {
    for (EdgeSet c : w.cycles()) {
      if (s.is_balanced(c) != w.is_balanced_cycle(c)) return false;
    }
    return true;
  };
  auto use_signature = [&](const Signature& s) {
    doc.mode = BiasMode::kSignature;
    for (EdgeSet c : s.classes()) {
      if (!c.empty()) doc.sets.push_back(c);
    }
    std::sort(doc.sets.begin(), doc.sets.end(), [](EdgeSet a, EdgeSet b) { return a.first() < b.first(); });
  };
  if (w.is_balanced()) {
    doc.mode = BiasMode::kBalanced;
  } else if (w.is_contrabalanced() && w.cycles().size() > 1) {
    doc.mode = BiasMode::kContrabalanced;
  } else if (auto s = is_signed(w)) {
    use_signature(*s);
  } else if (auto ab = almost_balanced_witness(w); ab && reproduces(class_signature(w, ab->vertex))) {
    use_signature(class_signature(w, ab->vertex));
  } else if (w.is_contrabalanced()) {
    doc.mode = BiasMode::kContrabalanced;
  } else {
    doc.mode = BiasMode::kCycles;
    doc.sets = w.balanced_cycles();
  }
  return doc;
}

inline std::string emit_document(const Document& doc) {
  std::ostringstream out;
  out << "vertices";
  if (!doc.vertex_names.empty()) {
    for (const std::string& n : doc.vertex_names) out << ' ' << n;
  } else {
    for (VertexId v : doc.graph.vertices()) out << ' ' << doc.name_of(v);
  }
  out << '\n';
  for (EdgeId e : doc.graph.edges()) {
    const Endpoints p = doc.graph.ends(e);
    out << "edge " << e << ' ' << doc.name_of(p.u) << ' ' << doc.name_of(p.v) << '\n';
  }
  out << "bias " << bias_mode_name(doc.mode) << '\n';
  const char* kw = doc.mode == BiasMode::kCycles ? "cycle" : "class";
  for (EdgeSet s : doc.sets) {
    out << kw;
    for (EdgeId e : s) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

inline std::string emit_document(const BiasedGraph& w, const std::map<VertexId, std::string>& names = {}) {
  return emit_document(document_of(w, names));
}

// ---------------------------------------------------------------------------
// JSON mirror

inline nlohmann::json document_to_json(const Document& doc) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexId v : doc.graph.vertices()) j["vertices"].push_back(doc.name_of(v));
  j["edges"] = nlohmann::json::array();
  for (EdgeId e : doc.graph.edges()) {
    const Endpoints p = doc.graph.ends(e);
    j["edges"].push_back({{"id", e}, {"ends", {doc.name_of(p.u), doc.name_of(p.v)}}});
  }
  nlohmann::json bias{{"mode", bias_mode_name(doc.mode)}};
  if (doc.mode == BiasMode::kCycles || doc.mode == BiasMode::kSignature) {
    nlohmann::json sets = nlohmann::json::array();
    for (EdgeSet s : doc.sets) sets.push_back(s.to_vector());
    bias[doc.mode == BiasMode::kCycles ? "cycles" : "classes"] = sets;
  }
  j["bias"] = bias;
  return j;
}

inline Document document_from_json(const nlohmann::json& j) {
  std::ostringstream text;
  try {
    text << "vertices";
    for (const auto& v : j.at("vertices")) text << ' ' << v.get<std::string>();
    text << '\n';
    for (const auto& e : j.at("edges")) {
      text << "edge " << e.at("id").get<int>() << ' ' << e.at("ends").at(0).get<std::string>() << ' '
           << e.at("ends").at(1).get<std::string>() << '\n';
    }
    const std::string mode = j.at("bias").at("mode").get<std::string>();
    text << "bias " << mode << '\n';
    const char* key = mode == "cycles" ? "cycles" : "classes";
    if (j.at("bias").contains(key)) {
      for (const auto& s : j.at("bias").at(key)) {
        text << (mode == "cycles" ? "cycle" : "class");
        for (const auto& e : s) text << ' ' << e.get<int>();
        text << '\n';
      }
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed JSON document: ") + e.what());
  }
  return parse_document(text.str());
}

// ---------------------------------------------------------------------------
// DOT export

// Signature classes become edge styles, unbalanced loops are drawn red, and
// balancing vertices are double circles.
inline std::string emit_dot(const BiasedGraph& w, const std::map<VertexId, std::string>& names = {},
                            const std::string& title = "biased") {
  static const char* kStyles[] = {"solid", "dashed", "dotted", "bold"};
  static const char* kColors[] = {"black", "blue", "darkgreen", "orange", "purple", "brown"};
  auto name = [&](VertexId v) {
    auto it = names.find(v);
    return it == names.end() ? std::to_string(v) : it->second;
  };
  const Document doc = document_of(w, names);
  std::map<EdgeId, std::size_t> cls;
  if (doc.mode == BiasMode::kSignature) {
    for (std::size_t i = 0; i < doc.sets.size(); ++i) {
      for (EdgeId e : doc.sets[i]) cls[e] = i + 1;
    }
  }
  const VertexSet balancing = w.is_balanced() ? VertexSet() : balancing_vertices(w);
  const EdgeSet bad_loops = w.unbalanced_loops();
  std::ostringstream out;
  out << "graph \"" << title << "\" {\n";
  for (VertexId v : w.vertices()) {
    out << "  \"" << name(v) << "\"" << (balancing.contains(v) ? " [shape=doublecircle]" : "") << ";\n";
  }
  for (EdgeId e : w.edges()) {
    const Endpoints p = w.graph().ends(e);
    out << "  \"" << name(p.u) << "\" -- \"" << name(p.v) << "\" [label=\"" << e << "\"";
    auto it = cls.find(e);
    if (it != cls.end()) out << ", style=" << kStyles[(it->second - 1) % 4];
    if (bad_loops.contains(e)) {
      out << ", color=red";
    } else if (it != cls.end()) {
      out << ", color=" << kColors[(it->second - 1) % 6];
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace biasforge

#endif  // BIASFORGE_DOCUMENT_HPP_
