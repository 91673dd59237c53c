// Copyright 2026 The asnkit Authors
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

#include "asnkit/export.hpp"

#include <ostream>

#include "asnkit/format.hpp"

namespace asnkit {

std::string rules_label(const EdgeInfo& info) {
  std::string out;
  for (PhraseRule r : info.rules) {
    if (!out.empty()) out += ';';
    out += to_string(r);
  }
  return out;
}

void write_dot(std::ostream& out, const Asn& asn, const std::vector<std::string>& preamble) {
  for (const std::string& line : preamble) out << "// " << line << '\n';
  const IndexedGraph g = index_graph(asn);
  out << "digraph asn {\n";
  out << "  graph [century=" << asn.century << "];\n";
  for (std::size_t i = 0; i < g.keys.size(); ++i) {
    const NodeKey& key = g.keys[i];
    out << "  n" << i << " [label=\"" << dot_escape(key.display()) << "\", lemma=\""
        << dot_escape(key.lemma) << "\", role=\"" << to_string(key.role)
        << "\", frequency=" << asn.nodes.at(key).frequency << "];\n";
  }
  auto edge = asn.edges.begin();
  for (const IndexedGraph::Arc& arc : g.arcs) {
    out << "  n" << arc.from << " -> n" << arc.to << " [weight=" << edge->second.weight
        << ", rules=\"" << rules_label(edge->second) << "\"];\n";
    ++edge;
  }
  out << "}\n";
}

void write_graphml(std::ostream& out, const Asn& asn, const std::vector<std::string>& preamble) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  for (const std::string& line : preamble) out << "<!-- " << xml_escape(line) << " -->\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"lemma\" for=\"node\" attr.name=\"lemma\" attr.type=\"string\"/>\n"
      << "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n"
      << "  <key id=\"frequency\" for=\"node\" attr.name=\"frequency\" attr.type=\"long\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
      << "  <key id=\"rules\" for=\"edge\" attr.name=\"rules\" attr.type=\"string\"/>\n"
      << "  <key id=\"century\" for=\"graph\" attr.name=\"century\" attr.type=\"int\"/>\n"
      << "  <graph id=\"asn\" edgedefault=\"directed\">\n"
      << "    <data key=\"century\">" << asn.century << "</data>\n";
  const IndexedGraph g = index_graph(asn);
  for (std::size_t i = 0; i < g.keys.size(); ++i) {
    const NodeKey& key = g.keys[i];
    out << "    <node id=\"n" << i << "\">\n"
        << "      <data key=\"lemma\">" << xml_escape(key.lemma) << "</data>\n"
        << "      <data key=\"role\">" << to_string(key.role) << "</data>\n"
        << "      <data key=\"frequency\">" << asn.nodes.at(key).frequency << "</data>\n"
        << "    </node>\n";
  }
  auto edge = asn.edges.begin();
  for (std::size_t i = 0; i < g.arcs.size(); ++i, ++edge) {
    const IndexedGraph::Arc& arc = g.arcs[i];
    out << "    <edge id=\"e" << i << "\" source=\"n" << arc.from << "\" target=\"n" << arc.to
        << "\">\n"
        << "      <data key=\"weight\">" << edge->second.weight << "</data>\n"
        << "      <data key=\"rules\">" << rules_label(edge->second) << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_edge_csv(std::ostream& out, const Asn& asn, const std::vector<std::string>& preamble) {
  for (const std::string& line : preamble) out << "# " << line << '\n';
  out << "source_role,source_lemma,target_role,target_lemma,weight\n";
  for (const auto& [key, info] : asn.edges) {
    out << to_string(key.first.role) << ',' << csv_escape(key.first.lemma) << ','
        << to_string(key.second.role) << ',' << csv_escape(key.second.lemma) << ','
        << info.weight << '\n';
  }
}

}  // namespace asnkit
