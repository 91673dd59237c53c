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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "asnkit/diachrony.hpp"
#include "asnkit/error.hpp"
#include "asnkit/export.hpp"
#include "asnkit/format.hpp"
#include "asnkit/hierarchy.hpp"

namespace asnkit::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T result{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, result);
  if (ec != std::errc() || ptr != end) throw UsageError("invalid value for " + key + ": '" + value + "'");
  return result;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw UsageError("invalid value for " + key + ": '" + value + "' (expected true or false)");
}

Alternative parse_alternative(const std::string& text) {
  if (text == "exponential") return Alternative::kExponential;
  if (text == "lognormal") return Alternative::kLognormal;
  throw UsageError("unknown alternative '" + text + "' (expected exponential or lognormal)");
}

std::string century_dir(int century) { return "c" + std::to_string(century) + "/"; }

std::string header_line(const RunConfig& config) {
  return std::string("asnkit ") + ASNKIT_VERSION + " seed=" + std::to_string(config.seed);
}

std::string csv_comments(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) out += "# " + line + "\n";
  return out;
}

ordered_json json_meta(const RunConfig& config) {
  ordered_json j;
  j["tool"] = "asnkit";
  j["version"] = ASNKIT_VERSION;
  j["seed"] = config.seed;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// Network on which levels are computed; topology exports always keep the
// observed weights.
Asn level_network(const RunConfig& config, const Asn& asn) {
  return config.unweighted ? with_unit_weights(asn) : asn;
}

std::vector<Asn> aggregate_all(const std::vector<CorpusSlice>& slices) {
  std::vector<Asn> nets;
  nets.reserve(slices.size());
  for (const auto& slice : slices) nets.push_back(aggregate(slice.trees));
  return nets;
}

void fail(CommandResult& result, const std::string& problem) {
  result.status = std::max(result.status, kExitDomain);
  result.problems.push_back(problem);
}

void merge(CommandResult& into, CommandResult from) {
  for (auto& [path, bytes] : from.bundle) into.bundle[path] = std::move(bytes);
  into.status = std::max(into.status, from.status);
  for (auto& p : from.problems) {
    if (std::find(into.problems.begin(), into.problems.end(), p) == into.problems.end()) {
      into.problems.push_back(std::move(p));
    }
  }
}

std::string phase_space_csv(const RunConfig& config, const std::vector<CorpusSlice>& slices,
                            const std::vector<Asn>& nets, CommandResult& result) {
  DiachronicSeries series;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const Asn weighted = level_network(config, nets[i]);
    if (weighted.edges.empty()) {
      fail(result, "century " + std::to_string(slices[i].century) +
                       ": hierarchy statistics are undefined on edgeless graph");
      continue;
    }
    SeriesEntry entry;
    entry.century = slices[i].century;
    entry.summary = summarize(nets[i]);
    entry.hierarchy = hierarchy_stats(weighted, forward_levels(weighted));
    series.add(std::move(entry));
  }
  std::string csv = csv_comments({header_line(config), std::string("weights: ") +
                                                           (config.unweighted ? "unit" : "observed")});
  csv += "century,democracy,incoherence\n";
  for (const auto& p : phase_space(series)) {
    csv += std::to_string(p.century) + "," + format_double(p.democracy) + "," +
           format_double(p.incoherence) + "\n";
  }
  return csv;
}

}  // namespace

void apply_setting(RunConfig& config, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "input") {
    config.inputs.push_back(value);
  } else if (key == "missing") {
    auto policy = parse_missing_policy(value);
    if (!policy) throw UsageError("invalid value for missing: '" + value + "'");
    config.missing = *policy;
  } else if (key == "unweighted") {
    config.unweighted = parse_bool(key, value);
  } else if (key == "degree") {
    auto variable = parse_degree_variable(value);
    if (!variable) throw UsageError("invalid value for degree: '" + value + "'");
    config.degree = *variable;
  } else if (key == "replicates") {
    config.replicates = parse_number<int>(key, value);
    if (config.replicates != 0 && config.replicates < 100) {
      throw UsageError("replicates must be 0 (no bootstrap) or at least 100");
    }
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "band") {
    config.band = parse_number<int>(key, value);
    if (config.band < 1) throw UsageError("band must be at least 1");
  } else if (key == "min_gain") {
    config.min_gain = parse_number<int>(key, value);
    if (config.min_gain < 0) throw UsageError("min_gain must not be negative");
  } else if (key == "flag_initial") {
    config.flag_initial = parse_bool(key, value);
  } else if (key == "strict") {
    config.strict = parse_bool(key, value);
  } else if (key == "out") {
    config.out = value;
  } else if (key == "formats") {
    std::set<std::string> formats;
    for (const auto& f : split_list(value)) {
      if (f != "csv" && f != "dot" && f != "graphml") throw UsageError("unknown export format '" + f + "'");
      formats.insert(f);
    }
    if (formats.empty()) throw UsageError("formats must name at least one of csv, dot, graphml");
    config.formats = std::move(formats);
  } else if (key == "track") {
    for (const auto& item : split_list(value)) {
      try {
        config.track.push_back(NodeKey::parse(item));
      } catch (const Error& e) {
        throw UsageError("invalid value for track: " + std::string(e.what()));
      }
    }
  } else if (key == "alternatives") {
    std::vector<Alternative> alternatives;
    for (const auto& item : split_list(value)) {
      const Alternative a = parse_alternative(item);
      if (std::find(alternatives.begin(), alternatives.end(), a) == alternatives.end()) alternatives.push_back(a);
    }
    config.alternatives = std::move(alternatives);
  } else if (key == "threads") {
    config.threads = parse_number<unsigned>(key, value);
  } else if (key == "bin_width") {
    config.bin_width = parse_number<double>(key, value);
    if (!(config.bin_width > 0.0)) throw UsageError("bin_width must be positive");
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

void load_config(RunConfig& config, std::istream& in, const std::string& source) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError(source + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    try {
      apply_setting(config, trim(text.substr(0, eq)), text.substr(eq + 1));
    } catch (const UsageError& e) {
      throw UsageError(source + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  const std::size_t before = config.inputs.size();
  load_config(config, in, path);
  // inputs in a config file are relative to the file
  const fs::path base = fs::path(path).parent_path();
  for (std::size_t i = before; i < config.inputs.size(); ++i) {
    fs::path p(config.inputs[i]);
    if (p.is_relative() && !base.empty()) config.inputs[i] = (base / p).lexically_normal().string();
  }
}

ordered_json config_json(const RunConfig& config) {
  ordered_json j;
  j["inputs"] = config.inputs;
  j["missing"] = to_string(config.missing);
  j["unweighted"] = config.unweighted;
  j["degree"] = to_string(config.degree);
  j["replicates"] = config.replicates;
  j["seed"] = config.seed;
  j["band"] = config.band;
  j["min_gain"] = config.min_gain;
  j["flag_initial"] = config.flag_initial;
  j["strict"] = config.strict;
  j["p_threshold"] = config.p_threshold();
  j["formats"] = std::vector<std::string>(config.formats.begin(), config.formats.end());
  ordered_json track = ordered_json::array();
  for (const auto& key : config.track) track.push_back(key.display());
  j["track"] = track;
  ordered_json alternatives = ordered_json::array();
  for (auto a : config.alternatives) alternatives.push_back(to_string(a));
  j["alternatives"] = alternatives;
  j["bin_width"] = config.bin_width;
  return j;
}

void write_bundle(const Bundle& bundle, const std::string& directory) {
  std::error_code ec;
  for (const auto& [relative, bytes] : bundle) {
    const fs::path target = fs::path(directory) / relative;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw IoError("cannot create " + target.parent_path().string() + ": " + ec.message());
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("cannot write " + target.string());
  }
}

std::vector<CorpusSlice> load_corpus(const RunConfig& config) {
  if (config.inputs.empty()) throw UsageError("no input files given");
  std::vector<DependencyTree> trees;
  for (const auto& path : config.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    for (auto& slice : parse_corpus(in, path)) {
      for (auto& tree : slice.trees) trees.push_back(std::move(tree));
    }
  }
  std::vector<DependencyTree> kept;
  for (auto& tree : trees) {
    if (filter_missing(tree, config.missing).keep) kept.push_back(std::move(tree));
  }
  if (kept.empty()) throw Error("empty corpus after filtering");
  return group_by_century(std::move(kept));
}

ValidationReport validate_inputs(const std::vector<std::string>& paths, MissingPolicy policy) {
  ValidationReport report;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    auto read = read_treebank(in, path);
    for (const auto& d : read.diagnostics) {
      report.rows.push_back(d.source + ":" + std::to_string(d.line) + ": " + d.message);
    }
    report.sentences += static_cast<std::int64_t>(read.trees.size() + read.diagnostics.size());
    for (const auto& tree : read.trees) {
      try {
        if (!filter_missing(tree, policy).keep) ++report.filtered;
      } catch (const Error& e) {
        report.rows.push_back(tree.source + ":" + std::to_string(tree.line) + ": " + e.what());
      }
    }
  }
  return report;
}

CommandResult cmd_build(const RunConfig& config, const std::vector<CorpusSlice>& slices) {
  CommandResult result;
  std::string csv = csv_comments({header_line(config)});
  csv += "century,sentences,nodes,edges,total_weight,heads\n";
  const auto nets = aggregate_all(slices);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    csv += std::to_string(slices[i].century) + "," + std::to_string(slices[i].trees.size()) + "," +
           std::to_string(nets[i].node_count()) + "," + std::to_string(nets[i].edge_count()) + "," +
           std::to_string(nets[i].total_weight()) + "," + std::to_string(heads(nets[i]).size()) + "\n";
  }
  result.bundle["networks.csv"] = std::move(csv);
  return result;
}

CommandResult cmd_export(const RunConfig& config, const std::vector<CorpusSlice>& slices) {
  CommandResult result;
  const auto nets = aggregate_all(slices);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const std::vector<std::string> preamble = {header_line(config) + " century=" +
                                               std::to_string(slices[i].century)};
    const std::string dir = century_dir(slices[i].century);
    if (config.formats.count("dot")) {
      std::ostringstream out;
      write_dot(out, nets[i], preamble);
      result.bundle[dir + "asn.dot"] = out.str();
    }
    if (config.formats.count("graphml")) {
      std::ostringstream out;
      write_graphml(out, nets[i], preamble);
      result.bundle[dir + "asn.graphml"] = out.str();
    }
    if (config.formats.count("csv")) {
      std::ostringstream out;
      write_edge_csv(out, nets[i], preamble);
      result.bundle[dir + "asn_edges.csv"] = out.str();
    }
  }
  return result;
}

CommandResult cmd_stats(const RunConfig& config, const std::vector<CorpusSlice>& slices) {
  CommandResult result;
  const auto nets = aggregate_all(slices);
  const auto rows = depth_vs_diameter(slices, nets);
  std::string csv = csv_comments({header_line(config), std::string(kPathConventions),
                                  "edges: directed; avg_degree: undirected simple projection"});
  csv += "century,nodes,edges,avg_degree,clustering,avg_path_length,diameter,max_tree_depth\n";
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const NetworkSummary s = summarize(nets[i]);
    ordered_json j = json_meta(config);
    j["conventions"] = kPathConventions;
    j["century"] = slices[i].century;
    j["sentences"] = slices[i].trees.size();
    j["nodes"] = s.node_count;
    j["edges"] = s.edge_count;
    j["undirected_edges"] = s.undirected_edge_count;
    j["average_degree"] = s.average_degree;
    j["clustering"] = s.clustering;
    j["average_path_length"] = s.average_path_length;
    j["diameter"] = s.diameter;
    j["component_count"] = s.component_count;
    j["lcc_size"] = s.lcc_size;
    j["lcc_fraction"] = s.lcc_fraction;
    j["max_tree_depth"] = rows[i].max_tree_depth;
    result.bundle[century_dir(slices[i].century) + "summary.json"] = dump(j);
    csv += std::to_string(slices[i].century) + "," + std::to_string(s.node_count) + "," +
           std::to_string(s.edge_count) + "," + format_double(s.average_degree) + "," +
           format_double(s.clustering) + "," + format_double(s.average_path_length) + "," +
           std::to_string(s.diameter) + "," + std::to_string(rows[i].max_tree_depth) + "\n";
  }
  result.bundle["depth_vs_diameter.csv"] = std::move(csv);
  return result;
}

CommandResult cmd_hierarchy(const RunConfig& config, const std::vector<CorpusSlice>& slices) {
  CommandResult result;
  const auto nets = aggregate_all(slices);
  const std::string weights = std::string("weights: ") + (config.unweighted ? "unit" : "observed");
  const std::string axis = "levels: heads at 0, increasing downward (invert the axis to draw heads on top)";
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const int century = slices[i].century;
    const std::string dir = century_dir(century);
    const Asn asn = level_network(config, nets[i]);
    const HierarchyLevels levels = hierarchy_levels(asn);
    const auto in_w = asn.in_weights();
    const auto out_w = asn.out_weights();
    auto lookup = [](const std::map<NodeKey, std::int64_t>& m, const NodeKey& k) {
      auto it = m.find(k);
      return it == m.end() ? std::int64_t{0} : it->second;
    };

    std::string csv = csv_comments({header_line(config) + " century=" + std::to_string(century), weights, axis});
    csv += "role,lemma,forward_level,backward_level,frequency,in_weight,out_weight\n";
    for (const auto& [key, info] : asn.nodes) {
      csv += std::string(to_string(key.role)) + "," + csv_escape(key.lemma) + "," +
             format_double(levels.forward.at(key)) + "," + format_double(levels.backward.at(key)) + "," +
             std::to_string(info.frequency) + "," + std::to_string(lookup(in_w, key)) + "," +
             std::to_string(lookup(out_w, key)) + "\n";
    }
    result.bundle[dir + "hierarchy.csv"] = std::move(csv);

    std::string hist = csv_comments({header_line(config) + " century=" + std::to_string(century), weights,
                                     "bin_width=" + format_double(config.bin_width)});
    hist += "direction,lower,count\n";
    for (const auto& [name, lv] : {std::pair{"forward", &levels.forward}, std::pair{"backward", &levels.backward}}) {
      for (const auto& bin : level_histogram(*lv, config.bin_width)) {
        hist += std::string(name) + "," + format_double(bin.lower) + "," + std::to_string(bin.count) + "\n";
      }
    }
    result.bundle[dir + "level_histogram.csv"] = std::move(hist);

    ordered_json j = json_meta(config);
    j["century"] = century;
    j["weights"] = config.unweighted ? "unit" : "observed";
    j["forward_residual"] = levels.forward_residual;
    j["backward_residual"] = levels.backward_residual;
    if (asn.edges.empty()) {
      j["error"] = "hierarchy statistics are undefined on edgeless graph";
      fail(result, "century " + std::to_string(century) + ": hierarchy statistics are undefined on edgeless graph");
    } else {
      const HierarchyStats st = hierarchy_stats(asn, levels.forward);
      j["democracy"] = st.democracy;
      j["incoherence"] = st.incoherence;
      j["mean_difference"] = st.mean_difference;
    }
    ordered_json top = ordered_json::array();
    const auto ranked = influence_ranking(asn, levels.forward);
    for (std::size_t r = 0; r < ranked.size() && r < static_cast<std::size_t>(config.band); ++r) {
      top.push_back({{"rank", r + 1}, {"node", ranked[r].key.display()}, {"level", ranked[r].level},
                     {"out_weight", ranked[r].out_weight}});
    }
    j["top_band"] = top;
    result.bundle[dir + "hierarchy_stats.json"] = dump(j);
  }
  result.bundle["phase_space.csv"] = phase_space_csv(config, slices, nets, result);
  return result;
}

CommandResult cmd_powerlaw(const RunConfig& config, const std::vector<CorpusSlice>& slices) {
  CommandResult result;
  const auto nets = aggregate_all(slices);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const int century = slices[i].century;
    const std::string dir = century_dir(century);
    const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(century));
    std::vector<std::int64_t> data;
    const DegreeSequences degrees = degree_sequences(nets[i]);
    for (auto d : select(degrees, config.degree)) {
      if (d > 0) data.push_back(d);
    }

    ordered_json j = json_meta(config);
    j["century"] = century;
    j["variable"] = to_string(config.degree);
    j["observations"] = data.size();
    j["bootstrap_seed"] = seed;
    j["p_threshold"] = config.p_threshold();
    std::optional<PowerLawFit> fit;
    try {
      fit = fit_powerlaw(data);
      if (config.replicates > 0) fit = bootstrap_pvalue(*fit, data, config.replicates, seed, config.threads);
    } catch (const Error& e) {
      j["error"] = e.what();
      fail(result, "century " + std::to_string(century) + ": power-law fit: " + e.what());
    }
    if (fit) {
      j["alpha"] = fit->alpha;
      j["xmin"] = fit->xmin;
      j["ks"] = fit->ks;
      j["n_tail"] = fit->n_tail;
      j["n"] = fit->n;
      j["p_value"] = optional_json(fit->p_value);
      j["replicates"] = fit->replicates;
      j["discarded"] = fit->discarded;
      j["plausible"] = fit->p_value ? ordered_json(*fit->p_value >= config.p_threshold()) : ordered_json(nullptr);
      ordered_json lrt = ordered_json::array();
      for (Alternative a : config.alternatives) {
        ordered_json r;
        r["alternative"] = to_string(a);
        try {
          const LrtResult res = likelihood_ratio_test(data, *fit, a);
          r["log_likelihood_ratio"] = res.log_likelihood_ratio;
          r["normalized_ratio"] = res.normalized_ratio;
          r["p_value"] = res.p_value;
          r["favored"] = to_string(res.favored);
          r["parameters"] = res.parameters;
        } catch (const Error& e) {
          r["error"] = e.what();
        }
        lrt.push_back(r);
      }
      j["lrt"] = lrt;

      std::string csv = csv_comments({header_line(config) + " century=" + std::to_string(century),
                                      std::string("variable=") + std::string(to_string(config.degree)),
                                      "alpha=" + format_double(fit->alpha) + " xmin=" + std::to_string(fit->xmin)});
      csv += "x,empirical_ccdf,fitted_ccdf\n";
      for (const auto& p : ccdf_points(data, *fit)) {
        csv += std::to_string(p.x) + "," + format_double(p.empirical) + "," +
               (p.fitted ? format_double(*p.fitted) : std::string()) + "\n";
      }
      result.bundle[dir + "ccdf.csv"] = std::move(csv);
    }
    result.bundle[dir + "powerlaw.json"] = dump(j);
  }
  return result;
}

CommandResult cmd_diachrony(const RunConfig& config, const std::vector<CorpusSlice>& slices) {
  CommandResult result;
  const auto nets = aggregate_all(slices);
  std::vector<DiachronicSlice> dslices;
  for (const auto& net : nets) dslices.push_back(DiachronicSlice::build(level_network(config, net)));

  EmergenceOptions options;
  options.band = config.band;
  options.min_gain = config.min_gain;
  options.flag_initial = config.flag_initial;
  const auto events = detect_emergent_heads(dslices, options);

  ordered_json j = json_meta(config);
  j["band"] = config.band;
  j["min_gain"] = config.min_gain;
  j["flag_initial"] = config.flag_initial;
  j["note"] = "entry into the top rank band is a proxy for a head governing a communicative need";
  ordered_json list = ordered_json::array();
  for (const auto& e : events) {
    ordered_json item;
    item["century"] = e.century;
    item["role"] = to_string(e.key.role);
    item["lemma"] = e.key.lemma;
    item["prior_rank"] = e.prior_rank ? ordered_json(*e.prior_rank) : ordered_json(nullptr);
    item["new_rank"] = e.new_rank;
    list.push_back(item);
  }
  j["events"] = list;
  result.bundle["emergent_heads.json"] = dump(j);

  std::vector<NodeKey> keys = config.track;
  if (keys.empty()) {
    for (const auto& e : events) {
      if (std::find(keys.begin(), keys.end(), e.key) == keys.end()) keys.push_back(e.key);
    }
  }
  std::string csv = csv_comments({header_line(config), std::string("tracked: ") +
                                                           (config.track.empty() ? "emergent heads" : "configured keys"),
                                  "level_rank: 1 = top of the influence ranking"});
  csv += "century,role,lemma,present,forward_level,level_rank,frequency,is_head\n";
  for (const auto& traj : track(keys, dslices)) {
    for (const auto& row : traj.rows) {
      csv += std::to_string(row.century) + "," + std::string(to_string(traj.key.role)) + "," +
             csv_escape(traj.key.lemma) + "," + (row.present ? "true" : "false") + "," +
             (row.forward_level ? format_double(*row.forward_level) : "") + "," +
             (row.level_rank ? std::to_string(*row.level_rank) : "") + "," +
             (row.frequency ? std::to_string(*row.frequency) : "") + "," + (row.is_head ? "true" : "false") + "\n";
    }
  }
  result.bundle["trajectories.csv"] = std::move(csv);
  result.bundle["phase_space.csv"] = phase_space_csv(config, slices, nets, result);
  return result;
}

CommandResult cmd_analyze(const RunConfig& config, const std::vector<CorpusSlice>& slices) {
  CommandResult result = cmd_build(config, slices);
  merge(result, cmd_export(config, slices));
  merge(result, cmd_stats(config, slices));
  merge(result, cmd_hierarchy(config, slices));
  merge(result, cmd_powerlaw(config, slices));
  merge(result, cmd_diachrony(config, slices));

  ordered_json manifest = json_meta(config);
  manifest["config"] = config_json(config);
  ordered_json centuries = ordered_json::array();
  for (const auto& s : slices) centuries.push_back(s.century);
  manifest["centuries"] = centuries;
  manifest["conventions"] = kPathConventions;
  manifest["problems"] = result.problems;
  ordered_json files = ordered_json::array();
  for (const auto& [path, bytes] : result.bundle) files.push_back(path);
  manifest["artifacts"] = files;
  result.bundle["manifest.json"] = dump(manifest);
  return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Aggregated syntactic networks from dependency treebanks"};
  app.name("asnkit");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ASNKIT_VERSION);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir, missing, degree, formats, alternatives;
  int replicates = 0, band = 0, min_gain = 0;
  unsigned threads = 0;
  double bin_width = 0;
  std::vector<std::string> track, inputs;
  bool unweighted = false, strict = false, flag_initial = false;

  app.add_option("--config", config_path, "key = value file; flags given here override it");
  auto* o_seed = app.add_option("--seed", seed, "root seed for every random draw");
  auto* o_out = app.add_option("--out", out_dir, "output directory");
  auto* o_missing = app.add_option("--missing", missing, "drop-any | drop-adjacent-to-target | keep-all");
  auto* o_unweighted = app.add_flag("--unweighted", unweighted, "compute levels with unit edge weights");
  auto* o_degree = app.add_option("--degree", degree, "in | out | total");
  auto* o_replicates = app.add_option("--replicates", replicates, "bootstrap replicates (0 = none)");
  auto* o_strict = app.add_flag("--strict", strict, "judge power-law fits at p >= 0.1 instead of 0.01");
  auto* o_band = app.add_option("--band", band, "top-k rank band for emergent heads");
  auto* o_gain = app.add_option("--min-gain", min_gain, "rank gain needed to flag an emergent head");
  auto* o_initial = app.add_flag("--flag-initial", flag_initial, "flag heads already in the band in the first slice");
  auto* o_track = app.add_option("--track", track, "node to follow across centuries, e.g. 'MV können'");
  auto* o_formats = app.add_option("--formats", formats, "comma list of csv, dot, graphml");
  auto* o_alts = app.add_option("--alternatives", alternatives, "comma list of exponential, lognormal");
  auto* o_threads = app.add_option("--threads", threads, "bootstrap threads (0 = all cores)");
  auto* o_bin = app.add_option("--bin-width", bin_width, "level histogram bin width");

  struct Command {
    const char* name;
    const char* help;
    CommandResult (*fn)(const RunConfig&, const std::vector<CorpusSlice>&);
  };
  const std::vector<Command> commands = {
      {"build", "aggregate networks and list their sizes", cmd_build},
      {"export", "write networks as DOT, GraphML or edge CSV", cmd_export},
      {"stats", "network summaries and depth against diameter", cmd_stats},
      {"hierarchy", "hierarchical levels, histograms and phase space", cmd_hierarchy},
      {"powerlaw", "degree distribution fits with bootstrap and likelihood ratios", cmd_powerlaw},
      {"diachrony", "trajectories, emergent heads and phase space", cmd_diachrony},
      {"analyze", "everything above plus a manifest", cmd_analyze},
  };
  CLI::App* validate = app.add_subcommand("validate", "check treebank files against the tree constraints");
  validate->add_option("inputs", inputs, "treebank files");
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    subs.push_back(app.add_subcommand(c.name, c.help));
    subs.back()->add_option("inputs", inputs, "treebank files");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) load_config_file(config, config_path);
    if (!inputs.empty()) config.inputs = inputs;
    auto set = [&](CLI::Option* opt, const char* key, const std::string& value) {
      if (opt->count() > 0) apply_setting(config, key, value);
    };
    set(o_seed, "seed", std::to_string(seed));
    set(o_out, "out", out_dir);
    set(o_missing, "missing", missing);
    set(o_unweighted, "unweighted", "true");
    set(o_degree, "degree", degree);
    set(o_replicates, "replicates", std::to_string(replicates));
    set(o_strict, "strict", "true");
    set(o_band, "band", std::to_string(band));
    set(o_gain, "min_gain", std::to_string(min_gain));
    set(o_initial, "flag_initial", "true");
    set(o_formats, "formats", formats);
    set(o_alts, "alternatives", alternatives);
    set(o_threads, "threads", std::to_string(threads));
    set(o_bin, "bin_width", format_double(bin_width));
    if (o_track->count() > 0) {
      config.track.clear();
      for (const auto& t : track) apply_setting(config, "track", t);
    }

    if (validate->parsed()) {
      if (config.inputs.empty()) throw UsageError("no input files given");
      const ValidationReport report = validate_inputs(config.inputs, config.missing);
      for (const auto& row : report.rows) out << row << "\n";
      err << report.sentences << " sentences, " << report.rows.size() << " violations, "
          << report.filtered << " filtered by policy " << to_string(config.missing) << "\n";
      return report.rows.empty() ? kExitOk : kExitDomain;
    }

    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      const auto slices = load_corpus(config);
      const CommandResult result = commands[i].fn(config, slices);
      write_bundle(result.bundle, config.out);
      if (commands[i].fn == cmd_build) {
        const std::string& table = result.bundle.at("networks.csv");
        out << table.substr(table.find('\n') + 1);
      }
      out << "wrote " << result.bundle.size() << " files to " << config.out << "\n";
      for (const auto& p : result.problems) err << "asnkit: " << p << "\n";
      return result.status;
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "asnkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "asnkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "asnkit: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace asnkit::cli
