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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "asnkit/asn.hpp"
#include "asnkit/corpus.hpp"
#include "asnkit/diachrony.hpp"
#include "asnkit/error.hpp"
#include "asnkit/export.hpp"
#include "asnkit/graph_stats.hpp"
#include "asnkit/hierarchy.hpp"
#include "asnkit/powerlaw.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace asnkit;

namespace {

// Levels and other per-node maps go to Python keyed by "ROLE lemma".
template <typename T>
py::dict by_display(const std::map<NodeKey, T>& values) {
  py::dict out;
  for (const auto& [key, v] : values) out[py::str(key.display())] = v;
  return out;
}

std::vector<NodeKey> parse_keys(const std::vector<std::string>& keys) {
  std::vector<NodeKey> out;
  for (const auto& k : keys) out.push_back(NodeKey::parse(k));
  return out;
}

py::dict fit_dict(const PowerLawFit& f) {
  py::dict d;
  d["alpha"] = f.alpha;
  d["xmin"] = f.xmin;
  d["ks"] = f.ks;
  d["n_tail"] = f.n_tail;
  d["n"] = f.n;
  d["p_value"] = f.p_value ? py::object(py::float_(*f.p_value)) : py::object(py::none());
  d["replicates"] = f.replicates;
  d["discarded"] = f.discarded;
  d["seed"] = f.seed;
  return d;
}

PowerLawFit fit_from_dict(const py::dict& d) {
  PowerLawFit f;
  f.alpha = d["alpha"].cast<double>();
  f.xmin = d["xmin"].cast<std::int64_t>();
  f.ks = d.contains("ks") ? d["ks"].cast<double>() : 0.0;
  f.n_tail = d.contains("n_tail") ? d["n_tail"].cast<std::int64_t>() : 0;
  f.n = d.contains("n") ? d["n"].cast<std::int64_t>() : 0;
  return f;
}

template <typename T>
std::string render(void (*writer)(std::ostream&, const Asn&, const std::vector<std::string>&), const T& asn) {
  std::ostringstream out;
  writer(out, asn, {});
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_asnkit, m) {
  m.doc() = "Aggregated syntactic networks: treebank parsing, hierarchy levels, network statistics, "
            "discrete power-law fits and diachronic comparison.";
  m.attr("__version__") = ASNKIT_VERSION;

  py::register_exception<Error>(m, "AsnkitError", PyExc_ValueError);

  py::class_<Asn>(m, "Network", "Aggregated syntactic network of one century.")
      .def_readonly("century", &Asn::century)
      .def("node_count", &Asn::node_count)
      .def("edge_count", &Asn::edge_count)
      .def("total_weight", &Asn::total_weight)
      .def("nodes", [](const Asn& a) {
        std::map<NodeKey, std::int64_t> f;
        for (const auto& [k, info] : a.nodes) f[k] = info.frequency;
        return by_display(f);
      }, "Node frequencies keyed by 'ROLE lemma'.")
      .def("edges", [](const Asn& a) {
        py::dict out;
        for (const auto& [k, info] : a.edges) out[py::make_tuple(k.first.display(), k.second.display())] = info.weight;
        return out;
      }, "Edge weights keyed by (head, dependent).")
      .def("heads", [](const Asn& a) {
        std::vector<std::string> out;
        for (const auto& k : heads(a)) out.push_back(k.display());
        return out;
      })
      .def("unweighted", &with_unit_weights)
      .def("reversed", &reversed)
      .def("forward_levels", [](const Asn& a) { return by_display(forward_levels(a)); })
      .def("backward_levels", [](const Asn& a) { return by_display(backward_levels(a)); })
      .def("hierarchy_stats", [](const Asn& a) {
        const auto st = hierarchy_stats(a, forward_levels(a));
        py::dict d;
        d["democracy"] = st.democracy;
        d["incoherence"] = st.incoherence;
        d["mean_difference"] = st.mean_difference;
        return d;
      })
      .def("influence_ranking", [](const Asn& a) {
        py::list out;
        for (const auto& r : influence_ranking(a, forward_levels(a))) {
          out.append(py::make_tuple(r.key.display(), r.level, r.out_weight));
        }
        return out;
      })
      .def("summary", [](const Asn& a) {
        const auto s = summarize(a);
        py::dict d;
        d["nodes"] = s.node_count;
        d["edges"] = s.edge_count;
        d["undirected_edges"] = s.undirected_edge_count;
        d["average_degree"] = s.average_degree;
        d["clustering"] = s.clustering;
        d["average_path_length"] = s.average_path_length;
        d["diameter"] = s.diameter;
        d["component_count"] = s.component_count;
        d["lcc_size"] = s.lcc_size;
        d["lcc_fraction"] = s.lcc_fraction;
        return d;
      })
      .def("degrees", [](const Asn& a, const std::string& variable) {
        const auto v = parse_degree_variable(variable);
        if (!v) throw Error("degree variable must be in, out or total");
        const auto seq = degree_sequences(a);
        return select(seq, *v);
      }, py::arg("variable") = "total")
      .def("to_dot", [](const Asn& a) { return render(write_dot, a); })
      .def("to_graphml", [](const Asn& a) { return render(write_graphml, a); })
      .def("to_csv", [](const Asn& a) { return render(write_edge_csv, a); })
      .def("__eq__", [](const Asn& a, const Asn& b) { return a == b; })
      .def("__repr__", [](const Asn& a) {
        return "<Network century=" + std::to_string(a.century) + " nodes=" + std::to_string(a.node_count()) +
               " edges=" + std::to_string(a.edge_count()) + ">";
      });

  m.def("validate_heads", [](const std::vector<int>& heads) {
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < heads.size(); ++i) {
      Token t;
      t.index = static_cast<int>(i) + 1;
      t.lemma = t.surface = "w" + std::to_string(i + 1);
      t.role = GrammaticalRole::N;
      t.head = heads[i];
      tokens.push_back(std::move(t));
    }
    std::vector<std::string> out;
    for (const auto& v : validate_tree(std::move(tokens)).violations) out.push_back(v.message);
    return out;
  }, py::arg("heads"), "Tree-constraint violations for 1-based head pointers (0 = root); empty when valid.");

  m.def("build_networks", [](const std::string& text, const std::string& missing, const std::string& source) {
    const auto policy = parse_missing_policy(missing);
    if (!policy) throw Error("unknown missing policy '" + missing + "'");
    std::istringstream in(text);
    std::vector<Asn> out;
    for (const auto& slice : parse_corpus(in, source)) {
      std::vector<DependencyTree> kept;
      for (const auto& t : slice.trees)
        if (filter_missing(t, *policy).keep) kept.push_back(t);
      if (!kept.empty()) out.push_back(aggregate(kept));
    }
    return out;
  }, py::arg("text"), py::arg("missing") = "drop-any", py::arg("source") = "<input>",
     "Parse treebank text and aggregate one network per century, oldest first.");

  m.def("solve_levels", [](std::size_t n, const std::vector<std::tuple<int, int, double>>& arcs) {
    std::vector<IndexedGraph::Arc> a;
    for (const auto& [u, v, w] : arcs) a.push_back({u, v, w});
    return solve_levels(n, a).level;
  }, py::arg("n"), py::arg("arcs"));

  m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("q"));
  m.def("sample_discrete_powerlaw", &sample_discrete_powerlaw, py::arg("alpha"), py::arg("xmin"), py::arg("n"),
        py::arg("seed"));
  m.def("fit_powerlaw", [](const std::vector<std::int64_t>& data) { return fit_dict(fit_powerlaw(data)); },
        py::arg("data"));
  m.def("bootstrap_pvalue", [](const std::vector<std::int64_t>& data, int replicates, std::uint64_t seed,
                               unsigned threads) {
    PowerLawFit fit;
    {
      py::gil_scoped_release release;
      fit = bootstrap_pvalue(fit_powerlaw(data), data, replicates, seed, threads);
    }
    return fit_dict(fit);
  }, py::arg("data"), py::arg("replicates") = 1000, py::arg("seed") = 1, py::arg("threads") = 0);
  m.def("likelihood_ratio_test", [](const std::vector<std::int64_t>& data, const py::dict& fit,
                                    const std::string& alternative) {
    Alternative alt;
    if (alternative == "exponential") alt = Alternative::kExponential;
    else if (alternative == "lognormal") alt = Alternative::kLognormal;
    else throw Error("alternative must be exponential or lognormal");
    const auto r = likelihood_ratio_test(data, fit_from_dict(fit), alt);
    py::dict d;
    d["alternative"] = std::string(to_string(r.alternative));
    d["log_likelihood_ratio"] = r.log_likelihood_ratio;
    d["normalized_ratio"] = r.normalized_ratio;
    d["p_value"] = r.p_value;
    d["favored"] = std::string(to_string(r.favored));
    d["parameters"] = r.parameters;
    return d;
  }, py::arg("data"), py::arg("fit"), py::arg("alternative") = "exponential");

  m.def("emergent_heads", [](const std::vector<Asn>& networks, int band, int min_gain, bool flag_initial) {
    std::vector<DiachronicSlice> slices;
    for (const auto& n : networks) slices.push_back(DiachronicSlice::build(n));
    py::list out;
    for (const auto& e : detect_emergent_heads(slices, {band, min_gain, flag_initial})) {
      py::dict d;
      d["key"] = e.key.display();
      d["century"] = e.century;
      d["prior_rank"] = e.prior_rank ? py::object(py::int_(*e.prior_rank)) : py::object(py::none());
      d["new_rank"] = e.new_rank;
      out.append(d);
    }
    return out;
  }, py::arg("networks"), py::arg("band") = 10, py::arg("min_gain") = 5, py::arg("flag_initial") = false);

  m.def("track", [](const std::vector<std::string>& keys, const std::vector<Asn>& networks) {
    std::vector<DiachronicSlice> slices;
    for (const auto& n : networks) slices.push_back(DiachronicSlice::build(n));
    const auto node_keys = parse_keys(keys);
    py::dict out;
    for (const auto& traj : track(node_keys, slices)) {
      py::list rows;
      for (const auto& r : traj.rows) {
        py::dict d;
        d["century"] = r.century;
        d["present"] = r.present;
        d["forward_level"] = r.forward_level ? py::object(py::float_(*r.forward_level)) : py::object(py::none());
        d["level_rank"] = r.level_rank ? py::object(py::int_(*r.level_rank)) : py::object(py::none());
        d["frequency"] = r.frequency ? py::object(py::int_(*r.frequency)) : py::object(py::none());
        d["is_head"] = r.is_head;
        rows.append(d);
      }
      out[py::str(traj.key.display())] = rows;
    }
    return out;
  }, py::arg("keys"), py::arg("networks"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"asnkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
