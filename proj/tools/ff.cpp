// Copyright 2026 The ff Authors.
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

// Command-line front end: gen, stats, solve, audit, verify.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "ff/audit.hpp"
#include "ff/compat.hpp"
#include "ff/connectivity.hpp"
#include "ff/error.hpp"
#include "ff/factor.hpp"
#include "ff/generators.hpp"
#include "ff/io.hpp"
#include "ff/pipelines.hpp"
#include "ff/tour.hpp"
#include "ff/verify.hpp"

namespace {

using ff::ErrorKind;
using ff::fail;
using ff::Json;

constexpr int kFindingExit = 3;

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    ff::write_json_file(out, j);
  }
}

int run_gen(const std::string& family, std::optional<int> n, const std::string& params,
            std::uint64_t seed, const std::string& out) {
  ff::Params p = ff::parse_params(params);
  if (n) p["n"] = std::to_string(*n);
  emit(ff::graph_to_json(ff::generate(family, p, seed)), out);
  return 0;
}

int run_stats(const std::string& path) {
  const ff::Multigraph g = ff::graph_from_json(ff::read_json_file(path));
  const std::vector<int> d = g.degrees();
  int loops = 0;
  for (const ff::Edge& e : g.edges()) loops += e.is_loop() ? 1 : 0;
  Json j = {{"n", g.num_vertices()},
            {"edges", g.num_edges()},
            {"loops", loops},
            {"min_degree", d.empty() ? 0 : *std::min_element(d.begin(), d.end())},
            {"max_degree", d.empty() ? 0 : *std::max_element(d.begin(), d.end())},
            {"connected", ff::is_connected(g)},
            {"bipartite", ff::is_bipartite(g)}};
  const int ec = ff::edge_connectivity(g);
  const int tc = ff::max_packing(g);
  j["edge_connectivity"] = ec == ff::kUnbounded ? Json("unbounded") : Json(ec);
  j["tree_connectivity"] = tc == ff::kUnbounded ? Json("unbounded") : Json(tc);
  if (g.num_vertices() <= ff::Limits{}.bipartition_vertices) {
    j["bipartite_index"] = ff::bipartite_index(g);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

ff::ResidueTarget residue_or(const ff::FactorContract& c, const ff::Multigraph& g, int k) {
  return c.residue ? *c.residue : ff::ResidueTarget::constant(g.num_vertices(), k, 0);
}

// Maps contract fields onto the pipeline's request.
ff::PipelineResult run_pipeline(const std::string& id, const ff::Multigraph& g,
                                const ff::FactorContract& c) {
  ff::ModuloRequest mod;
  mod.m = c.m;
  mod.m0 = c.m0;
  if (id == "eulerian-bounded") return ff::eulerian_bounded_pipeline(g);
  if (id == "quarter-degree") return ff::quarter_degree_pipeline(g);
  if (id == "bip-eulerian") return ff::bip_eulerian_pipeline(g);
  if (id == "bounded-edge") {
    ff::BoundedRequest req;
    req.m = c.m;
    req.m0 = c.m0;
    req.forced = c.include;
    req.excluded = c.exclude;
    if (c.lists.size() == 1 && c.lists.begin()->second.size() == 1) {
      req.z = c.lists.begin()->first;
      req.target_z = c.lists.begin()->second.front();
    }
    return ff::bounded_pipeline(g, req);
  }
  if (id == "list-edge") {
    ff::ListRequest req;
    req.m = c.m;
    req.m0 = c.m0;
    req.lists.resize(g.num_vertices());
    for (ff::Vertex v = 0; v < g.num_vertices(); ++v) {
      auto it = c.lists.find(v);
      if (it != c.lists.end()) {
        req.lists[v] = it->second;
      } else {
        for (int x = c.m; x <= g.degree(v) - c.m0; ++x) req.lists[v].push_back(x);
      }
    }
    req.forced = c.include;
    return ff::list_pipeline(g, req);
  }
  if (id == "mod2-main") {
    mod.residue = residue_or(c, g, 2);
    return ff::mod2_pipeline(g, mod);
  }
  if (id == "bip-modk" || id == "bip-modk-edge") {
    mod.residue = residue_or(c, g, 2);
    return ff::bip_modk_pipeline(g, mod);
  }
  if (id == "gen-modk") {
    mod.residue = residue_or(c, g, 2);
    return ff::gen_modk_pipeline(g, mod);
  }
  if (id == "mod-regular") {
    ff::ModRegularRequest req;
    req.residue = residue_or(c, g, 2);
    req.k = req.residue->k;
    req.m = c.m;
    req.m0 = c.m0;
    req.bipartite_required = c.bipartite;
    return ff::modregular_pipeline(g, req);
  }
  fail(ErrorKind::kInvalidInput, "no factor pipeline named " + id);
}

int run_solve(const std::string& graph_path, const std::string& contract_path,
              const std::string& method, const std::string& orientation_path,
              const std::string& out) {
  const ff::Multigraph g = ff::graph_from_json(ff::read_json_file(graph_path));
  const ff::FactorContract c = ff::contract_from_json(g, ff::read_json_file(contract_path));
  const std::string prefix = "pipeline:";
  if (method.rfind(prefix, 0) == 0) {
    const std::string id = method.substr(prefix.size());
    if (id == "nonbip-eulerian-k") {
      const int k = c.residue ? c.residue->k : std::max(1, c.m);
      const auto parts = ff::nonbip_eulerian_pipeline(g, k);
      Json j = ff::factor_to_json(ff::EdgeSubset(g.num_edges()));
      ff::EdgeSubset all(g.num_edges());
      Json list = Json::array();
      for (const auto& h : parts) {
        all = all | h;
        list.push_back(ff::factor_to_json(h)["edges"]);
      }
      j = ff::factor_to_json(all);
      j["parts"] = list;
      emit(j, out);
      return 0;
    }
    const ff::PipelineResult r = run_pipeline(id, g, c);
    const ff::Verdict v = ff::verify(g, r.factor, r.contract);
    Json j = ff::factor_to_json(r.factor);
    emit(j, out);
    for (const std::string& note : r.notes) std::cerr << "note: " << note << '\n';
    if (!v.pass) {
      for (const std::string& f : v.failures) std::cerr << "verify: " << f << '\n';
      return kFindingExit;
    }
    return 0;
  }
  if (method == "exact") {
    const auto h = ff::exact_factor(g, c);
    if (!h) fail(ErrorKind::kPreconditionUnmet, "no factor satisfies the contract");
    emit(ff::factor_to_json(*h), out);
    return 0;
  }
  if (method == "tour") {
    const ff::Orientation o = orientation_path.empty()
                                  ? ff::Orientation(g)
                                  : ff::orientation_from_json(g, ff::read_json_file(orientation_path));
    const int n = g.num_vertices();
    ff::VertexMap s(n, 0);
    for (ff::Vertex v = 0; v < n; ++v) s[v] = std::max(0, o.out_degree(v) - o.in_degree(v));
    const ff::EdgeSubset none(g.num_edges());
    const ff::EdgeSubset h = ff::tour_factor(g, o, c.include.value_or(none),
                                             c.exclude.value_or(none), s, ff::VertexMap(n, 0));
    emit(ff::factor_to_json(h), out);
    return 0;
  }
  fail(ErrorKind::kInvalidInput, "unknown method " + method);
}

int run_audit(const std::string& theorem, const std::string& corpus, std::uint64_t seed,
              const std::optional<std::string>& only, const std::string& out) {
  ff::CorpusSpec spec;
  if (corpus == "default") {
    spec = ff::default_corpus(theorem, seed);
  } else {
    spec = ff::corpus_from_json(theorem, ff::read_json_file(corpus), seed);
    spec.source = corpus;
  }
  ff::AuditOptions options;
  options.only = only;
  const ff::AuditReport report = ff::audit(theorem, spec, options);
  emit(report.to_json(), out);
  std::cerr << theorem << ": " << report.rows.size() << " rows, "
            << report.count_outcome("constructed") << " constructed, "
            << report.findings() << " findings\n";
  return report.findings() > 0 ? kFindingExit : 0;
}

int run_verify(const std::string& graph_path, const std::string& factor_path,
               const std::string& contract_path) {
  const ff::Multigraph g = ff::graph_from_json(ff::read_json_file(graph_path));
  const ff::EdgeSubset h = ff::factor_from_json(g, ff::read_json_file(factor_path));
  const ff::FactorContract c = ff::contract_from_json(g, ff::read_json_file(contract_path));
  const ff::Verdict v = ff::verify(g, h, c);
  std::cout << Json{{"pass", v.pass}, {"failures", v.failures}}.dump(2) << '\n';
  return v.pass ? 0 : kFindingExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-connected factor constructions and audits"};
  app.require_subcommand(1);

  std::string family, params, out, graph, contract, method, orientation, theorem, factor;
  std::string corpus = "default";
  std::string stats_path;
  std::optional<int> n;
  std::optional<std::string> only;
  std::uint64_t seed = 1;

  CLI::App* gen = app.add_subcommand("gen", "Generate a corpus graph");
  gen->add_option("--family", family, "Graph family")->required();
  gen->add_option("--n", n, "Vertex count");
  gen->add_option("--params", params, "k=v,... family parameters");
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--out", out, "Output graph JSON");

  CLI::App* stats = app.add_subcommand("stats", "Print graph statistics");
  stats->add_option("graph", stats_path, "Graph JSON")->required();

  CLI::App* solve = app.add_subcommand("solve", "Construct a factor");
  solve->add_option("--graph", graph, "Graph JSON")->required();
  solve->add_option("--contract", contract, "Contract JSON")->required();
  solve->add_option("--method", method, "pipeline:<id>, exact or tour")->required();
  solve->add_option("--orientation", orientation, "Orientation JSON for tour");
  solve->add_option("--out", out, "Output factor JSON");

  CLI::App* aud = app.add_subcommand("audit", "Audit a theorem over a corpus");
  aud->add_option("--theorem", theorem, "Theorem id")->required();
  aud->add_option("--corpus", corpus, "default or a corpus spec JSON");
  aud->add_option("--seed", seed, "Corpus seed");
  aud->add_option("--only", only, "Run a single instance key");
  aud->add_option("--out", out, "Output report JSON");

  CLI::App* ver = app.add_subcommand("verify", "Check a factor against a contract");
  ver->add_option("--graph", graph, "Graph JSON")->required();
  ver->add_option("--factor", factor, "Factor JSON")->required();
  ver->add_option("--contract", contract, "Contract JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ff::exit_code(ErrorKind::kInvalidInput);
  }

  try {
    if (*gen) return run_gen(family, n, params, seed, out);
    if (*stats) return run_stats(stats_path);
    if (*solve) return run_solve(graph, contract, method, orientation, out);
    if (*aud) return run_audit(theorem, corpus, seed, only, out);
    if (*ver) return run_verify(graph, factor, contract);
  } catch (const ff::Error& e) {
    std::cerr << "error: " << ff::to_string(e.kind()) << ": " << e.what() << '\n';
    return ff::exit_code(e.kind());
  }
  return 0;
}
