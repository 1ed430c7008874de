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

#include "ff/audit.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <functional>
#include <map>
#include <random>

#include "ff/compat.hpp"
#include "ff/connectivity.hpp"
#include "ff/factor.hpp"
#include "ff/pipelines.hpp"
#include "ff/verify.hpp"

namespace ff {
namespace {

// ---------------------------------------------------------------- corpora

CorpusEntry entry(const std::string& family, const std::string& params) {
  return CorpusEntry{family, parse_params(params), 0};
}

std::vector<CorpusEntry> four_edge_connected() {
  return {
      entry("complete", "n=4"),
      entry("complete", "n=5"),
      entry("complete", "n=6"),
      entry("complete", "n=7"),
      entry("dipole", "width=4"),
      entry("dipole", "width=5"),
      entry("dipole", "width=6"),
      entry("dipole", "width=7"),
      entry("dipole", "width=8"),
      entry("circulant", "n=6,offsets=1+2"),
      entry("circulant", "n=7,offsets=1+2"),
      entry("circulant", "n=8,offsets=1+2"),
      entry("circulant", "n=8,offsets=1+3"),
      entry("circulant", "n=9,offsets=1+2"),
      entry("circulant", "n=9,offsets=1+3"),
      entry("circulant", "n=9,offsets=1+4"),
      entry("multiplied", "base=complete,n=4,times=2"),
      entry("multiplied", "base=circulant,n=6,offsets=1,times=2"),
      entry("union-of-hamilton-cycles", "n=6,cycles=2"),
      entry("union-of-hamilton-cycles", "n=7,cycles=2"),
      entry("union-of-hamilton-cycles", "n=8,cycles=2"),
      entry("union-of-hamilton-cycles", "n=9,cycles=2"),
      entry("random-regular-multigraph", "n=6,r=4"),
      entry("random-regular-multigraph", "n=8,r=4"),
  };
}

std::vector<CorpusEntry> bipartite_corpus() {
  return {
      entry("dipole", "width=6"),
      entry("dipole", "width=8"),
      entry("dipole", "width=10"),
      entry("dipole", "width=12"),
      entry("complete-bipartite", "a=3,b=3"),
      entry("circulant", "n=8,offsets=1+3"),
      entry("multiplied", "base=complete-bipartite,a=2,b=2,times=3"),
      entry("multiplied", "base=complete-bipartite,a=2,b=2,times=5"),
      entry("multiplied", "base=complete-bipartite,a=2,b=3,times=3"),
      entry("multiplied", "base=complete-bipartite,a=2,b=3,times=4"),
      entry("multiplied", "base=complete-bipartite,a=3,b=3,times=2"),
      entry("multiplied", "base=complete-bipartite,a=3,b=3,times=3"),
      entry("multiplied", "base=circulant,n=6,offsets=1,times=4"),
      entry("multiplied", "base=complete,n=3,times=4"),
  };
}

std::vector<CorpusEntry> high_tree_connectivity() {
  return {
      entry("dipole", "width=9"),
      entry("dipole", "width=11"),
      entry("dipole", "width=12"),
      entry("multiplied", "base=complete,n=3,times=6"),
      entry("multiplied", "base=complete,n=3,times=8"),
      entry("multiplied", "base=complete,n=4,times=4"),
      entry("multiplied", "base=complete,n=4,times=5"),
      entry("multiplied", "base=complete,n=5,times=3"),
      entry("multiplied", "base=complete,n=5,times=4"),
      entry("multiplied", "base=complete,n=4,times=6"),
      entry("multiplied", "base=complete,n=4,times=8"),
      entry("multiplied", "base=complete,n=5,times=5"),
      entry("multiplied", "base=complete,n=5,times=7"),
      entry("multiplied", "base=complete,n=6,times=4"),
      entry("dipole", "width=14"),
      entry("multiplied", "base=union-of-hamilton-cycles,n=4,cycles=3,times=2"),
      entry("multiplied", "base=union-of-hamilton-cycles,n=6,cycles=3,times=3"),
      entry("union-of-hamilton-cycles", "n=4,cycles=7"),
  };
}

std::vector<CorpusEntry> tree_connected_mix() {
  return {
      entry("complete", "n=5"),
      entry("complete", "n=6"),
      entry("complete", "n=7"),
      entry("complete", "n=8"),
      entry("complete", "n=9"),
      entry("dipole", "width=4"),
      entry("dipole", "width=6"),
      entry("dipole", "width=9"),
      entry("circulant", "n=9,offsets=1+2+3+4"),
      entry("multiplied", "base=complete,n=3,times=3"),
      entry("multiplied", "base=complete,n=3,times=4"),
      entry("multiplied", "base=complete,n=3,times=6"),
      entry("multiplied", "base=complete,n=4,times=2"),
      entry("multiplied", "base=complete,n=4,times=3"),
      entry("multiplied", "base=complete,n=5,times=2"),
      entry("multiplied", "base=complete,n=5,times=3"),
      entry("multiplied", "base=complete-bipartite,a=3,b=3,times=2"),
      entry("union-of-hamilton-cycles", "n=6,cycles=4"),
  };
}

std::vector<CorpusEntry> regular_corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 3; n <= 9; ++n) out.push_back(entry("complete", "n=" + std::to_string(n)));
  for (const char* p : {"a=3,b=3", "a=4,b=4"}) out.push_back(entry("complete-bipartite", p));
  for (const char* p : {"n=5,offsets=1", "n=7,offsets=1", "n=9,offsets=1",
                        "n=6,offsets=2+3", "n=8,offsets=1+4", "n=7,offsets=1+2",
                        "n=8,offsets=1+2", "n=9,offsets=1+3", "n=8,offsets=1+2+4",
                        "n=9,offsets=1+2+4"}) {
    out.push_back(entry("circulant", p));
  }
  for (const char* p : {"n=6,r=3,simple=1", "n=8,r=3,simple=1", "n=8,r=5,simple=1",
                        "n=9,r=4,simple=1", "n=8,r=4,simple=1"}) {
    out.push_back(entry("random-regular-multigraph", p));
  }
  out.push_back(entry("multiplied", "base=complete,n=3,times=2"));
  out.push_back(entry("multiplied", "base=complete,n=4,times=2"));
  return out;
}

std::vector<CorpusEntry> oracle_corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= 6; ++n) out.push_back(entry("complete", "n=" + std::to_string(n)));
  for (const char* p : {"a=1,b=3", "a=2,b=3", "a=2,b=4", "a=3,b=3", "a=3,b=4"}) {
    out.push_back(entry("complete-bipartite", p));
  }
  for (const char* p : {"n=4,offsets=1", "n=6,offsets=1", "n=7,offsets=1",
                        "n=6,offsets=1+2", "n=8,offsets=1+2", "n=8,offsets=1+4"}) {
    out.push_back(entry("circulant", p));
  }
  for (int w = 2; w <= 6; w += 2) out.push_back(entry("dipole", "width=" + std::to_string(w)));
  for (const char* p : {"base=complete,n=3,times=2", "base=complete,n=3,times=4",
                        "base=complete,n=4,times=2", "base=circulant,n=5,offsets=1,times=2"}) {
    out.push_back(entry("multiplied", p));
  }
  for (const char* p : {"n=5,r=2", "n=6,r=3", "n=7,r=4", "n=8,r=3", "n=8,r=4"}) {
    out.push_back(entry("random-regular-multigraph", p));
  }
  for (const char* p : {"n=5,cycles=2", "n=7,cycles=2", "n=8,cycles=2"}) {
    out.push_back(entry("union-of-hamilton-cycles", p));
  }
  return out;
}

std::vector<Params> settings(std::initializer_list<const char*> items) {
  std::vector<Params> out;
  for (const char* s : items) out.push_back(parse_params(s));
  return out;
}

// ---------------------------------------------------------------- helpers

struct Instance {
  const Multigraph& g;
  const Params& setting;
  int draw;
  std::mt19937_64& rng;
  const AuditOptions& options;
};

int setting_int(const Params& s, const std::string& key, int fallback) {
  auto it = s.find(key);
  if (it == s.end()) return fallback;
  int value = 0;
  const std::string& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::kInvalidInput, "setting " + key + " is not an integer: " + text);
  }
  return value;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Json ids_json(const EdgeSubset& s) {
  std::vector<EdgeId> ids = s.ids();
  std::sort(ids.begin(), ids.end());
  return ids;
}

void mark_finding(AuditRow& row, const std::string& why) {
  row.finding = true;
  row.details.push_back(why);
}

std::string need_edge_connected(const Multigraph& g, int need) {
  if (need <= 0) return "";
  const int ec = edge_connectivity(g);
  if (ec >= need) return "";
  return "edge-connectivity " + std::to_string(ec) + " < " + std::to_string(need);
}

std::string need_tree_connected(const Multigraph& g, int need) {
  if (need <= 0 || tree_packing(g, need)) return "";
  return "not " + std::to_string(need) + "-tree-connected";
}

std::string need_compatible(const Multigraph& g, const ResidueTarget& r,
                            const Limits& limits) {
  CompatibilityOptions options;
  options.limits = limits;
  if (compatible(g, r, options).compatible) return "";
  return "residues not compatible";
}

std::string first_failure(std::initializer_list<std::string> checks) {
  for (const std::string& c : checks) {
    if (!c.empty()) return c;
  }
  return "";
}

int degree_sum(const ResidueTarget& r) {
  int s = 0;
  for (int x : r.residue) s += x;
  return s;
}

ResidueTarget random_residue(std::mt19937_64& rng, int n, int k) {
  std::vector<int> values(n);
  for (int& x : values) x = uniform_int(rng, 0, k - 1);
  return ResidueTarget(k, values);
}

// Draws f at random, then tries every value at vertex 0 until f is
// compatible; an incompatible draw is kept when no value works.
ResidueTarget compatible_residue(const Multigraph& g, std::mt19937_64& rng, int k,
                                 const Limits& limits) {
  ResidueTarget r = random_residue(rng, g.num_vertices(), k);
  if (g.num_vertices() == 0) return r;
  CompatibilityOptions options;
  options.limits = limits;
  const int start = r.residue[0];
  for (int i = 0; i < k; ++i) {
    r.residue[0] = (start + i) % k;
    if (compatible(g, r, options).compatible) return r;
  }
  r.residue[0] = start;
  return r;
}

VertexMap half_window(const Multigraph& g, int shift, bool upper) {
  VertexMap out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v);
    out[v] = upper ? half_ceil(d) + shift : half_floor(d) - shift;
  }
  return out;
}

// Odd draws fix d_H(z) at a random vertex to a random value inside the
// window with the right residue.
void draw_target(const Instance& in, const ResidueTarget* r, FactorContract& c,
                 std::optional<Vertex>& z_out, std::optional<int>& target_out,
                 AuditRow& row) {
  if (in.draw % 2 == 0 || in.g.num_vertices() == 0) return;
  const Vertex z = uniform_int(in.rng, 0, in.g.num_vertices() - 1);
  std::vector<int> options;
  for (int t = std::max(0, (*c.lower)[z]); t <= std::min(in.g.degree(z), (*c.upper)[z]); ++t) {
    if (!r || floor_mod(t, r->k) == r->residue[z]) options.push_back(t);
  }
  if (options.empty()) return;
  const int t = options[uniform_below(in.rng, options.size())];
  z_out = z;
  target_out = t;
  c.lists[z] = {t};
  row.artifact["target"] = {{"z", z}, {"degree", t}};
}

// Shared tail of every pipeline audit: run, verify against the audit's own
// contract, and cross-check small instances by exhaustive search.
void run_pipeline(const Instance& in, AuditRow& row, const std::string& unmet_reason,
                  const FactorContract& expected,
                  const std::function<PipelineResult()>& pipeline) {
  const Multigraph& g = in.g;
  row.hypotheses = unmet_reason.empty() ? "hold" : "fail: " + unmet_reason;
  row.artifact["contract"] = contract_to_json(expected);
  std::optional<PipelineResult> result;
  try {
    result = pipeline();
    row.outcome = "constructed";
  } catch (const Error& e) {
    row.outcome = to_string(e.kind());
    row.details.push_back(e.what());
    if (!e.witness().empty()) row.artifact["witness"] = e.witness();
    if (e.kind() == ErrorKind::kContractViolation) {
      mark_finding(row, "construction failed where the theorem guarantees existence");
    } else if (e.kind() == ErrorKind::kPreconditionUnmet && unmet_reason.empty()) {
      mark_finding(row, "pipeline refused an instance whose hypotheses hold");
    } else if (e.kind() == ErrorKind::kInvalidInput) {
      mark_finding(row, "pipeline rejected the audit's request");
    }
  }
  if (result) {
    row.artifact["factor"] = ids_json(result->factor);
    for (const std::string& note : result->notes) row.details.push_back(note);
    const Verdict v = verify(g, result->factor, expected);
    row.verifier = v.pass ? "pass" : "fail";
    for (const std::string& f : v.failures) row.details.push_back(f);
    if (!v.pass) mark_finding(row, "factor fails the theorem's contract");
    if (!unmet_reason.empty()) row.details.push_back("constructed although a hypothesis fails");
  }
  bool empty_window = false;
  if (expected.lower && expected.upper) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      empty_window = empty_window || (*expected.lower)[v] > (*expected.upper)[v];
    }
  }
  if (empty_window) {
    row.oracle = "none";
    row.details.push_back("the window is empty at some vertex");
    if (unmet_reason.empty()) mark_finding(row, "empty window although hypotheses hold");
  } else if (g.num_edges() <= in.options.oracle_edges) {
    const auto witness = brute_force_search(g, expected, in.options.limits);
    if (result) {
      row.oracle = witness ? "agree" : "disagree";
      if (!witness) mark_finding(row, "exhaustive search finds no factor the pipeline produced");
    } else {
      row.oracle = witness ? "exists" : "none";
      if (witness) row.artifact["oracle_factor"] = ids_json(*witness);
      if (!witness && unmet_reason.empty()) {
        mark_finding(row, "exhaustive search: no factor although hypotheses hold");
      }
    }
  }
}

// ---------------------------------------------------------------- theorems

void eulerian_bounded(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  FactorContract c;
  c.residue = ResidueTarget::constant(g.num_vertices(), 2, 0);
  c.m = 1;
  c.lower = half_window(g, 1, false);
  c.upper = half_window(g, 2, true);
  run_pipeline(in, row, need_edge_connected(g, 4), c,
               [&] { return eulerian_bounded_pipeline(g); });
}

void quarter_degree(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  FactorContract c;
  c.m = 1;
  c.lower = VertexMap(g.num_vertices());
  c.upper = VertexMap(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v);
    (*c.lower)[v] = d / 4;
    (*c.upper)[v] = (d - 2 + 3) / 4 + 2;
  }
  run_pipeline(in, row, need_edge_connected(g, 4), c,
               [&] { return quarter_degree_pipeline(g); });
}

EdgeSubset random_bounded_factor(const Multigraph& g, std::mt19937_64& rng, int cap) {
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) order[e] = e;
  shuffle(order, rng);
  std::vector<int> d(g.num_vertices(), 0);
  EdgeSubset out(g.num_edges());
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop() || d[ed.u] >= cap || d[ed.v] >= cap || uniform_below(rng, 2)) continue;
    ++d[ed.u];
    ++d[ed.v];
    out.insert(e);
  }
  return out;
}

void bounded_edge(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int m = setting_int(in.setting, "m", 1);
  const int m0 = setting_int(in.setting, "m0", 0);
  FactorContract c;
  c.m = m;
  c.m0 = m0;
  c.lower = half_window(g, m0, false);
  c.upper = half_window(g, m, true);
  BoundedRequest req;
  req.m = m;
  req.m0 = m0;
  draw_target(in, nullptr, c, req.z, req.target_z, row);
  if (in.draw % 2 == 1 && m0 == 0) {
    req.forced = random_bounded_factor(g, in.rng, m);
    c.include = req.forced;
  }
  const std::string reason = m + m0 == 0 ? std::string("m + m0 = 0")
                                         : need_edge_connected(g, 2 * m + 2 * m0);
  run_pipeline(in, row, reason, c, [&] { return bounded_pipeline(g, req); });
}

void list_edge(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int m = setting_int(in.setting, "m", 1);
  const int m0 = setting_int(in.setting, "m0", 0);
  ListRequest req;
  req.m = m;
  req.m0 = m0;
  req.lists.resize(g.num_vertices());
  FactorContract c;
  c.m = m;
  c.m0 = m0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v);
    std::vector<int> range;
    for (int x = m; x <= d - m0; ++x) range.push_back(x);
    shuffle(range, in.rng);
    const size_t size = std::min<size_t>(range.size(), half_ceil(d) + 1);
    range.resize(size);
    std::sort(range.begin(), range.end());
    req.lists[v] = range;
    c.lists[v] = range;
  }
  run_pipeline(in, row, need_edge_connected(g, 2 * m + 2 * m0), c,
               [&] { return list_pipeline(g, req); });
}

void mod2_main(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int m = setting_int(in.setting, "m", 1);
  const int m0 = setting_int(in.setting, "m0", 0);
  ResidueTarget r = random_residue(in.rng, g.num_vertices(), 2);
  if (g.num_vertices() > 0 && degree_sum(r) % 2 != 0) r.residue[0] ^= 1;
  FactorContract c;
  c.m = m;
  c.m0 = m0;
  c.residue = r;
  c.lower = half_window(g, 1 + m0, false);
  c.upper = half_window(g, 1 + m, true);
  ModuloRequest req;
  req.residue = r;
  req.m = m;
  req.m0 = m0;
  draw_target(in, &r, c, req.z, req.target_z, row);
  run_pipeline(in, row, need_edge_connected(g, 2 * m + 2 * m0 + 2), c,
               [&] { return mod2_pipeline(g, req); });
}

void bip_modk(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int m = setting_int(in.setting, "m", 1);
  const int m0 = setting_int(in.setting, "m0", 0);
  const int k = setting_int(in.setting, "k", 2);
  const ResidueTarget r = compatible_residue(g, in.rng, k, in.options.limits);
  FactorContract c;
  c.m = m;
  c.m0 = m0;
  c.residue = r;
  c.lower = half_window(g, k - 1 + m0, false);
  c.upper = half_window(g, k - 1 + m, true);
  ModuloRequest req;
  req.residue = r;
  req.m = m;
  req.m0 = m0;
  draw_target(in, &r, c, req.z, req.target_z, row);
  const std::string reason =
      !is_bipartite(g) ? std::string("graph is not bipartite")
                       : first_failure({need_compatible(g, r, in.options.limits),
                                        need_edge_connected(g, 2 * m + 2 * m0 + 4 * k - 4)});
  run_pipeline(in, row, reason, c, [&] { return bip_modk_pipeline(g, req); });
}

void gen_modk(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int m = setting_int(in.setting, "m", 1);
  const int m0 = setting_int(in.setting, "m0", 0);
  const int k = setting_int(in.setting, "k", 2);
  const ResidueTarget r = compatible_residue(g, in.rng, k, in.options.limits);
  FactorContract c;
  c.m = m;
  c.m0 = m0;
  c.residue = r;
  c.lower = half_window(g, k - 1 + m0, false);
  c.upper = half_window(g, k - 1 + m, true);
  ModuloRequest req;
  req.residue = r;
  req.m = m;
  req.m0 = m0;
  const int need = 2 * m + 2 * m0 + 6 * k - 5 - (k % 2 == 1 ? 1 : 0);
  const std::string reason =
      m + m0 == 0 ? std::string("m + m0 = 0")
                  : first_failure({need_compatible(g, r, in.options.limits),
                                   need_tree_connected(g, need)});
  run_pipeline(in, row, reason, c, [&] { return gen_modk_pipeline(g, req); });
  for (const std::string& d : row.details) {
    if (d.find("shifted mapping") != std::string::npos) {
      row.artifact["shifted_compatibility"] = "failed";
    }
  }
}

void mod_regular(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int n = g.num_vertices();
  ModRegularRequest req;
  req.k = setting_int(in.setting, "k", 2);
  req.m = setting_int(in.setting, "m", 1);
  req.m0 = setting_int(in.setting, "m0", 0);
  req.bipartite_required = setting_int(in.setting, "bipartite", 0) != 0;
  const int k = req.k;
  FactorContract c;
  c.m = req.m;
  c.m0 = req.m0;
  c.residue = ResidueTarget::constant(n, k, 0);
  c.bipartite = req.bipartite_required;
  c.lower = VertexMap(n, req.m >= 1 && n >= 2 ? k : 0);
  c.upper = VertexMap(n);
  for (Vertex v = 0; v < n; ++v) (*c.upper)[v] = g.degree(v) - (k - 1);
  const int base = req.m + req.m0 + 2 * k - 2;
  int need = req.m + req.m0 + 4 * k - 4;
  if (is_bipartite(g)) {
    need = base;
  } else if (req.bipartite_required) {
    need = 2 * base;
  }
  run_pipeline(in, row, need_tree_connected(g, need), c,
               [&] { return modregular_pipeline(g, req); });
}

void bip_eulerian(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  FactorContract c;
  c.m = 1;
  c.residue = ResidueTarget::constant(g.num_vertices(), 2, 0);
  c.bipartite = true;
  run_pipeline(in, row, need_tree_connected(g, 4), c,
               [&] { return bip_eulerian_pipeline(g); });
}

// Exhaustive bipartite index over all 2^n colourings.
int brute_bipartite_index(const Multigraph& g) {
  const int n = g.num_vertices();
  int best = g.num_edges();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int inside = 0;
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1) == ((mask >> e.v) & 1)) ++inside;
    }
    best = std::min(best, inside);
  }
  return best;
}

bool bipartite_by_contract(const Multigraph& g, const EdgeSubset& h) {
  FactorContract c;
  c.bipartite = true;
  return verify(g, h, c).pass;
}

void nonbip_eulerian(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int k = setting_int(in.setting, "k", 1);
  std::string reason = need_tree_connected(g, 3 * k);
  if (reason.empty() && bipartite_index(g, in.options.limits) < k) {
    reason = "bipartite index below k";
  }
  row.hypotheses = reason.empty() ? "hold" : "fail: " + reason;
  FactorContract c;
  c.m = 1;
  c.residue = ResidueTarget::constant(g.num_vertices(), 2, 0);
  row.artifact["contract"] = contract_to_json(c);
  std::vector<EdgeSubset> hs;
  try {
    hs = nonbip_eulerian_pipeline(g, k);
    row.outcome = "constructed";
  } catch (const Error& e) {
    row.outcome = to_string(e.kind());
    row.details.push_back(e.what());
    if (e.kind() == ErrorKind::kContractViolation ||
        (e.kind() == ErrorKind::kPreconditionUnmet && reason.empty())) {
      mark_finding(row, "no construction although hypotheses hold");
    }
    return;
  }
  Json factors = Json::array();
  bool pass = static_cast<int>(hs.size()) == k;
  EdgeSubset seen(g.num_edges());
  for (const EdgeSubset& h : hs) {
    factors.push_back(ids_json(h));
    const Verdict v = verify(g, h, c);
    for (const std::string& f : v.failures) row.details.push_back(f);
    pass = pass && v.pass;
    if (bipartite_by_contract(g, h)) {
      pass = false;
      row.details.push_back("a factor is bipartite");
    }
    if (!h.disjoint_from(seen)) {
      pass = false;
      row.details.push_back("factors share an edge");
    }
    seen = seen | h;
  }
  row.artifact["factors"] = factors;
  row.verifier = pass ? "pass" : "fail";
  if (!pass) mark_finding(row, "factors fail the theorem's claims");
}

ParitySide parity_side(const Params& s) {
  auto it = s.find("parity");
  if (it == s.end() || it->second == "none") return ParitySide::kNone;
  if (it->second == "first") return ParitySide::kFirst;
  if (it->second == "second") return ParitySide::kSecond;
  fail(ErrorKind::kInvalidInput, "parity must be none, first or second");
}

void decomp_bi_index(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int m1 = setting_int(in.setting, "m1", 1);
  const int m2 = setting_int(in.setting, "m2", 1);
  const int k0 = setting_int(in.setting, "k0", 1);
  const ParitySide parity = parity_side(in.setting);
  const int need = m1 + 2 * m2 + (parity == ParitySide::kNone ? 0 : 1);
  const std::string reason = need_tree_connected(g, need);
  row.hypotheses = reason.empty() ? "hold" : "fail: " + reason;
  BiIndexSplit split;
  try {
    split = decompose_by_bi_index(g, m1, m2, k0, parity, in.options.limits);
    row.outcome = "constructed";
  } catch (const Error& e) {
    row.outcome = to_string(e.kind());
    row.details.push_back(e.what());
    if (e.kind() == ErrorKind::kContractViolation ||
        (e.kind() == ErrorKind::kPreconditionUnmet && reason.empty())) {
      mark_finding(row, "no decomposition although hypotheses hold");
    }
    return;
  }
  const int bi = brute_bipartite_index(g);
  const int target = std::min(k0, bi);
  std::vector<int> x;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (split.partition.in_x[v]) x.push_back(v);
  }
  EdgeSubset inside(g.num_edges());
  for (EdgeId e : split.g2.ids()) {
    const Edge& ed = g.edge(e);
    if (split.partition.in_x[ed.u] == split.partition.in_x[ed.v]) inside.insert(e);
  }
  row.artifact["g1"] = ids_json(split.g1);
  row.artifact["g2"] = ids_json(split.g2);
  row.artifact["x"] = x;
  row.artifact["inside"] = inside.size();
  row.artifact["target"] = target;
  bool pass = true;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      row.details.push_back(what);
    }
  };
  check(split.g1.disjoint_from(split.g2) && (split.g1 | split.g2).size() == g.num_edges(),
        "parts do not partition the edges");
  FactorContract first;
  first.m = m1;
  check(verify(g, split.g1, first).pass, "first part lacks its trees");
  FactorContract crossing;
  crossing.m = m2;
  check(verify(g, split.g2 - inside, crossing).pass, "crossing part lacks its trees");
  const bool exact = parity == ParitySide::kNone || split.exact;
  check(exact ? inside.size() == target : inside.size() >= target,
        "inside edge count differs from min(k0, bi)");
  if (parity != ParitySide::kNone) {
    FactorContract even;
    even.residue = ResidueTarget::constant(g.num_vertices(), 2, 0);
    check(verify(g, parity == ParitySide::kFirst ? split.g1 : split.g2, even).pass,
          "parity side has odd degrees");
  }
  row.verifier = pass ? "pass" : "fail";
  row.oracle = "agree";
  if (!pass) mark_finding(row, "decomposition fails its claims");
}

bool regular_degree(const Multigraph& g, int* r) {
  if (g.num_vertices() == 0) return false;
  *r = g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (g.degree(v) != *r) return false;
  }
  return true;
}

void bi_index_regular(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  int r = 0;
  row.outcome = "recorded";
  if (!regular_degree(g, &r)) {
    row.hypotheses = "fail: graph is not regular";
    return;
  }
  const bool bipartite = is_bipartite(g);
  row.hypotheses = bipartite ? "fail: graph is bipartite" : "hold";
  const int bi = bipartite_index(g, in.options.limits);
  const int brute = brute_bipartite_index(g);
  row.oracle = bi == brute ? "agree" : "disagree";
  row.verifier = "n/a";
  row.artifact["r"] = r;
  row.artifact["bi"] = bi;
  row.artifact["bi_brute_force"] = brute;
  if (bi != brute) mark_finding(row, "bipartite index differs from brute force");
  if (bipartite) return;
  const bool half = 2 * bi >= r;
  row.artifact["half_bound"] = half ? "holds" : "fails";
  if (!half) mark_finding(row, "bi < r/2 on a non-bipartite regular graph");
  if (r % 2 == 1) {
    const bool odd = bi >= r;
    row.artifact["odd_bound"] = odd ? "holds" : "fails";
    if (!odd) mark_finding(row, "odd r: bi < r");
  }
}

// Solver against brute force; one of three solvers per draw.
void gf_oracle(const Instance& in, AuditRow& row) {
  const Multigraph& g = in.g;
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  std::mt19937_64& rng = in.rng;
  row.outcome = "compared";
  row.hypotheses = "hold";
  if (num_edges > in.options.oracle_edges) {
    row.hypotheses = "fail: too many edges for the oracle";
    row.outcome = "capacity";
    return;
  }
  auto random_subset = [&](int percent) {
    EdgeSubset s(num_edges);
    for (EdgeId e = 0; e < num_edges; ++e) {
      if (static_cast<int>(uniform_below(rng, 100)) < percent) s.insert(e);
    }
    return s;
  };
  FactorContract c;
  std::optional<EdgeSubset> found;
  const int kind = in.draw % 3;
  if (kind == 0) {
    row.artifact["solver"] = "gf_factor";
    VertexMap lower(n);
    VertexMap upper(n);
    const Vertex equal = uniform_below(rng, 2) ? uniform_int(rng, 0, std::max(0, n - 1)) : -1;
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      lower[v] = uniform_int(rng, 0, d);
      upper[v] = v == equal ? lower[v] : uniform_int(rng, lower[v] + 1, d + 1);
    }
    EdgeSubset include = random_subset(10);
    EdgeSubset exclude = random_subset(10) - include;
    c.lower = lower;
    c.upper = upper;
    c.include = include;
    c.exclude = exclude;
    SolverOptions options;
    options.lovasz_pruning = false;
    options.limits = in.options.limits;
    found = gf_factor(g, lower, upper, include, exclude, options);
    bool loopless = true;
    for (const Edge& e : g.edges()) loopless = loopless && !e.is_loop();
    if (loopless && n <= in.options.limits.lovasz_vertices) {
      const auto w = lovasz_check(g, lower, upper, include, exclude, in.options.limits);
      bool agree = w.has_value() == !found.has_value();
      if (w) {
        const LovaszWitness again = lovasz_evaluate(g, lower, upper, include, exclude, w->a, w->b);
        agree = agree && again.value() < 0;
        row.artifact["lovasz_witness"] = {{"a", w->a}, {"b", w->b}, {"value", again.value()}};
      }
      row.artifact["lovasz"] = agree ? "agree" : "disagree";
      if (!agree) mark_finding(row, "Lovasz criterion disagrees with the solver");
    }
  } else if (kind == 1) {
    row.artifact["solver"] = "directed_list_factor";
    std::vector<bool> forward(num_edges);
    for (EdgeId e = 0; e < num_edges; ++e) forward[e] = uniform_below(rng, 2);
    const Orientation o(g, forward);
    ListFamily lists(n);
    const bool covering = uniform_below(rng, 2);
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      std::vector<int> all;
      for (int x = 0; x <= d; ++x) all.push_back(x);
      shuffle(all, rng);
      const int size = covering ? std::min(d + 1, o.out_degree(v) + 1)
                                : uniform_int(rng, 1, std::max(1, (d + 1) / 2));
      all.resize(size);
      std::sort(all.begin(), all.end());
      lists[v] = all;
      c.lists[v] = all;
    }
    row.artifact["orientation"] = orientation_to_json(o)["forward"];
    found = directed_list_factor(g, o, lists);
  } else {
    row.artifact["solver"] = "modulo_factor_bounded";
    const int k = uniform_int(rng, 2, 4);
    const ResidueTarget r = random_residue(rng, n, k);
    VertexMap lo(n);
    VertexMap hi(n);
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      lo[v] = uniform_int(rng, 0, d / 2);
      hi[v] = uniform_int(rng, lo[v], d);
    }
    EdgeSubset include = random_subset(8);
    EdgeSubset exclude = random_subset(8) - include;
    c.residue = r;
    c.lower = lo;
    c.upper = hi;
    c.include = include;
    c.exclude = exclude;
    found = modulo_factor_bounded(g, r, lo, hi, include, exclude);
  }
  row.artifact["contract"] = contract_to_json(c);
  const auto brute = brute_force_search(g, c, in.options.limits);
  row.artifact["solver_found"] = found.has_value();
  row.artifact["oracle_found"] = brute.has_value();
  if (found) {
    row.artifact["factor"] = ids_json(*found);
    const Verdict v = verify(g, *found, c);
    row.verifier = v.pass ? "pass" : "fail";
    for (const std::string& f : v.failures) row.details.push_back(f);
    if (!v.pass) mark_finding(row, "solver output fails its contract");
  }
  row.oracle = found.has_value() == brute.has_value() ? "agree" : "disagree";
  if (row.oracle == "disagree") mark_finding(row, "solver and exhaustive search disagree");
}

using Handler = void (*)(const Instance&, AuditRow&);

struct Theorem {
  Handler run;
  std::vector<CorpusEntry> (*graphs)();
  std::vector<Params> settings;
  int draws;
  /// Seeded copies of each randomized family entry.
  int copies = 10;
};

const std::map<std::string, Theorem>& registry() {
  static const std::map<std::string, Theorem> table = {
      {"eulerian-bounded", {eulerian_bounded, four_edge_connected, settings({""}), 1}},
      {"quarter-degree", {quarter_degree, four_edge_connected, settings({""}), 1}},
      {"bounded-edge",
       {bounded_edge, four_edge_connected, settings({"m=1,m0=0", "m=2,m0=0", "m=1,m0=1"}), 2}},
      {"list-edge",
       {list_edge, four_edge_connected, settings({"m=1,m0=0", "m=2,m0=0", "m=1,m0=1"}), 2}},
      {"mod2-main",
       {mod2_main, four_edge_connected, settings({"m=1,m0=0", "m=0,m0=1", "m=1,m0=1"}), 2}},
      {"bip-modk",
       {bip_modk, bipartite_corpus, settings({"k=2,m=1,m0=0", "k=2,m=2,m0=0", "k=3,m=1,m0=0"}),
        2}},
      {"bip-modk-edge",
       {bip_modk, bipartite_corpus, settings({"k=2,m=1,m0=0", "k=2,m=1,m0=1", "k=3,m=1,m0=0"}),
        2}},
      {"gen-modk",
       {gen_modk, high_tree_connectivity, settings({"k=2,m=1,m0=0", "k=2,m=1,m0=1", "k=3,m=1,m0=0"}), 2}},
      {"decomp-bi-index",
       {decomp_bi_index, tree_connected_mix,
        settings({"k0=1,m1=1,m2=1", "k0=1,m1=2,m2=1", "k0=2,m1=1,m2=2",
                  "k0=1,m1=1,m2=1,parity=first", "k0=1,m1=1,m2=1,parity=second"}),
        1}},
      {"mod-regular",
       {mod_regular, tree_connected_mix,
        settings({"bipartite=0,k=2,m=1,m0=0", "bipartite=1,k=2,m=1,m0=0",
                  "bipartite=0,k=2,m=1,m0=1", "bipartite=0,k=3,m=1,m0=0"}),
        1}},
      {"bip-eulerian", {bip_eulerian, tree_connected_mix, settings({""}), 1}},
      {"nonbip-eulerian-k", {nonbip_eulerian, tree_connected_mix, settings({"k=1", "k=2"}), 1}},
      {"bi-index-regular", {bi_index_regular, regular_corpus, settings({""}), 1}},
      {"gf-oracle-equivalence", {gf_oracle, oracle_corpus, settings({""}), 9, 19}},
  };
  return table;
}

const Theorem& lookup(const std::string& theorem) {
  auto it = registry().find(theorem);
  if (it == registry().end()) fail(ErrorKind::kInvalidInput, "unknown theorem " + theorem);
  return it->second;
}

Params params_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_params(j.get<std::string>());
  if (!j.is_object()) fail(ErrorKind::kInvalidInput, what + " must be an object or string");
  Params out;
  for (const auto& [k, v] : j.items()) {
    if (v.is_string()) {
      out[k] = v.get<std::string>();
    } else if (v.is_number_integer()) {
      out[k] = std::to_string(v.get<long long>());
    } else {
      fail(ErrorKind::kInvalidInput, what + "." + k + " must be a string or integer");
    }
  }
  return out;
}

Json params_to_json(const Params& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = v;
  return out;
}

std::string instance_key(const CorpusEntry& e, const Params& setting, int draw) {
  return e.family + "[" + format_params(e.params) + ";seed=" + std::to_string(e.seed) +
         "]/" + format_params(setting) + "/" + std::to_string(draw);
}

bool randomized(const CorpusEntry& e) {
  auto random_family = [](const std::string& f) {
    return f == "random-regular-multigraph" || f == "union-of-hamilton-cycles";
  };
  if (random_family(e.family)) return true;
  auto base = e.params.find("base");
  return e.family == "multiplied" && base != e.params.end() && random_family(base->second);
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& [id, t] : registry()) out.push_back(id);
  return out;
}

CorpusSpec default_corpus(const std::string& theorem, std::uint64_t seed) {
  const Theorem& t = lookup(theorem);
  CorpusSpec c;
  c.seed = seed;
  std::uint64_t next = seed;
  for (const CorpusEntry& e : t.graphs()) {
    const int copies = randomized(e) ? t.copies : 1;
    for (int i = 0; i < copies; ++i) {
      c.graphs.push_back(e);
      c.graphs.back().seed = next++;
    }
  }
  c.settings = t.settings;
  c.draws = t.draws;
  return c;
}

CorpusSpec corpus_from_json(const std::string& theorem, const Json& j,
                            std::uint64_t seed) {
  if (!j.is_object()) fail(ErrorKind::kInvalidInput, "corpus spec must be an object");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      fail(ErrorKind::kInvalidInput, "corpus seed must be a non-negative integer");
    }
    seed = j["seed"].get<std::uint64_t>();
  }
  CorpusSpec c = default_corpus(theorem, seed);
  c.source = "file";
  if (j.contains("graphs")) {
    if (!j["graphs"].is_array()) fail(ErrorKind::kInvalidInput, "graphs must be an array");
    c.graphs.clear();
    for (const Json& g : j["graphs"]) {
      if (!g.is_object() || !g.contains("family") || !g["family"].is_string()) {
        fail(ErrorKind::kInvalidInput, "each graph needs a family");
      }
      CorpusEntry e;
      e.family = g["family"].get<std::string>();
      if (g.contains("params")) e.params = params_from_json(g["params"], "params");
      e.seed = seed + c.graphs.size();
      if (g.contains("seed")) {
        if (!g["seed"].is_number_unsigned()) {
          fail(ErrorKind::kInvalidInput, "graph seed must be a non-negative integer");
        }
        e.seed = g["seed"].get<std::uint64_t>();
      }
      c.graphs.push_back(e);
    }
  }
  if (j.contains("settings")) {
    if (!j["settings"].is_array()) fail(ErrorKind::kInvalidInput, "settings must be an array");
    c.settings.clear();
    for (const Json& s : j["settings"]) c.settings.push_back(params_from_json(s, "setting"));
    if (c.settings.empty()) c.settings.push_back({});
  }
  if (j.contains("draws")) {
    if (!j["draws"].is_number_integer() || j["draws"].get<int>() < 1) {
      fail(ErrorKind::kInvalidInput, "draws must be a positive integer");
    }
    c.draws = j["draws"].get<int>();
  }
  return c;
}

Json corpus_to_json(const CorpusSpec& corpus) {
  Json graphs = Json::array();
  for (const CorpusEntry& e : corpus.graphs) {
    graphs.push_back({{"family", e.family}, {"params", params_to_json(e.params)}, {"seed", e.seed}});
  }
  Json settings = Json::array();
  for (const Params& s : corpus.settings) settings.push_back(params_to_json(s));
  return {{"source", corpus.source}, {"seed", corpus.seed}, {"graphs", graphs},
          {"settings", settings}, {"draws", corpus.draws}};
}

int AuditReport::count_outcome(const std::string& outcome) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [&](const AuditRow& r) { return r.outcome == outcome; }));
}

int AuditReport::findings() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const AuditRow& r) { return r.finding; }));
}

Json AuditReport::to_json(bool include_timing) const {
  Json rows_json = Json::array();
  std::map<std::string, int> outcomes;
  std::map<std::string, int> verifier;
  std::map<std::string, int> oracle;
  int hold = 0;
  for (const AuditRow& r : rows) {
    ++outcomes[r.outcome];
    ++verifier[r.verifier];
    ++oracle[r.oracle];
    if (r.hypotheses == "hold") ++hold;
    Json row = {
        {"key", r.key},
        {"graph",
         {{"family", r.graph.family},
          {"params", params_to_json(r.graph.params)},
          {"seed", r.graph.seed},
          {"n", r.n},
          {"edges", r.num_edges}}},
        {"setting", params_to_json(r.setting)},
        {"draw", r.draw},
        {"hypotheses", r.hypotheses},
        {"outcome", r.outcome},
        {"verifier", r.verifier},
        {"oracle", r.oracle},
        {"finding", r.finding},
        {"details", r.details},
        {"artifact", r.artifact},
    };
    if (r.finding) {
      row["reproduce"] = "ff audit --theorem " + theorem + " --corpus " +
                         (corpus.source == "default" ? std::string("default")
                                                     : shell_quote(corpus.source)) +
                         " --seed " + std::to_string(corpus.seed) + " --only " +
                         shell_quote(r.key) + " --out finding.json";
    }
    rows_json.push_back(row);
  }
  Json out = {
      {"format", "ffr-1"},
      {"theorem", theorem},
      {"corpus", corpus_to_json(corpus)},
      {"rows", rows_json},
      {"summary",
       {{"rows", static_cast<int>(rows.size())},
        {"hypotheses_hold", hold},
        {"findings", findings()},
        {"outcomes", outcomes},
        {"verifier", verifier},
        {"oracle", oracle}}},
  };
  if (include_timing) out["timing"] = {{"seconds", seconds}};
  return out;
}

AuditReport audit(const std::string& theorem, const CorpusSpec& corpus,
                  const AuditOptions& options) {
  const Theorem& t = lookup(theorem);
  const auto start = std::chrono::steady_clock::now();
  AuditReport report;
  report.theorem = theorem;
  report.corpus = corpus;
  const std::vector<Params> settings =
      corpus.settings.empty() ? std::vector<Params>{Params{}} : corpus.settings;
  for (const CorpusEntry& e : corpus.graphs) {
    std::optional<Multigraph> g;
    std::string generation_error;
    try {
      g = generate(e.family, e.params, e.seed);
    } catch (const Error& err) {
      generation_error = err.what();
    }
    for (const Params& setting : settings) {
      for (int draw = 0; draw < corpus.draws; ++draw) {
        AuditRow row;
        row.key = instance_key(e, setting, draw);
        if (options.only && *options.only != row.key) continue;
        row.graph = e;
        row.setting = setting;
        row.draw = draw;
        if (!g) {
          row.hypotheses = "fail: graph not generated";
          row.outcome = "invalid-input";
          row.details.push_back(generation_error);
          report.rows.push_back(std::move(row));
          continue;
        }
        row.n = g->num_vertices();
        row.num_edges = g->num_edges();
        std::mt19937_64 rng(splitmix(corpus.seed ^ fnv1a(row.key)));
        const Instance in{*g, setting, draw, rng, options};
        try {
          t.run(in, row);
        } catch (const Error& err) {
          // Errors outside the pipeline call: capacity or a bad setting.
          row.outcome = to_string(err.kind());
          row.details.push_back(err.what());
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const AuditRow& a, const AuditRow& b) { return a.key < b.key; });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ff
