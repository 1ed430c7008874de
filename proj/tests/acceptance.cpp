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

// Acceptance run: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ff/audit.hpp"
#include "ff/compat.hpp"
#include "ff/connectivity.hpp"
#include "ff/error.hpp"
#include "ff/generators.hpp"
#include "ff/tour.hpp"
#include "ff/verify.hpp"
#include "test_support.hpp"

namespace ff {
namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

// Every graph of every default corpus, deduplicated by instance key.
std::vector<Multigraph> corpus_graphs(int max_vertices) {
  std::vector<Multigraph> out;
  std::set<std::string> seen;
  for (const std::string& theorem : theorem_ids()) {
    for (const CorpusEntry& e : default_corpus(theorem, 1).graphs) {
      const std::string key = e.family + format_params(e.params) + std::to_string(e.seed);
      if (!seen.insert(key).second) continue;
      try {
        Multigraph g = generate(e.family, e.params, e.seed);
        if (g.num_vertices() <= max_vertices) out.push_back(std::move(g));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

// min over partitions with at least two blocks of floor(e(P) / (|P| - 1)),
// by restricted-growth enumeration.
int partition_formula(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> block(n, 0);
  std::vector<int> top(n, 0);
  int best = std::numeric_limits<int>::max();
  while (true) {
    int blocks = 0;
    for (int b : block) blocks = std::max(blocks, b + 1);
    if (blocks >= 2) {
      int crossing = 0;
      for (const Edge& e : g.edges()) crossing += block[e.u] != block[e.v] ? 1 : 0;
      best = std::min(best, crossing / (blocks - 1));
    }
    int i = n - 1;
    while (i > 0 && block[i] > top[i - 1]) --i;
    if (i <= 0) break;
    ++block[i];
    top[i] = std::max(top[i - 1], block[i]);
    for (int j = i + 1; j < n; ++j) {
      block[j] = 0;
      top[j] = top[i];
    }
  }
  return best;
}

Outcome packing_formula() {
  std::vector<Multigraph> graphs = corpus_graphs(7);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 6));
    const int m = static_cast<int>(uniform_below(rng, 15));
    graphs.push_back(testing::random_multigraph(rng, n, m, i % 4 == 0));
  }
  int checked = 0;
  int mismatches = 0;
  for (const Multigraph& g : graphs) {
    if (g.num_vertices() < 2) continue;
    ++checked;
    if (max_packing(g) != partition_formula(g)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(checked) + " graphs with n <= 7, " +
                               std::to_string(mismatches) + " mismatches"};
}

const AuditReport& oracle_report() {
  static const AuditReport report =
      audit("gf-oracle-equivalence", default_corpus("gf-oracle-equivalence", 1));
  return report;
}

Outcome oracle_equivalence() {
  const AuditReport& r = oracle_report();
  std::map<std::string, int> compared;
  int disagree = 0;
  for (const AuditRow& row : r.rows) {
    if (row.outcome != "compared") continue;
    ++compared[row.artifact["solver"].get<std::string>()];
    if (row.oracle != "agree") ++disagree;
  }
  int total = 0;
  std::string per;
  for (const auto& [solver, count] : compared) {
    total += count;
    per += " " + solver + "=" + std::to_string(count);
  }
  const bool pass = disagree == 0 && total >= 200 && compared.size() == 3;
  return {pass, std::to_string(total) + " instances (" + per.substr(1) + "), " +
                    std::to_string(disagree) + " disagreements"};
}

Outcome lovasz_duality() {
  const AuditReport& r = oracle_report();
  int agree = 0;
  int disagree = 0;
  for (const AuditRow& row : r.rows) {
    if (!row.artifact.contains("lovasz")) continue;
    (row.artifact["lovasz"] == "agree" ? agree : disagree)++;
  }
  return {disagree == 0 && agree > 0,
          std::to_string(agree + disagree) + " loopless gf instances, " +
              std::to_string(disagree) + " exceptions"};
}

Outcome tour_construction_bounds() {
  std::mt19937_64 rng(2026);
  int violations = 0;
  int errors = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 10));
    const int extra = static_cast<int>(uniform_below(rng, 31 - (n - 1)));
    const Multigraph g =
        testing::random_connected(rng, n, std::max(extra, n == 1 ? 1 : 0), n == 1 || trial % 3 == 0);
    const int m = g.num_edges();
    std::vector<bool> fwd(m);
    for (int e = 0; e < m; ++e) fwd[e] = uniform_below(rng, 2);
    const Orientation o(g, fwd);
    EdgeSubset f(m);
    EdgeSubset f0(m);
    for (EdgeId e = 0; e < m; ++e) {
      const auto roll = uniform_below(rng, 5);
      if (roll == 0) f.insert(e);
      if (roll == 1) f0.insert(e);
    }
    if (f.empty() && f0.empty()) f.insert(static_cast<EdgeId>(uniform_below(rng, m)));
    VertexMap s(n);
    VertexMap s0(n);
    for (Vertex v = 0; v < n; ++v) {
      const int surplus = std::max(0, o.out_degree(v) - o.in_degree(v));
      const int part = static_cast<int>(uniform_below(rng, surplus + 1));
      s[v] = part;
      s0[v] = surplus - part;
    }
    try {
      const EdgeSubset h = tour_factor(g, o, f, f0, s, s0);
      const std::vector<int> d = degrees_in(g, h);
      bool ok = f.is_subset_of(h) && h.disjoint_from(f0);
      for (Vertex v = 0; v < n; ++v) {
        const int lo = o.out_degree(v) - o.out_degree(v, f0) - s0[v];
        const int hi = o.in_degree(v) + o.out_degree(v, f) + s[v];
        ok = ok && lo <= d[v] && d[v] <= hi;
      }
      if (!ok) ++violations;
    } catch (const Error&) {
      ++errors;
    }
  }
  return {violations == 0 && errors == 0,
          "500 digraphs, " + std::to_string(violations) + " violations, " +
              std::to_string(errors) + " errors"};
}

// Rows whose hypotheses hold must all be constructed and verified.
struct AuditTally {
  int hold = 0;
  int good = 0;
  int findings = 0;
};

AuditTally tally(const AuditReport& r, const std::function<bool(const AuditRow&)>& keep) {
  AuditTally t;
  for (const AuditRow& row : r.rows) {
    if (!keep(row)) continue;
    t.findings += row.finding ? 1 : 0;
    if (row.hypotheses != "hold") continue;
    ++t.hold;
    if (row.outcome == "constructed" && row.verifier == "pass") ++t.good;
  }
  return t;
}

std::string tally_text(const AuditTally& t) {
  return std::to_string(t.good) + "/" + std::to_string(t.hold) +
         " constructed+pass, " + std::to_string(t.findings) + " findings";
}

Outcome eulerian_bounded_audit() {
  const AuditReport r = audit("eulerian-bounded", default_corpus("eulerian-bounded", 1));
  std::set<std::string> families;
  bool small = true;
  for (const AuditRow& row : r.rows) {
    families.insert(row.graph.family + format_params(row.graph.params));
    small = small && row.n <= 9;
  }
  bool covered = true;
  for (const char* need : {"completen=5", "completen=6", "completen=7", "dipolewidth=4",
                           "dipolewidth=8", "circulantn=9,offsets=1+2"}) {
    covered = covered && families.count(need);
  }
  const AuditTally t = tally(r, [](const AuditRow&) { return true; });
  return {covered && small && t.hold > 0 && t.good == t.hold && t.findings == 0,
          std::to_string(r.rows.size()) + " graphs, " + tally_text(t)};
}

Outcome settings_audit(const std::string& theorem, std::vector<std::string> settings) {
  const AuditReport r = audit(theorem, default_corpus(theorem, 1));
  bool pass = true;
  std::string text;
  for (const std::string& s : settings) {
    const Params want = parse_params(s);
    const AuditTally t = tally(r, [&](const AuditRow& row) { return row.setting == want; });
    pass = pass && t.hold > 0 && t.good == t.hold && t.findings == 0;
    text += (text.empty() ? "" : "; ") + s + ": " + tally_text(t);
  }
  if (theorem == "gen-modk") {
    for (const AuditRow& row : r.rows) {
      if (row.artifact.contains("shifted_compatibility")) pass = false;
    }
  }
  return {pass, text};
}

Outcome k5_negative_control() {
  const Multigraph k5 = generate("complete", parse_params("n=5"), 0);
  FactorContract c;
  c.m = 1;
  c.residue = ResidueTarget::constant(5, 2, 0);
  c.bipartite = true;
  const bool none = !brute_force_search(k5, c).has_value();
  const AuditReport r = audit("bip-eulerian", default_corpus("bip-eulerian", 1));
  const AuditTally t = tally(r, [](const AuditRow&) { return true; });
  return {none && t.hold > 0 && t.good == t.hold && t.findings == 0,
          std::string("K5 ") + (none ? "has none" : "HAS ONE") + "; 4-tree-connected: " +
              tally_text(t)};
}

Outcome compatibility_laws() {
  const std::vector<Multigraph> graphs = corpus_graphs(9);
  std::mt19937_64 rng(5);
  int checks = 0;
  int exceptions = 0;
  for (const Multigraph& g : graphs) {
    const int n = g.num_vertices();
    for (int k = 2; k <= 4; ++k) {
      for (int draw = 0; draw < 4; ++draw) {
        std::vector<int> values(n);
        int sum = 0;
        for (int& x : values) {
          x = static_cast<int>(uniform_below(rng, k));
          sum += x;
        }
        const bool compat = compatible(g, ResidueTarget(k, values)).compatible;
        ++checks;
        if (k == 2 && compat != (sum % 2 == 0)) ++exceptions;
        if (k % 2 == 0 && compat && sum % 2 != 0) ++exceptions;
        // A factor's own degrees are always compatible.
        EdgeSubset h(g.num_edges());
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          if (uniform_below(rng, 2)) h.insert(e);
        }
        std::vector<int> own(n);
        const std::vector<int> d = degrees_in(g, h);
        for (Vertex v = 0; v < n; ++v) own[v] = d[v] % k;
        ++checks;
        if (!compatible(g, ResidueTarget(k, own)).compatible) ++exceptions;
      }
    }
  }
  return {exceptions == 0, std::to_string(graphs.size()) + " graphs, " +
                               std::to_string(checks) + " checks, " +
                               std::to_string(exceptions) + " exceptions"};
}

Outcome bi_index_regular_audit() {
  const CorpusSpec corpus = default_corpus("bi-index-regular", 1);
  const AuditReport r = audit("bi-index-regular", corpus);
  const AuditReport again = audit("bi-index-regular", corpus);
  const bool reproducible = r.to_json(false).dump() == again.to_json(false).dump();
  int agree = 0;
  int half_fails = 0;
  int odd_recorded = 0;
  int odd_fails = 0;
  bool k4_recorded = false;
  for (const AuditRow& row : r.rows) {
    if (row.oracle == "agree") ++agree;
    if (row.artifact.contains("half_bound") && row.artifact["half_bound"] != "holds") {
      ++half_fails;
    }
    if (row.artifact.contains("odd_bound")) {
      ++odd_recorded;
      if (row.artifact["odd_bound"] == "fails") ++odd_fails;
      if (row.graph.family == "complete" && row.n == 4) {
        k4_recorded = row.finding && row.artifact["odd_bound"] == "fails";
      }
    }
  }
  const bool pass = agree == static_cast<int>(r.rows.size()) && half_fails == 0 &&
                    k4_recorded && reproducible;
  return {pass, std::to_string(agree) + "/" + std::to_string(r.rows.size()) +
                    " bi match brute force, r/2 bound fails on " + std::to_string(half_fails) +
                    ", odd-r bound fails on " + std::to_string(odd_fails) + "/" +
                    std::to_string(odd_recorded) + " (K4 " +
                    (k4_recorded ? "recorded" : "MISSING") + "), " +
                    (reproducible ? "byte-reproducible" : "NOT reproducible")};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace ff

int main() {
  using namespace ff;
  const std::vector<Criterion> criteria = {
      {1, "packing formula", 60, packing_formula},
      {2, "solver/oracle equivalence", 300, oracle_equivalence},
      {3, "Lovasz duality", 300, lovasz_duality},
      {4, "tour construction bounds", 60, tour_construction_bounds},
      {5, "eulerian-bounded audit", 300, eulerian_bounded_audit},
      {6, "bip-modk-edge audit", 300,
       [] { return settings_audit("bip-modk-edge", {"k=2,m=1,m0=0", "k=2,m=1,m0=1", "k=3,m=1,m0=0"}); }},
      {7, "gen-modk audit", 300,
       [] { return settings_audit("gen-modk", {"k=2,m=1,m0=0", "k=2,m=1,m0=1"}); }},
      {8, "K5 negative control", 60, k5_negative_control},
      {9, "compatibility laws", 300, compatibility_laws},
      {10, "bi-index-regular audit", 300, bi_index_regular_audit},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.summary += ", over the time budget";
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %2d %-27s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.summary.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
