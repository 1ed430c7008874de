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

#ifndef FF_AUDIT_HPP_
#define FF_AUDIT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/error.hpp"
#include "ff/generators.hpp"
#include "ff/io.hpp"

namespace ff {

struct CorpusEntry {
  std::string family;
  Params params;
  std::uint64_t seed = 0;
};

struct CorpusSpec {
  /// "default" or the path the spec was read from.
  std::string source = "default";
  std::uint64_t seed = 1;
  std::vector<CorpusEntry> graphs;
  /// Theorem parameters (m, m0, k, ...); one run per graph and setting.
  std::vector<Params> settings;
  /// Random draws (residues, lists, targets) per graph and setting.
  int draws = 1;
};

std::vector<std::string> theorem_ids();

/// Throws invalid-input for unknown theorem ids.
CorpusSpec default_corpus(const std::string& theorem, std::uint64_t seed);

/// {"seed": s, "graphs": [{"family", "params", "seed"}], "settings": [...],
/// "draws": n}; params and settings are objects or "k=v,..." strings.
/// Missing fields fall back to the theorem's defaults.
CorpusSpec corpus_from_json(const std::string& theorem, const Json& j,
                            std::uint64_t seed);
Json corpus_to_json(const CorpusSpec& corpus);

struct AuditRow {
  std::string key;
  CorpusEntry graph;
  Params setting;
  int draw = 0;
  int n = 0;
  int num_edges = 0;
  /// "hold" or "fail: <reason>".
  std::string hypotheses;
  /// constructed | precondition-unmet | contract-violation | capacity |
  /// invalid-input | recorded | compared
  std::string outcome;
  /// pass | fail | n/a
  std::string verifier = "n/a";
  /// agree | disagree | exists | none | skipped
  std::string oracle = "skipped";
  bool finding = false;
  std::vector<std::string> details;
  /// Contract, factor, witnesses, measured values.
  Json artifact = Json::object();
};

struct AuditReport {
  std::string theorem;
  CorpusSpec corpus;
  std::vector<AuditRow> rows;
  double seconds = 0;

  int count_outcome(const std::string& outcome) const;
  int findings() const;
  /// The "timing" member is the only non-reproducible field.
  Json to_json(bool include_timing = true) const;
};

struct AuditOptions {
  Limits limits;
  /// Oracle cross-checks run up to this many edges.
  int oracle_edges = 16;
  /// Run only the instance with this key.
  std::optional<std::string> only;
};

AuditReport audit(const std::string& theorem, const CorpusSpec& corpus,
                  const AuditOptions& options = {});

}  // namespace ff

#endif  // FF_AUDIT_HPP_
