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

#ifndef FF_ERROR_HPP_
#define FF_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace ff {

enum class ErrorKind {
  kInvalidInput,
  kPreconditionUnmet,
  kCapacity,
  // A construction that a theorem guarantees came back empty-handed.
  kContractViolation,
};

/// Error raised by every library operation. Carries an optional vertex-set
/// witness (a violating cut, a bipartition side, ...) for reporting.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::vector<int> witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what,
                              std::vector<int> witness = {}) {
  throw Error(kind, what, std::move(witness));
}

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kPreconditionUnmet: return "precondition-unmet";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kContractViolation: return "contract-violation";
  }
  return "unknown";
}

// CLI exit codes.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kPreconditionUnmet: return 2;
    case ErrorKind::kContractViolation: return 3;
    case ErrorKind::kInvalidInput: return 4;
    case ErrorKind::kCapacity: return 5;
  }
  return 1;
}

/// Enumeration caps. Every exhaustive routine refuses inputs beyond these.
struct Limits {
  int partition_vertices = 12;
  int bipartition_vertices = 16;
  int lovasz_vertices = 12;
  int brute_force_edges = 20;
};

}  // namespace ff

#endif  // FF_ERROR_HPP_
