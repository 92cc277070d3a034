// Batch driver behind the command-line tool: each command builds a
// triangulation, sweeps labellings, and emits a deterministic JSON report
// that embeds the full configuration, so re-running a report's config
// byte-reproduces its payload.
#pragma once

#include "fixcomb/parity.hpp"
#include "fixcomb/reduction.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fixcomb {

extern const char* kToolVersion;

struct RunConfig {
  std::string command;               // gen | check | parity | reduce | crosscheck
  std::string generator;             // e.g. "cross:2", "bary(cross:2,rounds=1)"
  std::optional<TheoremId> theorem;  // check
  std::optional<ShellConfig> shell;  // reduce
  std::string rule;                  // parity: "tucker" | "cubical"
  std::string labels;                // parity/crosscheck codomain: "cross:M" | "cube:M"
  int m = 0;                         // codomain dimension; 0 means the domain's
  int max_size = 0;                  // crosscheck labelling size cap; 0 means m+1
  std::uint64_t seed = 0;
  int samples = 1;
  bool exhaustive = false;            // check: enumerate instead of sampling
  std::uint64_t budget = 1'000'000;   // cap on exhaustive enumeration
  bool search_nonforbidden = false;   // parity: look for a forbidden-free instance
};

struct RunResult {
  // 0: every property held; 1: a mathematical claim failed (never expected);
  // 2: the configuration could not be run at all.
  int exit_code = 0;
  std::string status;  // ok | refuted | config_error | aborted_with_witness | no_instance_found
  std::string report;  // pretty JSON: tool, version, config, status, payload
};

RunResult run(const RunConfig& cfg);

}  // namespace fixcomb
