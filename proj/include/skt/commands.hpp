#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skt/catalog.hpp"

namespace skt {

// Shared run configuration. All randomized paths derive from seed; identical
// (input, seed, config) produce byte-identical reports.
struct Config {
  double tol = 1e-9;
  uint64_t seed = 20240001;
  int samples = 8;
  bool json = false;
  bool markdown = false;
  int threads = 0;  // 0: SKT_LAB_THREADS env or 1
};

struct CommandResult {
  int exit_code = 0;  // 0 ok, 2 domain error, 3 parse error
  std::string output;
};

struct CheckArgs {
  std::string notation;       // structure equations; or
  std::string input_path;     // .alg file with the equations
  Bindings params;
  std::string j_path;         // JSON matrix; empty: canonical J
  std::string metric_path;    // JSON matrix; empty: identity
  std::string name = "input";
};

// Full metric-fixed verdict for one (algebra, J, metric).
CommandResult cmd_check(const CheckArgs& args, const Config& config);

// Metric-free existence flags for (algebra, J), with a constructed witness
// metric and alpha family when a twisted SKT structure exists.
CommandResult cmd_classify(const CheckArgs& args, const Config& config);

// Reverifies the bundled classification data: table 2 (Kahler/SKT/LCSKT),
// table 3 (unimodular/LCB/Bismut-Ricci-flat) or table 1 (the alpha families).
// Nonzero exit on any undocumented mismatch; documented discrepancies are
// reported with the computed condition.
CommandResult cmd_catalog_verify(int table, const Config& config, const std::string& catalog_path = "");

struct SweepRange {
  std::string param;
  Rat from, to, step;
};

// Flag grid over a parameter lattice, deterministic ordering, fanned out over
// the worker pool.
CommandResult cmd_sweep(const CheckArgs& args, const std::vector<SweepRange>& ranges,
                        const Config& config);

int effective_threads(const Config& config);

}  // namespace skt
