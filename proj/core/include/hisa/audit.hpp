// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hisa/types.hpp"

namespace hisa {

struct AuditFailure {
  uint64_t instance_seed = 0;
  uint32_t query_row = 0;
  std::string detail;
};

struct AuditReport {
  uint32_t instances_run = 0;
  uint32_t queries_checked = 0;
  std::optional<AuditFailure> failure;
  bool passed() const { return !failure.has_value(); }
};

struct AuditOptions {
  uint64_t base_seed = 1;
  uint32_t min_queries = 1000;  // instances are generated until this many query checks ran
  uint32_t threads = 0;         // 0 -> worker_count()
  /// Debug fault injection: refines the hierarchical stage-2 with the
  /// opposite tie-break on a tie-saturated instance, guaranteeing an
  /// equivalence counterexample. For exercising the failure path only.
  bool inject_tie_mismatch = false;
};

/// Flat-equivalence regime: random feasible instances constrained to
/// t + 1 <= mB must select identical token sets via the hierarchical and
/// the flat indexer, exactly.
AuditReport run_regime_equivalence_audit(const AuditOptions& options);

/// Dense regime: whenever t + 1 <= k, all three strategies must return the
/// full prefix [0, t].
AuditReport run_dense_regime_audit(const AuditOptions& options);

/// Structural invariants on unrestricted instances: selected tokens are a
/// subset of the candidate pool, which is a subset of the causal prefix;
/// cardinality, ordering, determinism and the per-stage dot-product budgets.
AuditReport run_subset_chain_audit(const AuditOptions& options);

/// Hyperparameter ablation: selection overlap (IoU) against the flat
/// indexer for configurations sharing one candidate pool size, plus the
/// block-sparse baseline, on span-structured synthetic inputs.
struct AblationConfig {
  uint32_t block_size = 0;
  uint32_t block_budget = 0;
  bool token_refinement = true;  // false: block-sparse baseline
};

struct AblationRow {
  AblationConfig config;
  double mean_overlap = 0.0;
  double min_overlap = 0.0;
};

struct AblationOptions {
  std::vector<AblationConfig> configs = {
      {64, 128, true}, {128, 64, true}, {256, 32, true}, {128, 16, false}};
  uint32_t seq_len = 16384;
  uint32_t token_budget = 2048;
  uint32_t num_heads = 4;
  uint32_t dim = 64;
  uint32_t seeds = 20;
  uint64_t base_seed = 7;
  uint32_t threads = 0;
};

std::vector<AblationRow> run_overlap_ablation(const AblationOptions& options);

}  // namespace hisa
