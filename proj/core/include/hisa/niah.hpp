// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hisa/config.hpp"
#include "hisa/inputs.hpp"
#include "hisa/types.hpp"

namespace hisa {

/// One needle-in-a-haystack retrieval instance: isotropic distractor keys
/// plus a single planted key at a controlled depth, with one query at the
/// final position.
struct NiahInstance {
  IndexerInputs inputs;
  std::vector<uint32_t> needle_positions;
  uint64_t haystack_seed = 0;
};

/// Generates an instance of length L with the needle at
/// floor(depth_fraction * (L - 1)). Haystack keys are standard normal;
/// gates are positive. The needle key points along the gate-weighted query
/// direction, scaled so its indexer score sits needle_sigmas standard
/// deviations above the haystack dot-product mean and strictly above every
/// haystack score, which makes the flat scan retrieve it by construction.
/// Only num_heads and dim are read from cfg.
NiahInstance generate_niah(uint32_t seq_len, double depth_fraction, uint64_t seed,
                           const HisaConfig& cfg, double needle_sigmas = 6.0);

/// Intersection-over-union of the selected token sets. Throws BothEmpty
/// when both selections are empty.
double selection_overlap(const SelectionResult& a, const SelectionResult& b);

/// Fraction of planted needle positions present in the selection.
double needle_recall(const NiahInstance& instance, const SelectionResult& selection);

/// One grid cell evaluation.
struct NiahRecord {
  Strategy strategy;
  uint32_t seq_len = 0;
  double depth = 0.0;
  uint32_t seed_index = 0;
  double recall = 0.0;
  double overlap_vs_dsa = 0.0;
};

/// Grid sweep settings. The hierarchical indexer derives its block budget
/// from the compression ratio (M : m = ratio : 1), raised when necessary to
/// keep the configuration feasible (mB >= k); the block-sparse baseline
/// matches the token budget with ceil(k / B) blocks.
struct NiahGridParams {
  std::vector<uint32_t> lengths = {1024, 2048, 4096, 8192, 16384, 32768};
  std::vector<double> depths = {0.0, 0.25, 0.5, 0.75, 1.0};
  uint32_t seeds = 100;
  uint64_t base_seed = 42;
  uint32_t block_size = 128;
  uint32_t token_budget = 2048;
  uint32_t num_heads = 4;
  uint32_t dim = 16;
  uint32_t ratio = 4;
  double needle_sigmas = 6.0;
  uint32_t threads = 0;  // 0 -> worker_count()
  std::vector<Strategy> strategies = {Strategy::Dsa, Strategy::Hisa, Strategy::BlockSparse};
};

/// Runs the full grid. Records are ordered by (length, depth, seed,
/// strategy) and deterministic for a given base seed, independent of the
/// thread count.
std::vector<NiahRecord> run_niah_grid(const NiahGridParams& params);

/// CSV with header: strategy,L,depth,seed,recall,overlap_vs_dsa.
void write_niah_csv(std::ostream& os, const std::vector<NiahRecord>& records);

/// Mean recall per (depth, length) cell as a gnuplot-ready matrix: one row
/// per depth, one column per length, first row/column are labels.
void write_niah_grid_dat(std::ostream& os, const std::vector<NiahRecord>& records,
                         Strategy strategy);

}  // namespace hisa
