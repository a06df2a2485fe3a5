// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hisa/config.hpp"
#include "hisa/synth.hpp"
#include "hisa/types.hpp"

namespace hisa {

/// One benchmarked (strategy, length) point.
struct BenchRecord {
  Strategy strategy = Strategy::Dsa;
  uint32_t seq_len = 0;
  uint32_t block_size = 0;
  uint32_t block_budget = 0;
  uint32_t token_budget = 0;
  uint32_t num_heads = 0;
  uint32_t dim = 0;
  uint32_t queries = 0;
  uint64_t wall_ns_median = 0;  // zero when timing is disabled
  uint64_t wall_ns_p10 = 0;
  uint64_t wall_ns_p90 = 0;
  uint64_t pool_build_ns = 0;  // summary build time, reported separately
  uint64_t dot_products = 0;   // instrumented, from a separate untimed pass
  uint64_t analytic_bound = 0; // sum of per-query analytic costs
};

struct BenchOptions {
  uint32_t repetitions = 5;  // timed repetitions; the median is reported
  uint32_t warmup = 1;
  bool timing = true;        // off: only the instrumented count pass runs
  QueryPlacement placement = QueryPlacement::Final;
};

/// Per-query dot-product bound for a causal prefix of prefix_len tokens:
///   flat indexer     H * prefix_len
///   hierarchical     H * (ceil(prefix_len / B) + min(prefix_len, (m + 2) * B))
///   block-sparse     H * ceil(prefix_len / B)
/// The m + 2 term covers the forced first/last blocks.
uint64_t analytic_cost(const HisaConfig& cfg, uint64_t prefix_len, Strategy strategy);

/// Benchmarks one strategy on a synthetic instance generated from the seed
/// (the instance depends only on cfg shape, L, num_queries, seed and
/// placement, so strategies share identical inputs). The timed region runs
/// the per-query selection loop single-threaded with counters disabled;
/// dot products come from a separate instrumented pass. Block-summary build
/// time is never part of the per-query timing.
BenchRecord run_bench(const HisaConfig& cfg, uint32_t seq_len, uint32_t num_queries,
                      uint64_t seed, Strategy strategy, const BenchOptions& options = {});

/// CSV with header:
/// strategy,L,B,m,k,H,d,wall_ns_median,wall_ns_p10,wall_ns_p90,dot_products,analytic_bound
void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace hisa
