// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace hisa {

/// The three indexing strategies compared throughout the project.
enum class Strategy { Dsa, Hisa, BlockSparse };

std::string_view to_string(Strategy s);
Strategy strategy_from_string(std::string_view name);  // "dsa" | "hisa" | "block"

/// Scores for an ascending set of candidate positions (token ids or block
/// ids, depending on the producing stage).
struct ScoreVector {
  std::vector<double> scores;
  std::vector<uint32_t> positions;
};

/// Result of one per-query selection.
struct SelectionResult {
  std::vector<uint32_t> token_indices;    // final selected tokens, ascending
  std::vector<uint32_t> selected_blocks;  // coarse-stage blocks, ascending; empty for the flat indexer
  uint64_t candidate_size = 0;            // tokens scored by the token-level stage
};

/// Work counters for complexity instrumentation. Values only grow between
/// resets. Not synchronized: give each worker its own counter and merge.
struct OpCounter {
  uint64_t dot_products = 0;  // query-key and query-pooled-key dots
  uint64_t comparisons = 0;   // candidates examined by top-k passes
  uint64_t pool_updates = 0;  // per-token block summary updates

  void reset() { *this = OpCounter{}; }
  OpCounter& operator+=(const OpCounter& o) {
    dot_products += o.dot_products;
    comparisons += o.comparisons;
    pool_updates += o.pool_updates;
    return *this;
  }
};

}  // namespace hisa
