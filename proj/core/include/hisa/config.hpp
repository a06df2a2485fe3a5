// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "hisa/errors.hpp"

namespace hisa {

/// Tie handling for equal scores in any top-k pass. SmallestIndex keeps the
/// lower position; LargestIndex keeps the higher one.
enum class TieBreak { SmallestIndex, LargestIndex };

/// How a block's representative key is pooled from its token keys. Mean is
/// the supported default; Max is experimental and excluded from the
/// equivalence guarantees.
enum class PoolMode { Mean, Max };

/// Static configuration of the hierarchical indexer.
///
/// The candidate pool of the coarse stage must be able to fill the token
/// budget, so construction rejects configurations with
/// block_budget * block_size < token_budget.
struct HisaConfig {
  HisaConfig(uint32_t block_size_, uint32_t block_budget_, uint32_t token_budget_,
             uint32_t num_heads_, uint32_t dim_)
      : block_size(block_size_),
        block_budget(block_budget_),
        token_budget(token_budget_),
        num_heads(num_heads_),
        dim(dim_) {
    if (block_size == 0 || block_budget == 0 || token_budget == 0 || num_heads == 0 ||
        dim == 0) {
      throw InfeasibleConfig("config: all integer fields must be strictly positive");
    }
    const uint64_t capacity = uint64_t(block_budget) * block_size;
    if (capacity < token_budget) {
      throw InfeasibleConfig(
          "infeasible config: block budget times block size must satisfy mB >= k (got " +
          std::to_string(block_budget) + "*" + std::to_string(block_size) + "=" +
          std::to_string(capacity) + " < " + std::to_string(token_budget) + ")");
    }
  }

  uint32_t block_size;    // tokens per block
  uint32_t block_budget;  // blocks kept by the coarse stage, before forced inclusion
  uint32_t token_budget;  // tokens kept by the final selection
  uint32_t num_heads;     // indexing heads
  uint32_t dim;           // indexing key/query dimension

  /// Always keep the first eligible block (attention sink) and the block
  /// containing the query (local context).
  bool force_first_last = true;

  /// When set, the two forced blocks consume the block budget instead of
  /// extending it (|selected blocks| <= block_budget). Off by default, which
  /// matches the literal union semantics (|selected| <= block_budget + 2).
  /// Note: with this flag on the coarse stage may drop eligible blocks even
  /// when block_budget covers them all, so the flat-equivalence regime
  /// shrinks accordingly.
  bool forced_in_budget = false;

  TieBreak tie_break = TieBreak::SmallestIndex;
  PoolMode pool_mode = PoolMode::Mean;
};

}  // namespace hisa
