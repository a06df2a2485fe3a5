// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hisa/block_summary.hpp"
#include "hisa/config.hpp"
#include "hisa/dsa.hpp"
#include "hisa/inputs.hpp"
#include "hisa/types.hpp"

namespace hisa {

/// Stage 1 scoring: the query row scores each eligible block's pooled
/// representative key with the same gate/ReLU formula used for tokens.
/// Eligible blocks are those fully preceding the query position plus the
/// block containing it. Adds H * |eligible blocks| dot products.
ScoreVector score_blocks(const IndexerInputs& inputs, const BlockSummaryCache& cache,
                         uint32_t query_row, OpCounter* counter = nullptr);

/// Stage 1 selection: top block_budget blocks by score, then (unless
/// disabled) the first eligible block and the block containing the query
/// position are added unconditionally. Result is ascending and holds at
/// most block_budget + 2 blocks (block_budget with forced_in_budget).
std::vector<uint32_t> select_blocks(const ScoreVector& block_scores, const HisaConfig& cfg,
                                    uint32_t query_position, OpCounter* counter = nullptr);

/// Tokens inside the given blocks, clipped to positions <= query_position
/// and < seq_len. Ascending, duplicate-free.
std::vector<uint32_t> candidate_union(std::span<const uint32_t> blocks, uint32_t block_size,
                                      uint32_t query_position, uint32_t seq_len);

/// The two-stage hierarchical indexer: coarse block filtering
/// (score_blocks, select_blocks, candidate_union) followed by token-level
/// refinement (score_tokens over the candidate pool, then top-k). The
/// result carries the selected blocks and the candidate pool size.
///
/// Whenever the prefix fits the candidate capacity (t + 1 <= mB), every
/// eligible block survives stage 1 and the result equals dsa_select
/// exactly, element for element.
SelectionResult hisa_select(const IndexerInputs& inputs, const BlockSummaryCache& cache,
                            const HisaConfig& cfg, uint32_t query_row,
                            OpCounter* counter = nullptr);

}  // namespace hisa
