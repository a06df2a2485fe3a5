// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hisa/block_summary.hpp"
#include "hisa/config.hpp"
#include "hisa/inputs.hpp"
#include "hisa/types.hpp"

namespace hisa {

/// The stage-1-only baseline: selects top blocks and keeps every causally
/// valid token inside them, with no token-level refinement. Identical to
/// candidate_union(select_blocks(score_blocks(...))); token_indices may
/// exceed the token budget by the forced-block excess. To match a token
/// budget k, configure block_budget = k / block_size.
SelectionResult block_sparse_select(const IndexerInputs& inputs, const BlockSummaryCache& cache,
                                    const HisaConfig& cfg, uint32_t query_row,
                                    OpCounter* counter = nullptr);

}  // namespace hisa
