// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "hisa/config.hpp"
#include "hisa/inputs.hpp"
#include "hisa/types.hpp"

namespace hisa {

/// Relevance scores of one query row against an ascending candidate set:
/// score(s) = sum over heads j of gate[j] * relu(query[j] . key[s]).
/// ReLU is applied per head before gating; gates may be negative, so scores
/// may be too. Dots and the head reduction accumulate in double.
/// Every candidate must satisfy s <= t (query position); otherwise
/// CausalViolation. Adds H * |candidates| dot products to the counter.
ScoreVector score_tokens(const IndexerInputs& inputs, uint32_t query_row,
                         std::span<const uint32_t> candidates, OpCounter* counter = nullptr);

/// Deterministic top-k: keeps the min(k, |scores|) highest-scoring positions,
/// resolving equal scores by the tie-break policy, and returns them in
/// ascending position order. k larger than the candidate count returns all
/// candidates. candidate_size is set to |scores|.
SelectionResult top_k_tokens(const ScoreVector& scores, uint32_t k, TieBreak tie_break,
                             OpCounter* counter = nullptr);

/// The flat indexer: scores the full causal prefix [0, t] and keeps the
/// top token_budget tokens. selected_blocks stays empty.
SelectionResult dsa_select(const IndexerInputs& inputs, const HisaConfig& cfg,
                           uint32_t query_row, OpCounter* counter = nullptr);

}  // namespace hisa
