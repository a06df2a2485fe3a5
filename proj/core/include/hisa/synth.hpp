// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "hisa/inputs.hpp"
#include "hisa/rng.hpp"

namespace hisa {

/// Where synthetic query rows sit in the sequence.
enum class QueryPlacement {
  Final,   // all queries at position L-1 (decode-style, full prefix)
  Spread,  // positions spread evenly over [0, L)
};

/// Isotropic synthetic instance: keys and queries standard normal, gates
/// uniform in [0.5, 1.5].
IndexerInputs make_random_inputs(Rng& rng, uint32_t seq_len, uint32_t num_queries,
                                 uint32_t num_heads, uint32_t dim,
                                 QueryPlacement placement = QueryPlacement::Final);

IndexerInputs make_random_inputs(Rng& rng, uint32_t seq_len, std::vector<uint32_t> positions,
                                 uint32_t num_heads, uint32_t dim);

/// Tie-dense instance: every tensor entry drawn from a small integer
/// lattice, so exact score ties are common. Used to exercise deterministic
/// tie-breaking in the audit suites.
IndexerInputs make_lattice_inputs(Rng& rng, uint32_t seq_len, std::vector<uint32_t> positions,
                                  uint32_t num_heads, uint32_t dim);

/// Span-structured instance: a few contiguous key spans are biased toward
/// the query direction, mimicking the contiguous high-relevance regions
/// seen in long-context attention. Queries sit at the final position.
IndexerInputs make_clustered_inputs(Rng& rng, uint32_t seq_len, uint32_t num_queries,
                                    uint32_t num_heads, uint32_t dim, uint32_t num_spans = 12,
                                    uint32_t span_len = 96, double span_boost = 3.0);

}  // namespace hisa
