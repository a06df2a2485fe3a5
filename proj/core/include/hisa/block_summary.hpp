// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hisa/config.hpp"
#include "hisa/errors.hpp"
#include "hisa/types.hpp"

namespace hisa {

/// Per-block running summaries of token indexing keys. Blocks partition the
/// appended positions into contiguous ranges of block_size tokens; the last
/// block may be partial. Mean mode keeps per-block sums (accumulated in
/// double) and counts, so pooled(b) = sums[b] / counts[b]; Max mode keeps a
/// componentwise running maximum instead.
///
/// Single writer appends tokens in position order; readers may pool any
/// block between appends.
class BlockSummaryCache {
 public:
  BlockSummaryCache(uint32_t block_size, uint32_t dim, PoolMode mode = PoolMode::Mean);

  /// Appends the key of the next position (floor(position / block_size)
  /// selects the block). Throws DimensionMismatch if key size differs from
  /// the cache dimension.
  void append(std::span<const float> key, OpCounter* counter = nullptr);

  uint32_t num_blocks() const { return static_cast<uint32_t>(counts_.size()); }
  uint32_t num_tokens() const { return num_tokens_; }
  uint32_t block_size() const { return block_size_; }
  uint32_t dim() const { return dim_; }
  PoolMode pool_mode() const { return mode_; }
  uint32_t count(uint32_t block) const { return counts_[block]; }

  /// Writes the pooled representative key of `block` into `out` (dim
  /// doubles). Pooling an empty or unknown block is an error.
  void pooled(uint32_t block, std::span<double> out) const;

  /// Convenience allocating variant.
  std::vector<double> pooled(uint32_t block) const;

 private:
  uint32_t block_size_;
  uint32_t dim_;
  PoolMode mode_;
  uint32_t num_tokens_ = 0;
  std::vector<double> summary_;  // [num_blocks, dim]: sums (Mean) or running max (Max)
  std::vector<uint32_t> counts_;
};

/// Builds summaries for a full key matrix [L, d] in one pass.
/// Throws EmptySequence when the matrix has no rows.
BlockSummaryCache build_block_summaries(std::span<const float> keys, uint32_t dim,
                                        uint32_t block_size, PoolMode mode = PoolMode::Mean,
                                        OpCounter* counter = nullptr);

}  // namespace hisa
