// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hisa/errors.hpp"

namespace hisa {

/// Immutable per-layer indexing tensors: queries [Q, H, d], gating weights
/// [Q, H], token indexing keys [L, d] (all row-major f32) and the sequence
/// position of each query row. Construction validates shapes and rejects
/// non-finite values; instances are safe to share across threads.
///
/// Query positions are 0-based. A position may equal L (a streaming query
/// arriving after the last cached key); anything larger is rejected.
class IndexerInputs {
 public:
  IndexerInputs(std::vector<float> queries, std::vector<float> gates,
                std::vector<float> keys, std::vector<uint32_t> query_positions,
                uint32_t num_heads, uint32_t dim);

  uint32_t num_queries() const { return static_cast<uint32_t>(query_positions_.size()); }
  uint32_t seq_len() const { return seq_len_; }
  uint32_t num_heads() const { return num_heads_; }
  uint32_t dim() const { return dim_; }

  std::span<const float> query(uint32_t row, uint32_t head) const {
    return {&queries_[(std::size_t(row) * num_heads_ + head) * dim_], dim_};
  }
  float gate(uint32_t row, uint32_t head) const {
    return gates_[std::size_t(row) * num_heads_ + head];
  }
  std::span<const float> key(uint32_t pos) const {
    return {&keys_[std::size_t(pos) * dim_], dim_};
  }
  uint32_t position(uint32_t row) const { return query_positions_[row]; }

  // Flat buffers, exposed for serialization.
  const std::vector<float>& queries_raw() const { return queries_; }
  const std::vector<float>& gates_raw() const { return gates_; }
  const std::vector<float>& keys_raw() const { return keys_; }
  const std::vector<uint32_t>& positions_raw() const { return query_positions_; }

 private:
  std::vector<float> queries_;
  std::vector<float> gates_;
  std::vector<float> keys_;
  std::vector<uint32_t> query_positions_;
  uint32_t num_heads_ = 0;
  uint32_t dim_ = 0;
  uint32_t seq_len_ = 0;
};

}  // namespace hisa
