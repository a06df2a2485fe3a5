// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hisa/errors.hpp"
#include "hisa/types.hpp"

namespace hisa {

/// Inputs for the downstream attention consumer. Each token stores a single
/// latent vector acting as both key and value (shared-KV simplification),
/// so attention output is a convex combination of latent states.
class AttentionInputs {
 public:
  /// query_states: [Q, d_model], latent_states: [L, d_model],
  /// query_positions: [Q] with every position < L. scale <= 0 selects the
  /// default 1/sqrt(d_model).
  AttentionInputs(std::vector<float> query_states, std::vector<float> latent_states,
                  std::vector<uint32_t> query_positions, uint32_t d_model,
                  double scale = 0.0);

  uint32_t num_queries() const { return static_cast<uint32_t>(query_positions_.size()); }
  uint32_t seq_len() const { return seq_len_; }
  uint32_t d_model() const { return d_model_; }
  double scale() const { return scale_; }

  std::span<const float> query_state(uint32_t row) const {
    return {&query_states_[std::size_t(row) * d_model_], d_model_};
  }
  std::span<const float> latent(uint32_t pos) const {
    return {&latent_states_[std::size_t(pos) * d_model_], d_model_};
  }
  uint32_t position(uint32_t row) const { return query_positions_[row]; }

 private:
  std::vector<float> query_states_;
  std::vector<float> latent_states_;
  std::vector<uint32_t> query_positions_;
  uint32_t d_model_ = 0;
  uint32_t seq_len_ = 0;
  double scale_ = 0.0;
};

/// Softmax attention restricted to the selected token set: the softmax is
/// normalized over the selection only. Weights (if requested) are returned
/// in selection order and sum to 1. Throws EmptySelection for an empty set
/// and CausalViolation if any index exceeds the query position.
std::vector<float> sparse_attend(const AttentionInputs& attn, std::span<const uint32_t> selected,
                                 uint32_t query_row, std::vector<double>* weights_out = nullptr);

std::vector<float> sparse_attend(const AttentionInputs& attn, const SelectionResult& selection,
                                 uint32_t query_row, std::vector<double>* weights_out = nullptr);

/// Reference dense causal attention over the full prefix [0, t].
std::vector<float> dense_attend(const AttentionInputs& attn, uint32_t query_row);

}  // namespace hisa
