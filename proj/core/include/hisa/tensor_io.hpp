// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "hisa/inputs.hpp"

namespace hisa {

// HSB binary tensor format, little-endian:
//   magic "HSB1" (4 bytes), u32 version = 1, u32 H, u32 d, u32 L, u32 Q,
//   then payload in order: keys (L*d f32), queries (Q*H*d f32),
//   gates (Q*H f32), query_positions (Q u32). All matrices row-major.
inline constexpr char kHsbMagic[4] = {'H', 'S', 'B', '1'};
inline constexpr uint32_t kHsbVersion = 1;

/// Loads and validates an HSB file. Throws BadMagic, VersionMismatch,
/// ShapeMismatch, NonFiniteValue or IoError; messages name the offending
/// field or byte offset.
IndexerInputs load_tensor_file(const std::filesystem::path& path);

/// Writes inputs in HSB layout. Round-trips bit-exactly. Throws IoError.
void save_tensor_file(const IndexerInputs& inputs, const std::filesystem::path& path);

}  // namespace hisa
