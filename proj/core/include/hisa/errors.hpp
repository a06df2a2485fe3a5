// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace hisa {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor-file errors. Messages name the offending field or byte offset.
struct BadMagic : Error { using Error::Error; };
struct VersionMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Selection / scoring errors.
struct CausalViolation : Error { using Error::Error; };
struct EmptySequence : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EmptySelection : Error { using Error::Error; };
struct InfeasibleConfig : Error { using Error::Error; };
struct BothEmpty : Error { using Error::Error; };

}  // namespace hisa
