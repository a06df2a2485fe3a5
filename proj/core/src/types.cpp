// SPDX-License-Identifier: Apache-2.0

#include "hisa/types.hpp"

#include "hisa/errors.hpp"

namespace hisa {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Dsa:
      return "dsa";
    case Strategy::Hisa:
      return "hisa";
    case Strategy::BlockSparse:
      return "block";
  }
  return "unknown";
}

Strategy strategy_from_string(std::string_view name) {
  if (name == "dsa") return Strategy::Dsa;
  if (name == "hisa") return Strategy::Hisa;
  if (name == "block" || name == "block-sparse") return Strategy::BlockSparse;
  throw Error("unknown strategy '" + std::string(name) + "' (expected dsa, hisa or block)");
}

}  // namespace hisa
