#include "gg2x/symbols.hpp"

namespace gg2x {

std::optional<Sym> symbol_from_name(std::string_view name) {
  for (int i = 0; i < kSymbolCount; ++i) {
    if (kSymbolNames[i] == name) return static_cast<Sym>(i);
  }
  return std::nullopt;
}

}  // namespace gg2x
