#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace gg2x {

/// The fixed coefficient-ring symbol set: Riccati constants (lambda, mu),
/// model constants (beta, gamma), wave speed (k), ansatz unknowns (a0..b2).
enum class Sym : int {
  lambda = 0,
  mu,
  beta,
  gamma,
  k,
  a0,
  a1,
  a2,
  b1,
  b2,
};

inline constexpr int kSymbolCount = 10;

inline constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "lambda", "mu", "beta", "gamma", "k", "a0", "a1", "a2", "b1", "b2"};

constexpr std::string_view symbol_name(Sym s) {
  return kSymbolNames[static_cast<int>(s)];
}

std::optional<Sym> symbol_from_name(std::string_view name);

/// Unknowns of the M=2 ansatz, in the order they are reported.
inline constexpr std::array<Sym, 5> kAnsatzUnknowns = {Sym::a0, Sym::a1,
                                                       Sym::a2, Sym::b1,
                                                       Sym::b2};

constexpr bool is_ansatz_unknown(Sym s) {
  return static_cast<int>(s) >= static_cast<int>(Sym::a0);
}

}  // namespace gg2x
