#pragma once

#include <cstdint>
#include <string_view>

namespace sumess {

/// Resource limits for the exhaustive algorithms. Exceeding any of them
/// raises the matching CapExceeded subtype; nothing is silently truncated.
struct Caps {
  std::uint64_t elements = 512;
  std::uint64_t action_ring = 65536;
  std::uint64_t hom_search = 1000000;
  std::uint64_t lattice = 100000;
  std::uint64_t clique_search = 1000000;

  /// Parses "key=value[,key=value...]" with keys elements, action_ring,
  /// hom_search, lattice, clique_search. Unlisted keys keep their current
  /// value. Throws std::invalid_argument on malformed input.
  void apply_overrides(std::string_view text);

  /// Defaults overridden by the SUMESS_CAPS environment variable, if set.
  static Caps from_environment();
};

}  // namespace sumess
