#include "sumess/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sumess {

void Caps::apply_overrides(std::string_view text) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;

    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("cap override without '=': " + std::string(item));
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);

    std::uint64_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size() || parsed == 0)
      throw std::invalid_argument("bad cap value for " + std::string(key) + ": " + std::string(value));

    if (key == "elements") elements = parsed;
    else if (key == "action_ring") action_ring = parsed;
    else if (key == "hom_search") hom_search = parsed;
    else if (key == "lattice") lattice = parsed;
    else if (key == "clique_search") clique_search = parsed;
    else throw std::invalid_argument("unknown cap: " + std::string(key));
  }
}

Caps Caps::from_environment() {
  Caps caps;
  if (const char* env = std::getenv("SUMESS_CAPS")) caps.apply_overrides(env);
  return caps;
}

}  // namespace sumess
