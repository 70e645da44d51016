#pragma once

#include <string>
#include <vector>

#include "sumess/corpus.hpp"
#include "sumess/module.hpp"
#include "sumess/spec_file.hpp"

namespace fixtures {

inline sumess::ModulePresentation zmod(std::vector<std::uint32_t> moduli) {
  sumess::ModulePresentation p;
  for (std::size_t i = 0; i < moduli.size(); ++i) p.name += (i ? "+Z" : "Z") + std::to_string(moduli[i]);
  p.moduli = std::move(moduli);
  return p;
}

inline sumess::ModulePresentation spec(const std::string& stem) {
  return sumess::load_spec_file(std::string(SUMESS_SPEC_DIR) + "/" + stem + ".spec");
}

// Every abelian group up to max_order plus the matrix-action instances.
inline std::vector<sumess::ModulePresentation> small_modules(std::uint32_t max_order) {
  std::vector<sumess::ModulePresentation> out;
  for (std::uint32_t n = 2; n <= max_order; ++n)
    for (auto& p : sumess::abelian_groups_of_order(n)) out.push_back(std::move(p));
  out.push_back(sumess::matrix_ring_regular_module());
  out.push_back(sumess::matrix_ring_column_module());
  out.push_back(spec("t2f2_column_top"));
  return out;
}

}  // namespace fixtures
