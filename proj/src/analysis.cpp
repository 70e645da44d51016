#include "sumess/analysis.hpp"

namespace sumess {

Analysis Analysis::build(const ModulePresentation& presentation, const Caps& caps) {
  Analysis a;
  a.module_ = std::make_unique<FiniteModule>(FiniteModule::build(presentation, caps));
  a.lattice_ = std::make_unique<SubmoduleLattice>(SubmoduleLattice::enumerate(*a.module_));
  a.full_ = std::make_unique<EssGraph>(EssGraph::build(*a.lattice_, GraphKind::Full));
  a.proper_ = std::make_unique<EssGraph>(EssGraph::build(*a.lattice_, GraphKind::Proper));
  return a;
}

}  // namespace sumess
