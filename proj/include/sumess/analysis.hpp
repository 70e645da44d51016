#pragma once

#include <memory>

#include "sumess/graph.hpp"
#include "sumess/lattice.hpp"
#include "sumess/module.hpp"

namespace sumess {

/// Module, lattice, S(M) and N(M) built once and shared read-only by every
/// checker. Movable; the internal cross-references stay valid.
class Analysis {
 public:
  static Analysis build(const ModulePresentation& presentation, const Caps& caps = {});

  const FiniteModule& module() const { return *module_; }
  const SubmoduleLattice& lattice() const { return *lattice_; }
  const EssGraph& full() const { return *full_; }
  const EssGraph& proper() const { return *proper_; }

 private:
  std::unique_ptr<FiniteModule> module_;
  std::unique_ptr<SubmoduleLattice> lattice_;
  std::unique_ptr<EssGraph> full_;
  std::unique_ptr<EssGraph> proper_;
};

}  // namespace sumess
