#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sumess/module.hpp"

namespace sumess {

/// Position of a submodule in the canonical order: ascending cardinality,
/// ties broken by lexicographic order of the sorted member lists. Id 0 is
/// the zero submodule and id size()-1 is M.
using SubmoduleId = std::uint32_t;

struct StronglyDisjointReport {
  SubmoduleId a = 0;
  SubmoduleId b = 0;
  // A meet B = 0 and every nonzero U <= A + B meets A or B.
  bool lattice_verdict = false;
  // ann(x) != ann(y) for all nonzero x in A, y in B.
  bool element_verdict = false;
};

/// All submodules of a finite module with the predicates built on them.
/// Holds a pointer to the module, which must outlive the lattice.
class SubmoduleLattice {
 public:
  /// Collects all cyclic submodules and saturates under pairwise sums.
  /// Throws LatticeCapExceeded.
  static SubmoduleLattice enumerate(const FiniteModule& module);

  const FiniteModule& module() const { return *module_; }
  std::size_t size() const { return all_.size(); }
  const Submodule& at(SubmoduleId id) const { return all_.at(id); }
  const std::vector<Submodule>& all() const { return all_; }
  SubmoduleId zero() const { return 0; }
  SubmoduleId full() const { return static_cast<SubmoduleId>(all_.size() - 1); }
  std::optional<SubmoduleId> find(const BitSet& members) const;
  SubmoduleId id_of(const BitSet& members) const;

  bool contains(SubmoduleId outer, SubmoduleId inner) const { return all_[inner].is_subset_of(all_[outer]); }
  SubmoduleId meet(SubmoduleId a, SubmoduleId b) const;
  SubmoduleId join(SubmoduleId a, SubmoduleId b) const;
  bool meets_trivially(SubmoduleId a, SubmoduleId b) const;

  const std::vector<SubmoduleId>& atoms() const { return atoms_; }
  const std::vector<SubmoduleId>& coatoms() const { return coatoms_; }
  bool is_atom(SubmoduleId id) const;
  SubmoduleId socle() const { return socle_; }
  SubmoduleId radical() const { return radical_; }

  /// Fast path: socle <= N.
  bool is_essential(SubmoduleId n) const { return essential_[n]; }
  /// N meets every nonzero submodule; the oracle for is_essential.
  bool is_essential_definitional(SubmoduleId n) const;
  bool is_sum_essential(SubmoduleId a, SubmoduleId b) const { return essential_[join(a, b)]; }

  /// Submodules maximal with respect to trivial intersection with N.
  std::vector<SubmoduleId> complements_of(SubmoduleId n) const;
  /// Complements of N inside the submodule `ambient` (N <= ambient assumed).
  std::vector<SubmoduleId> complements_within(SubmoduleId n, SubmoduleId ambient) const;

  bool is_semisimple() const { return socle_ == full(); }
  bool is_simple_module() const { return all_.size() == 2; }
  /// Semisimple as a module in its own right: N <= socle.
  bool is_semisimple_submodule(SubmoduleId n) const { return contains(socle_, n); }
  bool is_uniform(SubmoduleId n) const;
  bool is_uniform_module() const { return is_uniform(full()); }
  /// Atoms below N picked greedily in canonical order, keeping the sum direct.
  std::vector<SubmoduleId> independent_atoms(SubmoduleId n) const;
  std::size_t uniform_dimension(SubmoduleId n) const { return independent_atoms(n).size(); }
  std::size_t uniform_dimension() const { return uniform_dimension(full()); }
  bool is_chain_module() const;

  StronglyDisjointReport strongly_disjoint(SubmoduleId a, SubmoduleId b) const;

  /// Lower covers of every submodule.
  std::vector<std::vector<SubmoduleId>> hasse_covers() const;
  std::string label(SubmoduleId id) const { return module_->label(all_[id]); }
  /// Line-oriented dump: one line per submodule with id, size, generators,
  /// lower covers and flags.
  std::string dump() const;

 private:
  SubmoduleId compute_join(SubmoduleId a, SubmoduleId b) const;

  const FiniteModule* module_ = nullptr;
  std::vector<Submodule> all_;
  std::unordered_map<BitSet, SubmoduleId, BitSetHash> index_;
  std::vector<SubmoduleId> atoms_;
  std::vector<SubmoduleId> coatoms_;
  std::vector<bool> atom_flag_;
  SubmoduleId socle_ = 0;
  SubmoduleId radical_ = 0;
  std::vector<bool> essential_;
  std::vector<SubmoduleId> join_table_;  // empty for large lattices
};

}  // namespace sumess
