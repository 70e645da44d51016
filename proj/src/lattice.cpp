#include "sumess/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sumess/error.hpp"

namespace sumess {
namespace {

constexpr std::size_t kJoinTableMaxSize = 2048;

}  // namespace

SubmoduleLattice SubmoduleLattice::enumerate(const FiniteModule& module) {
  const std::size_t cap = module.caps().lattice;
  std::vector<BitSet> subs;
  std::unordered_set<BitSet, BitSetHash> seen;
  auto insert = [&](BitSet b) {
    if (seen.insert(b).second) {
      if (subs.size() + 1 > cap) throw LatticeCapExceeded("submodule lattice exceeds cap " + std::to_string(cap));
      subs.push_back(std::move(b));
    }
  };
  for (std::uint32_t x = 0; x < module.order(); ++x) insert(module.orbit(Element{x}));
  // Every submodule is a finite sum of cyclic ones.
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) insert(module.sum(subs[i], subs[j]));

  std::sort(subs.begin(), subs.end(), [](const BitSet& a, const BitSet& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return BitSet::member_lex_less(a, b);
  });

  SubmoduleLattice lat;
  lat.module_ = &module;
  lat.all_.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    lat.index_.emplace(subs[i], static_cast<SubmoduleId>(i));
    lat.all_.push_back(module.make_submodule(std::move(subs[i])));
  }
  const std::size_t n = lat.all_.size();

  if (n <= kJoinTableMaxSize) {
    lat.join_table_.assign(n * n, 0);
    for (SubmoduleId i = 0; i < n; ++i)
      for (SubmoduleId j = 0; j <= i; ++j) {
        const SubmoduleId k = lat.compute_join(i, j);
        lat.join_table_[i * n + j] = k;
        lat.join_table_[j * n + i] = k;
      }
  }

  lat.atom_flag_.assign(n, false);
  for (SubmoduleId i = 1; i < n; ++i) {
    bool minimal = true;
    for (SubmoduleId j = 1; j < i && minimal; ++j)
      if (lat.all_[j].size() < lat.all_[i].size() && lat.contains(i, j)) minimal = false;
    if (minimal) {
      lat.atoms_.push_back(i);
      lat.atom_flag_[i] = true;
    }
  }
  const SubmoduleId top = lat.full();
  for (SubmoduleId i = 0; i < top; ++i) {
    bool maximal = true;
    for (SubmoduleId j = i + 1; j < top && maximal; ++j)
      if (lat.all_[j].size() > lat.all_[i].size() && lat.contains(j, i)) maximal = false;
    if (maximal) lat.coatoms_.push_back(i);
  }

  SubmoduleId soc = 0;
  for (SubmoduleId a : lat.atoms_) soc = lat.join(soc, a);
  lat.socle_ = soc;
  BitSet rad = lat.all_[top].members();
  for (SubmoduleId c : lat.coatoms_) rad &= lat.all_[c].members();
  lat.radical_ = lat.id_of(rad);

  lat.essential_.assign(n, false);
  for (SubmoduleId i = 0; i < n; ++i) lat.essential_[i] = lat.contains(i, lat.socle_);
  return lat;
}

std::optional<SubmoduleId> SubmoduleLattice::find(const BitSet& members) const {
  const auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubmoduleId SubmoduleLattice::id_of(const BitSet& members) const {
  const auto id = find(members);
  if (!id) throw std::logic_error("member set is not in the submodule lattice");
  return *id;
}

SubmoduleId SubmoduleLattice::meet(SubmoduleId a, SubmoduleId b) const {
  return id_of(all_[a].members() & all_[b].members());
}

SubmoduleId SubmoduleLattice::compute_join(SubmoduleId a, SubmoduleId b) const {
  return id_of(module_->sum(all_[a].members(), all_[b].members()));
}

SubmoduleId SubmoduleLattice::join(SubmoduleId a, SubmoduleId b) const {
  if (!join_table_.empty()) return join_table_[static_cast<std::size_t>(a) * all_.size() + b];
  return compute_join(a, b);
}

bool SubmoduleLattice::meets_trivially(SubmoduleId a, SubmoduleId b) const {
  return (all_[a].members() & all_[b].members()).count() == 1;
}

bool SubmoduleLattice::is_atom(SubmoduleId id) const { return atom_flag_[id]; }

bool SubmoduleLattice::is_essential_definitional(SubmoduleId n) const {
  for (SubmoduleId b = 1; b < all_.size(); ++b)
    if (meets_trivially(n, b)) return false;
  return true;
}

std::vector<SubmoduleId> SubmoduleLattice::complements_within(SubmoduleId n, SubmoduleId ambient) const {
  std::vector<SubmoduleId> candidates;
  for (SubmoduleId c = 0; c < all_.size(); ++c)
    if (contains(ambient, c) && meets_trivially(n, c)) candidates.push_back(c);
  std::vector<SubmoduleId> out;
  for (SubmoduleId c : candidates) {
    bool maximal = true;
    for (SubmoduleId d : candidates)
      if (d != c && all_[d].size() > all_[c].size() && contains(d, c)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

std::vector<SubmoduleId> SubmoduleLattice::complements_of(SubmoduleId n) const { return complements_within(n, full()); }

bool SubmoduleLattice::is_uniform(SubmoduleId n) const {
  if (n == 0) return false;
  std::size_t below = 0;
  for (SubmoduleId a : atoms_) below += contains(n, a);
  return below == 1;
}

std::vector<SubmoduleId> SubmoduleLattice::independent_atoms(SubmoduleId n) const {
  std::vector<SubmoduleId> family;
  SubmoduleId acc = 0;
  for (SubmoduleId a : atoms_) {
    if (!contains(n, a) || contains(acc, a)) continue;
    family.push_back(a);
    acc = join(acc, a);
  }
  return family;
}

bool SubmoduleLattice::is_chain_module() const {
  // Sorted by size, so consecutive members must be nested.
  for (SubmoduleId i = 0; i + 1 < all_.size(); ++i)
    if (!contains(i + 1, i)) return false;
  return true;
}

StronglyDisjointReport SubmoduleLattice::strongly_disjoint(SubmoduleId a, SubmoduleId b) const {
  StronglyDisjointReport r{a, b, false, false};

  bool lattice = meets_trivially(a, b);
  if (lattice) {
    const SubmoduleId sum = join(a, b);
    for (SubmoduleId u = 1; u < all_.size() && lattice; ++u)
      if (contains(sum, u) && meets_trivially(u, a) && meets_trivially(u, b)) lattice = false;
  }
  r.lattice_verdict = lattice;

  bool element = true;
  const auto& m = *module_;
  all_[a].members().for_each([&](std::size_t x) {
    if (x == 0 || !element) return;
    all_[b].members().for_each([&](std::size_t y) {
      if (y == 0 || !element) return;
      if (m.annihilator_class(Element{static_cast<std::uint32_t>(x)}) ==
          m.annihilator_class(Element{static_cast<std::uint32_t>(y)}))
        element = false;
    });
  });
  r.element_verdict = element;
  return r;
}

std::vector<std::vector<SubmoduleId>> SubmoduleLattice::hasse_covers() const {
  std::vector<std::vector<SubmoduleId>> covers(all_.size());
  for (SubmoduleId j = 0; j < all_.size(); ++j) {
    std::vector<SubmoduleId> below;
    for (SubmoduleId i = 0; i < j; ++i)
      if (all_[i].size() < all_[j].size() && contains(j, i)) below.push_back(i);
    for (SubmoduleId i : below) {
      bool cover = true;
      for (SubmoduleId k : below)
        if (k != i && all_[k].size() > all_[i].size() && contains(k, i)) {
          cover = false;
          break;
        }
      if (cover) covers[j].push_back(i);
    }
  }
  return covers;
}

std::string SubmoduleLattice::dump() const {
  std::ostringstream out;
  out << "# submodule lattice of " << module_->name() << ": " << all_.size() << " submodules, socle " << socle_
      << ", radical " << radical_ << "\n";
  const auto covers = hasse_covers();
  for (SubmoduleId i = 0; i < all_.size(); ++i) {
    out << i << " size=" << all_[i].size() << " gens=" << label(i) << " covers=[";
    for (std::size_t c = 0; c < covers[i].size(); ++c) out << (c ? "," : "") << covers[i][c];
    out << "]";
    if (atom_flag_[i]) out << " atom";
    if (std::find(coatoms_.begin(), coatoms_.end(), i) != coatoms_.end()) out << " coatom";
    if (essential_[i]) out << " essential";
    out << "\n";
  }
  return out.str();
}

}  // namespace sumess
