#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sumess/bitset.hpp"
#include "sumess/caps.hpp"

namespace sumess {

/// Scalars act by repeated addition (Z-modules).
struct IntegerAction {};

/// Additive endomorphisms given as k x k integer matrices acting on
/// coordinate vectors: (G x)_i = sum_j G[i][j] x_j mod d_i.
struct GeneratedAction {
  using Matrix = std::vector<std::vector<std::int64_t>>;
  std::vector<Matrix> generators;
};

using Action = std::variant<IntegerAction, GeneratedAction>;

/// Additive group Z_{d_1} + ... + Z_{d_k} together with a ring action.
struct ModulePresentation {
  std::string name;
  std::vector<std::uint32_t> moduli;
  Action action = IntegerAction{};
};

/// Throws InvalidModuli or IllFormedGenerator. A generator G is well defined
/// iff d_i divides G[i][j] * d_j for all i, j.
void validate(const ModulePresentation& presentation);

/// An element of M, stored as its dense mixed-radix index. The first
/// coordinate is the most significant digit.
struct Element {
  std::uint32_t index = 0;
  friend auto operator<=>(Element, Element) = default;
};

/// Image of the acting ring in End(M), as function tables closed under
/// pointwise addition and composition.
class ActionRing {
 public:
  using Table = std::vector<std::uint32_t>;

  std::size_t size() const { return tables_.size(); }
  const Table& table(std::size_t e) const { return tables_[e]; }
  Element apply(std::size_t e, Element x) const { return Element{tables_[e][x.index]}; }

  std::size_t identity() const { return identity_; }
  std::size_t zero() const { return zero_; }
  /// Indices of the identity and the presented generators; the whole ring is
  /// their closure under + and composition.
  std::span<const std::size_t> generators() const { return generators_; }

 private:
  friend class FiniteModule;
  std::vector<Table> tables_;
  std::vector<std::size_t> generators_;
  std::size_t identity_ = 0;
  std::size_t zero_ = 0;
};

class Submodule {
 public:
  Submodule() = default;
  Submodule(BitSet members, std::vector<Element> generators)
      : members_(std::move(members)), generators_(std::move(generators)), size_(members_.count()) {}

  const BitSet& members() const { return members_; }
  std::size_t size() const { return size_; }
  bool contains(Element x) const { return members_.test(x.index); }
  bool is_zero() const { return size_ == 1; }
  std::span<const Element> generators() const { return generators_; }

  bool is_subset_of(const Submodule& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Submodule& a, const Submodule& b) { return a.members_ == b.members_; }

 private:
  BitSet members_;
  std::vector<Element> generators_;
  std::size_t size_ = 0;
};

/// A finite module with closed action ring. Immutable after build().
class FiniteModule {
 public:
  /// Validates the presentation and closes the action ring.
  /// Throws InvalidModuli, IllFormedGenerator, ElementCapExceeded,
  /// ActionRingCapExceeded.
  static FiniteModule build(const ModulePresentation& presentation, const Caps& caps = {});

  const std::string& name() const { return name_; }
  std::span<const std::uint32_t> moduli() const { return moduli_; }
  std::size_t order() const { return order_; }
  const Caps& caps() const { return caps_; }
  const ActionRing& ring() const { return ring_; }
  bool has_integer_action() const { return integer_action_; }

  Element zero() const { return Element{0}; }
  Element add(Element a, Element b) const;
  Element negate(Element a) const { return Element{negation_[a.index]}; }
  Element act(std::size_t ring_element, Element x) const { return ring_.apply(ring_element, x); }

  std::vector<std::uint32_t> coords(Element x) const;
  /// Coordinates are reduced modulo the respective d_i.
  Element encode(std::span<const std::int64_t> coords) const;

  /// Additive order of x.
  std::size_t additive_order(Element x) const;

  /// Smallest submodule containing the given elements, built by closing
  /// under addition and the ring generators.
  Submodule generated_by(std::span<const Element> seeds) const;
  Submodule cyclic_submodule(Element m) const;
  /// {r m : r in ring}; equals cyclic_submodule(m) because the ring is
  /// unital and closed under addition.
  const BitSet& orbit(Element m) const { return orbits_[m.index]; }

  Submodule zero_submodule() const;
  Submodule full_submodule() const;
  /// Wraps a member set known to be a submodule and records an irredundant
  /// generating set chosen greedily (largest cyclic piece first).
  Submodule make_submodule(BitSet members) const;
  /// True iff the set contains 0 and is closed under addition and the action.
  bool is_submodule(const BitSet& members) const;

  /// {a + b : a in A, b in B}.
  BitSet sum(const BitSet& a, const BitSet& b) const;

  /// Ring indices e with e(m) = 0.
  const BitSet& annihilator(Element m) const { return annihilators_[m.index]; }
  /// Elements share a class id iff their annihilators coincide.
  std::uint32_t annihilator_class(Element m) const { return annihilator_class_[m.index]; }

  /// Number of ring-linear maps A -> B. Throws HomSearchCapExceeded when
  /// |B|^|gens(A)| exceeds the hom-search cap.
  std::uint64_t count_homs(const Submodule& a, const Submodule& b) const;
  /// True iff a bijective ring-linear map A -> B exists.
  bool is_isomorphic(const Submodule& a, const Submodule& b) const;

  std::string label(Element x) const;
  std::string label(const Submodule& s) const;

 private:
  FiniteModule() = default;

  void close_ring(const std::vector<ActionRing::Table>& generator_tables);
  void check_additive(const ActionRing::Table& table, std::size_t which) const;

  // Extends a_i -> b_i to a ring-linear map on the span of the a_i, writing
  // the images into phi. Returns false when the assignment is inconsistent.
  bool extend_hom(std::span<const Element> sources, std::span<const Element> images,
                  std::vector<std::int64_t>& phi) const;
  template <typename Visit>
  void search_homs(const Submodule& a, const Submodule& b, bool require_equal_annihilators, Visit&& visit) const;

  std::string name_;
  std::vector<std::uint32_t> moduli_;
  std::vector<std::uint32_t> strides_;
  std::size_t order_ = 0;
  Caps caps_;
  bool integer_action_ = true;

  std::vector<std::uint32_t> add_table_;  // empty when order is large
  std::vector<std::uint32_t> negation_;
  ActionRing ring_;
  std::vector<BitSet> orbits_;
  std::vector<BitSet> annihilators_;
  std::vector<std::uint32_t> annihilator_class_;
};

}  // namespace sumess
