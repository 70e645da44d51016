#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sumess/bitset.hpp"
#include "sumess/lattice.hpp"

namespace sumess {

/// A path length or cycle length that may be infinite.
class Length {
 public:
  static Length finite(std::uint32_t v) { return Length(v); }
  static Length infinity() { return Length(); }

  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  std::uint32_t value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Length&, const Length&) = default;

 private:
  Length() = default;
  explicit Length(std::uint32_t v) : value_(v) {}
  std::optional<std::uint32_t> value_;
};

enum class GraphKind { Full, Proper };

/// Summary of the invariants of one graph.
struct GraphReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<std::uint32_t, std::size_t> degree_histogram;
  bool is_connected = true;
  Length diameter = Length::finite(0);
  Length girth = Length::infinity();
  bool is_complete = false;
  std::optional<std::uint32_t> k_regular;
  bool triangle_free = true;
  bool is_tree = false;
  std::optional<SubmoduleId> star_center;
  std::vector<SubmoduleId> universal_vertices;
  std::uint32_t max_degree = 0;
  std::uint32_t min_degree = 0;
};

/// S(M) (kind Full: all nontrivial submodules) or N(M) (kind Proper: the
/// nontrivial non-essential ones). Two vertices are adjacent iff their sum
/// is essential. Vertices are referenced by lattice id; internally they are
/// numbered 0..vertex_count()-1 in canonical order. Holds a pointer to the
/// lattice, which must outlive the graph.
class EssGraph {
 public:
  static EssGraph build(const SubmoduleLattice& lattice, GraphKind kind);

  GraphKind kind() const { return kind_; }
  const SubmoduleLattice& lattice() const { return *lattice_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return vertices_.empty(); }
  const std::vector<SubmoduleId>& vertices() const { return vertices_; }
  bool has_vertex(SubmoduleId id) const;
  /// Local position of a lattice id; throws UnknownVertex.
  std::size_t position(SubmoduleId id) const;

  bool adjacent(SubmoduleId u, SubmoduleId v) const { return adjacency_[position(u)].test(position(v)); }
  std::uint32_t degree(SubmoduleId v) const { return degrees_[position(v)]; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  /// Neighbours of v as lattice ids in canonical order.
  std::vector<SubmoduleId> neighbors(SubmoduleId v) const;
  const BitSet& row(std::size_t local) const { return adjacency_[local]; }

  bool is_connected() const;
  /// Largest BFS distance; infinite when disconnected, 0 with fewer than 2 vertices.
  Length diameter() const;
  /// Shortest cycle length via one BFS per vertex; infinite when acyclic.
  Length girth() const;
  bool triangle_free() const;
  bool is_complete() const;
  std::optional<std::uint32_t> k_regular() const;
  std::vector<SubmoduleId> universal_vertices() const;
  bool is_tree() const;
  /// Vertices that can serve as the center of a star (a tree in which the
  /// center is adjacent to every other vertex). K2 has two.
  std::vector<SubmoduleId> star_centers() const;
  std::optional<SubmoduleId> star_center() const;
  /// A clique of the requested size by bounded backtracking, or nullopt.
  /// Throws CliqueSearchCapExceeded after clique_search expanded nodes.
  std::optional<std::vector<SubmoduleId>> find_clique(std::size_t size) const;
  /// True iff the given vertices are pairwise adjacent and distinct.
  bool is_clique(const std::vector<SubmoduleId>& vs) const;
  bool is_independent(const std::vector<SubmoduleId>& vs) const;

  GraphReport report() const;

 private:
  // BFS distances from a local vertex; -1 for unreachable.
  std::vector<int> distances(std::size_t source) const;

  GraphKind kind_ = GraphKind::Full;
  const SubmoduleLattice* lattice_ = nullptr;
  std::vector<SubmoduleId> vertices_;
  std::vector<std::int64_t> local_;  // lattice id -> local position or -1
  std::vector<BitSet> adjacency_;
  std::vector<std::uint32_t> degrees_;
};

/// Outcome of the n-partite construction: either a partition of V(S(M)) into
/// n independent parts (semisimple case) or an (n+1)-clique.
struct PartitionWitness {
  std::vector<std::vector<SubmoduleId>> parts;
};
struct CliqueWitness {
  std::vector<SubmoduleId> clique;
};
struct NPartiteResult {
  std::size_t n = 0;
  std::variant<PartitionWitness, CliqueWitness> witness;
  bool verified = false;
  std::string detail;
};

/// For M with exactly n >= 2 maximal submodules. When the radical is zero,
/// parts V_k = {A : A <= M_k, A not<= M_i for i < k}; otherwise the clique
/// {N, M_1..M_n} with N a complement of the radical (the radical itself
/// when that complement is zero). Throws HypothesisNotMet.
NPartiteResult n_partite_witness(const SubmoduleLattice& lattice, const EssGraph& full_graph);

std::string kind_name(GraphKind kind);
/// Graphviz text; vertices in canonical order, edges lexicographic.
std::string export_dot(const EssGraph& graph);
/// JSON report with fixed field order.
std::string export_json(const EssGraph& graph);

}  // namespace sumess
