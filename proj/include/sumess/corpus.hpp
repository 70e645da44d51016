#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sumess/caps.hpp"
#include "sumess/module.hpp"
#include "sumess/theorems.hpp"

namespace sumess {

struct CorpusSpec {
  std::uint32_t max_order = 36;
  std::uint32_t include_elementary_abelian_up_to = 32;
  std::vector<std::filesystem::path> extra_spec_files;
  std::vector<std::string> theorem_ids = {"all"};
  bool include_matrix_instance = true;
};

/// One presentation per isomorphism class of abelian groups of order n, as
/// direct sums of cyclic prime-power groups. Classes are ordered by the
/// per-prime partitions (primes ascending, each partition in decreasing
/// lexicographic order, so Z8 precedes Z4+Z2 precedes Z2+Z2+Z2).
std::vector<ModulePresentation> abelian_groups_of_order(std::uint32_t n);

/// Z_p^k as a Z-module.
ModulePresentation elementary_abelian(std::uint32_t p, std::uint32_t k);

/// M_2(F_2) acting on itself by left multiplication: Z_2^4 with coordinates
/// (a11, a12, a21, a22) and the four matrix units as generators.
ModulePresentation matrix_ring_regular_module();
/// F_2^2 as column vectors over M_2(F_2); a simple module.
ModulePresentation matrix_ring_column_module();

/// Deterministic corpus: abelian groups by order up to max_order, then the
/// elementary abelian groups p^k <= include_elementary_abelian_up_to not yet
/// present, then the M_2(F_2) regular module, then the extra spec files.
/// Throws std::invalid_argument when max_order < 4.
std::vector<ModulePresentation> enumerate_corpus(const CorpusSpec& spec);

struct CorpusItemResult {
  std::string name;
  std::uint64_t order = 0;
  std::vector<TheoremVerdict> verdicts;
  /// Set when the item produced no verdicts: simple module or cap exceeded.
  std::optional<std::string> skipped;
  bool cap_exceeded = false;
  std::string dot_s;
  std::string dot_n;
};

struct CorpusSummary {
  std::size_t failed = 0;
  std::size_t passed = 0;
  std::size_t inapplicable = 0;
  std::size_t skipped = 0;
  std::size_t cap_exceeded = 0;
};

/// Runs the catalog on every item with up to `jobs` worker threads. The
/// result vector follows corpus order regardless of completion order.
std::vector<CorpusItemResult> run_corpus(const std::vector<ModulePresentation>& items,
                                         const std::vector<std::string>& theorem_ids, const Caps& caps,
                                         unsigned jobs = 1);

CorpusSummary summarize(const std::vector<CorpusItemResult>& results);

/// CSV with header module,order,theorem_id,applicable,pass,witness.
std::string corpus_csv(const std::vector<CorpusItemResult>& results);

/// File-name-safe form of a module name.
std::string file_stem(const std::string& module_name);

}  // namespace sumess
