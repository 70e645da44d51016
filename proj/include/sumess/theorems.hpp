#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumess/analysis.hpp"

namespace sumess {

/// How a clause is judged: Agree clauses state an equivalence and are
/// satisfied when every side has the same truth value; Hold clauses state
/// facts or implications and are satisfied when every side is true.
enum class ClauseMode { Agree, Hold };

struct Side {
  std::string name;
  bool value = false;
};

struct Clause {
  std::string scope;  // "M" or the vertex / pair the sides were evaluated at
  ClauseMode mode = ClauseMode::Hold;
  std::vector<Side> sides;

  bool satisfied() const;
  std::string describe() const;
};

/// pass <=> applicable and every clause satisfied; witness is present iff
/// !pass (the first failing clause, or why the hypotheses are not met).
struct TheoremVerdict {
  std::string theorem_id;
  bool applicable = false;
  std::vector<Clause> clauses;
  bool pass = false;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
};

// Individual checkers. Each throws HypothesisNotMet when the statement's
// hypotheses fail for this module; run_catalog turns that into an
// inapplicable verdict.

/// Connectivity and diameter <= 3 for S(M) and N(M).                   [thm-1.5]
TheoremVerdict check_diameter(const Analysis& a);
/// semisimple <=> S = N <=> some X in N has deg_S(X) = deg_N(X).      [prop-semisimple]
TheoremVerdict check_semisimple_equalities(const Analysis& a);
/// deg_S(A) = 2^|atoms below A| - 1 for multiplicity-free semisimple M. [ex-1.2]
TheoremVerdict check_example_degree_formula(const Analysis& a);
/// Degree-one vertices of S(M).                                         [prop-2.5]
TheoremVerdict check_deg1_in_S(const Analysis& a);
/// The four equivalent descriptions of degree-one vertices of N(M).     [thm-2.13]
TheoremVerdict check_deg1_in_N(const Analysis& a);
/// Pairs of degree-one vertices and the largest degree-one vertex.      [thm-2.18]
TheoremVerdict check_deg1_interactions(const Analysis& a);
/// Complete S(M)/N(M), universal vertices and k-regularity.             [thm-3.2]
TheoremVerdict check_complete_characterizations(const Analysis& a);
/// Triangle-free S(M) and N(M), trees, stars and girth.                  [thm-3.7-3.12]
TheoremVerdict check_trianglefree_tree_girth(const Analysis& a);
TheoremVerdict check_triangle_free_S(const Analysis& a);  // [thm-3.7]
TheoremVerdict check_girth_S(const Analysis& a);          // [thm-girth-S]
TheoremVerdict check_triangle_free_N(const Analysis& a);  // [thm-3.11]
TheoremVerdict check_tree_N(const Analysis& a);           // [thm-3.12]
TheoremVerdict check_girth_N(const Analysis& a);          // [thm-girth-N]
/// n maximal submodules: S(M) n-partite <=> M semisimple.              [prop-3.14]
TheoremVerdict check_npartite(const Analysis& a);
/// Structure of modules whose S(M) has only finite degrees.             [thm-2.1]
TheoremVerdict check_finiteness_conditions(const Analysis& a);

/// Ids selected by "all", in run order.
const std::vector<std::string>& default_theorem_ids();
/// Every id accepted by run_catalog (the defaults plus the individually
/// addressable parts of the composite checks).
const std::vector<std::string>& known_theorem_ids();

/// Runs one checker, recording HypothesisNotMet as an inapplicable verdict.
/// Throws UnknownTheoremId.
TheoremVerdict run_theorem(const Analysis& a, const std::string& id);
/// Expands "all", keeps the given order, and never aborts on an
/// inapplicable statement. Throws UnknownTheoremId.
std::vector<TheoremVerdict> run_catalog(const Analysis& a, const std::vector<std::string>& ids);

std::string verdict_json(const TheoremVerdict& v);
/// Human-readable multi-line rendering used by `sumess verify`.
std::string verdict_text(const TheoremVerdict& v);

}  // namespace sumess
