#include "sumess/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "sumess/error.hpp"

namespace sumess {

bool Clause::satisfied() const {
  if (mode == ClauseMode::Hold)
    return std::all_of(sides.begin(), sides.end(), [](const Side& s) { return s.value; });
  return std::all_of(sides.begin(), sides.end(), [&](const Side& s) { return s.value == sides.front().value; });
}

std::string Clause::describe() const {
  std::string out = scope + (mode == ClauseMode::Agree ? " [agree]" : " [hold]") + ":";
  for (const auto& s : sides) out += " " + s.name + "=" + (s.value ? "true" : "false") + ";";
  if (!sides.empty()) out.pop_back();
  return out;
}

namespace {

class VerdictBuilder {
 public:
  explicit VerdictBuilder(std::string id) { v_.theorem_id = std::move(id); }

  void agree(std::string scope, std::vector<Side> sides) {
    v_.clauses.push_back({std::move(scope), ClauseMode::Agree, std::move(sides)});
  }
  void hold(std::string scope, std::vector<Side> sides) {
    v_.clauses.push_back({std::move(scope), ClauseMode::Hold, std::move(sides)});
  }
  void note(std::string text) { v_.notes.push_back(std::move(text)); }

  TheoremVerdict finish() {
    v_.applicable = true;
    v_.pass = true;
    for (const auto& c : v_.clauses)
      if (!c.satisfied()) {
        v_.pass = false;
        v_.witness = c.describe();
        break;
      }
    return std::move(v_);
  }

 private:
  TheoremVerdict v_;
};

std::string vname(const SubmoduleLattice& lat, SubmoduleId id) { return "v" + std::to_string(id) + "=" + lat.label(id); }

std::string pair_name(const SubmoduleLattice& lat, SubmoduleId a, SubmoduleId b) {
  return vname(lat, a) + " & " + vname(lat, b);
}

// Another submodule isomorphic to b exists.
bool has_isomorphic_twin(const SubmoduleLattice& lat, SubmoduleId b) {
  const auto& m = lat.module();
  for (SubmoduleId c = 0; c < lat.size(); ++c)
    if (c != b && lat.at(c).size() == lat.at(b).size() && m.is_isomorphic(lat.at(c), lat.at(b))) return true;
  return false;
}

bool isomorphic(const SubmoduleLattice& lat, SubmoduleId a, SubmoduleId b) {
  return lat.module().is_isomorphic(lat.at(a), lat.at(b));
}

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

void require_not_simple(const SubmoduleLattice& lat) {
  if (lat.is_simple_module()) throw HypothesisNotMet("M is simple, S(M) has no vertices");
}

void require_proper_nonempty(const Analysis& a) {
  if (a.proper().empty()) throw HypothesisNotMet("N(M) is empty (M is uniform)");
}

// Every pair of adjacent N(M) vertices satisfies pred.
bool all_adjacent_pairs(const EssGraph& g, const std::function<bool(SubmoduleId, SubmoduleId)>& pred) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool ok = true;
    g.row(i).for_each([&](std::size_t j) {
      if (ok && j > i && !pred(vs[i], vs[j])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool strongly_disjoint(const SubmoduleLattice& lat, SubmoduleId a, SubmoduleId b) {
  return lat.strongly_disjoint(a, b).lattice_verdict;
}

// ---- degree one in N(M) -------------------------------------------------

struct DegreeOneConditions {
  const Analysis& a;

  const SubmoduleLattice& lat() const { return a.lattice(); }

  bool unique_semisimple_complement(SubmoduleId u) const {
    const auto comps = lat().complements_of(u);
    return comps.size() == 1 && lat().is_semisimple_submodule(comps.front());
  }

  // For every simple F not inside U and nonzero f in F, u in U some ring
  // element kills u but not f.
  bool element_condition(SubmoduleId u) const {
    const auto& m = a.module();
    for (SubmoduleId f_id : lat().atoms()) {
      if (lat().contains(u, f_id)) continue;
      bool ok = true;
      lat().at(f_id).members().for_each([&](std::size_t f) {
        if (f == 0 || !ok) return;
        lat().at(u).members().for_each([&](std::size_t x) {
          if (x == 0 || !ok) return;
          const auto& ann_u = m.annihilator(Element{static_cast<std::uint32_t>(x)});
          const auto& ann_f = m.annihilator(Element{static_cast<std::uint32_t>(f)});
          if (ann_u.is_subset_of(ann_f)) ok = false;
        });
      });
      if (!ok) return false;
    }
    return true;
  }

  // U meet E != 0 and U + E essential imply soc <= E.
  bool essential_extension_condition(SubmoduleId u) const {
    for (SubmoduleId e = 0; e < lat().size(); ++e)
      if (!lat().meets_trivially(u, e) && lat().is_sum_essential(u, e) && !lat().contains(e, lat().socle()))
        return false;
    return true;
  }

  // U meet E = 0 implies E <= soc.
  bool disjoint_in_socle(SubmoduleId u) const {
    for (SubmoduleId e = 0; e < lat().size(); ++e)
      if (lat().meets_trivially(u, e) && !lat().contains(lat().socle(), e)) return false;
    return true;
  }

  bool unique_complement_in_socle(SubmoduleId u) const {
    const SubmoduleId s = lat().meet(u, lat().socle());
    return lat().complements_within(s, lat().socle()).size() == 1;
  }
};

// For uniform U with a nonzero complement inside the socle and a pair
// (u, f) with ann(u) <= ann(f), f in a simple F not inside U: checks that U
// has a second N(M) neighbour. With a unique complement C = W + F the second
// neighbour R(u+f) + W is built explicitly.
void element_witness(const Analysis& a, SubmoduleId u, VerdictBuilder& vb) {
  const auto& lat = a.lattice();
  const auto& m = a.module();
  if (!lat.is_uniform(u)) return;
  const auto comps = lat.complements_of(u);
  const bool socle_complement = std::any_of(comps.begin(), comps.end(), [&](SubmoduleId c) {
    return c != lat.zero() && lat.is_semisimple_submodule(c);
  });
  if (!socle_complement) return;

  for (SubmoduleId f_id : lat.atoms()) {
    if (lat.contains(u, f_id)) continue;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> found;
    lat.at(f_id).members().for_each([&](std::size_t f) {
      if (f == 0 || found) return;
      lat.at(u).members().for_each([&](std::size_t x) {
        if (x == 0 || found) return;
        if (m.annihilator(Element{static_cast<std::uint32_t>(x)})
                .is_subset_of(m.annihilator(Element{static_cast<std::uint32_t>(f)})))
          found.emplace(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(f));
      });
    });
    if (!found) continue;

    const auto& n = a.proper();
    const std::string scope = "element-witness " + vname(lat, u) + " u=" + m.label(Element{found->first}) +
                              " f=" + m.label(Element{found->second});
    if (comps.size() > 1) {
      vb.hold(scope, {{"two complements give deg_N(U) > 1", n.degree(u) > 1}});
      return;
    }
    const SubmoduleId c = comps.front();
    const bool f_in_c = lat.contains(c, f_id);
    bool in_n = false, distinct = false, adjacent = false;
    if (f_in_c) {
      const Element uf = m.add(Element{found->first}, Element{found->second});
      const SubmoduleId cyc = lat.id_of(m.orbit(uf));
      const SubmoduleId w = lat.complements_within(f_id, c).front();
      const SubmoduleId x = lat.join(cyc, w);
      in_n = n.has_vertex(x);
      distinct = x != c;
      adjacent = in_n && n.adjacent(u, x);
    }
    vb.hold(scope, {{"F inside complement", f_in_c},
                    {"R(u+f)+W is a vertex of N", in_n},
                    {"R(u+f)+W differs from complement", distinct},
                    {"U ~ R(u+f)+W", adjacent},
                    {"U ~ complement", n.has_vertex(c) && n.adjacent(u, c)},
                    {"deg_N(U) > 1", n.degree(u) > 1}});
    return;
  }
}

}  // namespace

// ---- individual checkers ---------------------------------------------------

TheoremVerdict check_diameter(const Analysis& a) {
  const auto& lat = a.lattice();
  require_not_simple(lat);
  VerdictBuilder vb("thm-1.5");
  auto le3 = [](const Length& d) { return d.is_finite() && d.value() <= 3; };
  vb.hold("S(M)", {{"connected", a.full().is_connected()}, {"diameter<=3", le3(a.full().diameter())}});
  if (!a.proper().empty())
    vb.hold("N(M)", {{"connected", a.proper().is_connected()}, {"diameter<=3", le3(a.proper().diameter())}});
  else
    vb.note("N(M) empty");
  if (a.full().vertex_count() < 2) vb.note("single-vertex S(M): diameter 0");
  return vb.finish();
}

TheoremVerdict check_semisimple_equalities(const Analysis& a) {
  const auto& lat = a.lattice();
  require_not_simple(lat);
  VerdictBuilder vb("prop-semisimple");
  const auto& s = a.full();
  const auto& n = a.proper();
  bool same_degree = false;
  for (SubmoduleId x : n.vertices()) same_degree |= s.degree(x) == n.degree(x);
  vb.agree("M", {{"semisimple", lat.is_semisimple()},
                 {"S(M)=N(M)", s.vertices() == n.vertices()},
                 {"exists X: deg_S(X)=deg_N(X)", same_degree}});
  return vb.finish();
}

TheoremVerdict check_example_degree_formula(const Analysis& a) {
  const auto& lat = a.lattice();
  const auto& atoms = lat.atoms();
  if (!lat.is_semisimple()) throw HypothesisNotMet("M is not semisimple");
  if (lat.uniform_dimension() < 2) throw HypothesisNotMet("M has fewer than two simple summands");
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (isomorphic(lat, atoms[i], atoms[j]))
        throw HypothesisNotMet("simple submodules " + vname(lat, atoms[j]) + " and " + vname(lat, atoms[i]) +
                               " are isomorphic");

  VerdictBuilder vb("ex-1.2");
  const auto& s = a.full();
  const std::size_t n = atoms.size();
  for (SubmoduleId v : s.vertices()) {
    std::size_t below = 0;
    for (SubmoduleId at : atoms) below += lat.contains(v, at);
    vb.hold(vname(lat, v), {{"deg_S=2^" + std::to_string(below) + "-1", s.degree(v) + 1 == pow2(below)}});
  }
  const auto r = s.report();
  bool coatoms_max = true;
  for (SubmoduleId c : lat.coatoms()) coatoms_max &= s.degree(c) + 1 == pow2(n - 1);
  bool atoms_min = true;
  for (SubmoduleId at : atoms) atoms_min &= s.degree(at) == 1;
  vb.hold("M", {{"submodules=2^n", lat.size() == pow2(n)},
                {"max degree=2^(n-1)-1", r.max_degree + 1 == pow2(n - 1)},
                {"min degree=1", r.min_degree == 1},
                {"coatoms attain max", coatoms_max},
                {"atoms attain min", atoms_min}});
  return vb.finish();
}

TheoremVerdict check_deg1_in_S(const Analysis& a) {
  const auto& lat = a.lattice();
  require_not_simple(lat);
  VerdictBuilder vb("prop-2.5");
  const auto& s = a.full();

  // Degree one in S(M) forces a simple vertex or a two-vertex chain.
  for (SubmoduleId b : s.vertices()) {
    if (s.degree(b) != 1) continue;
    bool two_chain = false;
    if (s.vertex_count() == 2) {
      const SubmoduleId other = s.vertices()[0] == b ? s.vertices()[1] : s.vertices()[0];
      two_chain = lat.is_atom(other) && lat.contains(b, other);
    }
    vb.hold(vname(lat, b), {{"simple or {A,B} chain", lat.is_atom(b) || two_chain}});
  }

  if (lat.is_semisimple()) {
    for (SubmoduleId b : s.vertices()) {
      const auto comps = lat.complements_of(b);
      const bool unique_nonzero = comps.size() == 1 && comps.front() != lat.zero();
      vb.agree(vname(lat, b), {{"deg_S=1", s.degree(b) == 1},
                               {"simple with unique nonzero complement", lat.is_atom(b) && unique_nonzero},
                               {"simple without isomorphic twin",
                                lat.is_atom(b) && !lat.is_simple_module() && !has_isomorphic_twin(lat, b)}});
    }
  } else {
    vb.note("M not semisimple: per-vertex equivalence skipped");
  }

  bool has_deg1 = false;
  for (auto d : s.degrees()) has_deg1 |= d == 1;
  bool semisimple_branch = false;
  if (lat.is_semisimple())
    for (SubmoduleId at : lat.atoms())
      if (at != lat.full() && !has_isomorphic_twin(lat, at)) semisimple_branch = true;
  const bool chain_branch = lat.is_chain_module() && s.vertex_count() == 2;
  vb.agree("M", {{"S has a degree-1 vertex", has_deg1}, {"twin-free simple or two-vertex chain",
                                                         semisimple_branch || chain_branch}});
  return vb.finish();
}

TheoremVerdict check_deg1_in_N(const Analysis& a) {
  require_proper_nonempty(a);
  const auto& lat = a.lattice();
  const auto& n = a.proper();
  const SubmoduleId soc = lat.socle();
  const DegreeOneConditions cond{a};
  VerdictBuilder vb("thm-2.13");

  for (SubmoduleId u : n.vertices()) {
    const bool uniform = lat.is_uniform(u);
    const bool complement_ok = cond.unique_semisimple_complement(u);
    const bool ext = cond.essential_extension_condition(u);
    const bool c1 = n.degree(u) == 1;
    const bool c2 = uniform && complement_ok && cond.element_condition(u);
    const bool c3 = uniform && complement_ok && ext;
    const bool c4 = cond.disjoint_in_socle(u) && ext && uniform && cond.unique_complement_in_socle(u);
    vb.agree(vname(lat, u), {{"(1) deg_N=1", c1}, {"(2) uniform+complement+elements", c2},
                             {"(3) uniform+complement+extensions", c3}, {"(4) lattice conditions", c4}});

    // (4)(iii) against its restatement through isomorphism.
    const bool iii = uniform && cond.unique_complement_in_socle(u);
    const bool iii_prime = uniform && !has_isomorphic_twin(lat, lat.meet(u, soc));
    vb.agree(vname(lat, u) + " (4)(iii)", {{"unique complement in socle", iii}, {"no isomorphic twin", iii_prime}});

    element_witness(a, u, vb);
    if (!c1) continue;

    // Consequences for a degree-one vertex.
    bool below_deg1 = true;
    for (SubmoduleId b : n.vertices())
      if (lat.contains(u, b) && n.degree(b) != 1) below_deg1 = false;
    const auto comps = lat.complements_of(u);
    bool comps_semisimple = true;
    for (SubmoduleId c : comps) comps_semisimple &= lat.is_semisimple_submodule(c);
    vb.hold(vname(lat, u) + " consequences",
            {{"uniform", uniform}, {"vertices below have degree 1", below_deg1},
             {"complement semisimple", comps_semisimple}, {"essential extensions contain socle", ext}});

    const SubmoduleId s = lat.meet(u, soc);
    const SubmoduleId c = comps.front();
    const auto soc_comps = lat.complements_within(s, soc);
    const bool udim_rel = s == lat.zero() ? lat.uniform_dimension() == lat.uniform_dimension(soc) + 1
                                          : lat.uniform_dimension() == lat.uniform_dimension(soc);
    vb.hold(vname(lat, u) + " complement",
            {{"unique complement", comps.size() == 1},
             {"disjoint submodules lie in socle", cond.disjoint_in_socle(u)},
             {"complement is the unique complement of U meet soc in soc",
              soc_comps.size() == 1 && soc_comps.front() == c},
             {"U meet soc = 0 iff complement = soc", (s == lat.zero()) == (c == soc)},
             {"uniform dimension relation", udim_rel}});

    SubmoduleId others = lat.zero();
    for (SubmoduleId f : lat.atoms())
      if (f != s) others = lat.join(others, f);
    const auto nb = n.neighbors(u);
    vb.hold(vname(lat, u) + " neighbour",
            {{"only neighbour is the complement", nb.size() == 1 && nb.front() == c},
             {"complement = sum of the other simples", c == others}});
  }
  return vb.finish();
}

TheoremVerdict check_deg1_interactions(const Analysis& a) {
  require_proper_nonempty(a);
  const auto& lat = a.lattice();
  const auto& n = a.proper();
  VerdictBuilder vb("thm-2.18");

  std::vector<SubmoduleId> deg1;
  for (SubmoduleId v : n.vertices())
    if (n.degree(v) == 1) deg1.push_back(v);
  if (deg1.empty()) vb.note("no degree-1 vertices in N(M)");

  for (std::size_t i = 0; i < deg1.size(); ++i)
    for (std::size_t j = i + 1; j < deg1.size(); ++j) {
      const SubmoduleId x = deg1[i], y = deg1[j];
      const bool disjoint = lat.meets_trivially(x, y);
      const bool simple_noniso = lat.is_atom(x) && lat.is_atom(y) && !isomorphic(lat, x, y);
      const SubmoduleId sum = lat.join(x, y);
      const bool sum_deg1 = n.has_vertex(sum) && n.degree(sum) == 1;
      const bool sum_ess = lat.is_essential(sum);
      vb.hold(pair_name(lat, x, y),
              {{"disjoint => simple, non-isomorphic", !disjoint || simple_noniso},
               {"overlapping => deg_N(A+B)=1", disjoint || sum_deg1},
               {"A+B essential => simple, non-isomorphic, soc=A+B",
                !sum_ess || (simple_noniso && lat.socle() == sum)}});
    }

  bool all_simple = true;
  for (SubmoduleId v : deg1) all_simple &= lat.is_atom(v);
  bool has_largest = false;
  for (SubmoduleId v : deg1) {
    bool contains_all = true;
    for (SubmoduleId w : deg1) contains_all &= lat.contains(v, w);
    has_largest |= contains_all;
  }
  bool each_contains_simple = true;
  for (SubmoduleId v : deg1) {
    bool any = false;
    for (SubmoduleId at : lat.atoms()) any |= lat.contains(v, at);
    each_contains_simple &= any;
  }
  vb.hold("M", {{"all simple or unique largest", all_simple || has_largest},
                {"every degree-1 vertex contains a simple", each_contains_simple}});
  return vb.finish();
}

TheoremVerdict check_complete_characterizations(const Analysis& a) {
  const auto& lat = a.lattice();
  require_not_simple(lat);
  const auto& s = a.full();
  const auto& n = a.proper();
  VerdictBuilder vb("thm-3.2");

  bool essential_universal = true;
  bool universal_simple = true;
  for (SubmoduleId v : s.vertices()) {
    const bool universal = s.degree(v) + 1 == s.vertex_count();
    if (lat.is_essential(v) && !universal) essential_universal = false;
    if (!lat.is_essential(v) && universal && !lat.is_atom(v)) universal_simple = false;
  }
  vb.hold("universal vertices", {{"essential vertices universal", essential_universal},
                                 {"non-essential universal vertices simple", universal_simple}});

  bool nonessential_simple = true;
  for (SubmoduleId v = 1; v < lat.full(); ++v)
    if (!lat.is_essential(v) && !lat.is_atom(v)) nonessential_simple = false;
  const bool socle_two = lat.uniform_dimension(lat.socle()) == 2 && lat.is_essential(lat.socle());
  const bool structure = nonessential_simple && socle_two;
  vb.agree("complete S(M)", {{"S complete", s.is_complete()},
                             {"uniform or (simple non-essentials, soc=S1+S2)", lat.is_uniform_module() || structure}});

  if (!lat.is_uniform_module())
    vb.agree("complete N(M)", {{"N complete", n.is_complete()}, {"simple non-essentials, soc=S1+S2", structure}});

  if (lat.is_semisimple()) {
    const bool two = lat.uniform_dimension() == 2;
    vb.agree("semisimple complete", {{"S complete", s.is_complete()}, {"N complete", n.is_complete()},
                                     {"N has a universal vertex", !n.universal_vertices().empty()},
                                     {"M=S1+S2", two}});
    if (two) {
      const SubmoduleId s1 = lat.atoms()[0];
      const SubmoduleId s2 = lat.complements_of(s1).front();
      const auto homs = a.module().count_homs(lat.at(s1), lat.at(s2));
      vb.note("|Hom(" + lat.label(s1) + "," + lat.label(s2) + ")| = " + std::to_string(homs));
      vb.hold("vertex count", {{"|V(N)|=|V(S)|", n.vertex_count() == s.vertex_count()},
                               {"|V(S)|=|Hom(S1,S2)|+1", s.vertex_count() == homs + 1}});
    }
  }

  const auto k = s.k_regular();
  vb.agree("k-regular S(M)", {{"S k-regular", k.has_value()},
                              {"S complete with k+1 vertices", s.is_complete() && k && s.vertex_count() == *k + 1}});
  return vb.finish();
}

TheoremVerdict check_triangle_free_S(const Analysis& a) {
  const auto& lat = a.lattice();
  const auto& s = a.full();
  if (s.vertex_count() < 2) throw HypothesisNotMet("S(M) has fewer than two vertices");
  VerdictBuilder vb("thm-3.7");
  const auto& atoms = lat.atoms();
  const bool two_simples = lat.is_semisimple() && atoms.size() == 2 && lat.uniform_dimension() == 2 &&
                           !isomorphic(lat, atoms[0], atoms[1]);
  const bool chain_two = lat.is_chain_module() && lat.size() == 4;
  vb.agree("M", {{"S triangle-free", s.triangle_free()},
                 {"two non-isomorphic simples or two-step chain", two_simples || chain_two},
                 {"S = K2", s.vertex_count() == 2 && s.edge_count() == 1}});
  return vb.finish();
}

TheoremVerdict check_girth_S(const Analysis& a) {
  require_not_simple(a.lattice());
  VerdictBuilder vb("thm-girth-S");
  const Length g = a.full().girth();
  vb.note("girth(S) = " + g.to_string());
  vb.hold("S(M)", {{"girth in {3,inf}", !g.is_finite() || g.value() == 3}});
  return vb.finish();
}

TheoremVerdict check_triangle_free_N(const Analysis& a) {
  require_proper_nonempty(a);
  const auto& lat = a.lattice();
  const auto& n = a.proper();
  VerdictBuilder vb("thm-3.11");
  const bool sd = all_adjacent_pairs(n, [&](SubmoduleId x, SubmoduleId y) { return strongly_disjoint(lat, x, y); });
  vb.agree("M", {{"N triangle-free", n.triangle_free()},
                 {"udim=2 and adjacent pairs strongly disjoint", lat.uniform_dimension() == 2 && sd},
                 {"adjacent pairs strongly disjoint", sd}});
  return vb.finish();
}

TheoremVerdict check_tree_N(const Analysis& a) {
  require_proper_nonempty(a);
  const auto& lat = a.lattice();
  const auto& n = a.proper();
  VerdictBuilder vb("thm-3.12");
  const bool sd_simple = all_adjacent_pairs(n, [&](SubmoduleId x, SubmoduleId y) {
    return strongly_disjoint(lat, x, y) && (lat.is_atom(x) || lat.is_atom(y));
  });
  bool star_simple_center = false;
  for (SubmoduleId c : n.star_centers()) star_simple_center |= lat.is_atom(c);
  vb.agree("M", {{"N tree", n.is_tree()},
                 {"adjacent pairs strongly disjoint, one simple", sd_simple},
                 {"N star with simple center", star_simple_center}});
  return vb.finish();
}

TheoremVerdict check_girth_N(const Analysis& a) {
  require_proper_nonempty(a);
  const auto& lat = a.lattice();
  VerdictBuilder vb("thm-girth-N");
  const Length g = a.proper().girth();
  vb.note("girth(N) = " + g.to_string());
  const bool in_set = !g.is_finite() || g.value() == 3 || g.value() == 4;
  const bool udim_rule = lat.uniform_dimension() <= 2 || (g.is_finite() && g.value() == 3);
  vb.hold("N(M)", {{"girth in {3,4,inf}", in_set}, {"udim>2 => girth 3", udim_rule}});
  return vb.finish();
}

TheoremVerdict check_trianglefree_tree_girth(const Analysis& a) {
  VerdictBuilder vb("thm-3.7-3.12");
  bool any = false;
  for (auto* part : {&check_triangle_free_S, &check_girth_S, &check_triangle_free_N, &check_tree_N, &check_girth_N}) {
    try {
      TheoremVerdict v = part(a);
      any = true;
      for (auto& c : v.clauses) {
        c.scope = v.theorem_id + " " + c.scope;
        if (c.mode == ClauseMode::Agree) vb.agree(c.scope, c.sides);
        else vb.hold(c.scope, c.sides);
      }
      for (auto& note : v.notes) vb.note(v.theorem_id + ": " + note);
    } catch (const HypothesisNotMet& ex) {
      vb.note(std::string("inapplicable part: ") + ex.what());
    }
  }
  if (!any) throw HypothesisNotMet("no part applies (M simple)");
  return vb.finish();
}

TheoremVerdict check_npartite(const Analysis& a) {
  const auto& lat = a.lattice();
  const NPartiteResult w = n_partite_witness(lat, a.full());
  VerdictBuilder vb("prop-3.14");
  const bool partition = std::holds_alternative<PartitionWitness>(w.witness);
  if (partition) {
    std::string desc = "partition:";
    for (const auto& part : std::get<PartitionWitness>(w.witness).parts) {
      desc += " {";
      for (std::size_t i = 0; i < part.size(); ++i) desc += (i ? "," : "") + lat.label(part[i]);
      desc += "}";
    }
    vb.note(desc);
  } else {
    std::string desc = "clique:";
    for (SubmoduleId v : std::get<CliqueWitness>(w.witness).clique) desc += " " + lat.label(v);
    vb.note(desc);
  }
  vb.agree("M", {{"semisimple", lat.is_semisimple()},
                 {"S(M) " + std::to_string(w.n) + "-partite", partition && w.verified}});
  vb.hold("witness", {{"witness verified", w.verified}});
  return vb.finish();
}

TheoremVerdict check_finiteness_conditions(const Analysis& a) {
  const auto& lat = a.lattice();
  const auto& m = a.module();
  VerdictBuilder vb("thm-2.1");
  vb.note("conditions (1)-(3) hold trivially: " + std::to_string(lat.size()) + " submodules");
  vb.note("socle essential (finite module): " + std::string(lat.is_essential(lat.socle()) ? "yes" : "no"));

  bool proper_essential = false;
  for (SubmoduleId v = 1; v < lat.full(); ++v) proper_essential |= lat.is_essential(v);

  // Decomposition into simples, built greedily and checked to be direct.
  const auto parts = lat.independent_atoms(lat.full());
  SubmoduleId acc = lat.zero();
  bool direct = true;
  for (SubmoduleId p : parts) {
    direct &= lat.meets_trivially(acc, p);
    acc = lat.join(acc, p);
  }
  const bool decomposes = acc == lat.full();
  bool simple_parts = true;
  for (SubmoduleId p : parts) simple_parts &= lat.is_atom(p);
  const bool branch_ii = decomposes && direct && simple_parts;
  if (branch_ii) {
    std::string homs = "pairwise |Hom|:";
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        homs += " " + std::to_string(m.count_homs(lat.at(parts[i]), lat.at(parts[j])));
    vb.note(homs);
  }
  vb.hold("(4)", {{"(i) or (ii)", proper_essential || branch_ii}});
  vb.agree("(4) branches exclusive", {{"(i) proper essential submodule", proper_essential},
                                      {"(ii) fails", !branch_ii}});
  return vb.finish();
}

// ---- catalog -----------------------------------------------------------------

namespace {

using Checker = TheoremVerdict (*)(const Analysis&);

const std::map<std::string, Checker>& registry() {
  static const std::map<std::string, Checker> r = {
      {"thm-1.5", &check_diameter},
      {"prop-semisimple", &check_semisimple_equalities},
      {"ex-1.2", &check_example_degree_formula},
      {"thm-2.1", &check_finiteness_conditions},
      {"prop-2.5", &check_deg1_in_S},
      {"thm-2.13", &check_deg1_in_N},
      {"thm-2.18", &check_deg1_interactions},
      {"thm-3.2", &check_complete_characterizations},
      {"thm-3.7-3.12", &check_trianglefree_tree_girth},
      {"thm-3.7", &check_triangle_free_S},
      {"thm-girth-S", &check_girth_S},
      {"thm-3.11", &check_triangle_free_N},
      {"thm-3.12", &check_tree_N},
      {"thm-girth-N", &check_girth_N},
      {"prop-3.14", &check_npartite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& default_theorem_ids() {
  static const std::vector<std::string> ids = {"thm-1.5",  "prop-semisimple", "ex-1.2",  "thm-2.1",
                                               "prop-2.5", "thm-2.13",        "thm-2.18", "thm-3.2",
                                               "thm-3.7-3.12", "prop-3.14"};
  return ids;
}

const std::vector<std::string>& known_theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out = default_theorem_ids();
    for (const char* extra : {"thm-3.7", "thm-girth-S", "thm-3.11", "thm-3.12", "thm-girth-N"}) out.push_back(extra);
    return out;
  }();
  return ids;
}

TheoremVerdict run_theorem(const Analysis& a, const std::string& id) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw UnknownTheoremId("unknown theorem id '" + id + "'");
  try {
    return it->second(a);
  } catch (const HypothesisNotMet& ex) {
    TheoremVerdict v;
    v.theorem_id = id;
    v.applicable = false;
    v.pass = false;
    v.witness = std::string("inapplicable: ") + ex.what();
    return v;
  }
}

std::vector<TheoremVerdict> run_catalog(const Analysis& a, const std::vector<std::string>& ids) {
  std::vector<std::string> expanded;
  for (const auto& id : ids) {
    if (id == "all") expanded.insert(expanded.end(), default_theorem_ids().begin(), default_theorem_ids().end());
    else if (!registry().count(id)) throw UnknownTheoremId("unknown theorem id '" + id + "'");
    else expanded.push_back(id);
  }
  std::vector<TheoremVerdict> out;
  out.reserve(expanded.size());
  for (const auto& id : expanded) out.push_back(run_theorem(a, id));
  return out;
}

std::string verdict_json(const TheoremVerdict& v) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["theorem_id"] = v.theorem_id;
  j["applicable"] = v.applicable;
  j["pass"] = v.pass;
  j["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
  ordered_json clauses = ordered_json::array();
  for (const auto& c : v.clauses) {
    ordered_json cj;
    cj["scope"] = c.scope;
    cj["mode"] = c.mode == ClauseMode::Agree ? "agree" : "hold";
    ordered_json sides = ordered_json::object();
    for (const auto& s : c.sides) sides[s.name] = s.value;
    cj["sides"] = std::move(sides);
    cj["satisfied"] = c.satisfied();
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  j["notes"] = v.notes;
  return j.dump(2);
}

std::string verdict_text(const TheoremVerdict& v) {
  std::ostringstream out;
  const char* status = !v.applicable ? "INAPPLICABLE" : v.pass ? "PASS" : "FAIL";
  out << v.theorem_id << ": " << status << "\n";
  for (const auto& c : v.clauses) out << "  " << (c.satisfied() ? "ok   " : "FAIL ") << c.describe() << "\n";
  for (const auto& n : v.notes) out << "  note: " << n << "\n";
  if (v.witness) out << "  witness: " << *v.witness << "\n";
  return out.str();
}

}  // namespace sumess
