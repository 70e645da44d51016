#include "sumess/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"
#include "sumess/error.hpp"

namespace sumess {

EssGraph EssGraph::build(const SubmoduleLattice& lattice, GraphKind kind) {
  EssGraph g;
  g.kind_ = kind;
  g.lattice_ = &lattice;
  g.local_.assign(lattice.size(), -1);
  for (SubmoduleId id = 1; id < lattice.full(); ++id) {
    if (kind == GraphKind::Proper && lattice.is_essential(id)) continue;
    g.local_[id] = static_cast<std::int64_t>(g.vertices_.size());
    g.vertices_.push_back(id);
  }
  const std::size_t n = g.vertices_.size();
  g.adjacency_.assign(n, BitSet(n));
  g.degrees_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lattice.is_sum_essential(g.vertices_[i], g.vertices_[j])) {
        g.adjacency_[i].set(j);
        g.adjacency_[j].set(i);
      }
  for (std::size_t i = 0; i < n; ++i) g.degrees_[i] = static_cast<std::uint32_t>(g.adjacency_[i].count());
  return g;
}

std::size_t EssGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto d : degrees_) twice += d;
  return twice / 2;
}

bool EssGraph::has_vertex(SubmoduleId id) const { return id < local_.size() && local_[id] >= 0; }

std::size_t EssGraph::position(SubmoduleId id) const {
  if (!has_vertex(id))
    throw UnknownVertex("submodule " + std::to_string(id) + " is not a vertex of " + kind_name(kind_) + "(M)");
  return static_cast<std::size_t>(local_[id]);
}

std::vector<SubmoduleId> EssGraph::neighbors(SubmoduleId v) const {
  std::vector<SubmoduleId> out;
  adjacency_[position(v)].for_each([&](std::size_t j) { out.push_back(vertices_[j]); });
  return out;
}

std::vector<int> EssGraph::distances(std::size_t source) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    adjacency_[u].for_each([&](std::size_t w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

bool EssGraph::is_connected() const {
  if (vertices_.size() < 2) return true;
  const auto d = distances(0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

Length EssGraph::diameter() const {
  std::uint32_t best = 0;
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    for (int d : distances(s)) {
      if (d < 0) return Length::infinity();
      best = std::max(best, static_cast<std::uint32_t>(d));
    }
  }
  return Length::finite(best);
}

Length EssGraph::girth() const {
  const std::size_t n = vertices_.size();
  std::optional<std::uint32_t> best;
  std::vector<int> dist(n);
  std::vector<std::int64_t> parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      // Cycles detected from here on are at least 2 * dist[u] long.
      if (best && static_cast<std::uint32_t>(2 * dist[u]) >= *best) break;
      adjacency_[u].for_each([&](std::size_t w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<std::int64_t>(u);
          queue.push_back(w);
        } else if (parent[u] != static_cast<std::int64_t>(w)) {
          const auto len = static_cast<std::uint32_t>(dist[u] + dist[w] + 1);
          if (!best || len < *best) best = len;
        }
      });
    }
  }
  return best ? Length::finite(*best) : Length::infinity();
}

bool EssGraph::triangle_free() const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    bool found = false;
    adjacency_[i].for_each([&](std::size_t j) {
      if (!found && j > i && adjacency_[i].intersects(adjacency_[j])) found = true;
    });
    if (found) return false;
  }
  return true;
}

bool EssGraph::is_complete() const {
  const auto want = vertices_.empty() ? 0 : vertices_.size() - 1;
  return std::all_of(degrees_.begin(), degrees_.end(), [&](std::uint32_t d) { return d == want; });
}

std::optional<std::uint32_t> EssGraph::k_regular() const {
  if (degrees_.empty()) return std::nullopt;
  for (auto d : degrees_)
    if (d != degrees_.front()) return std::nullopt;
  return degrees_.front();
}

std::vector<SubmoduleId> EssGraph::universal_vertices() const {
  std::vector<SubmoduleId> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (degrees_[i] + 1 == vertices_.size()) out.push_back(vertices_[i]);
  return out;
}

bool EssGraph::is_tree() const {
  return !vertices_.empty() && is_connected() && edge_count() + 1 == vertices_.size();
}

std::vector<SubmoduleId> EssGraph::star_centers() const {
  if (!is_tree()) return {};
  return universal_vertices();
}

std::optional<SubmoduleId> EssGraph::star_center() const {
  const auto c = star_centers();
  if (c.empty()) return std::nullopt;
  return c.front();
}

std::optional<std::vector<SubmoduleId>> EssGraph::find_clique(std::size_t size) const {
  if (size == 0) return std::vector<SubmoduleId>{};
  const std::size_t n = vertices_.size();
  const std::uint64_t cap = lattice_->module().caps().clique_search;
  std::uint64_t expanded = 0;
  std::vector<std::size_t> chosen;

  auto search = [&](auto&& self, const BitSet& candidates) -> bool {
    if (chosen.size() == size) return true;
    if (candidates.count() + chosen.size() < size) return false;
    for (std::size_t v = candidates.first(); v < n; v = candidates.next(v)) {
      if (++expanded > cap)
        throw CliqueSearchCapExceeded("clique search exceeded " + std::to_string(cap) + " expansions");
      chosen.push_back(v);
      BitSet next = candidates & adjacency_[v];
      // Only extend with later vertices so each clique is visited once.
      for (std::size_t u = next.first(); u < n && u <= v; u = next.next(u)) next.reset(u);
      if (self(self, next)) return true;
      chosen.pop_back();
    }
    return false;
  };

  BitSet all(n);
  all.set_all();
  if (!search(search, all)) return std::nullopt;
  std::vector<SubmoduleId> out;
  for (auto v : chosen) out.push_back(vertices_[v]);
  return out;
}

bool EssGraph::is_clique(const std::vector<SubmoduleId>& vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!has_vertex(vs[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j] || !adjacent(vs[i], vs[j])) return false;
  }
  return true;
}

bool EssGraph::is_independent(const std::vector<SubmoduleId>& vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!has_vertex(vs[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (adjacent(vs[i], vs[j])) return false;
  }
  return true;
}

GraphReport EssGraph::report() const {
  GraphReport r;
  r.vertex_count = vertex_count();
  r.edge_count = edge_count();
  for (auto d : degrees_) ++r.degree_histogram[d];
  r.is_connected = is_connected();
  r.diameter = diameter();
  r.girth = girth();
  r.is_complete = !empty() && is_complete();
  r.k_regular = k_regular();
  r.triangle_free = triangle_free();
  r.is_tree = is_tree();
  r.star_center = star_center();
  r.universal_vertices = universal_vertices();
  if (!degrees_.empty()) {
    r.max_degree = *std::max_element(degrees_.begin(), degrees_.end());
    r.min_degree = *std::min_element(degrees_.begin(), degrees_.end());
  }
  return r;
}

NPartiteResult n_partite_witness(const SubmoduleLattice& lat, const EssGraph& s) {
  if (s.kind() != GraphKind::Full) throw HypothesisNotMet("n-partite witness needs S(M)");
  const auto& coatoms = lat.coatoms();
  const std::size_t n = coatoms.size();
  if (n < 2) throw HypothesisNotMet("module has " + std::to_string(n) + " maximal submodules, need at least 2");

  NPartiteResult res;
  res.n = n;
  if (lat.radical() == lat.zero()) {
    PartitionWitness w;
    w.parts.resize(n);
    for (SubmoduleId v : s.vertices()) {
      for (std::size_t k = 0; k < n; ++k)
        if (lat.contains(coatoms[k], v)) {
          w.parts[k].push_back(v);
          break;
        }
    }
    std::size_t covered = 0;
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      covered += w.parts[k].size();
      if (w.parts[k].empty()) {
        ok = false;
        res.detail = "part " + std::to_string(k + 1) + " is empty";
      } else if (!s.is_independent(w.parts[k])) {
        ok = false;
        res.detail = "part " + std::to_string(k + 1) + " is not independent";
      }
    }
    if (covered != s.vertex_count()) {
      ok = false;
      res.detail = "parts do not cover every vertex";
    }
    res.verified = ok;
    res.witness = std::move(w);
    return res;
  }

  const auto complements = lat.complements_of(lat.radical());
  SubmoduleId first = complements.front();
  if (first == lat.zero()) first = lat.radical();
  CliqueWitness w;
  w.clique.push_back(first);
  for (SubmoduleId c : coatoms) w.clique.push_back(c);
  res.verified = s.is_clique(w.clique);
  if (!res.verified) res.detail = "proposed clique is not complete";
  res.witness = std::move(w);
  return res;
}

std::string kind_name(GraphKind kind) { return kind == GraphKind::Full ? "S" : "N"; }

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const EssGraph& g) {
  const auto& lat = g.lattice();
  std::ostringstream out;
  out << "graph " << dot_quote(kind_name(g.kind()) + "(" + lat.module().name() + ")") << " {\n";
  for (SubmoduleId v : g.vertices()) out << "  v" << v << " [label=" << dot_quote(lat.label(v)) << "];\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    g.row(i).for_each([&](std::size_t j) {
      if (j > i) out << "  v" << g.vertices()[i] << " -- v" << g.vertices()[j] << ";\n";
    });
  out << "}\n";
  return out.str();
}

std::string export_json(const EssGraph& g) {
  using nlohmann::ordered_json;
  const auto& lat = g.lattice();
  const GraphReport r = g.report();
  auto length = [](const Length& l) { return l.is_finite() ? ordered_json(l.value()) : ordered_json("inf"); };

  ordered_json j;
  j["graph"] = kind_name(g.kind());
  j["module"] = lat.module().name();
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  ordered_json hist = ordered_json::object();
  for (const auto& [deg, count] : r.degree_histogram) hist[std::to_string(deg)] = count;
  j["degree_histogram"] = hist;
  j["is_connected"] = r.is_connected;
  j["diameter"] = length(r.diameter);
  j["girth"] = length(r.girth);
  j["is_complete"] = r.is_complete;
  j["k_regular"] = r.k_regular ? ordered_json(*r.k_regular) : ordered_json(nullptr);
  j["triangle_free"] = r.triangle_free;
  j["is_tree"] = r.is_tree;
  j["star_center"] = r.star_center ? ordered_json(*r.star_center) : ordered_json(nullptr);
  j["universal_vertices"] = r.universal_vertices;
  j["max_degree"] = r.max_degree;
  j["min_degree"] = r.min_degree;
  ordered_json vertices = ordered_json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const SubmoduleId v = g.vertices()[i];
    ordered_json vj;
    vj["id"] = v;
    vj["label"] = lat.label(v);
    vj["size"] = lat.at(v).size();
    vj["degree"] = g.degrees()[i];
    vj["essential"] = lat.is_essential(v);
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    g.row(i).for_each([&](std::size_t k) {
      if (k > i) edges.push_back(ordered_json::array({g.vertices()[i], g.vertices()[k]}));
    });
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

}  // namespace sumess
