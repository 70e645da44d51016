#include "sumess/module.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "sumess/error.hpp"

namespace sumess {
namespace {

// Addition tables are kept for orders up to this bound (4M entries).
constexpr std::size_t kAddTableMaxOrder = 2048;

struct TableHash {
  std::size_t operator()(const ActionRing::Table& t) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : t) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::int64_t reduce(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

void validate(const ModulePresentation& p) {
  if (p.moduli.empty()) throw InvalidModuli("moduli list is empty");
  for (auto d : p.moduli)
    if (d < 2) throw InvalidModuli("every modulus must be >= 2, got " + std::to_string(d));
  const auto* gen = std::get_if<GeneratedAction>(&p.action);
  if (gen == nullptr) return;
  const std::size_t k = p.moduli.size();
  for (std::size_t g = 0; g < gen->generators.size(); ++g) {
    const auto& mat = gen->generators[g];
    const std::string where = "generator " + std::to_string(g);
    if (mat.size() != k) throw IllFormedGenerator(where + ": expected " + std::to_string(k) + " rows");
    for (std::size_t i = 0; i < k; ++i) {
      if (mat[i].size() != k)
        throw IllFormedGenerator(where + ": row " + std::to_string(i) + " must have " + std::to_string(k) + " entries");
      for (std::size_t j = 0; j < k; ++j) {
        // The image of a generator of order d_j must have order dividing d_j.
        const std::int64_t di = p.moduli[i];
        const std::int64_t dj = p.moduli[j];
        if (reduce(mat[i][j], di) * dj % di != 0)
          throw IllFormedGenerator(where + ": entry [" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                   std::to_string(mat[i][j]) + " is not well defined (d_i=" + std::to_string(di) +
                                   " must divide G[i][j]*d_j)");
      }
    }
  }
}

FiniteModule FiniteModule::build(const ModulePresentation& p, const Caps& caps) {
  validate(p);
  std::uint64_t order = 1;
  for (auto d : p.moduli) {
    order = saturating_mul(order, d);
    if (order > caps.elements)
      throw ElementCapExceeded("module order exceeds element cap " + std::to_string(caps.elements));
  }

  FiniteModule m;
  m.name_ = p.name;
  m.moduli_ = p.moduli;
  m.order_ = static_cast<std::size_t>(order);
  m.caps_ = caps;

  const std::size_t k = m.moduli_.size();
  m.strides_.assign(k, 1);
  for (std::size_t i = k - 1; i > 0; --i) m.strides_[i - 1] = m.strides_[i] * m.moduli_[i];

  const std::size_t n = m.order_;
  m.negation_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t neg = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t c = (x / m.strides_[i]) % m.moduli_[i];
      neg += ((m.moduli_[i] - c) % m.moduli_[i]) * m.strides_[i];
    }
    m.negation_[x] = neg;
  }
  if (n <= kAddTableMaxOrder) {
    m.add_table_.resize(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < k; ++i) {
          const std::uint32_t cx = (x / m.strides_[i]) % m.moduli_[i];
          const std::uint32_t cy = (y / m.strides_[i]) % m.moduli_[i];
          s += ((cx + cy) % m.moduli_[i]) * m.strides_[i];
        }
        m.add_table_[static_cast<std::size_t>(x) * n + y] = s;
      }
  }

  std::vector<ActionRing::Table> generator_tables;
  if (const auto* gen = std::get_if<GeneratedAction>(&p.action)) {
    m.integer_action_ = false;
    for (std::size_t g = 0; g < gen->generators.size(); ++g) {
      const auto& mat = gen->generators[g];
      ActionRing::Table table(n);
      std::vector<std::int64_t> image(k);
      for (std::uint32_t x = 0; x < n; ++x) {
        const auto c = m.coords(Element{x});
        for (std::size_t i = 0; i < k; ++i) {
          std::int64_t acc = 0;
          for (std::size_t j = 0; j < k; ++j) acc = reduce(acc + reduce(mat[i][j], m.moduli_[i]) * c[j], m.moduli_[i]);
          image[i] = acc;
        }
        table[x] = m.encode(image).index;
      }
      m.check_additive(table, g);
      generator_tables.push_back(std::move(table));
    }
  }
  m.close_ring(generator_tables);

  const std::size_t r = m.ring_.size();
  m.orbits_.assign(n, BitSet(n));
  m.annihilators_.assign(n, BitSet(r));
  m.annihilator_class_.resize(n);
  std::unordered_map<BitSet, std::uint32_t, BitSetHash> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::size_t e = 0; e < r; ++e) {
      const std::uint32_t y = m.ring_.tables_[e][x];
      m.orbits_[x].set(y);
      if (y == 0) m.annihilators_[x].set(e);
    }
    const auto [it, inserted] = classes.emplace(m.annihilators_[x], static_cast<std::uint32_t>(classes.size()));
    m.annihilator_class_[x] = it->second;
  }
  return m;
}

void FiniteModule::check_additive(const ActionRing::Table& table, std::size_t which) const {
  for (std::uint32_t x = 0; x < order_; ++x)
    for (std::uint32_t y = 0; y < order_; ++y)
      if (table[add(Element{x}, Element{y}).index] != add(Element{table[x]}, Element{table[y]}).index)
        throw IllFormedGenerator("generator " + std::to_string(which) + " is not additive");
}

void FiniteModule::close_ring(const std::vector<ActionRing::Table>& generator_tables) {
  const std::size_t n = order_;
  std::unordered_map<ActionRing::Table, std::size_t, TableHash> index;
  auto& tables = ring_.tables_;
  auto insert = [&](ActionRing::Table t) -> std::pair<std::size_t, bool> {
    const auto [it, inserted] = index.emplace(t, tables.size());
    if (inserted) {
      if (tables.size() + 1 > caps_.action_ring)
        throw ActionRingCapExceeded("action ring exceeds cap " + std::to_string(caps_.action_ring));
      tables.push_back(std::move(t));
    }
    return {it->second, inserted};
  };

  ActionRing::Table id(n);
  std::iota(id.begin(), id.end(), 0U);
  ring_.identity_ = insert(id).first;
  ring_.generators_ = {ring_.identity_};
  std::vector<std::size_t> gens;
  for (const auto& t : generator_tables) {
    const auto idx = insert(t).first;
    gens.push_back(idx);
    if (std::find(ring_.generators_.begin(), ring_.generators_.end(), idx) == ring_.generators_.end())
      ring_.generators_.push_back(idx);
  }

  // Multiplicative monoid generated by the generators.
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t g : gens) {
      ActionRing::Table comp(n);
      for (std::size_t x = 0; x < n; ++x) comp[x] = tables[g][tables[i][x]];
      insert(std::move(comp));
    }
  }
  // Additive closure of the monoid; bilinearity of composition keeps it
  // closed under composition.
  const std::size_t monoid_size = tables.size();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = 0; j < monoid_size; ++j) {
      ActionRing::Table s(n);
      for (std::size_t x = 0; x < n; ++x) s[x] = add(Element{tables[i][x]}, Element{tables[j][x]}).index;
      insert(std::move(s));
    }
  }
  ring_.zero_ = index.at(ActionRing::Table(n, 0));
}

Element FiniteModule::add(Element a, Element b) const {
  if (!add_table_.empty()) return Element{add_table_[static_cast<std::size_t>(a.index) * order_ + b.index]};
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint32_t ca = (a.index / strides_[i]) % moduli_[i];
    const std::uint32_t cb = (b.index / strides_[i]) % moduli_[i];
    s += ((ca + cb) % moduli_[i]) * strides_[i];
  }
  return Element{s};
}

std::vector<std::uint32_t> FiniteModule::coords(Element x) const {
  std::vector<std::uint32_t> c(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) c[i] = (x.index / strides_[i]) % moduli_[i];
  return c;
}

Element FiniteModule::encode(std::span<const std::int64_t> c) const {
  if (c.size() != moduli_.size()) throw std::invalid_argument("coordinate count does not match module rank");
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    idx += static_cast<std::uint32_t>(reduce(c[i], moduli_[i])) * strides_[i];
  return Element{idx};
}

std::size_t FiniteModule::additive_order(Element x) const {
  std::size_t ord = 1;
  for (Element y = x; y.index != 0; y = add(y, x)) ++ord;
  return ord;
}

Submodule FiniteModule::generated_by(std::span<const Element> seeds) const {
  BitSet members(order_);
  std::vector<std::uint32_t> list;
  std::deque<std::uint32_t> work;
  auto push = [&](std::uint32_t x) {
    if (!members.test(x)) {
      members.set(x);
      work.push_back(x);
    }
  };
  push(0);
  for (Element s : seeds) push(s.index);
  while (!work.empty()) {
    const std::uint32_t x = work.front();
    work.pop_front();
    for (std::size_t g : ring_.generators()) push(ring_.tables_[g][x]);
    push(add(Element{x}, Element{x}).index);
    for (std::uint32_t y : list) push(add(Element{x}, Element{y}).index);
    list.push_back(x);
  }
  return make_submodule(std::move(members));
}

Submodule FiniteModule::cyclic_submodule(Element m) const {
  const Element seeds[] = {m};
  return generated_by(seeds);
}

Submodule FiniteModule::zero_submodule() const {
  BitSet z(order_);
  z.set(0);
  return Submodule(std::move(z), {});
}

Submodule FiniteModule::full_submodule() const {
  BitSet all(order_);
  all.set_all();
  return make_submodule(std::move(all));
}

Submodule FiniteModule::make_submodule(BitSet members) const {
  if (members.size() != order_ || !members.test(0))
    throw std::logic_error("make_submodule: member set is not a submodule");
  std::vector<Element> gens;
  BitSet span(order_);
  span.set(0);
  while (!(span == members)) {
    std::size_t best = order_;
    std::size_t best_size = 0;
    members.for_each([&](std::size_t x) {
      if (span.test(x)) return;
      const std::size_t sz = orbits_[x].count();
      if (sz > best_size) {
        best = x;
        best_size = sz;
      }
    });
    gens.push_back(Element{static_cast<std::uint32_t>(best)});
    span = sum(span, orbits_[best]);
    if (!span.is_subset_of(members)) throw std::logic_error("make_submodule: member set is not a submodule");
  }
  return Submodule(std::move(members), std::move(gens));
}

bool FiniteModule::is_submodule(const BitSet& members) const {
  if (members.size() != order_ || !members.test(0)) return false;
  const auto list = members.members();
  for (auto x : list) {
    for (std::size_t g : ring_.generators())
      if (!members.test(ring_.tables_[g][x])) return false;
    for (auto y : list)
      if (!members.test(add(Element{static_cast<std::uint32_t>(x)}, Element{static_cast<std::uint32_t>(y)}).index))
        return false;
  }
  return true;
}

BitSet FiniteModule::sum(const BitSet& a, const BitSet& b) const {
  if (a.is_subset_of(b)) return b;
  if (b.is_subset_of(a)) return a;
  BitSet out(order_);
  const auto bs = b.members();
  a.for_each([&](std::size_t x) {
    for (auto y : bs) out.set(add(Element{static_cast<std::uint32_t>(x)}, Element{static_cast<std::uint32_t>(y)}).index);
  });
  return out;
}

bool FiniteModule::extend_hom(std::span<const Element> sources, std::span<const Element> images,
                              std::vector<std::int64_t>& phi) const {
  phi.assign(order_, -1);
  phi[0] = 0;
  std::vector<std::uint32_t> span = {0};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    pairs.clear();
    for (std::size_t e = 0; e < ring_.size(); ++e)
      pairs.emplace_back(ring_.tables_[e][sources[i].index], ring_.tables_[e][images[i].index]);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    const std::size_t old = span.size();
    for (std::size_t s = 0; s < old; ++s) {
      const std::uint32_t x = span[s];
      for (const auto& [ra, rb] : pairs) {
        const std::uint32_t y = add(Element{x}, Element{ra}).index;
        const std::int64_t v = add(Element{static_cast<std::uint32_t>(phi[x])}, Element{rb}).index;
        if (phi[y] < 0) {
          phi[y] = v;
          span.push_back(y);
        } else if (phi[y] != v) {
          return false;
        }
      }
    }
  }
  return true;
}

template <typename Visit>
void FiniteModule::search_homs(const Submodule& a, const Submodule& b, bool require_equal_annihilators,
                               Visit&& visit) const {
  const auto gens = a.generators();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) space = saturating_mul(space, b.size());
  if (space > caps_.hom_search)
    throw HomSearchCapExceeded("hom search space " + std::to_string(b.size()) + "^" + std::to_string(gens.size()) +
                               " exceeds cap " + std::to_string(caps_.hom_search));

  // A ring-linear image of a satisfies ann(a) <= ann(image); injective maps
  // preserve annihilators exactly.
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const BitSet& ann_a = annihilators_[gens[i].index];
    b.members().for_each([&](std::size_t y) {
      const BitSet& ann_y = annihilators_[y];
      const bool ok = require_equal_annihilators ? ann_a == ann_y : ann_a.is_subset_of(ann_y);
      if (ok) candidates[i].push_back(Element{static_cast<std::uint32_t>(y)});
    });
    if (candidates[i].empty()) return;
  }

  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Element> images(gens.size());
  std::vector<std::int64_t> phi;
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pos[i]];
    if (extend_hom(gens, images, phi)) {
      std::size_t defined = 0;
      for (auto v : phi) defined += v >= 0;
      if (defined != a.size()) throw std::logic_error("hom search: generators do not span the source submodule");
      if (!visit(phi)) return;
    }
    std::size_t i = 0;
    while (i < gens.size() && ++pos[i] == candidates[i].size()) pos[i++] = 0;
    if (i == gens.size()) return;
  }
}

std::uint64_t FiniteModule::count_homs(const Submodule& a, const Submodule& b) const {
  std::uint64_t count = 0;
  search_homs(a, b, false, [&](const std::vector<std::int64_t>&) {
    ++count;
    return true;
  });
  return count;
}

bool FiniteModule::is_isomorphic(const Submodule& a, const Submodule& b) const {
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  bool found = false;
  search_homs(a, b, true, [&](const std::vector<std::int64_t>& phi) {
    BitSet image(order_);
    for (auto v : phi)
      if (v >= 0) image.set(static_cast<std::size_t>(v));
    found = image.count() == a.size();
    return !found;
  });
  return found;
}

std::string FiniteModule::label(Element x) const {
  std::string out = "(";
  const auto c = coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string FiniteModule::label(const Submodule& s) const {
  if (s.is_zero()) return "0";
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i) out += ',';
    out += label(s.generators()[i]);
  }
  return out + ">";
}

}  // namespace sumess
