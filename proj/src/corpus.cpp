#include "sumess/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "sumess/analysis.hpp"
#include "sumess/error.hpp"
#include "sumess/graph.hpp"
#include "sumess/spec_file.hpp"

namespace sumess {

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Partitions of e into parts <= max_part, decreasing lexicographic order.
void partitions(std::uint32_t e, std::uint32_t max_part, std::vector<std::uint32_t>& prefix,
                std::vector<std::vector<std::uint32_t>>& out) {
  if (e == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t part = std::min(e, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(e - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= b;
  return r;
}

ModulePresentation cyclic_sum(std::vector<std::uint32_t> moduli) {
  ModulePresentation p;
  for (std::size_t i = 0; i < moduli.size(); ++i) p.name += (i ? "+Z" : "Z") + std::to_string(moduli[i]);
  p.moduli = std::move(moduli);
  return p;
}

GeneratedAction::Matrix zero_matrix(std::size_t k) { return GeneratedAction::Matrix(k, std::vector<std::int64_t>(k, 0)); }

}  // namespace

std::vector<ModulePresentation> abelian_groups_of_order(std::uint32_t n) {
  if (n < 2) return {};
  std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
  const auto factors = factorize(n);
  for (const auto& [p, e] : factors) {
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> prefix;
    partitions(e, e, prefix, parts);
    for (auto& part : parts)
      for (auto& x : part) x = ipow(p, x);
    per_prime.push_back(std::move(parts));
  }
  std::vector<ModulePresentation> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    std::vector<std::uint32_t> moduli;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      moduli.insert(moduli.end(), per_prime[i][choice[i]].begin(), per_prime[i][choice[i]].end());
    out.push_back(cyclic_sum(std::move(moduli)));
    std::size_t i = per_prime.size();
    while (i > 0) {
      --i;
      if (++choice[i] < per_prime[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
  }
}

ModulePresentation elementary_abelian(std::uint32_t p, std::uint32_t k) {
  return cyclic_sum(std::vector<std::uint32_t>(k, p));
}

ModulePresentation matrix_ring_regular_module() {
  // Coordinate 2r+c holds entry (r,c); E_ij A copies row j of A into row i.
  GeneratedAction action;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto g = zero_matrix(4);
      for (int c = 0; c < 2; ++c) g[2 * i + c][2 * j + c] = 1;
      action.generators.push_back(std::move(g));
    }
  return {"M2(F2)", {2, 2, 2, 2}, std::move(action)};
}

ModulePresentation matrix_ring_column_module() {
  GeneratedAction action;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto g = zero_matrix(2);
      g[i][j] = 1;
      action.generators.push_back(std::move(g));
    }
  return {"F2^2 over M2(F2)", {2, 2}, std::move(action)};
}

std::vector<ModulePresentation> enumerate_corpus(const CorpusSpec& spec) {
  if (spec.max_order < 4) throw std::invalid_argument("max_order must be at least 4");
  std::vector<ModulePresentation> out;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint32_t n = 2; n <= spec.max_order; ++n)
    for (auto& p : abelian_groups_of_order(n)) {
      seen.insert(p.moduli);
      out.push_back(std::move(p));
    }
  for (std::uint32_t p = 2; p <= spec.include_elementary_abelian_up_to; ++p) {
    if (factorize(p).size() != 1 || factorize(p).front().second != 1) continue;
    for (std::uint32_t k = 1; ipow(p, k) <= spec.include_elementary_abelian_up_to; ++k) {
      auto e = elementary_abelian(p, k);
      if (seen.insert(e.moduli).second) out.push_back(std::move(e));
      if (static_cast<std::uint64_t>(ipow(p, k)) * p > spec.include_elementary_abelian_up_to) break;
    }
  }
  if (spec.include_matrix_instance) out.push_back(matrix_ring_regular_module());
  for (const auto& path : spec.extra_spec_files) out.push_back(load_spec_file(path));
  return out;
}

namespace {

CorpusItemResult run_item(const ModulePresentation& p, const std::vector<std::string>& ids, const Caps& caps) {
  CorpusItemResult r;
  r.name = p.name;
  r.order = 1;
  for (auto d : p.moduli) r.order *= d;
  try {
    const Analysis a = Analysis::build(p, caps);
    if (a.full().empty()) {
      r.skipped = "simple module, S(M) has no vertices";
      return r;
    }
    r.verdicts = run_catalog(a, ids);
    r.dot_s = export_dot(a.full());
    r.dot_n = export_dot(a.proper());
  } catch (const CapExceeded& ex) {
    r.verdicts.clear();
    r.skipped = std::string("cap exceeded: ") + ex.what();
    r.cap_exceeded = true;
  }
  return r;
}

}  // namespace

std::vector<CorpusItemResult> run_corpus(const std::vector<ModulePresentation>& items,
                                         const std::vector<std::string>& theorem_ids, const Caps& caps,
                                         unsigned jobs) {
  // Reject unknown ids before spawning workers.
  for (const auto& id : theorem_ids)
    if (id != "all" && std::find(known_theorem_ids().begin(), known_theorem_ids().end(), id) == known_theorem_ids().end())
      throw UnknownTheoremId("unknown theorem id '" + id + "'");

  std::vector<CorpusItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = run_item(items[i], theorem_ids, caps);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

CorpusSummary summarize(const std::vector<CorpusItemResult>& results) {
  CorpusSummary s;
  for (const auto& r : results) {
    if (r.skipped) ++s.skipped;
    if (r.cap_exceeded) ++s.cap_exceeded;
    for (const auto& v : r.verdicts) {
      if (!v.applicable) ++s.inapplicable;
      else if (v.pass) ++s.passed;
      else ++s.failed;
    }
  }
  return s;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string corpus_csv(const std::vector<CorpusItemResult>& results) {
  std::string out = "module,order,theorem_id,applicable,pass,witness\n";
  for (const auto& r : results)
    for (const auto& v : r.verdicts) {
      out += csv_field(r.name) + "," + std::to_string(r.order) + "," + csv_field(v.theorem_id) + "," +
             (v.applicable ? "true" : "false") + "," + (v.pass ? "true" : "false") + "," +
             csv_field(v.witness.value_or("")) + "\n";
    }
  return out;
}

std::string file_stem(const std::string& module_name) {
  std::string out;
  for (char c : module_name) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '+' ||
                      c == '-' || c == '_';
    out += keep ? c : '_';
  }
  return out.empty() ? "module" : out;
}

}  // namespace sumess
