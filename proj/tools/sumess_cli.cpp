#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sumess/analysis.hpp"
#include "sumess/corpus.hpp"
#include "sumess/error.hpp"
#include "sumess/spec_file.hpp"
#include "sumess/theorems.hpp"

namespace fs = std::filesystem;
using namespace sumess;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInapplicable = 4;

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string text_report(const EssGraph& g) {
  const auto& lat = g.lattice();
  const GraphReport r = g.report();
  std::ostringstream out;
  out << kind_name(g.kind()) << "(" << lat.module().name() << "): " << r.vertex_count << " vertices, "
      << r.edge_count << " edges\n";
  out << "  connected: " << yes_no(r.is_connected) << "  diameter: " << r.diameter.to_string()
      << "  girth: " << r.girth.to_string() << "\n";
  out << "  complete: " << yes_no(r.is_complete)
      << "  k-regular: " << (r.k_regular ? std::to_string(*r.k_regular) : "no")
      << "  triangle-free: " << yes_no(r.triangle_free) << "  tree: " << yes_no(r.is_tree)
      << "  star center: " << (r.star_center ? lat.label(*r.star_center) : "-") << "\n";
  out << "  degrees: min " << r.min_degree << ", max " << r.max_degree << ", histogram";
  for (const auto& [deg, count] : r.degree_histogram) out << " " << deg << ":" << count;
  out << "\n";
  for (SubmoduleId v : g.vertices()) {
    out << "  v" << v << " " << lat.label(v) << "  size=" << lat.at(v).size() << "  deg=" << g.degree(v)
        << (lat.is_essential(v) ? "  essential" : "") << "\n";
  }
  return out.str();
}

int cmd_analyze(const fs::path& spec, const std::string& which, const std::string& dot_path,
                const std::string& report_path, bool show_lattice) {
  const Analysis a = Analysis::build(load_spec_file(spec), Caps::from_environment());
  const auto& lat = a.lattice();
  std::cout << "module " << a.module().name() << ": order " << a.module().order() << ", " << lat.size()
            << " submodules, " << lat.atoms().size() << " simple, socle " << lat.label(lat.socle()) << "\n";
  if (show_lattice) std::cout << lat.dump();

  std::vector<const EssGraph*> graphs;
  if (which != "n") graphs.push_back(&a.full());
  if (which != "s") graphs.push_back(&a.proper());

  std::string dot;
  nlohmann::ordered_json report;
  report["module"] = a.module().name();
  for (const EssGraph* g : graphs) {
    if (g->empty()) {
      std::cout << (g->kind() == GraphKind::Full ? "S(M) empty (module is simple)\n"
                                                 : "N(M) empty (module is uniform)\n");
    } else {
      std::cout << text_report(*g);
    }
    dot += export_dot(*g);
    report[kind_name(g->kind())] = nlohmann::ordered_json::parse(export_json(*g));
  }
  if (!dot_path.empty()) write_file(dot_path, dot);
  if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
  return 0;
}

int cmd_verify(const fs::path& spec, const std::string& id, bool json) {
  const Analysis a = Analysis::build(load_spec_file(spec), Caps::from_environment());
  const TheoremVerdict v = run_theorem(a, id);
  std::cout << (json ? verdict_json(v) + "\n" : verdict_text(v));
  if (!v.applicable) return kExitInapplicable;
  return v.pass ? 0 : kExitFail;
}

int cmd_lattice(const fs::path& spec) {
  const Analysis a = Analysis::build(load_spec_file(spec), Caps::from_environment());
  std::cout << a.lattice().dump();
  return 0;
}

int cmd_corpus(CorpusSpec spec, bool deep, const std::string& out_path, const std::string& dot_dir, unsigned jobs) {
  if (deep) {
    spec.max_order = std::max<std::uint32_t>(spec.max_order, 64);
    spec.include_elementary_abelian_up_to = std::max<std::uint32_t>(spec.include_elementary_abelian_up_to, 64);
  }
  const auto items = enumerate_corpus(spec);
  const auto results = run_corpus(items, spec.theorem_ids, Caps::from_environment(), jobs);

  const std::string csv = corpus_csv(results);
  if (out_path.empty()) std::cout << csv;
  else write_file(out_path, csv);

  if (!dot_dir.empty()) {
    for (const auto& r : results) {
      if (r.dot_s.empty()) continue;
      const std::string stem = file_stem(r.name);
      write_file(fs::path(dot_dir) / (stem + ".S.dot"), r.dot_s);
      write_file(fs::path(dot_dir) / (stem + ".N.dot"), r.dot_n);
    }
  }

  for (const auto& r : results) {
    if (r.skipped) std::cerr << "skipped " << r.name << ": " << *r.skipped << "\n";
    for (const auto& v : r.verdicts)
      if (v.applicable && !v.pass) std::cerr << "FAIL " << r.name << " " << v.theorem_id << ": " << *v.witness << "\n";
  }
  const CorpusSummary s = summarize(results);
  std::cerr << items.size() << " modules: " << s.passed << " passed, " << s.failed << " failed, " << s.inapplicable
            << " inapplicable, " << s.skipped << " skipped (" << s.cap_exceeded << " over caps)\n";
  if (s.failed) return kExitFail;
  return s.cap_exceeded ? kExitCap : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumess: sum-essential graphs of finite modules"};
  app.require_subcommand(1);

  std::string spec_path, which = "both", dot_path, report_path, theorem_id;
  bool show_lattice = false, json = false;

  auto* analyze = app.add_subcommand("analyze", "Report S(M) and N(M) for a module spec file");
  analyze->add_option("spec", spec_path, "Module spec file")->required();
  analyze->add_option("--graph", which, "Which graph to report")->check(CLI::IsMember({"s", "n", "both"}));
  analyze->add_option("--dot", dot_path, "Write Graphviz output to PATH");
  analyze->add_option("--report", report_path, "Write the JSON report to PATH");
  analyze->add_flag("--lattice", show_lattice, "Also print the submodule lattice");

  auto* verify = app.add_subcommand("verify", "Run one catalog statement on a module");
  verify->add_option("spec", spec_path, "Module spec file")->required();
  verify->add_option("theorem_id", theorem_id, "Catalog id")->required();
  verify->add_flag("--json", json, "Print the verdict as JSON");

  auto* lattice = app.add_subcommand("lattice", "Print the submodule lattice");
  lattice->add_option("spec", spec_path, "Module spec file")->required();

  CorpusSpec corpus_spec;
  std::vector<std::string> extra_specs, checks;
  std::string out_path, dot_dir;
  unsigned jobs = 1;
  bool deep = false;
  auto* corpus = app.add_subcommand("corpus", "Run the catalog over generated abelian groups and extra specs");
  corpus->add_option("--max-order", corpus_spec.max_order, "Largest group order")->capture_default_str();
  corpus->add_option("--elementary-up-to", corpus_spec.include_elementary_abelian_up_to,
                     "Also include Z_p^k with p^k up to this bound")
      ->capture_default_str();
  corpus->add_option("--spec", extra_specs, "Extra module spec files");
  corpus->add_option("--check", checks, "Catalog ids, or 'all'");
  corpus->add_option("--out", out_path, "CSV output path (stdout when omitted)");
  corpus->add_option("--dot-dir", dot_dir, "Write S and N Graphviz files here");
  corpus->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  corpus->add_flag("--deep", deep, "Extend the sweep to order 64");
  corpus->add_flag("!--no-matrix", corpus_spec.include_matrix_instance, "Omit the M2(F2) regular module");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(spec_path, which, dot_path, report_path, show_lattice);
    if (*verify) return cmd_verify(spec_path, theorem_id, json);
    if (*lattice) return cmd_lattice(spec_path);
    if (*corpus) {
      for (const auto& s : extra_specs) corpus_spec.extra_spec_files.emplace_back(s);
      if (!checks.empty()) corpus_spec.theorem_ids = checks;
      if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      return cmd_corpus(corpus_spec, deep, out_path, dot_dir, jobs);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
