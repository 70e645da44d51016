#include "sumess/spec_file.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "sumess/error.hpp"

namespace sumess {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Net bracket depth, ignoring brackets inside JSON strings.
int bracket_balance(std::string_view s) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '[' || c == '{') ++depth;
    else if (c == ']' || c == '}') --depth;
  }
  return depth;
}

struct Entry {
  std::size_t line = 0;
  std::string value;
};

std::string text_value(const Entry& e, const char* key) {
  const std::string_view v = trim(e.value);
  if (v.empty()) throw SpecParseError(e.line, std::string(key) + " must not be empty");
  if (v.front() != '"') return std::string(v);
  try {
    const auto j = nlohmann::json::parse(v);
    if (!j.is_string()) throw SpecParseError(e.line, std::string(key) + " must be text");
    return j.get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw SpecParseError(e.line, std::string(key) + ": " + ex.what());
  }
}

nlohmann::json json_value(const Entry& e, const char* key) {
  try {
    return nlohmann::json::parse(e.value);
  } catch (const nlohmann::json::exception& ex) {
    throw SpecParseError(e.line, std::string(key) + ": malformed value (" + ex.what() + ")");
  }
}

std::int64_t integer_of(const nlohmann::json& j, std::size_t line, const std::string& what) {
  if (!j.is_number_integer()) throw SpecParseError(line, what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

ModulePresentation parse_spec(std::string_view text) {
  static const char* const kKeys[] = {"name", "moduli", "action.kind", "action.generators"};

  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SpecParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    bool known = false;
    for (const char* k : kKeys) known |= key == k;
    if (!known) throw SpecParseError(line_no, "unknown key '" + key + "'");
    if (entries.count(key)) throw SpecParseError(line_no, "duplicate key '" + key + "'");

    Entry entry{line_no, std::string(trim(line.substr(eq + 1)))};
    int depth = bracket_balance(entry.value);
    while (depth > 0) {
      if (!std::getline(in, raw)) throw SpecParseError(entry.line, "unterminated value for '" + key + "'");
      ++line_no;
      entry.value += '\n';
      entry.value += raw;
      depth = bracket_balance(entry.value);
    }
    if (depth < 0) throw SpecParseError(line_no, "unbalanced closing bracket in '" + key + "'");
    entries.emplace(key, std::move(entry));
  }

  for (const char* required : {"name", "moduli", "action.kind"})
    if (!entries.count(required)) throw SpecParseError(0, std::string("missing required key '") + required + "'");

  ModulePresentation p;
  p.name = text_value(entries["name"], "name");

  const Entry& moduli = entries["moduli"];
  const auto mj = json_value(moduli, "moduli");
  if (!mj.is_array() || mj.empty()) throw SpecParseError(moduli.line, "moduli must be a non-empty integer array");
  for (const auto& d : mj) {
    const auto v = integer_of(d, moduli.line, "each modulus");
    if (v < 2) throw SpecParseError(moduli.line, "each modulus must be >= 2, got " + std::to_string(v));
    if (v > 0xFFFFFFFFLL) throw SpecParseError(moduli.line, "modulus too large: " + std::to_string(v));
    p.moduli.push_back(static_cast<std::uint32_t>(v));
  }

  const Entry& kind = entries["action.kind"];
  const std::string kind_value = text_value(kind, "action.kind");
  const auto gens_it = entries.find("action.generators");
  if (kind_value == "integers") {
    if (gens_it != entries.end())
      throw SpecParseError(gens_it->second.line, "action.generators is only allowed when action.kind = generated");
    p.action = IntegerAction{};
  } else if (kind_value == "generated") {
    if (gens_it == entries.end()) throw SpecParseError(kind.line, "action.kind = generated requires action.generators");
    const Entry& ge = gens_it->second;
    const auto gj = json_value(ge, "action.generators");
    if (!gj.is_array()) throw SpecParseError(ge.line, "action.generators must be an array of matrices");
    GeneratedAction action;
    for (std::size_t g = 0; g < gj.size(); ++g) {
      const std::string what = "generator " + std::to_string(g);
      if (!gj[g].is_array()) throw SpecParseError(ge.line, what + " must be a matrix (array of rows)");
      GeneratedAction::Matrix mat;
      for (const auto& row : gj[g]) {
        if (!row.is_array()) throw SpecParseError(ge.line, what + ": each row must be an array");
        std::vector<std::int64_t> r;
        for (const auto& v : row) r.push_back(integer_of(v, ge.line, what + " entries"));
        mat.push_back(std::move(r));
      }
      action.generators.push_back(std::move(mat));
    }
    p.action = std::move(action);
  } else {
    throw SpecParseError(kind.line, "action.kind must be 'integers' or 'generated', got '" + kind_value + "'");
  }

  try {
    validate(p);
  } catch (const IllFormedGenerator& ex) {
    throw SpecParseError(gens_it->second.line, ex.what());
  } catch (const InvalidModuli& ex) {
    throw SpecParseError(moduli.line, ex.what());
  }
  return p;
}

ModulePresentation load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError(0, "cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string format_spec(const ModulePresentation& p) {
  std::ostringstream out;
  out << "name = " << nlohmann::json(p.name).dump() << "\n";
  out << "moduli = " << nlohmann::json(p.moduli).dump() << "\n";
  if (const auto* gen = std::get_if<GeneratedAction>(&p.action)) {
    out << "action.kind = generated\n";
    out << "action.generators = " << nlohmann::json(gen->generators).dump() << "\n";
  } else {
    out << "action.kind = integers\n";
  }
  return out.str();
}

}  // namespace sumess
