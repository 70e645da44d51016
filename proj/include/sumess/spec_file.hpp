#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sumess/module.hpp"

namespace sumess {

// Module spec files are line-oriented `key = value` documents:
//
//   # Z8 + Z2 as a Z-module
//   name = Z8+Z2
//   moduli = [8, 2]
//   action.kind = integers
//
// Keys: name (text), moduli (JSON integer array), action.kind
// ("integers" | "generated"), action.generators (JSON array of k x k integer
// matrices; required iff kind is "generated", forbidden otherwise).
// Blank lines and lines starting with '#' are ignored. A value whose
// brackets are unbalanced continues on the following lines. Text values may
// be bare or JSON-quoted.
//
// Every rejection is a SpecParseError carrying the offending line.

ModulePresentation parse_spec(std::string_view text);
ModulePresentation load_spec_file(const std::filesystem::path& path);

/// Inverse of parse_spec up to whitespace and comments.
std::string format_spec(const ModulePresentation& presentation);

}  // namespace sumess
