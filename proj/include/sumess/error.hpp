#pragma once

#include <stdexcept>
#include <string>

namespace sumess {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Presentation problems.
class InvalidModuli : public Error {
 public:
  using Error::Error;
};

class IllFormedGenerator : public Error {
 public:
  using Error::Error;
};

/// Base for every resource-contract violation; the CLI maps it to exit code 3.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ElementCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class ActionRingCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class HomSearchCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class LatticeCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class CliqueSearchCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class UnknownTheoremId : public Error {
 public:
  using Error::Error;
};

/// Module spec file rejected; `line()` is 1-based, 0 when not tied to a line.
class SpecParseError : public Error {
 public:
  SpecParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sumess
