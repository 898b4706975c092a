#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

// Malformed input files, element syntax, bad option values. CLI exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that violates a precondition (H not hereditary-saturated,
// non-generating set, sinks where none are allowed, ...). CLI exit code 3.
struct SemanticError : std::runtime_error {
  explicit SemanticError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant, e.g. an emitted certificate that fails its own
// verification. Must never fire. CLI exit code 4.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lpa
