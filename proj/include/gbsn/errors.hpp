#pragma once

#include <stdexcept>
#include <string>

namespace gbsn {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document (bad JSON, wrong types, missing fields).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Structurally valid document that violates a semantic requirement
// (disconnected graph, singular inclusion matrix, duplicate ids, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg)
      : Error("validation error: " + msg) {}
};

struct DimError : Error {
  explicit DimError(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct RankError : Error {
  explicit RankError(const std::string& msg) : Error("rank error: " + msg) {}
};

struct SingularError : Error {
  explicit SingularError(const std::string& msg) : Error("singular matrix: " + msg) {}
};

struct ContainmentError : Error {
  explicit ContainmentError(const std::string& msg)
      : Error("containment error: " + msg) {}
};

struct CollapseError : Error {
  explicit CollapseError(const std::string& msg) : Error("collapse error: " + msg) {}
};

// Raised when a bounded enumeration (e.g. a tree ball) exceeds its cap.
struct CapExceeded : Error {
  CapExceeded(const std::string& msg, long long partial)
      : Error("cap exceeded: " + msg), partial_count(partial) {}
  long long partial_count;
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& msg)
      : Error("unknown generator: " + msg) {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& msg) : Error("not a group: " + msg) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& msg) : Error("not applicable: " + msg) {}
};

// Signals a bug: an internal consistency invariant failed after analysis.
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg)
      : Error("internal inconsistency: " + msg) {}
};

}  // namespace gbsn
