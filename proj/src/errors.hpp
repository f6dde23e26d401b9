#pragma once

#include <stdexcept>
#include <string>

namespace otd {

// Error categories. The numeric values of the first three groups line up with
// the CLI exit codes and the C API status codes.
enum class Errc {
  invalid_input = 1,    // malformed data, bad parameters, broken preconditions
  validation = 2,       // a decomposition/arrangement fails its axioms
  cap_exceeded = 3,     // instance larger than the configured cap
  oracle_violation = 4, // a child oracle broke its contract
  exhausted = 5,        // a child oracle under-delivered
  not_nesting = 6,      // sequence is neither h- nor v-nesting
  empty_intersection = 7,
  corner_contained = 8,
  internal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::validation: return "validation";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::oracle_violation: return "oracle-violation";
    case Errc::exhausted: return "exhausted";
    case Errc::not_nesting: return "not-nesting";
    case Errc::empty_intersection: return "empty-intersection";
    case Errc::corner_contained: return "corner-contained";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace otd
