#pragma once

#include <stdexcept>
#include <string>

namespace skewenergy {

/// Failure categories. The CLI maps each to its own exit status.
enum class errc {
  invalid_graph = 1,   // loop, digon, duplicate pair, bad index
  parse_error,         // malformed text input (carries a line number)
  precondition,        // argument outside an operation's window
  not_converged,       // numerical routine failed to converge
  internal,            // exactness violation: a bug, not bad input
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace skewenergy
