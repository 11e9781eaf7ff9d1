#pragma once

#include <stdexcept>
#include <string>

namespace zm {

enum class errc {
  invalid_argument,   // malformed value (zero denominator, zero Gaussian integer, ...)
  parse_error,        // syntax error in a textual input
  out_of_domain,      // argument outside the mathematical domain of the operation
  budget_exceeded,    // node / memory / factoring budget exhausted
  no_feasible_point,  // search ended without a feasible pair
  capacity,           // value does not fit the result type
  unsupported,        // valid request outside the implemented range
  internal,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace zm
