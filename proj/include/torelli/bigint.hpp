#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace torelli {

using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a requested computation would exceed the configured memory or
// length budgets. The CLI turns this into a usage error instead of thrashing.
struct budget_error : error {
  using error::error;
};

// Division rounding toward minus infinity, so that a - floor_div(a,b)*b lies
// in [0, |b|). Used by the Hermite reduction steps.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::string to_string(const Int& v) { return v.str(); }

} // namespace torelli
