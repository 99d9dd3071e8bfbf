#pragma once

#include <stdexcept>
#include <string>

namespace evenup {

// Exhaustive enumeration would visit more words than the configured budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed quantity violated a structural guarantee (non-integer or
// negative count coefficient, non-vanishing numerator before an x-shift).
struct integrity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// b-file text could not be parsed.
struct bfile_error : std::runtime_error {
  bfile_error(const std::string& what, long line_number)
      : std::runtime_error(what), line(line_number) {}
  long line;
};

// A sequence could not be retrieved (no cache entry and network
// unavailable/denied, or the HTTP request failed).
struct fetch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace evenup
