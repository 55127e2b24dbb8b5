#pragma once

// Text notations for diagrams (Gauss words, DT codes) and the JSON report.

#include <string>
#include <string_view>
#include <vector>

#include "warpdeg/diagram.hpp"

namespace warpdeg {

// Dowker-Thistlethwaite code: entry i is the even label paired with the
// odd visit 2i+1. A positive entry means the odd visit is the Over pass.
struct DTCode {
  std::vector<int> entries;

  friend bool operator==(const DTCode&, const DTCode&) = default;
};

// Computed bundle for a diagram with at least one crossing.
struct Report {
  std::size_t crossings = 0;
  std::size_t d = 0;
  std::size_t d_reversed = 0;
  std::size_t span = 0;
  bool alternating = false;
  // crossings - d - d_reversed - 1; nonnegative by the main inequality.
  long long slack = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

// Parses "O1U2O3U1O2U3", "o1 u1" or "O1+, U2-, ...". Crossing ids may be
// any positive integers; the result is canonicalized. Trailing +/- signs
// are accepted and dropped.
[[nodiscard]] Diagram parse_gauss(std::string_view text);

// Compact token form, e.g. "O1U2O3U1O2U3". Empty word gives "".
[[nodiscard]] std::string format_gauss(const Diagram& d);

// Whitespace or comma separated signed even integers; an enclosing pair
// of brackets is tolerated.
[[nodiscard]] DTCode parse_dt(std::string_view text);
[[nodiscard]] std::string format_dt(const DTCode& code);

// Validates the code and builds the canonical diagram it encodes.
[[nodiscard]] Diagram dt_to_diagram(const DTCode& code);

// Labels visits 1..2c starting at `a`. Throws InputError when some
// crossing is visited twice at the same parity, which cannot happen for a
// planar diagram but can for an abstract word.
[[nodiscard]] DTCode diagram_to_dt(const Diagram& d, BasePoint a = {});

[[nodiscard]] Report make_report(const Diagram& d);

// Keys in fixed order: crossings, d, d_reversed, span, alternating, slack.
[[nodiscard]] std::string emit_report(const Report& report);

}  // namespace warpdeg
