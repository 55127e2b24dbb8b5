#include "warpdeg/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "warpdeg/error.hpp"

namespace warpdeg {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void require_crossings(const Diagram& d, const char* op) {
  if (d.crossing_count() == 0) {
    throw DegenerateInputError(std::string(op) +
                               " needs a diagram with at least one crossing");
  }
}

void require_gap(const Diagram& d, BasePoint a) {
  if (a.gap >= d.length()) {
    throw InputError("base point gap " + std::to_string(a.gap) +
                     " out of range for a word of length " +
                     std::to_string(d.length()));
  }
}

void require_crossing_id(const Diagram& d, CrossingId p) {
  if (p == 0 || p > d.crossing_count()) {
    throw InputError("unknown crossing " + std::to_string(p));
  }
}

// Distance walked from gap `gap` to reach symbol position `pos`.
std::size_t walk_distance(std::size_t pos, std::size_t gap, std::size_t n) {
  return pos >= gap ? pos - gap : pos + n - gap;
}

}  // namespace

Diagram::Diagram(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() % 2 != 0) {
    throw InputError("Gauss word has odd length " +
                     std::to_string(symbols_.size()));
  }
  const std::size_t c = symbols_.size() / 2;
  over_pos_.assign(c, kUnset);
  under_pos_.assign(c, kUnset);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto [p, pass] = symbols_[i];
    if (p == 0 || p > c) {
      throw InputError("crossing id " + std::to_string(p) +
                       " outside 1.." + std::to_string(c));
    }
    auto& slot = pass == Pass::Over ? over_pos_[p - 1] : under_pos_[p - 1];
    if (slot != kUnset) {
      throw InputError("crossing " + std::to_string(p) + " has two " +
                       (pass == Pass::Over ? "Over" : "Under") + " passes");
    }
    slot = i;
  }
  // Length 2c with no duplicate (id, pass) pairs forces every slot filled.
  assert(std::ranges::none_of(over_pos_, [](auto v) { return v == kUnset; }));
}

std::size_t WarpProfile::min() const {
  return values.empty() ? 0 : *std::ranges::min_element(values);
}

std::size_t WarpProfile::max() const {
  return values.empty() ? 0 : *std::ranges::max_element(values);
}

std::size_t crossing_count(const Diagram& d) { return d.crossing_count(); }

Diagram reverse(const Diagram& d) {
  std::vector<Symbol> out(d.symbols().rbegin(), d.symbols().rend());
  return Diagram(std::move(out));
}

Diagram mirror(const Diagram& d) {
  std::vector<Symbol> out(d.symbols().begin(), d.symbols().end());
  for (auto& s : out) s.pass = !s.pass;
  return Diagram(std::move(out));
}

Diagram canonicalize(const Diagram& d) {
  std::vector<CrossingId> rename(d.crossing_count() + 1, 0);
  CrossingId next = 1;
  std::vector<Symbol> out(d.symbols().begin(), d.symbols().end());
  for (auto& s : out) {
    if (rename[s.crossing] == 0) rename[s.crossing] = next++;
    s.crossing = rename[s.crossing];
  }
  return Diagram(std::move(out));
}

bool is_canonical(const Diagram& d) {
  CrossingId seen = 0;
  for (const auto& s : d.symbols()) {
    if (s.crossing > seen + 1) return false;
    seen = std::max(seen, s.crossing);
  }
  return true;
}

std::size_t reversed_gap(const Diagram& d, std::size_t gap) {
  const std::size_t n = d.length();
  return n == 0 ? 0 : (n - gap) % n;
}

bool is_warping(const Diagram& d, BasePoint a, CrossingId p) {
  const std::size_t n = d.length();
  return walk_distance(d.under_position(p), a.gap, n) <
         walk_distance(d.over_position(p), a.gap, n);
}

std::size_t warping_degree_at(const Diagram& d, BasePoint a) {
  if (d.empty()) {
    if (a.gap != 0) require_gap(d, a);
    return 0;
  }
  require_gap(d, a);
  std::size_t count = 0;
  for (CrossingId p = 1; p <= d.crossing_count(); ++p) {
    if (is_warping(d, a, p)) ++count;
  }
  return count;
}

WarpProfile warping_profile(const Diagram& d) {
  require_crossings(d, "warping_profile");
  const std::size_t n = d.length();
  WarpProfile profile;
  profile.values.resize(n);
  // Moving the base point forward past an Over symbol makes that crossing
  // warping (+1); past an Under symbol makes it non-warping (-1).
  std::size_t value = warping_degree_at(d, BasePoint{0});
  for (std::size_t g = 0; g < n; ++g) {
    profile.values[g] = value;
    value = d[g].pass == Pass::Over ? value + 1 : value - 1;
  }
#ifndef NDEBUG
  for (std::size_t g = 0; g < n; ++g) {
    if (profile.values[g] != warping_degree_at(d, BasePoint{g})) {
      throw InternalInconsistency("warping profile disagrees with a direct "
                                  "count at gap " + std::to_string(g));
    }
  }
#endif
  return profile;
}

std::size_t warping_degree(const Diagram& d) {
  if (d.empty()) return 0;
  return warping_profile(d).min();
}

std::size_t span(const Diagram& d) {
  require_crossings(d, "span");
  const auto profile = warping_profile(d);
  return profile.max() - profile.min();
}

bool is_alternating(const Diagram& d) {
  const std::size_t n = d.length();
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].pass == d[(i + 1) % n].pass) return false;
  }
  return true;
}

ArcLabels arc_labels(const Diagram& d, BasePoint a) {
  require_crossings(d, "arc_labels");
  require_gap(d, a);
  const std::size_t n = d.length();
  ArcLabels labels;
  labels.arc_of_symbol.resize(n);
  labels.crossings.resize(d.crossing_count());
  std::size_t arc = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t pos = (a.gap + k) % n;
    const Symbol& s = d[pos];
    labels.arc_of_symbol[pos] = arc;
    auto& triple = labels.crossings[s.crossing - 1];
    if (s.pass == Pass::Over) {
      triple.over = arc;
    } else {
      triple.under_in = arc;
      triple.under_out = ++arc;
    }
  }
  return labels;
}

std::int64_t cutting_number(const ArcLabels& labels, CrossingId p) {
  if (p == 0 || p > labels.crossings.size()) {
    throw InputError("unknown crossing " + std::to_string(p));
  }
  const auto& t = labels.crossings[p - 1];
  return 2 * static_cast<std::int64_t>(t.over) -
         static_cast<std::int64_t>(t.under_in) -
         static_cast<std::int64_t>(t.under_out);
}

std::int64_t cutting_number(const Diagram& d, BasePoint a, CrossingId p) {
  require_crossing_id(d, p);
  return cutting_number(arc_labels(d, a), p);
}

}  // namespace warpdeg
