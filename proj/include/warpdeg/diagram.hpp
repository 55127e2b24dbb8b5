#pragma once

// Oriented knot diagrams as cyclic Gauss words, and the per-diagram
// quantities built on them: warping degrees, warping profiles, arc labels
// and cutting numbers.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace warpdeg {

using CrossingId = std::uint32_t;

enum class Pass : std::uint8_t { Over, Under };

constexpr Pass operator!(Pass p) noexcept {
  return p == Pass::Over ? Pass::Under : Pass::Over;
}

struct Symbol {
  CrossingId crossing = 0;
  Pass pass = Pass::Over;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// A base point, identified by the gap it sits in. Gap g lies immediately
// before symbol g (0-based), so a walk from gap g meets symbols
// g, g+1, ..., 2c-1, 0, ..., g-1 in that order.
struct BasePoint {
  std::size_t gap = 0;
};

// Immutable oriented knot diagram.
//
// The word has length 2c and every crossing id in 1..c occurs exactly
// twice, once as Over and once as Under. c = 0 is the crossingless word.
class Diagram {
 public:
  Diagram() = default;

  // Validates the Gauss word invariants; throws InputError on violation.
  explicit Diagram(std::vector<Symbol> symbols);

  [[nodiscard]] std::size_t crossing_count() const { return over_pos_.size(); }
  [[nodiscard]] std::size_t length() const { return symbols_.size(); }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }

  [[nodiscard]] std::span<const Symbol> symbols() const { return symbols_; }
  [[nodiscard]] const Symbol& operator[](std::size_t i) const {
    return symbols_[i];
  }

  // Position of the Over / Under symbol of crossing p (1-based id).
  [[nodiscard]] std::size_t over_position(CrossingId p) const {
    return over_pos_[p - 1];
  }
  [[nodiscard]] std::size_t under_position(CrossingId p) const {
    return under_pos_[p - 1];
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> over_pos_;
  std::vector<std::size_t> under_pos_;
};

// Per-gap warping degrees; values[g] = d(D at gap g).
struct WarpProfile {
  std::vector<std::size_t> values;

  [[nodiscard]] std::size_t min() const;
  [[nodiscard]] std::size_t max() const;

  friend bool operator==(const WarpProfile&, const WarpProfile&) = default;
};

// Arc indices of D cut at the base point and at every under-crossing.
// Arcs are numbered 1..c+1 along the orientation, starting at the base
// point.
struct ArcLabels {
  struct Triple {
    std::size_t over = 0;         // alpha: arc carrying the over-pass
    std::size_t under_in = 0;     // beta: arc ending at the under-pass
    std::size_t under_out = 0;    // gamma: arc starting after it
  };

  // Indexed by absolute symbol position. An Under symbol is assigned the
  // arc that ends at it.
  std::vector<std::size_t> arc_of_symbol;
  // Indexed by crossing id - 1.
  std::vector<Triple> crossings;
};

[[nodiscard]] std::size_t crossing_count(const Diagram& d);

// -D: the same curve traversed backwards. Gap g of D corresponds to gap
// (2c - g) mod 2c of the result.
[[nodiscard]] Diagram reverse(const Diagram& d);

// D*: every crossing switched.
[[nodiscard]] Diagram mirror(const Diagram& d);

// Relabels crossings 1..c by first occurrence from gap 0.
[[nodiscard]] Diagram canonicalize(const Diagram& d);
[[nodiscard]] bool is_canonical(const Diagram& d);

// Gap of -D that represents the same base point as gap g of D.
[[nodiscard]] std::size_t reversed_gap(const Diagram& d, std::size_t gap);

// True when walking from `a` we meet crossing p first at its under-pass.
[[nodiscard]] bool is_warping(const Diagram& d, BasePoint a, CrossingId p);

// Number of warping crossing points of D_a, counted directly.
[[nodiscard]] std::size_t warping_degree_at(const Diagram& d, BasePoint a);

// d(D_a) for every gap, propagated from gap 0 by the base-point step law.
[[nodiscard]] WarpProfile warping_profile(const Diagram& d);

// d(D): minimum over base points. 0 for the empty word.
[[nodiscard]] std::size_t warping_degree(const Diagram& d);

// max_a d(D_a) - min_a d(D_a).
[[nodiscard]] std::size_t span(const Diagram& d);

[[nodiscard]] bool is_alternating(const Diagram& d);

[[nodiscard]] ArcLabels arc_labels(const Diagram& d, BasePoint a);

// cut(p) = 2*alpha - beta - gamma. Odd; positive iff p is warping.
[[nodiscard]] std::int64_t cutting_number(const Diagram& d, BasePoint a,
                                          CrossingId p);
[[nodiscard]] std::int64_t cutting_number(const ArcLabels& labels,
                                          CrossingId p);

}  // namespace warpdeg
