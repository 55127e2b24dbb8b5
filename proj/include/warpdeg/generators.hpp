#pragma once

// Programmatic diagrams: braid closures, torus knots, and the stream of all
// canonical abstract Gauss words used by the exhaustive checks.

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "warpdeg/diagram.hpp"

namespace warpdeg {

// Letter +i is sigma_i, -i its inverse. 1 <= |i| <= strands-1.
struct BraidWord {
  std::size_t strands = 2;
  std::vector<int> letters;
};

// Letters "1 2 -1" or "1,2,-1".
[[nodiscard]] BraidWord parse_braid(std::string_view text, std::size_t strands);

// Traversal starts at the top of strand 1. In sigma_i the strand moving
// from position i to i+1 passes over; sigma_i^-1 swaps that.
[[nodiscard]] Diagram braid_closure(const BraidWord& w);

// Closure of (sigma_1 ... sigma_{p-1})^q. p = 1 gives the empty word.
[[nodiscard]] Diagram torus_diagram(std::uint32_t p, std::uint32_t q);

// Throws InputError unless 0 < p < q and gcd(p, q) = 1.
void require_torus_pair(std::uint32_t p, std::uint32_t q);

inline constexpr std::size_t kDefaultEnumerationCap = 6;

// Number of canonical words with n crossings: (2n)! / n!.
[[nodiscard]] std::uint64_t canonical_word_count(std::size_t n);

// Streams every canonical n-crossing word once, in lexicographic order of
// (crossing, pass) with Over < Under. Worker k of `workers` gets the words
// whose rank is k mod workers. n above `cap` is refused.
void for_each_word(std::size_t n, const std::function<void(const Diagram&)>& fn,
                   std::size_t worker = 0, std::size_t workers = 1,
                   std::size_t cap = kDefaultEnumerationCap);

[[nodiscard]] std::vector<Diagram> enumerate_words(
    std::size_t n, std::size_t cap = kDefaultEnumerationCap);

// Uniform shuffle of O1 U1 ... On Un, canonicalized. Same seed, same word
// on every platform.
[[nodiscard]] Diagram random_word(std::size_t n, std::uint64_t seed);

}  // namespace warpdeg
