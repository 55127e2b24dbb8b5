#pragma once

// Checkers for the per-diagram identities, the exhaustive verification
// campaign, knot table reproduction and the e(K) arithmetic.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "warpdeg/codecs.hpp"
#include "warpdeg/diagram.hpp"

namespace warpdeg {

// make_report plus the degree-sum bound; a violated bound or equality
// condition raises InternalInconsistency.
[[nodiscard]] Report theorem_check(const Diagram& d);

// For an alternating word: every gap just before an Over symbol attains
// the minimum of the profile. Non-alternating input is an InputError.
[[nodiscard]] bool alternating_minimizer_check(const Diagram& d);

struct PropertyTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;

  friend bool operator==(const PropertyTally&, const PropertyTally&) = default;
};

struct Counterexample {
  std::string property;
  std::string word;  // canonical Gauss text

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::size_t n_max = 0;
  std::uint64_t words_checked = 0;
  std::vector<std::uint64_t> words_per_n;  // index n-1
  std::vector<PropertyTally> properties;
  // First few failures per property, ordered by (n, enumeration rank).
  std::vector<Counterexample> counterexamples;

  [[nodiscard]] bool ok() const { return counterexamples.empty(); }
  [[nodiscard]] const PropertyTally& property(std::string_view name) const;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

// Property names, in report order.
inline constexpr std::string_view kComplementIdentity = "complement identity";
inline constexpr std::string_view kCutSign = "cutting number sign";
inline constexpr std::string_view kCutOdd = "cutting number odd";
inline constexpr std::string_view kCutAntisymmetry = "cutting number antisymmetry";
inline constexpr std::string_view kStepLaw = "step law";
inline constexpr std::string_view kProfileRecount = "profile recount";
inline constexpr std::string_view kSpanBound = "span at least 1";
inline constexpr std::string_view kDegreeSum = "degree sum bound";
inline constexpr std::string_view kEqualityIffAlternating = "equality iff alternating";
inline constexpr std::string_view kAlternatingMinimizer = "alternating minimizer";
inline constexpr std::string_view kMirrorIdentity = "mirror identity";
inline constexpr std::string_view kPairMirrorInvariance = "pair mirror invariance";

// Runs every property over all canonical words with 1..n_max crossings.
// The result does not depend on `jobs`.
[[nodiscard]] VerificationReport lemma_suite(std::size_t n_max,
                                             std::size_t jobs = 1);

// Checks one word into `report`; exposed for tests and random sampling.
void check_word(const Diagram& d, VerificationReport& report);

struct DegreePair {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

[[nodiscard]] DegreePair degree_pair(const Diagram& d);

struct KnotRecord {
  std::string name;
  std::size_t crossings = 0;
  DTCode dt;
  DegreePair expected;
  bool alternating = false;
  bool allow_pair_mismatch = false;
  std::string note;
};

[[nodiscard]] KnotRecord parse_record(std::string_view json_line);
// One record per non-empty line. Errors name the line number.
[[nodiscard]] std::vector<KnotRecord> load_records(
    const std::filesystem::path& path);

struct TableRow {
  KnotRecord record;
  DegreePair computed;
  bool computed_alternating = false;
  bool pair_match = false;
  // d + d' = c - 1 for alternating rows, <= c - 2 otherwise, and the word's
  // alternation agrees with the record.
  bool sum_ok = false;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::size_t matched = 0;
  std::size_t flagged_mismatches = 0;
  std::size_t unexplained_mismatches = 0;
  std::size_t sum_failures = 0;

  [[nodiscard]] bool ok() const {
    return unexplained_mismatches == 0 && sum_failures == 0;
  }
};

[[nodiscard]] TableResult reproduce_table(const std::vector<KnotRecord>& records);
[[nodiscard]] std::string format_table(const TableResult& result);

// min over the list of d(D) + d(-D). All diagrams must share a crossing
// count.
[[nodiscard]] std::size_t e_upper_bound(const std::vector<Diagram>& diagrams);

struct TorusE {
  std::size_t e = 0;
  std::size_t gap = 0;  // c - e

  friend bool operator==(const TorusE&, const TorusE&) = default;
};

// e = (p-1)(q-1), gap = p-1; checked against the standard diagram.
[[nodiscard]] TorusE e_torus(std::uint32_t p, std::uint32_t q);

}  // namespace warpdeg
