// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "warpdeg/analysis.hpp"
#include "warpdeg/codecs.hpp"
#include "warpdeg/generators.hpp"

using namespace warpdeg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " " << title
            << ": " << detail << std::endl;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

void table_reproduction(const std::string& data) {
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"table", "--data", data, "--check"}, out, err);
  const auto result = reproduce_table(load_records(data));

  const std::map<std::string, DegreePair> spot = {
      {"3_1", {1, 1}}, {"4_1", {1, 2}},  {"7_7", {2, 4}},
      {"8_18", {2, 5}}, {"8_19", {3, 3}}, {"8_20", {2, 3}},
      {"8_21", {2, 2}}, {"9_47", {2, 5}}, {"9_48", {2, 3}}};
  std::size_t spot_ok = 0;
  bool sums = true;
  for (const auto& row : result.rows) {
    const std::size_t c = row.record.crossings;
    const std::size_t s = row.computed.lo + row.computed.hi;
    if (row.record.alternating ? s + 1 != c : s + 2 > c) sums = false;
    auto it = spot.find(row.record.name);
    if (it != spot.end() && row.computed == it->second && !row.record.allow_pair_mismatch)
      ++spot_ok;
  }
  const double dt = seconds_since(t0);
  const bool ok = code == 0 && result.rows.size() == 84 && result.ok() &&
                  spot_ok == spot.size() && sums && dt < 1.0;
  report(1, "table reproduction", ok,
         std::to_string(result.matched) + "/" + std::to_string(result.rows.size()) +
             " rows match, " + std::to_string(result.flagged_mismatches) +
             " flagged, spot rows " + std::to_string(spot_ok) + "/" +
             std::to_string(spot.size()) + ", sum identities " +
             (sums ? "hold" : "FAIL") + ", " + fmt(dt));
}

void torus_formulas() {
  const auto t0 = Clock::now();
  std::size_t pairs = 0, good = 0;
  for (std::uint32_t p = 2; p <= 8; ++p) {
    for (std::uint32_t q = p + 1; q <= 8; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const Diagram d = torus_diagram(p, q);
      const std::size_t want = (p - 1) * (q - 1) / 2;
      const std::size_t a = warping_degree(d), b = warping_degree(reverse(d));
      if (d.crossing_count() == (p - 1) * q && a == want && b == want &&
          d.crossing_count() - a - b == p - 1)
        ++good;
    }
  }
  const double dt = seconds_since(t0);
  report(2, "torus formulas", good == pairs && dt < 1.0,
         std::to_string(good) + "/" + std::to_string(pairs) + " coprime pairs, " + fmt(dt));
}

void exhaustive(std::size_t jobs) {
  auto t0 = Clock::now();
  const VerificationReport single = lemma_suite(6, 1);
  const double t_single = seconds_since(t0);
  t0 = Clock::now();
  const VerificationReport parallel = lemma_suite(6, jobs);
  const double t_parallel = seconds_since(t0);

  std::uint64_t expected_words = 0;
  for (std::size_t n = 1; n <= 6; ++n) expected_words += canonical_word_count(n);

  bool core_ok = single.words_checked == expected_words &&
                 single.words_per_n.back() == 665280;
  std::string failed;
  for (auto name : {kComplementIdentity, kCutSign, kCutOdd, kCutAntisymmetry, kStepLaw,
                    kProfileRecount, kSpanBound, kDegreeSum, kEqualityIffAlternating}) {
    const auto& p = single.property(name);
    if (p.failed != 0 || p.checked == 0) {
      core_ok = false;
      failed += " " + std::string(name);
    }
  }
  const bool same = single == parallel;
  report(3, "exhaustive lemma suite", core_ok && same && t_single < 600 && t_parallel < 120,
         std::to_string(single.words_checked) + " words, " +
             std::to_string(single.property(kCutSign).checked) +
             " gap-crossing checks, counterexamples " +
             std::to_string(single.counterexamples.size()) +
             (failed.empty() ? "" : " (failed:" + failed + ")") + ", 1 job " +
             fmt(t_single) + ", " + std::to_string(jobs) + " jobs " + fmt(t_parallel) +
             (same ? ", identical reports" : ", REPORTS DIFFER"));

  // Alternating canonical words: pick OUOU... or UOUO..., then match the
  // n over slots to the n under slots, so 2 * n! per n.
  std::uint64_t alternating_words = 0, factorial = 1;
  for (std::uint64_t n = 1; n <= 6; ++n) alternating_words += 2 * (factorial *= n);
  const auto& lm = single.property(kAlternatingMinimizer);
  report(4, "alternating minimizer", lm.failed == 0 && lm.checked == alternating_words,
         std::to_string(lm.checked) + "/" + std::to_string(alternating_words) +
             " alternating words, " +
             std::to_string(lm.failed) + " counterexamples");

  const auto& mi = single.property(kMirrorIdentity);
  report(5, "mirror identity", mi.failed == 0 && mi.checked == expected_words,
         std::to_string(mi.checked) + " words, " + std::to_string(mi.failed) +
             " counterexamples");
}

void e_arithmetic() {
  std::size_t pairs = 0, good = 0;
  for (std::uint32_t p = 2; p <= 10; ++p) {
    for (std::uint32_t q = p + 1; q <= 10; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const TorusE e = e_torus(p, q);
      if (e.e == (p - 1) * (q - 1) && e.gap == p - 1 &&
          e_upper_bound({torus_diagram(p, q)}) == e.e)
        ++good;
    }
  }
  std::size_t witnesses = 0;
  for (std::uint32_t n = 1; n <= 5; ++n) {
    if (e_torus(n + 1, n + 2).gap == n) ++witnesses;
  }
  report(6, "e(K) arithmetic", good == pairs && witnesses == 5,
         std::to_string(good) + "/" + std::to_string(pairs) + " coprime pairs, " +
             std::to_string(witnesses) + "/5 gap witnesses");
}

void round_trips(const std::string& data) {
  std::size_t gauss_ok = 0;
  const std::size_t draws = 1000;
  for (std::uint64_t seed = 0; seed < draws; ++seed) {
    const Diagram d = random_word(1 + seed % 8, 0x5eed0000 + seed);
    if (parse_gauss(format_gauss(d)) == d && format_gauss(parse_gauss(format_gauss(d))) == format_gauss(d))
      ++gauss_ok;
  }
  const auto records = load_records(data);
  std::size_t dt_ok = 0;
  for (const auto& r : records) {
    const Diagram d = dt_to_diagram(r.dt);
    if (diagram_to_dt(d) == r.dt && parse_dt(format_dt(r.dt)) == r.dt &&
        dt_to_diagram(diagram_to_dt(d)) == d)
      ++dt_ok;
  }
  report(7, "codec round trips", gauss_ok == draws && dt_ok == records.size(),
         "Gauss " + std::to_string(gauss_ok) + "/" + std::to_string(draws) +
             " random words, DT " + std::to_string(dt_ok) + "/" +
             std::to_string(records.size()) + " table entries");
}

}  // namespace

int main(int argc, char** argv) {
  std::string data = "data/knots.jsonl";
  std::size_t jobs = 8;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--data") data = argv[i + 1];
    if (flag == "--jobs") jobs = std::stoul(argv[i + 1]);
  }
  try {
    table_reproduction(data);
    torus_formulas();
    exhaustive(jobs);
    e_arithmetic();
    round_trips(data);
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria pass") << std::endl;
  return failures ? 1 : 0;
}
