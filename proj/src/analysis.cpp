#include "warpdeg/analysis.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "warpdeg/error.hpp"
#include "warpdeg/generators.hpp"

namespace warpdeg {

Report theorem_check(const Diagram& d) {
  const Report r = make_report(d);
  if (r.slack < 0) {
    throw InternalInconsistency("d + d' + 1 exceeds c for " + format_gauss(d));
  }
  if ((r.slack == 0) != r.alternating) {
    throw InternalInconsistency("equality d + d' + 1 = c disagrees with "
                                "alternation for " + format_gauss(d));
  }
  return r;
}

bool alternating_minimizer_check(const Diagram& d) {
  if (d.empty()) throw DegenerateInputError("alternating_minimizer_check needs a crossing");
  if (!is_alternating(d)) {
    throw InputError("alternating minimizer check needs an alternating word");
  }
  const auto profile = warping_profile(d);
  const std::size_t lo = profile.min();
  for (std::size_t g = 0; g < d.length(); ++g) {
    if (d[g].pass == Pass::Over && profile.values[g] != lo) return false;
  }
  return true;
}

DegreePair degree_pair(const Diagram& d) {
  const std::size_t a = warping_degree(d);
  const std::size_t b = warping_degree(reverse(d));
  return {std::min(a, b), std::max(a, b)};
}

namespace {

constexpr std::array<std::string_view, 12> kProperties = {
    kComplementIdentity, kCutSign,      kCutOdd,
    kCutAntisymmetry,    kStepLaw,      kProfileRecount,
    kSpanBound,          kDegreeSum,    kEqualityIffAlternating,
    kAlternatingMinimizer, kMirrorIdentity, kPairMirrorInvariance};

enum Prop : std::size_t {
  kPComplement,
  kPCutSign,
  kPCutOdd,
  kPCutAnti,
  kPStep,
  kPRecount,
  kPSpan,
  kPSum,
  kPEquality,
  kPMinimizer,
  kPMirror,
  kPPairMirror,
};

constexpr std::size_t kMaxCounterexamplesPerProperty = 10;

struct Counts {
  std::array<std::uint64_t, kProperties.size()> checked{};
  std::array<std::uint64_t, kProperties.size()> failed{};
};

// Checks every property on one word. Returns a bitmask of the failed ones.
std::uint32_t check_all(const Diagram& d, Counts& counts) {
  std::uint32_t failed = 0;
  auto tally = [&](Prop p, bool ok) {
    ++counts.checked[p];
    if (!ok) {
      ++counts.failed[p];
      failed |= 1u << p;
    }
  };

  const std::size_t c = d.crossing_count();
  const std::size_t n = d.length();
  const Diagram rev = reverse(d);
  const auto profile = warping_profile(d);

  std::vector<std::size_t> direct(n);
  for (std::size_t g = 0; g < n; ++g) {
    direct[g] = warping_degree_at(d, BasePoint{g});
  }

  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t rg = reversed_gap(d, g);
    tally(kPComplement,
          direct[g] + warping_degree_at(rev, BasePoint{rg}) == c);
    tally(kPRecount, profile.values[g] == direct[g]);

    const std::size_t next = (g + 1) % n;
    const long long step = static_cast<long long>(profile.values[next]) -
                           static_cast<long long>(profile.values[g]);
    tally(kPStep, step == (d[g].pass == Pass::Over ? 1 : -1) &&
                      profile.values[g] <= c);

    const auto labels = arc_labels(d, BasePoint{g});
    const auto rlabels = arc_labels(rev, BasePoint{rg});
    for (CrossingId p = 1; p <= c; ++p) {
      const std::int64_t cut = cutting_number(labels, p);
      // Warping status by the first-encounter definition, independent of arcs.
      const bool under_first =
          (d.under_position(p) + n - g) % n < (d.over_position(p) + n - g) % n;
      tally(kPCutSign, (cut > 0) == under_first && cut != 0);
      tally(kPCutOdd, cut % 2 != 0);
      tally(kPCutAnti, cutting_number(rlabels, p) == -cut);
    }
  }

  const std::size_t lo = *std::min_element(direct.begin(), direct.end());
  const std::size_t hi = *std::max_element(direct.begin(), direct.end());
  const bool alt = is_alternating(d);
  tally(kPSpan, hi - lo >= 1 && ((hi - lo == 1) == alt));

  // d(-D) counted directly on the reversed word.
  std::size_t lo_rev = c;
  for (std::size_t g = 0; g < n; ++g) {
    lo_rev = std::min(lo_rev, warping_degree_at(rev, BasePoint{g}));
  }
  tally(kPSum, lo + lo_rev + 1 <= c);
  tally(kPEquality, (lo + lo_rev + 1 == c) == alt);

  if (alt) {
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g) {
      if (d[g].pass == Pass::Over && direct[g] != lo) ok = false;
    }
    tally(kPMinimizer, ok);
  }

  const Diagram mir = mirror(d);
  std::size_t lo_mir = c;
  for (std::size_t g = 0; g < n; ++g) {
    lo_mir = std::min(lo_mir, warping_degree_at(mir, BasePoint{g}));
  }
  tally(kPMirror, lo_mir == lo_rev);

  const DegreePair pair{std::min(lo, lo_rev), std::max(lo, lo_rev)};
  tally(kPPairMirror, degree_pair(mir) == pair);
  return failed;
}

struct Failure {
  std::size_t n;
  std::uint64_t rank;
  std::size_t property;
  std::string word;
};

VerificationReport empty_report(std::size_t n_max) {
  VerificationReport r;
  r.n_max = n_max;
  r.words_per_n.assign(n_max, 0);
  for (auto name : kProperties) r.properties.push_back({std::string(name), 0, 0});
  return r;
}

void add_counts(VerificationReport& r, const Counts& counts) {
  for (std::size_t k = 0; k < kProperties.size(); ++k) {
    r.properties[k].checked += counts.checked[k];
    r.properties[k].failed += counts.failed[k];
  }
}

}  // namespace

const PropertyTally& VerificationReport::property(std::string_view name) const {
  for (const auto& p : properties) {
    if (p.name == name) return p;
  }
  throw InputError("no property named '" + std::string(name) + "'");
}

void check_word(const Diagram& d, VerificationReport& report) {
  if (report.properties.empty()) report = empty_report(report.n_max);
  if (d.empty()) throw DegenerateInputError("check_word needs a crossing");
  Counts counts;
  const std::uint32_t failed = check_all(d, counts);
  add_counts(report, counts);
  ++report.words_checked;
  for (std::size_t k = 0; k < kProperties.size(); ++k) {
    if (failed >> k & 1u) {
      report.counterexamples.push_back({std::string(kProperties[k]),
                                        format_gauss(d)});
    }
  }
}

VerificationReport lemma_suite(std::size_t n_max, std::size_t jobs) {
  if (n_max < 1 || n_max > kDefaultEnumerationCap) {
    throw InputError("max crossings must be in 1.." +
                     std::to_string(kDefaultEnumerationCap) + ", got " +
                     std::to_string(n_max));
  }
  if (jobs < 1) throw InputError("jobs must be at least 1");

  struct WorkerState {
    Counts counts;
    std::vector<std::uint64_t> words;
    std::vector<Failure> failures;
  };
  std::vector<WorkerState> states(jobs);
  for (auto& s : states) s.words.assign(n_max, 0);

  auto work = [&](std::size_t k) {
    WorkerState& s = states[k];
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::uint64_t local = 0;
      for_each_word(
          n,
          [&](const Diagram& d) {
            const std::uint64_t rank = k + jobs * local++;
            const std::uint32_t failed = check_all(d, s.counts);
            for (std::size_t p = 0; p < kProperties.size(); ++p) {
              if (failed >> p & 1u) s.failures.push_back({n, rank, p, format_gauss(d)});
            }
          },
          k, jobs);
      s.words[n - 1] = local;
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t k = 0; k < jobs; ++k) threads.emplace_back(work, k);
    for (auto& t : threads) t.join();
  }

  VerificationReport report = empty_report(n_max);
  std::vector<Failure> failures;
  for (auto& s : states) {
    add_counts(report, s.counts);
    for (std::size_t n = 0; n < n_max; ++n) report.words_per_n[n] += s.words[n];
    std::move(s.failures.begin(), s.failures.end(), std::back_inserter(failures));
  }
  for (auto w : report.words_per_n) report.words_checked += w;

  std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.n, a.rank, a.property) < std::tie(b.n, b.rank, b.property);
  });
  std::array<std::size_t, kProperties.size()> kept{};
  for (auto& f : failures) {
    if (kept[f.property]++ < kMaxCounterexamplesPerProperty) {
      report.counterexamples.push_back({std::string(kProperties[f.property]),
                                        std::move(f.word)});
    }
  }
  return report;
}

KnotRecord parse_record(std::string_view json_line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("record must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    static const std::array<std::string_view, 7> known = {
        "name", "crossings", "dt", "expected", "alternating",
        "allow_pair_mismatch", "note"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InputError("unknown field '" + key + "'");
    }
  }

  KnotRecord r;
  try {
    r.name = j.at("name").get<std::string>();
    r.crossings = j.at("crossings").get<std::size_t>();
    r.dt.entries = j.at("dt").get<std::vector<int>>();
    const auto expected = j.at("expected").get<std::vector<std::size_t>>();
    if (expected.size() != 2) throw InputError("expected must have 2 entries");
    r.expected = {expected[0], expected[1]};
    r.alternating = j.at("alternating").get<bool>();
    r.allow_pair_mismatch = j.value("allow_pair_mismatch", false);
    r.note = j.value("note", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad record field: ") + e.what());
  }

  const std::string who = "record " + r.name + ": ";
  if (r.crossings != r.dt.entries.size()) {
    throw InputError(who + "crossings does not match the DT code length");
  }
  (void)dt_to_diagram(r.dt);
  if (r.expected.lo > r.expected.hi) {
    throw InputError(who + "expected pair must be listed as [min, max]");
  }
  const std::size_t sum = r.expected.lo + r.expected.hi;
  if (r.alternating ? sum + 1 != r.crossings : sum + 2 > r.crossings) {
    throw InputError(who + "expected pair violates the degree sum rule");
  }
  if (r.allow_pair_mismatch && r.note.empty()) {
    throw InputError(who + "a flagged row needs a note");
  }
  return r;
}

std::vector<KnotRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open knot data file " + path.string());
  std::vector<KnotRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(parse_record(line));
    } catch (const InputError& e) {
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  if (in.bad()) throw IoError("error reading " + path.string());
  return records;
}

TableResult reproduce_table(const std::vector<KnotRecord>& records) {
  TableResult result;
  for (const auto& rec : records) {
    TableRow row;
    row.record = rec;
    const Diagram d = dt_to_diagram(rec.dt);
    row.computed = degree_pair(d);
    row.computed_alternating = is_alternating(d);
    row.pair_match = row.computed == rec.expected;
    const std::size_t c = d.crossing_count();
    const std::size_t sum = row.computed.lo + row.computed.hi;
    row.sum_ok = row.computed_alternating == rec.alternating &&
                 (rec.alternating ? sum + 1 == c : sum + 2 <= c);
    if (row.pair_match) {
      ++result.matched;
    } else if (rec.allow_pair_mismatch) {
      ++result.flagged_mismatches;
    } else {
      ++result.unexplained_mismatches;
    }
    if (!row.sum_ok) ++result.sum_failures;
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string format_table(const TableResult& result) {
  std::ostringstream out;
  auto pair = [](const DegreePair& p) {
    return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
  };
  out << std::left << std::setw(7) << "knot" << std::setw(4) << "c"
      << std::setw(5) << "alt" << std::setw(10) << "expected"
      << std::setw(10) << "computed" << "status\n";
  for (const auto& row : result.rows) {
    std::string status = row.pair_match ? "ok"
                         : row.record.allow_pair_mismatch ? "flagged"
                                                          : "MISMATCH";
    if (!row.sum_ok) status += " SUM-FAIL";
    out << std::setw(7) << row.record.name << std::setw(4)
        << row.record.crossings << std::setw(5)
        << (row.record.alternating ? "yes" : "no") << std::setw(10)
        << pair(row.record.expected) << std::setw(10) << pair(row.computed)
        << status << "\n";
  }
  out << result.rows.size() << " rows: " << result.matched << " match, "
      << result.flagged_mismatches << " flagged, "
      << result.unexplained_mismatches << " unexplained, "
      << result.sum_failures << " sum failures\n";
  return out.str();
}

std::size_t e_upper_bound(const std::vector<Diagram>& diagrams) {
  if (diagrams.empty()) throw InputError("e_upper_bound needs a diagram");
  const std::size_t c = diagrams.front().crossing_count();
  std::size_t best = 2 * c + 1;
  for (const auto& d : diagrams) {
    if (d.crossing_count() != c) {
      throw InputError("e_upper_bound needs diagrams with equal crossing counts");
    }
    const auto p = degree_pair(d);
    best = std::min(best, p.lo + p.hi);
  }
  return best;
}

TorusE e_torus(std::uint32_t p, std::uint32_t q) {
  require_torus_pair(p, q);
  TorusE r;
  r.e = static_cast<std::size_t>(p - 1) * (q - 1);
  r.gap = p - 1;
  const Diagram d = torus_diagram(p, q);
  if (e_upper_bound({d}) != r.e || d.crossing_count() - r.e != r.gap) {
    throw InternalInconsistency("standard torus diagram T(" + std::to_string(p) +
                                "," + std::to_string(q) +
                                ") does not attain e");
  }
  return r;
}

}  // namespace warpdeg
