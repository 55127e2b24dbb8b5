#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "warpdeg/analysis.hpp"
#include "warpdeg/codecs.hpp"
#include "warpdeg/error.hpp"
#include "warpdeg/generators.hpp"

#ifndef WARPDEG_DEFAULT_DATA
#define WARPDEG_DEFAULT_DATA "data/knots.jsonl"
#endif

namespace warpdeg::cli {

namespace {

struct DiagramInput {
  std::string gauss;
  std::string dt;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--gauss", gauss, "Gauss word, e.g. O1U2O3U1O2U3");
    auto* d = cmd->add_option("--dt", dt, "DT code, e.g. \"4 6 2\"");
    auto* f = cmd->add_option("--file", file,
                              "file holding one Gauss word or DT code");
    g->excludes(d)->excludes(f);
    d->excludes(f);
  }

  bool given(const CLI::App* cmd) const {
    return cmd->count("--gauss") + cmd->count("--dt") + cmd->count("--file") > 0;
  }

  Diagram read(const CLI::App* cmd) const {
    if (cmd->count("--gauss")) return parse_gauss(gauss);
    if (cmd->count("--dt")) return dt_to_diagram(parse_dt(dt));
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos &&
        std::string("OoUu").find(text[first]) != std::string::npos) {
      return parse_gauss(text);
    }
    return dt_to_diagram(parse_dt(text));
  }
};

std::string default_data_path() {
  if (const char* env = std::getenv("WARPDEG_DATA"); env && *env) return env;
  return WARPDEG_DEFAULT_DATA;
}

int cmd_compute(const Diagram& d, std::optional<std::size_t> base, bool json,
                std::ostream& out) {
  if (base && *base >= std::max<std::size_t>(d.length(), 1)) {
    throw InputError("base gap " + std::to_string(*base) +
                     " out of range for " + std::to_string(d.length()) +
                     " gaps");
  }
  const Report r = theorem_check(d);
  if (json) {
    out << emit_report(r) << "\n";
    if (base) {
      nlohmann::ordered_json j;
      j["gap"] = *base;
      j["warping_degree"] = warping_degree_at(d, BasePoint{*base});
      out << j.dump() << "\n";
    }
    return kOk;
  }
  out << "word: " << format_gauss(d) << "\n"
      << "crossings: " << r.crossings << "\n"
      << "warping degree d(D): " << r.d << "\n"
      << "warping degree d(-D): " << r.d_reversed << "\n"
      << "span: " << r.span << "\n"
      << "alternating: " << (r.alternating ? "yes" : "no") << "\n"
      << "slack c-d-d'-1: " << r.slack << "\n";
  if (base) {
    out << "warping degree at gap " << *base << ": "
        << warping_degree_at(d, BasePoint{*base}) << "\n";
  }
  return kOk;
}

int cmd_profile(const Diagram& d, bool json, std::ostream& out) {
  const auto profile = warping_profile(d);
  if (json) {
    nlohmann::ordered_json j;
    j["word"] = format_gauss(d);
    j["profile"] = profile.values;
    out << j.dump() << "\n";
    return kOk;
  }
  out << "gap";
  for (std::size_t g = 0; g < profile.values.size(); ++g) {
    out << " " << g << ":" << profile.values[g];
  }
  out << "\n";
  return kOk;
}

int cmd_torus(std::uint32_t p, std::uint32_t q, bool json, std::ostream& out) {
  const Diagram d = torus_diagram(p, q);
  const std::size_t c = d.crossing_count();
  const std::size_t dd = warping_degree(d);
  const std::size_t dr = warping_degree(reverse(d));
  const std::size_t want = static_cast<std::size_t>(p - 1) * (q - 1) / 2;
  const bool degrees_ok = dd == want && dr == want;
  const bool gap_ok = c - dd - dr == p - 1;
  const TorusE e = e_torus(p, q);
  if (json) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["q"] = q;
    j["crossings"] = c;
    j["d"] = dd;
    j["d_reversed"] = dr;
    j["expected_degree"] = want;
    j["gap"] = c - dd - dr;
    j["e"] = e.e;
    j["ok"] = degrees_ok && gap_ok;
    out << j.dump() << "\n";
  } else {
    const char* mark_d = degrees_ok ? "✓" : "FAIL";
    const char* mark_g = gap_ok ? "✓" : "FAIL";
    out << "T(" << p << "," << q << "): c=" << c << " d=" << dd << " d'=" << dr
        << "\n"
        << "d = d' = (p-1)(q-1)/2 = " << want << " " << mark_d << "\n"
        << "c-d-d' = " << c - dd - dr << " = p-1 " << mark_g << "\n"
        << "e = (p-1)(q-1) = " << e.e << ", c-e = " << e.gap << "\n";
  }
  return degrees_ok && gap_ok ? kOk : kCheckFailed;
}

int cmd_table(const std::string& path, bool check, std::ostream& out) {
  const auto records = load_records(path);
  const auto result = reproduce_table(records);
  out << format_table(result);
  return check && !result.ok() ? kCheckFailed : kOk;
}

int cmd_verify(std::size_t n_max, std::size_t jobs, bool json,
               std::ostream& out) {
  const auto report = lemma_suite(n_max, jobs);
  if (json) {
    nlohmann::ordered_json j;
    j["max_crossings"] = report.n_max;
    j["words_checked"] = report.words_checked;
    j["words_per_n"] = report.words_per_n;
    auto props = nlohmann::ordered_json::array();
    for (const auto& p : report.properties) {
      props.push_back({{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}});
    }
    j["properties"] = props;
    auto ces = nlohmann::ordered_json::array();
    for (const auto& c : report.counterexamples) {
      ces.push_back({{"property", c.property}, {"word", c.word}});
    }
    j["counterexamples"] = ces;
    j["ok"] = report.ok();
    out << j.dump() << "\n";
  } else {
    out << "canonical words checked: " << report.words_checked << "\n";
    for (std::size_t n = 1; n <= report.n_max; ++n) {
      out << "  n=" << n << ": " << report.words_per_n[n - 1] << "\n";
    }
    for (const auto& p : report.properties) {
      out << (p.failed ? "FAIL " : "pass ") << p.name << ": " << p.checked
          << " checks, " << p.failed << " failures\n";
    }
    for (const auto& c : report.counterexamples) {
      out << "counterexample [" << c.property << "]: " << c.word << "\n";
    }
    out << (report.ok() ? "all properties hold" : "COUNTEREXAMPLES FOUND")
        << "\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_convert(const CLI::App* cmd, const DiagramInput& in, std::ostream& out) {
  if (cmd->count("--gauss")) {
    out << format_dt(diagram_to_dt(parse_gauss(in.gauss))) << "\n";
  } else {
    out << format_gauss(in.read(cmd)) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Warping degrees of oriented knot diagrams"};
  app.require_subcommand(1);

  bool json = false;

  auto* compute = app.add_subcommand("compute", "degrees, span and slack of one diagram");
  DiagramInput compute_in;
  compute_in.attach(compute);
  std::size_t base = 0;
  compute->add_option("--base", base, "also report the warping degree at this gap");
  compute->add_flag("--json", json, "JSON output");

  auto* profile = app.add_subcommand("profile", "warping degree at every gap");
  DiagramInput profile_in;
  profile_in.attach(profile);
  profile->add_flag("--json", json, "JSON output");

  auto* torus = app.add_subcommand("torus", "standard torus knot diagram T(p,q)");
  std::uint32_t p = 0, q = 0;
  torus->add_option("P", p, "strands")->required();
  torus->add_option("Q", q, "twists")->required();
  torus->add_flag("--json", json, "JSON output");

  auto* table = app.add_subcommand("table", "reproduce the knot table");
  std::string data;
  bool check = false;
  table->add_option("--data", data, "knot data file (JSON lines)");
  table->add_flag("--check", check, "exit 2 on an unflagged mismatch");

  auto* verify = app.add_subcommand("verify", "exhaustive check over all canonical words");
  std::size_t n_max = 6;
  std::size_t jobs = 1;
  verify->add_option("--max-crossings", n_max, "largest crossing count");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_flag("--json", json, "JSON output");

  auto* convert = app.add_subcommand("convert", "DT code to Gauss word or back");
  DiagramInput convert_in;
  convert_in.attach(convert);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (compute->parsed() || profile->parsed() || convert->parsed()) {
      CLI::App* cmd = compute->parsed() ? compute : profile->parsed() ? profile : convert;
      const DiagramInput& in = compute->parsed() ? compute_in
                               : profile->parsed() ? profile_in
                                                   : convert_in;
      if (!in.given(cmd)) {
        throw InputError("one of --gauss, --dt or --file is required");
      }
      if (cmd == convert) return cmd_convert(cmd, in, out);
      const Diagram d = in.read(cmd);
      if (cmd == profile) return cmd_profile(d, json, out);
      std::optional<std::size_t> at;
      if (compute->count("--base")) at = base;
      return cmd_compute(d, at, json, out);
    }
    if (torus->parsed()) return cmd_torus(p, q, json, out);
    if (table->parsed()) {
      return cmd_table(table->count("--data") ? data : default_data_path(), check, out);
    }
    if (verify->parsed()) {
      if (jobs < 1) throw InputError("--jobs must be at least 1");
      return cmd_verify(n_max, jobs, json, out);
    }
  } catch (const InternalInconsistency& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace warpdeg::cli
