#include "warpdeg/codecs.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "warpdeg/error.hpp"

namespace warpdeg {

namespace {

struct GaussToken {
  std::uint64_t id;
  Pass pass;
  std::size_t column;
};

bool is_separator(char ch) {
  return ch == ',' || std::isspace(static_cast<unsigned char>(ch));
}

std::vector<GaussToken> tokenize_gauss(std::string_view text) {
  std::vector<GaussToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t column = i + 1;
    const char letter = static_cast<char>(
        std::toupper(static_cast<unsigned char>(text[i])));
    if (letter != 'O' && letter != 'U') {
      throw InputError(std::string("expected O or U, found '") + text[i] + "'",
                       column);
    }
    ++i;
    const std::size_t digits_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == digits_begin) {
      throw InputError("pass letter without crossing number", column);
    }
    std::uint64_t id = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data() + digits_begin, text.data() + i, id);
    if (ec != std::errc{} || id == 0) {
      throw InputError("crossing number must be a positive integer", column);
    }
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i < text.size() && !is_separator(text[i]) &&
        std::toupper(static_cast<unsigned char>(text[i])) != 'O' &&
        std::toupper(static_cast<unsigned char>(text[i])) != 'U') {
      throw InputError(std::string("unexpected character '") + text[i] + "'",
                       i + 1);
    }
    tokens.push_back({id, letter == 'O' ? Pass::Over : Pass::Under, column});
  }
  return tokens;
}

}  // namespace

Diagram parse_gauss(std::string_view text) {
  const auto tokens = tokenize_gauss(text);

  struct Seen {
    bool over = false;
    bool under = false;
  };
  std::map<std::uint64_t, Seen> seen;
  std::map<std::uint64_t, CrossingId> rename;
  std::vector<Symbol> symbols;
  symbols.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto& s = seen[t.id];
    bool& flag = t.pass == Pass::Over ? s.over : s.under;
    if (flag) {
      throw InputError("crossing " + std::to_string(t.id) + " has two " +
                           (t.pass == Pass::Over ? "Over" : "Under") +
                           " passes",
                       t.column);
    }
    flag = true;
    auto [it, inserted] =
        rename.try_emplace(t.id, static_cast<CrossingId>(rename.size() + 1));
    symbols.push_back({it->second, t.pass});
  }
  for (const auto& [id, s] : seen) {
    if (!s.over || !s.under) {
      throw InputError("crossing " + std::to_string(id) + " missing " +
                       (s.over ? "Under" : "Over") + " pass");
    }
  }
  return Diagram(std::move(symbols));
}

std::string format_gauss(const Diagram& d) {
  std::string out;
  for (const auto& s : d.symbols()) {
    out += s.pass == Pass::Over ? 'O' : 'U';
    out += std::to_string(s.crossing);
  }
  return out;
}

DTCode parse_dt(std::string_view text) {
  // Tolerate one enclosing pair of brackets, e.g. "[4, 6, 2]".
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  std::size_t end = text.find_last_not_of(" \t\r\n");
  std::string_view body;
  std::size_t offset = 0;
  if (begin != std::string_view::npos) {
    body = text.substr(begin, end - begin + 1);
    offset = begin;
    if (body.size() >= 2 && ((body.front() == '[' && body.back() == ']') ||
                             (body.front() == '(' && body.back() == ')'))) {
      body = body.substr(1, body.size() - 2);
      offset += 1;
    }
  }

  DTCode code;
  std::vector<std::size_t> columns;
  std::size_t i = 0;
  while (i < body.size()) {
    if (is_separator(body[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (body[i] == '+' || body[i] == '-') ++i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
      ++i;
    const std::size_t column = offset + start + 1;
    int value = 0;
    const char* first = body.data() + start + (body[start] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, body.data() + i, value);
    if (ec != std::errc{} || ptr != body.data() + i ||
        (i < body.size() && !is_separator(body[i]))) {
      throw InputError("malformed DT entry", column);
    }
    code.entries.push_back(value);
    columns.push_back(column);
  }

  const std::size_t c = code.entries.size();
  std::vector<bool> used(c + 1, false);
  for (std::size_t k = 0; k < c; ++k) {
    const int v = code.entries[k];
    const auto a = static_cast<std::size_t>(std::abs(v));
    if (v == 0) throw InputError("DT entry is zero", columns[k]);
    if (a % 2 != 0) {
      throw InputError("DT entry " + std::to_string(v) + " is odd", columns[k]);
    }
    if (a > 2 * c) {
      throw InputError("DT entry " + std::to_string(v) + " exceeds " +
                           std::to_string(2 * c),
                       columns[k]);
    }
    if (used[a / 2]) {
      throw InputError("DT label " + std::to_string(a) + " repeated",
                       columns[k]);
    }
    used[a / 2] = true;
  }
  return code;
}

std::string format_dt(const DTCode& code) {
  std::string out;
  for (std::size_t k = 0; k < code.entries.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(code.entries[k]);
  }
  return out;
}

Diagram dt_to_diagram(const DTCode& code) {
  const std::size_t c = code.entries.size();
  std::vector<Symbol> symbols(2 * c);
  std::vector<bool> filled(2 * c, false);
  for (std::size_t k = 0; k < c; ++k) {
    const int v = code.entries[k];
    const auto a = static_cast<std::size_t>(std::abs(v));
    if (v == 0 || a % 2 != 0 || a > 2 * c || filled[a - 1]) {
      throw InputError("invalid DT code entry " + std::to_string(v));
    }
    const auto id = static_cast<CrossingId>(k + 1);
    const Pass odd = v > 0 ? Pass::Over : Pass::Under;
    symbols[2 * k] = {id, odd};
    symbols[a - 1] = {id, !odd};
    filled[2 * k] = filled[a - 1] = true;
  }
  return canonicalize(Diagram(std::move(symbols)));
}

DTCode diagram_to_dt(const Diagram& d, BasePoint a) {
  const std::size_t n = d.length();
  if (n == 0) {
    throw DegenerateInputError("diagram_to_dt needs at least one crossing");
  }
  if (a.gap >= n) {
    throw InputError("base point gap " + std::to_string(a.gap) +
                     " out of range");
  }
  // Visit label of position pos is its walk distance from the gap, plus 1.
  auto label = [&](std::size_t pos) { return (pos + n - a.gap) % n + 1; };
  DTCode code;
  code.entries.assign(d.crossing_count(), 0);
  for (CrossingId p = 1; p <= d.crossing_count(); ++p) {
    const std::size_t lo = label(d.over_position(p));
    const std::size_t lu = label(d.under_position(p));
    if (lo % 2 == lu % 2) {
      throw InputError("crossing " + std::to_string(p) +
                       " is visited twice at the same parity; the word has "
                       "no DT code");
    }
    const bool over_is_odd = lo % 2 == 1;
    const std::size_t odd = over_is_odd ? lo : lu;
    const std::size_t even = over_is_odd ? lu : lo;
    code.entries[(odd - 1) / 2] =
        over_is_odd ? static_cast<int>(even) : -static_cast<int>(even);
  }
  return code;
}

Report make_report(const Diagram& d) {
  if (d.crossing_count() == 0) {
    throw DegenerateInputError("a report needs at least one crossing");
  }
  Report r;
  r.crossings = d.crossing_count();
  const auto profile = warping_profile(d);
  r.d = profile.min();
  // By the complement identity, d(-D) = c - max_a d(D_a); it is computed
  // on the reversed word here and checked against that identity elsewhere.
  r.d_reversed = warping_degree(reverse(d));
  r.span = profile.max() - profile.min();
  r.alternating = is_alternating(d);
  r.slack = static_cast<long long>(r.crossings) -
            static_cast<long long>(r.d) -
            static_cast<long long>(r.d_reversed) - 1;
  return r;
}

std::string emit_report(const Report& report) {
  nlohmann::ordered_json j;
  j["crossings"] = report.crossings;
  j["d"] = report.d;
  j["d_reversed"] = report.d_reversed;
  j["span"] = report.span;
  j["alternating"] = report.alternating;
  j["slack"] = report.slack;
  return j.dump();
}

}  // namespace warpdeg
