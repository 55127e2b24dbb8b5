#pragma once

// Slow, obvious reimplementations used as test oracles. They work on plain
// (id, over) pairs and share no code with the library.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<std::pair<int, bool>>;  // (crossing, is_over)

inline Word read(const std::string& s) {
  Word w;
  for (std::size_t i = 0; i < s.size();) {
    const bool over = s[i] == 'O';
    ++i;
    int id = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      id = id * 10 + (s[i++] - '0');
    w.push_back({id, over});
  }
  return w;
}

inline std::string write(const Word& w) {
  std::string s;
  for (auto [id, over] : w) s += (over ? "O" : "U") + std::to_string(id);
  return s;
}

inline int crossings(const Word& w) { return static_cast<int>(w.size() / 2); }

// Walk from gap g, remember the first pass seen at each crossing.
inline int degree_at(const Word& w, std::size_t g) {
  std::map<int, bool> first;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto [id, over] = w[(g + k) % w.size()];
    first.try_emplace(id, over);
  }
  int count = 0;
  for (auto [id, over] : first) count += over ? 0 : 1;
  return count;
}

inline std::vector<int> profile(const Word& w) {
  std::vector<int> v;
  for (std::size_t g = 0; g < w.size(); ++g) v.push_back(degree_at(w, g));
  return v;
}

inline int degree(const Word& w) {
  auto v = profile(w);
  return v.empty() ? 0 : *std::min_element(v.begin(), v.end());
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Word canonical(const Word& w) {
  std::map<int, int> name;
  Word out;
  for (auto [id, over] : w) {
    auto it = name.try_emplace(id, static_cast<int>(name.size()) + 1).first;
    out.push_back({it->second, over});
  }
  return out;
}

// Every arrangement of O1 U1 ... On Un, canonicalized and deduplicated.
inline std::set<std::string> all_canonical(int n) {
  Word w;
  for (int x = 1; x <= n; ++x) {
    w.push_back({x, true});
    w.push_back({x, false});
  }
  std::sort(w.begin(), w.end());
  std::set<std::string> out;
  do {
    out.insert(write(canonical(w)));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Arc numbers per position starting at gap g: 1 after the base point, +1
// after every under pass. Returns per-crossing (alpha, beta, gamma).
inline std::map<int, std::vector<int>> arc_triples(const Word& w, std::size_t g) {
  std::map<int, std::vector<int>> t;
  int arc = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto [id, over] = w[(g + k) % w.size()];
    auto& v = t[id];
    v.resize(3);
    if (over) {
      v[0] = arc;
    } else {
      v[1] = arc;
      v[2] = arc + 1;
      ++arc;
    }
  }
  return t;
}

// DT by hand: visit labels 1..2c from gap 0, odd label pairs with even.
inline std::vector<int> dt(const Word& w) {
  std::map<int, std::vector<std::pair<int, bool>>> visits;
  for (std::size_t k = 0; k < w.size(); ++k)
    visits[w[k].first].push_back({static_cast<int>(k) + 1, w[k].second});
  std::vector<int> out(w.size() / 2);
  for (auto& [id, v] : visits) {
    auto odd = v[0].first % 2 ? v[0] : v[1];
    auto even = v[0].first % 2 ? v[1] : v[0];
    out[(odd.first - 1) / 2] = odd.second ? even.first : -even.first;
  }
  return out;
}

// Word from a DT code by hand pairing (2i+1, |a_i|).
inline Word from_dt(const std::vector<int>& code) {
  Word w(2 * code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const bool odd_over = code[i] > 0;
    w[2 * i] = {id, odd_over};
    w[std::abs(code[i]) - 1] = {id, !odd_over};
  }
  return canonical(w);
}

}  // namespace oracle
