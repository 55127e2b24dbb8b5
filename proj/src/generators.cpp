#include "warpdeg/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "warpdeg/error.hpp"

namespace warpdeg {

BraidWord parse_braid(std::string_view text, std::size_t strands) {
  BraidWord w;
  w.strands = strands;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text[i] == '+' || text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    int v = 0;
    const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text.data() + i, v);
    if (ec != std::errc{} || ptr != text.data() + i || v == 0) {
      throw InputError("malformed braid letter", start + 1);
    }
    w.letters.push_back(v);
  }
  return w;
}

Diagram braid_closure(const BraidWord& w) {
  if (w.strands < 2) throw InputError("a braid needs at least 2 strands");
  for (int v : w.letters) {
    const auto g = static_cast<std::size_t>(std::abs(v));
    if (g < 1 || g >= w.strands) {
      throw InputError("braid letter " + std::to_string(v) +
                       " outside 1.." + std::to_string(w.strands - 1));
    }
  }

  // Where a strand entering the top at position s leaves the bottom.
  auto run = [&](std::size_t pos, std::vector<Symbol>* out) {
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
      const int v = w.letters[k];
      const auto g = static_cast<std::size_t>(std::abs(v));
      const auto id = static_cast<CrossingId>(k + 1);
      if (pos == g) {
        if (out) out->push_back({id, v > 0 ? Pass::Over : Pass::Under});
        pos = g + 1;
      } else if (pos == g + 1) {
        if (out) out->push_back({id, v > 0 ? Pass::Under : Pass::Over});
        pos = g;
      }
    }
    return pos;
  };

  std::vector<std::size_t> perm(w.strands + 1);
  for (std::size_t s = 1; s <= w.strands; ++s) perm[s] = run(s, nullptr);

  std::vector<std::size_t> cycles;
  std::vector<bool> seen(w.strands + 1, false);
  for (std::size_t s = 1; s <= w.strands; ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t t = s; !seen[t]; t = perm[t]) {
      seen[t] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  if (cycles.size() != 1) {
    std::string shape;
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      if (k) shape += "+";
      shape += std::to_string(cycles[k]);
    }
    throw InputError("braid closure has " + std::to_string(cycles.size()) +
                     " components (strand cycles of length " + shape + ")");
  }

  std::vector<Symbol> symbols;
  symbols.reserve(2 * w.letters.size());
  std::size_t pos = 1;
  do {
    pos = run(pos, &symbols);
  } while (pos != 1);
  return canonicalize(Diagram(std::move(symbols)));
}

void require_torus_pair(std::uint32_t p, std::uint32_t q) {
  if (p == 0 || p >= q) {
    throw InputError("torus pair needs 0 < p < q, got p=" + std::to_string(p) +
                     " q=" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw InputError("p,q must be coprime, got p=" + std::to_string(p) +
                     " q=" + std::to_string(q));
  }
}

Diagram torus_diagram(std::uint32_t p, std::uint32_t q) {
  require_torus_pair(p, q);
  if (p == 1) return Diagram{};
  BraidWord w;
  w.strands = p;
  for (std::uint32_t r = 0; r < q; ++r)
    for (std::uint32_t i = 1; i < p; ++i) w.letters.push_back(static_cast<int>(i));
  return braid_closure(w);
}

std::uint64_t canonical_word_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::uint64_t k = n + 1; k <= 2 * n; ++k) {
    if (__builtin_mul_overflow(count, k, &count)) {
      throw InputError("word count for n=" + std::to_string(n) +
                       " does not fit in 64 bits");
    }
  }
  return count;
}

namespace {

class WordWalker {
 public:
  WordWalker(std::size_t n, const std::function<void(const Diagram&)>& fn,
             std::size_t worker, std::size_t workers)
      : n_(n), fn_(fn), worker_(worker), workers_(workers),
        word_(2 * n), open_(n + 1, false), first_pass_(n + 1) {}

  void run() { step(0, 0, 0); }

 private:
  void step(std::size_t k, CrossingId opened, std::size_t unclosed) {
    if (k == word_.size()) {
      if (rank_++ % workers_ == worker_) fn_(Diagram(word_));
      return;
    }
    const std::size_t left = word_.size() - k;
    for (CrossingId x = 1; x <= opened; ++x) {
      if (!open_[x]) continue;
      open_[x] = false;
      word_[k] = {x, !first_pass_[x]};
      step(k + 1, opened, unclosed - 1);
      open_[x] = true;
    }
    if (opened < n_ && unclosed + 2 <= left) {
      const CrossingId x = opened + 1;
      open_[x] = true;
      for (Pass p : {Pass::Over, Pass::Under}) {
        first_pass_[x] = p;
        word_[k] = {x, p};
        step(k + 1, x, unclosed + 1);
      }
      open_[x] = false;
    }
  }

  std::size_t n_;
  const std::function<void(const Diagram&)>& fn_;
  std::size_t worker_;
  std::size_t workers_;
  std::uint64_t rank_ = 0;
  std::vector<Symbol> word_;
  std::vector<bool> open_;
  std::vector<Pass> first_pass_;
};

}  // namespace

void for_each_word(std::size_t n, const std::function<void(const Diagram&)>& fn,
                   std::size_t worker, std::size_t workers, std::size_t cap) {
  if (n < 1) throw InputError("enumeration needs at least 1 crossing");
  if (n > cap) {
    throw InputError("enumeration is capped at " + std::to_string(cap) +
                     " crossings, asked for " + std::to_string(n));
  }
  if (workers == 0 || worker >= workers) {
    throw InputError("worker index " + std::to_string(worker) +
                     " invalid for " + std::to_string(workers) + " workers");
  }
  WordWalker(n, fn, worker, workers).run();
}

std::vector<Diagram> enumerate_words(std::size_t n, std::size_t cap) {
  std::vector<Diagram> out;
  for_each_word(n, [&](const Diagram& d) { out.push_back(d); }, 0, 1, cap);
  return out;
}

Diagram random_word(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_word needs at least 1 crossing");
  std::vector<Symbol> symbols;
  symbols.reserve(2 * n);
  for (std::size_t x = 1; x <= n; ++x) {
    symbols.push_back({static_cast<CrossingId>(x), Pass::Over});
    symbols.push_back({static_cast<CrossingId>(x), Pass::Under});
  }
  // std::shuffle and uniform_int_distribution are implementation-defined,
  // so the draw is spelled out to keep words identical across libraries.
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    return r % bound;
  };
  for (std::size_t i = symbols.size() - 1; i > 0; --i) {
    std::swap(symbols[i], symbols[below(i + 1)]);
  }
  return canonicalize(Diagram(std::move(symbols)));
}

}  // namespace warpdeg
