#pragma once

// Smooth-word enumeration, power scans, gamma counts, lifting families and
// Kolakoski prefixes.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smoothwords/calculus.hpp"
#include "smoothwords/parallel.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/// Power-freeness threshold h(a,b) and power-free index delta(a,b).
struct IndexPair {
  unsigned h;
  unsigned delta;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

inline IndexPair h_delta(const Alphabet& ab) {
  const unsigned a = ab.a();
  const unsigned b = ab.b();
  if (a == 1 && b == 3) return {b + 2, b + 2};
  unsigned h;
  if (b % 2 == 0) {
    h = (b + 4) / 2;
  } else if (a == 1) {
    h = (b + 5) / 2;
  } else {
    h = (b + 3) / 2;
  }
  return {h, b + 1};
}

/// Persistent store for enumeration levels. Implementations must return
/// exactly what was stored, or nothing.
class LevelCache {
 public:
  virtual ~LevelCache() = default;
  virtual std::optional<std::vector<Word>> load(const Alphabet& ab,
                                                std::size_t length) = 0;
  virtual void store(const Alphabet& ab, std::size_t length,
                     const std::vector<Word>& words) = 0;
};

struct EnumerationOptions {
  unsigned jobs = 1;  // 0 = hardware concurrency
  LevelCache* cache = nullptr;
};

/// Smooth words of length n+1 from the (sorted) smooth words of length n.
/// Every prefix of a smooth word is smooth, so this is complete.
inline std::vector<Word> extend_smooth(const std::vector<Word>& prev,
                                       const Alphabet& ab, unsigned jobs = 1) {
  auto parts = parallel_chunks(prev.size(), jobs, [&](std::size_t lo, std::size_t hi) {
    std::vector<Word> out;
    std::vector<Letter> buf;
    for (std::size_t i = lo; i < hi; ++i) {
      buf.assign(prev[i].begin(), prev[i].end());
      buf.push_back(0);
      for (Letter x : {ab.a(), ab.b()}) {
        buf.back() = x;
        if (is_smooth(buf, ab)) out.emplace_back(std::span<const Letter>(buf));
      }
    }
    return out;
  });
  std::vector<Word> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

/// Calls f(length, words) for every length 0..max_length in order, where
/// `words` is the lexicographically sorted list of smooth words of that length.
template <class F>
void for_each_smooth_level(const Alphabet& ab, std::size_t max_length, F&& f,
                           const EnumerationOptions& opts = {}) {
  std::vector<Word> level{Word{}};
  f(std::size_t{0}, static_cast<const std::vector<Word>&>(level));
  for (std::size_t n = 1; n <= max_length; ++n) {
    std::optional<std::vector<Word>> cached;
    if (opts.cache) cached = opts.cache->load(ab, n);
    if (cached) {
      level = std::move(*cached);
    } else {
      level = extend_smooth(level, ab, opts.jobs);
      if (opts.cache) opts.cache->store(ab, n, level);
    }
    f(n, static_cast<const std::vector<Word>&>(level));
  }
}

inline std::vector<Word> enumerate_smooth(const Alphabet& ab, std::size_t length,
                                          const EnumerationOptions& opts = {}) {
  std::vector<Word> result;
  for_each_smooth_level(
      ab, length,
      [&](std::size_t n, const std::vector<Word>& words) {
        if (n == length) result = words;
      },
      opts);
  return result;
}

/// All smooth words of length 0..max_length in shortlex order.
inline std::vector<Word> smooth_words_up_to(const Alphabet& ab, std::size_t max_length,
                                            const EnumerationOptions& opts = {}) {
  std::vector<Word> all;
  for_each_smooth_level(
      ab, max_length,
      [&](std::size_t, const std::vector<Word>& words) {
        all.insert(all.end(), words.begin(), words.end());
      },
      opts);
  return all;
}

struct PowerWitness {
  Word base;
  Word power;
  Word primitive_base;
};

struct CensusReport {
  Alphabet alphabet{1, 2};
  unsigned exponent = 0;
  std::size_t bound = 0;
  std::vector<PowerWitness> witnesses;  // empty for exponent 1
  std::size_t count = 0;                // distinct power words
  std::size_t last_new_base_length = 0;  // 0 when nothing was found
  std::size_t stable_from = 0;           // first base length of the stability window
  bool stable = false;
  bool unbounded = false;  // exponent 1: every smooth word qualifies
  std::string note;
};

namespace detail {

// The count must not change over the top quartile of base lengths.
inline std::size_t stability_window_start(std::size_t bound) {
  return bound - bound / 4;
}

inline void finish_report(CensusReport& r) {
  r.stable_from = stability_window_start(r.bound);
  if (r.unbounded) {
    r.stable = false;
    r.note = "unbounded at this bound";
  } else {
    r.stable = r.count == 0 || r.last_new_base_length < r.stable_from;
    r.note = r.stable ? "stable" : "bound too small";
  }
}

}  // namespace detail

/// Smooth words u^n with u smooth and 1 <= |u| <= bound.
inline CensusReport scan_powers(const Alphabet& ab, unsigned exponent, std::size_t bound,
                                const EnumerationOptions& opts = {}) {
  if (exponent < 2) throw invalid_argument("scan_powers needs exponent >= 2");
  if (bound < 1) throw invalid_argument("scan_powers needs bound >= 1");
  CensusReport report;
  report.alphabet = ab;
  report.exponent = exponent;
  report.bound = bound;
  std::set<Word> distinct;
  for_each_smooth_level(
      ab, bound,
      [&](std::size_t n, const std::vector<Word>& level) {
        if (n == 0) return;
        auto parts = parallel_chunks(level.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
          std::vector<PowerWitness> found;
          std::vector<Letter> buf;
          for (std::size_t i = lo; i < hi; ++i) {
            buf.clear();
            for (unsigned e = 0; e < exponent; ++e) {
              buf.insert(buf.end(), level[i].begin(), level[i].end());
            }
            if (is_smooth(buf, ab)) {
              Word power{std::span<const Letter>(buf)};
              found.push_back(PowerWitness{level[i], power, primitive_root(level[i])});
            }
          }
          return found;
        });
        for (auto& part : parts) {
          for (auto& wit : part) {
            if (distinct.insert(wit.power).second) report.last_new_base_length = n;
            report.witnesses.push_back(std::move(wit));
          }
        }
      },
      opts);
  report.count = distinct.size();
  detail::finish_report(report);
  return report;
}

/// Bounded count of smooth words of the form u^n. For n = 1 this is the
/// number of nonempty smooth words of length <= bound and is flagged as
/// unbounded.
inline CensusReport gamma(const Alphabet& ab, unsigned exponent, std::size_t bound,
                          const EnumerationOptions& opts = {}) {
  if (exponent < 1) throw invalid_argument("gamma needs exponent >= 1");
  if (bound < 1) throw invalid_argument("gamma needs bound >= 1");
  if (exponent >= 2) return scan_powers(ab, exponent, bound, opts);
  CensusReport report;
  report.alphabet = ab;
  report.exponent = 1;
  report.bound = bound;
  report.unbounded = true;
  for_each_smooth_level(
      ab, bound,
      [&](std::size_t n, const std::vector<Word>& level) {
        if (n == 0 || level.empty()) return;
        report.count += level.size();
        report.last_new_base_length = n;
      },
      opts);
  detail::finish_report(report);
  return report;
}

/// Applies delta_inv `depth` times, always starting with `alpha`.
inline Word lift(const Word& u, Letter alpha, std::size_t depth, const Alphabet& ab) {
  require_letters_in(u, ab);
  if (!ab.contains(alpha)) {
    throw invalid_argument("start letter " + std::to_string(alpha) +
                           " is not in alphabet " + ab.text());
  }
  Word w = u;
  for (std::size_t k = 0; k < depth; ++k) w = delta_inv(w, alpha, ab);
  return w;
}

/// [lift(u, alpha, k)] for k = 0..size-1, each checked to have even length
/// and a smooth n-th power, and all pairwise distinct.
inline std::vector<Word> lift_family(const Word& u, unsigned exponent, Letter alpha,
                                     std::size_t size, const Alphabet& ab) {
  require_letters_in(u, ab);
  if (u.size() % 2 != 0) {
    throw invalid_argument("lifting needs an even-length base, got length " +
                           std::to_string(u.size()));
  }
  if (!ab.same_parity()) {
    throw invalid_argument("lifting needs a and b of the same parity, got " + ab.text());
  }
  if (!is_smooth(u.pow(exponent), ab)) {
    throw precondition_violated("(" + to_text(u) + ")^" + std::to_string(exponent) +
                                " is not smooth");
  }
  std::vector<Word> family;
  for (std::size_t k = 0; k < size; ++k) {
    Word w = lift(u, alpha, k, ab);
    if (w.size() % 2 != 0) {
      throw certification_failure(k, "even length", std::to_string(w.size()),
                                  "lift " + std::to_string(k) + " has odd length");
    }
    if (!is_smooth(w.pow(exponent), ab)) {
      throw certification_failure(k, "smooth", "not smooth",
                                  "power of lift " + std::to_string(k) + " (" +
                                      to_text(w) + ") is not smooth");
    }
    if (std::find(family.begin(), family.end(), w) != family.end()) {
      throw certification_failure(k, "distinct", to_text(w),
                                  "lift " + std::to_string(k) + " repeats an earlier lift");
    }
    family.push_back(std::move(w));
  }
  return family;
}

/// Prefix of the self-generating word s over {a,b} with delta(s) = s that
/// starts with `first`. Run i has length s[i]; letters alternate per run.
inline Word kolakoski_prefix(const Alphabet& ab, Letter first, std::size_t length) {
  if (!ab.contains(first)) {
    throw invalid_argument("start letter " + std::to_string(first) +
                           " is not in alphabet " + ab.text());
  }
  std::vector<Letter> s;
  s.reserve(length + ab.b());
  std::deque<Letter> pending;  // run lengths read from s, not yet written
  std::size_t read = 0;
  Letter letter = first;
  while (s.size() < length) {
    if (pending.empty()) {
      // s[read] may be the letter about to be written
      pending.push_back(read < s.size() ? s[read] : letter);
      ++read;
    }
    const Letter run = pending.front();
    pending.pop_front();
    s.insert(s.end(), run, letter);
    letter = ab.other(letter);
  }
  s.resize(length);
  return Word(std::move(s));
}

}  // namespace smoothwords
