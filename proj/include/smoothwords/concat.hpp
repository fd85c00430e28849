#pragma once

// Middle-word tables for derivatives of concatenations and powers, with
// brute-force certification against exhaustive enumeration.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smoothwords/calculus.hpp"
#include "smoothwords/census.hpp"
#include "smoothwords/parallel.hpp"
#include "smoothwords/word.hpp"

namespace smoothwords {

/// The finite set of words that can appear between D(u) and D(v) in D(uxv).
class DsigmaTable {
 public:
  DsigmaTable(Alphabet ab, std::vector<Word> words) : ab_(ab), words_(std::move(words)) {
    std::sort(words_.begin(), words_.end(), shortlex_less{});
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }

  const Alphabet& alphabet() const noexcept { return ab_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

  bool contains(std::span<const Letter> w) const {
    return std::any_of(words_.begin(), words_.end(), [&](const Word& x) {
      return std::ranges::equal(x.letters(), w);
    });
  }
  bool contains(const Word& w) const { return contains(w.letters()); }

 private:
  Alphabet ab_;
  std::vector<Word> words_;
};

namespace detail {

inline Word instantiate(std::string_view pattern, const Alphabet& ab) {
  std::vector<Letter> out;
  for (char c : pattern) out.push_back(c == 'a' ? ab.a() : ab.b());
  return Word(std::move(out));
}

}  // namespace detail

inline DsigmaTable dsigma_table(const Alphabet& ab) {
  std::vector<std::string_view> patterns;
  const Letter a = ab.a();
  const Letter b = ab.b();
  if (a == 1 && b == 2) {
    patterns = {"", "a", "b", "ab", "ba", "aa", "bb", "aab", "baa", "aba", "abb",
                "bba", "bab", "aaba", "abaa", "abab", "baba", "baab", "abba",
                "aabb", "bbaa", "aabaa"};
  } else if (a == 1 && b == 3) {
    patterns = {"", "a", "b", "ab", "ba", "aa", "bb", "aab", "baa", "aba", "bab",
                "aaa", "baaa", "aaab", "abaa", "aaba"};
  } else if (a == 1 && b == 4) {
    patterns = {"", "a", "b", "ab", "ba", "aa", "bb", "aaa", "baa", "aab", "aba",
                "bab", "aaaa", "baaa", "aaab"};
  } else if (a == 1) {
    patterns = {"", "a", "b", "ab", "ba", "aa", "bb", "aab", "baa", "aaa", "aaaa"};
  } else if (a == 2) {
    patterns = {"", "a", "b", "ab", "ba", "aa", "bb", "aaa"};
  } else {
    patterns = {"", "a", "b", "aa", "bb", "ab", "ba"};
  }
  std::vector<Word> words;
  for (auto p : patterns) words.push_back(detail::instantiate(p, ab));
  return DsigmaTable(ab, std::move(words));
}

namespace detail {

// D of a word already known to be differentiable.
inline void derivative_into(std::span<const Letter> w, const Alphabet& ab,
                            std::vector<Letter>& out) {
  out.clear();
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && w[j] == w[i]) ++j;
    const bool boundary = i == 0 || j == n;
    if (!boundary || j - i >= ab.b()) out.push_back(static_cast<Letter>(j - i));
    i = j;
  }
}

inline bool starts_with(std::span<const Letter> s, std::span<const Letter> p) {
  return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}
inline bool ends_with(std::span<const Letter> s, std::span<const Letter> p) {
  return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.end() - p.size());
}

// The slice of `whole` between `prefix` and `suffix`, if both match and do
// not overlap.
inline std::optional<std::span<const Letter>> middle_slice(std::span<const Letter> whole,
                                                           std::span<const Letter> prefix,
                                                           std::span<const Letter> suffix) {
  if (prefix.size() + suffix.size() > whole.size()) return std::nullopt;
  if (!starts_with(whole, prefix) || !ends_with(whole, suffix)) return std::nullopt;
  return whole.subspan(prefix.size(), whole.size() - prefix.size() - suffix.size());
}

}  // namespace detail

/// The w with D(uxv) = D(u) w D(v), located by length arithmetic and literal
/// prefix/suffix match. Absent when no such slice exists.
inline std::optional<Word> middle_witness(const Word& u, const Word& x, const Word& v,
                                          const Alphabet& ab) {
  const Word uxv = u + x + v;
  if (!is_smooth(uxv, ab)) {
    throw precondition_violated("uxv = " + to_text(uxv) + " is not smooth");
  }
  const Word whole = derivative(uxv, ab);
  const Word du = derivative(u, ab);
  const Word dv = derivative(v, ab);
  auto mid = detail::middle_slice(whole.letters(), du.letters(), dv.letters());
  if (!mid) return std::nullopt;
  return Word(*mid);
}

enum class ViolationReason { no_middle_slice, not_in_table };

inline std::string_view to_string(ViolationReason r) {
  return r == ViolationReason::no_middle_slice ? "no-middle-slice" : "not-in-table";
}

struct ConcatViolation {
  Word u;
  Word x;
  Word v;
  ViolationReason reason;
  std::optional<Word> middle;

  friend bool operator<(const ConcatViolation& p, const ConcatViolation& q) {
    shortlex_less lt;
    const std::array<std::pair<const Word*, const Word*>, 3> keys{
        {{&p.x, &q.x}, {&p.u, &q.u}, {&p.v, &q.v}}};
    for (auto [l, r] : keys) {
      if (lt(*l, *r)) return true;
      if (lt(*r, *l)) return false;
    }
    return p.reason < q.reason;
  }
};

struct ConcatCertificate {
  Alphabet alphabet{1, 2};
  std::size_t bound = 0;
  std::size_t tested = 0;  // triples (u, x, v) with uxv smooth
  std::vector<ConcatViolation> violations;
  std::vector<Word> empirical_middles;  // shortlex
  bool certified() const noexcept { return violations.empty(); }
};

namespace detail {

struct MiddleScan {
  std::size_t tested = 0;
  std::vector<Word> middles;  // distinct, unordered
  std::vector<ConcatViolation> violations;
};

inline void add_distinct(std::vector<Word>& set, std::span<const Letter> w) {
  for (const Word& m : set) {
    if (std::ranges::equal(m.letters(), w)) return;
  }
  set.emplace_back(w);
}

// For every x in `middles_in` and u, v in `smooth` with uxv smooth, finds the
// middle word. Middles not in `reference` (when given) become violations.
inline MiddleScan scan_middles(const Alphabet& ab, const std::vector<Word>& smooth,
                               const std::vector<Word>& middles_in,
                               const DsigmaTable* reference, unsigned jobs) {
  std::vector<std::vector<Letter>> derivs(smooth.size());
  {
    std::vector<Letter> tmp;
    for (std::size_t i = 0; i < smooth.size(); ++i) {
      derivative_into(smooth[i].letters(), ab, tmp);
      derivs[i] = tmp;
    }
  }
  const std::size_t pairs = middles_in.size() * smooth.size();
  auto parts = parallel_chunks(pairs, jobs, [&](std::size_t lo, std::size_t hi) {
    MiddleScan out;
    std::vector<Letter> ux;
    std::vector<Letter> uxv;
    std::vector<Letter> d;
    for (std::size_t p = lo; p < hi; ++p) {
      const Word& x = middles_in[p / smooth.size()];
      const std::size_t ui = p % smooth.size();
      const Word& u = smooth[ui];
      ux.assign(u.begin(), u.end());
      ux.insert(ux.end(), x.begin(), x.end());
      if (!is_smooth(ux, ab)) continue;  // factors of smooth words are smooth
      for (std::size_t vi = 0; vi < smooth.size(); ++vi) {
        const Word& v = smooth[vi];
        uxv.assign(ux.begin(), ux.end());
        uxv.insert(uxv.end(), v.begin(), v.end());
        if (!is_smooth(uxv, ab)) continue;
        ++out.tested;
        derivative_into(uxv, ab, d);
        auto mid = middle_slice(d, derivs[ui], derivs[vi]);
        if (!mid) {
          out.violations.push_back({u, x, v, ViolationReason::no_middle_slice, std::nullopt});
          continue;
        }
        add_distinct(out.middles, *mid);
        if (reference && !reference->contains(*mid)) {
          out.violations.push_back({u, x, v, ViolationReason::not_in_table, Word(*mid)});
        }
      }
    }
    return out;
  });
  MiddleScan merged;
  for (auto& part : parts) {
    merged.tested += part.tested;
    for (auto& m : part.middles) add_distinct(merged.middles, m.letters());
    for (auto& v : part.violations) merged.violations.push_back(std::move(v));
  }
  std::sort(merged.middles.begin(), merged.middles.end(), shortlex_less{});
  std::sort(merged.violations.begin(), merged.violations.end());
  return merged;
}

}  // namespace detail

/// Checks the table exhaustively: every x in the table and every pair of
/// smooth u, v with |u|, |v| <= bound and uxv smooth.
inline ConcatCertificate certify_concat(const Alphabet& ab, std::size_t bound,
                                        const EnumerationOptions& opts = {}) {
  if (bound < 1) throw invalid_argument("certify_concat needs bound >= 1");
  const DsigmaTable table = dsigma_table(ab);
  const auto smooth = smooth_words_up_to(ab, bound, opts);
  auto scan = detail::scan_middles(ab, smooth, table.words(), &table, opts.jobs);
  ConcatCertificate cert;
  cert.alphabet = ab;
  cert.bound = bound;
  cert.tested = scan.tested;
  cert.violations = std::move(scan.violations);
  cert.empirical_middles = std::move(scan.middles);
  return cert;
}

/// Exploratory variant: x ranges over all smooth words with |x| <= x_bound
/// rather than over the table. Findings are data, not assertions.
inline ConcatCertificate explore_concat(const Alphabet& ab, std::size_t bound,
                                        std::size_t x_bound,
                                        const EnumerationOptions& opts = {}) {
  if (bound < 1) throw invalid_argument("explore_concat needs bound >= 1");
  const DsigmaTable table = dsigma_table(ab);
  const auto smooth = smooth_words_up_to(ab, bound, opts);
  std::vector<Word> xs(smooth.begin(), smooth.end());
  xs.erase(std::remove_if(xs.begin(), xs.end(),
                          [&](const Word& w) { return w.size() > x_bound; }),
           xs.end());
  auto scan = detail::scan_middles(ab, smooth, xs, &table, opts.jobs);
  ConcatCertificate cert;
  cert.alphabet = ab;
  cert.bound = bound;
  cert.tested = scan.tested;
  cert.violations = std::move(scan.violations);
  cert.empirical_middles = std::move(scan.middles);
  return cert;
}

/// Least fixpoint of W0 = {eps}, W(i+1) = W(i) + {middle(u, x, v) : x in W(i)}.
/// Independent of the literal tables.
inline std::vector<Word> empirical_middle_set(const Alphabet& ab, std::size_t bound,
                                              const EnumerationOptions& opts = {}) {
  if (bound < 1) throw invalid_argument("empirical_middle_set needs bound >= 1");
  const auto smooth = smooth_words_up_to(ab, bound, opts);
  std::set<Word, shortlex_less> known{Word{}};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    auto scan = detail::scan_middles(ab, smooth, frontier, nullptr, opts.jobs);
    frontier.clear();
    for (auto& m : scan.middles) {
      if (known.insert(m).second) frontier.push_back(m);
    }
  }
  return {known.begin(), known.end()};
}

/// Splits D(u1 u2 u3) as D(u1) w1 D(u2) w2 D(u3) with w1, w2 in the table.
inline std::optional<std::pair<Word, Word>> three_way_witness(const Word& u1, const Word& u2,
                                                              const Word& u3,
                                                              const DsigmaTable& table) {
  const Alphabet& ab = table.alphabet();
  const Word whole = u1 + u2 + u3;
  if (!is_smooth(whole, ab)) {
    throw precondition_violated(to_text(whole) + " is not smooth");
  }
  const Word d = derivative(whole, ab);
  const Word d1 = derivative(u1, ab);
  const Word d2 = derivative(u2, ab);
  const Word d3 = derivative(u3, ab);
  auto mid = detail::middle_slice(d.letters(), d1.letters(), d3.letters());
  if (!mid || mid->size() < d2.size()) return std::nullopt;
  for (std::size_t p = 0; p + d2.size() <= mid->size(); ++p) {
    auto w1 = mid->subspan(0, p);
    auto core = mid->subspan(p, d2.size());
    auto w2 = mid->subspan(p + d2.size());
    if (std::ranges::equal(core, d2.letters()) && table.contains(w1) && table.contains(w2)) {
      return std::pair{Word(w1), Word(w2)};
    }
  }
  return std::nullopt;
}

struct ThreeWayCertificate {
  std::size_t tested = 0;
  std::vector<std::array<Word, 3>> violations;
};

/// Every triple of smooth words of length <= bound whose product is smooth.
inline ThreeWayCertificate certify_three_way(const Alphabet& ab, std::size_t bound,
                                             const EnumerationOptions& opts = {}) {
  const DsigmaTable table = dsigma_table(ab);
  const auto smooth = smooth_words_up_to(ab, bound, opts);
  const std::size_t n = smooth.size();
  auto parts = parallel_chunks(n * n, opts.jobs, [&](std::size_t lo, std::size_t hi) {
    ThreeWayCertificate out;
    for (std::size_t p = lo; p < hi; ++p) {
      const Word& u1 = smooth[p / n];
      const Word& u2 = smooth[p % n];
      const Word head = u1 + u2;
      if (!is_smooth(head, ab)) continue;
      for (const Word& u3 : smooth) {
        if (!is_smooth(head + u3, ab)) continue;
        ++out.tested;
        if (!three_way_witness(u1, u2, u3, table)) out.violations.push_back({u1, u2, u3});
      }
    }
    return out;
  });
  ThreeWayCertificate merged;
  for (auto& part : parts) {
    merged.tested += part.tested;
    for (auto& v : part.violations) merged.violations.push_back(std::move(v));
  }
  return merged;
}

struct PowerLevel {
  std::size_t level;     // j
  Word base_derivative;  // D^j(u)
  Word power_derivative; // D^j(u^n)
  Word witness;          // w_j
};

struct PowerDecomposition {
  Word base;
  unsigned exponent = 0;
  std::vector<PowerLevel> levels;
};

/// D^j(u^n) = (D^j(u) w_j)^(n-1) D^j(u) for j = 1..k, where k is the largest
/// integer with D^(k-1)(u) having at least two runs. A single-run base has
/// no levels.
inline PowerDecomposition power_decomposition(const Word& u, unsigned exponent,
                                              const Alphabet& ab) {
  if (exponent < 2) throw invalid_argument("power_decomposition needs exponent >= 2");
  const Word power = u.pow(exponent);
  if (!is_smooth(power, ab)) {
    throw precondition_violated("(" + to_text(u) + ")^" + std::to_string(exponent) +
                                " is not smooth");
  }
  const DsigmaTable table = dsigma_table(ab);
  PowerDecomposition out;
  out.base = u;
  out.exponent = exponent;
  Word base_prev = u;
  Word power_prev = power;
  for (std::size_t j = 1; runs(base_prev).count() >= 2; ++j) {
    Word dj = derivative(base_prev, ab);
    Word pj = derivative(power_prev, ab);
    const std::size_t n = exponent;
    const std::size_t core = n * dj.size();
    if (pj.size() < core || (pj.size() - core) % (n - 1) != 0) {
      throw certification_failure(j, "(D^j(u) w)^(n-1) D^j(u)", to_text(pj),
                                  "level " + std::to_string(j) + ": length " +
                                      std::to_string(pj.size()) +
                                      " does not fit the power formula");
    }
    Word w = pj.slice(dj.size(), (pj.size() - core) / (n - 1));
    const Word rebuilt = (dj + w).pow(n - 1) + dj;
    if (rebuilt != pj) {
      throw certification_failure(j, to_text(rebuilt), to_text(pj),
                                  "level " + std::to_string(j) +
                                      ": power formula does not reproduce D^j(u^n)");
    }
    if (!table.contains(w)) {
      throw certification_failure(j, "middle word in table", to_text(w),
                                  "level " + std::to_string(j) + ": middle word " +
                                      to_text(w) + " is not in the table");
    }
    out.levels.push_back(PowerLevel{j, dj, pj, std::move(w)});
    base_prev = std::move(dj);
    power_prev = std::move(pj);
  }
  return out;
}

}  // namespace smoothwords
