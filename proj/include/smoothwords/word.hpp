#pragma once

// Alphabets, words, runs and the run-length operator with its pseudo-inverses.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smoothwords/errors.hpp"

namespace smoothwords {

using Letter = std::uint32_t;

/// An ordered two-letter alphabet {a, b} of positive integers with a < b.
class Alphabet {
 public:
  Alphabet(Letter a, Letter b) : a_(a), b_(b) {
    if (a < 1 || a >= b) {
      throw invalid_argument("alphabet requires 1 <= a < b, got " +
                             std::to_string(a) + "," + std::to_string(b));
    }
  }

  Letter a() const noexcept { return a_; }
  Letter b() const noexcept { return b_; }
  bool contains(Letter x) const noexcept { return x == a_ || x == b_; }
  bool same_parity() const noexcept { return (a_ % 2) == (b_ % 2); }

  /// The other letter of the alphabet.
  Letter other(Letter x) const {
    if (x == a_) return b_;
    if (x == b_) return a_;
    throw invalid_argument("letter " + std::to_string(x) +
                           " is not in alphabet " + text());
  }

  std::string text() const {
    return std::to_string(a_) + "," + std::to_string(b_);
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Letter a_;
  Letter b_;
};

/// A finite word over the positive integers. Immutable value type.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) { validate(); }
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    validate();
  }
  explicit Word(std::span<const Letter> letters)
      : letters_(letters.begin(), letters.end()) {
    validate();
  }

  /// `count` copies of `letter`.
  static Word repeat(Letter letter, std::size_t count) {
    return Word(std::vector<Letter>(count, letter));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vector() const noexcept { return letters_; }

  Word slice(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos,
                                    letters_.begin() + pos + len),
                trusted{});
  }

  Word pow(std::size_t n) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), letters_.begin(), letters_.end());
    }
    return Word(std::move(out), trusted{});
  }

  bool has_prefix(const Word& p) const {
    return p.size() <= size() &&
           std::equal(p.begin(), p.end(), letters_.begin());
  }
  bool has_suffix(const Word& s) const {
    return s.size() <= size() &&
           std::equal(s.begin(), s.end(), letters_.end() - s.size());
  }
  bool contains_factor(const Word& f) const {
    if (f.empty()) return true;
    return std::search(letters_.begin(), letters_.end(), f.begin(), f.end()) !=
           letters_.end();
  }

  friend Word operator+(const Word& x, const Word& y) {
    std::vector<Letter> out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return Word(std::move(out), trusted{});
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    return x.letters_ <=> y.letters_;
  }

 private:
  struct trusted {};
  Word(std::vector<Letter> letters, trusted) : letters_(std::move(letters)) {}

  void validate() const {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] == 0) {
        throw invalid_argument("letter " + std::to_string(i) + " is zero");
      }
    }
  }

  std::vector<Letter> letters_;
};

/// Length first, then lexicographic. The canonical order for word sets.
struct shortlex_less {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

struct Run {
  Letter letter;
  std::size_t length;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs of a word, in order.
class RunDecomposition {
 public:
  RunDecomposition() = default;
  explicit RunDecomposition(std::vector<Run> runs) : runs_(std::move(runs)) {}

  std::size_t count() const noexcept { return runs_.size(); }
  bool empty() const noexcept { return runs_.empty(); }
  const Run& operator[](std::size_t i) const { return runs_[i]; }
  const Run& first() const { return runs_.front(); }
  const Run& last() const { return runs_.back(); }
  std::size_t first_length() const { return runs_.front().length; }
  std::size_t last_length() const { return runs_.back().length; }
  const std::vector<Run>& runs() const noexcept { return runs_; }
  auto begin() const noexcept { return runs_.begin(); }
  auto end() const noexcept { return runs_.end(); }

  Word expand() const {
    std::vector<Letter> out;
    for (const Run& r : runs_) out.insert(out.end(), r.length, r.letter);
    return Word(std::move(out));
  }

 private:
  std::vector<Run> runs_;
};

inline RunDecomposition runs(std::span<const Letter> w) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == w[i]) ++j;
    out.push_back(Run{w[i], j - i});
    i = j;
  }
  return RunDecomposition(std::move(out));
}

inline RunDecomposition runs(const Word& w) { return runs(w.letters()); }

/// Run-length word: the i-th letter is the length of the i-th run.
inline Word delta(const Word& w) {
  std::vector<Letter> out;
  for (const Run& r : runs(w)) out.push_back(static_cast<Letter>(r.length));
  return Word(std::move(out));
}

/// Rebuilds a word whose run lengths are `u`, starting with `alpha` and
/// alternating letters.
inline Word delta_inv(const Word& u, Letter alpha, const Alphabet& ab) {
  Letter cur = alpha;
  Letter next = ab.other(alpha);
  std::vector<Letter> out;
  for (Letter len : u) {
    out.insert(out.end(), len, cur);
    std::swap(cur, next);
  }
  return Word(std::move(out));
}

inline Word mirror(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

inline Word complement(const Word& w, const Alphabet& ab) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(ab.other(x));
  return Word(std::move(out));
}

inline void require_letters_in(const Word& w, const Alphabet& ab) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!ab.contains(w[i])) {
      throw invalid_argument("letter " + std::to_string(w[i]) +
                             " at position " + std::to_string(i) +
                             " is not in alphabet " + ab.text());
    }
  }
}

/// Pads boundary runs longer than a up to length b. A single run is padded
/// once, on the left.
inline Word closure(const Word& w, const Alphabet& ab) {
  require_letters_in(w, ab);
  if (w.empty()) return w;
  const RunDecomposition rd = runs(w);
  for (std::size_t i = 0; i < rd.count(); ++i) {
    if (rd[i].length > ab.b()) throw not_closable(i, rd[i].length);
  }
  std::size_t left = rd.first_length() > ab.a() ? ab.b() - rd.first_length() : 0;
  std::size_t right =
      rd.count() > 1 && rd.last_length() > ab.a() ? ab.b() - rd.last_length() : 0;
  std::vector<Letter> out;
  out.reserve(w.size() + left + right);
  out.insert(out.end(), left, rd.first().letter);
  out.insert(out.end(), w.begin(), w.end());
  out.insert(out.end(), right, rd.last().letter);
  return Word(std::move(out));
}

// Text format: "3,1,1,1,3" (canonical) or "31113" (compact, letters <= 9).

enum class TextForm { automatic, comma, compact };

inline std::string to_text(const Word& w, TextForm form = TextForm::automatic) {
  const bool small = std::all_of(w.begin(), w.end(), [](Letter x) { return x <= 9; });
  if (form == TextForm::compact && !small) {
    throw invalid_argument("compact form needs every letter <= 9");
  }
  std::string out;
  if (form == TextForm::compact || (form == TextForm::automatic && small)) {
    for (Letter x : w) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  // A lone letter needs a trailing comma or it would read back as digits.
  if (w.size() == 1) out.push_back(',');
  return out;
}

/// Parses either text form. Surrounding whitespace is ignored; "" is the
/// empty word. A string containing a comma is read in comma form.
inline Word parse_word_text(std::string_view s) {
  std::size_t lo = 0;
  std::size_t hi = s.size();
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (lo < hi && space(s[lo])) ++lo;
  while (hi > lo && space(s[hi - 1])) --hi;
  std::vector<Letter> out;
  if (lo == hi) return Word{};

  if (s.substr(lo, hi - lo).find(',') == std::string_view::npos) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (s[i] < '0' || s[i] > '9') throw parse_error(i, "unexpected character");
      if (s[i] == '0') throw parse_error(i, "zero letter");
      out.push_back(static_cast<Letter>(s[i] - '0'));
    }
    return Word(std::move(out));
  }

  std::size_t i = lo;
  while (i < hi) {
    const std::size_t start = i;
    std::uint64_t value = 0;
    while (i < hi && s[i] >= '0' && s[i] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (value > UINT32_MAX) throw parse_error(start, "letter out of range");
      ++i;
    }
    if (i == start) throw parse_error(i, "expected a letter");
    if (value == 0) throw parse_error(start, "zero letter");
    out.push_back(static_cast<Letter>(value));
    if (i == hi) break;
    if (s[i] != ',') throw parse_error(i, "unexpected character");
    ++i;
    // a single trailing comma is allowed
    if (i == hi && out.size() == 1) break;
    if (i == hi) throw parse_error(i, "trailing comma");
  }
  return Word(std::move(out));
}

/// The shortest v with w = v^k.
inline Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return w.slice(0, p);
  }
  return w;
}

}  // namespace smoothwords

template <>
struct std::hash<smoothwords::Word> {
  std::size_t operator()(const smoothwords::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};
