#pragma once

// Differentiability, the derivative D, rho = D(closure(w)) and smoothness.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smoothwords/word.hpp"

namespace smoothwords {

inline bool is_differentiable(const Word& w, const Alphabet& ab) {
  require_letters_in(w, ab);
  const RunDecomposition rd = runs(w);
  for (std::size_t i = 0; i < rd.count(); ++i) {
    const std::size_t len = rd[i].length;
    if (len > ab.b()) return false;
    const bool interior = i > 0 && i + 1 < rd.count();
    if (interior && len != ab.a() && len != ab.b()) return false;
  }
  return true;
}

namespace detail {

inline void check_differentiable(const RunDecomposition& rd, const Alphabet& ab) {
  for (std::size_t i = 0; i < rd.count(); ++i) {
    const std::size_t len = rd[i].length;
    if (len > ab.b()) {
      throw not_differentiable(i, "run " + std::to_string(i) + " has length " +
                                      std::to_string(len) + " > b");
    }
    const bool interior = i > 0 && i + 1 < rd.count();
    if (interior && len != ab.a() && len != ab.b()) {
      throw not_differentiable(i, "interior run " + std::to_string(i) +
                                      " has length " + std::to_string(len) +
                                      " not in alphabet " + ab.text());
    }
  }
}

}  // namespace detail

/// Run lengths of w, dropping a boundary run when it is shorter than b.
inline Word derivative(const Word& w, const Alphabet& ab) {
  require_letters_in(w, ab);
  const RunDecomposition rd = runs(w);
  detail::check_differentiable(rd, ab);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < rd.count(); ++i) {
    const bool boundary = i == 0 || i + 1 == rd.count();
    if (boundary && rd[i].length < ab.b()) continue;
    out.push_back(static_cast<Letter>(rd[i].length));
  }
  return Word(std::move(out));
}

/// D applied `times` times.
inline Word derivative_power(Word w, std::size_t times, const Alphabet& ab) {
  for (std::size_t i = 0; i < times; ++i) w = derivative(w, ab);
  return w;
}

inline Word rho(const Word& w, const Alphabet& ab) {
  Word closed;
  try {
    closed = closure(w, ab);
  } catch (const not_closable& e) {
    throw not_closurely_differentiable(e.run_index(), e.what());
  }
  try {
    return derivative(closed, ab);
  } catch (const not_differentiable& e) {
    throw not_closurely_differentiable(e.run_index(), e.what());
  }
}

/// rho computed from D(w) by prepending/appending b for boundary runs of
/// length strictly between a and b. Cross-check for `rho`.
inline Word rho_by_formula(const Word& w, const Alphabet& ab) {
  require_letters_in(w, ab);
  const RunDecomposition rd = runs(w);
  try {
    detail::check_differentiable(rd, ab);
  } catch (const not_differentiable& e) {
    throw not_closurely_differentiable(e.run_index(), e.what());
  }
  const Word d = derivative(w, ab);
  if (rd.empty()) return d;
  auto strictly_between = [&](std::size_t t) { return t > ab.a() && t < ab.b(); };
  const Word b_word{ab.b()};
  if (rd.count() == 1) {
    return strictly_between(rd.first_length()) ? b_word : d;
  }
  Word out = d;
  if (strictly_between(rd.first_length())) out = b_word + out;
  if (strictly_between(rd.last_length())) out = out + b_word;
  return out;
}

enum class FailureReason {
  letter_not_in_alphabet,
  run_too_long,
  interior_run_not_in_alphabet,
};

inline std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::letter_not_in_alphabet: return "letter-not-in-alphabet";
    case FailureReason::run_too_long: return "run-too-long";
    case FailureReason::interior_run_not_in_alphabet: return "interior-run-not-in-alphabet";
  }
  return "unknown";
}

namespace detail {

struct StepFailure {
  FailureReason reason;
  std::size_t run_index;
};

/// One rho step over raw letters, writing into `out`. Letters of `in` must
/// already be in the alphabet. Boundary runs longer than a become b after
/// closure and are kept; shorter ones are dropped.
inline std::optional<StepFailure> rho_step(std::span<const Letter> in,
                                           const Alphabet& ab,
                                           std::vector<Letter>& out) {
  out.clear();
  const std::size_t n = in.size();
  const Letter a = ab.a();
  const Letter b = ab.b();
  std::size_t run = 0;
  for (std::size_t i = 0; i < n; ++run) {
    std::size_t j = i + 1;
    while (j < n && in[j] == in[i]) ++j;
    const std::size_t len = j - i;
    if (len > b) return StepFailure{FailureReason::run_too_long, run};
    const bool first = i == 0;
    const bool last = j == n;
    if (first || last) {
      if (len > a) out.push_back(b);
      // a single run is padded once, so it contributes at most one letter
      if (first && last) return std::nullopt;
    } else {
      if (len != a && len != b) {
        return StepFailure{FailureReason::interior_run_not_in_alphabet, run};
      }
      out.push_back(static_cast<Letter>(len));
    }
    i = j;
  }
  return std::nullopt;
}

}  // namespace detail

/// Allocation-light smoothness test used by the enumerators.
inline bool is_smooth(std::span<const Letter> w, const Alphabet& ab) {
  for (Letter x : w) {
    if (!ab.contains(x)) return false;
  }
  thread_local std::vector<Letter> buf_a;
  thread_local std::vector<Letter> buf_b;
  if (w.empty()) return true;
  if (detail::rho_step(w, ab, buf_a)) return false;
  while (!buf_a.empty()) {
    if (detail::rho_step(buf_a, ab, buf_b)) return false;
    buf_a.swap(buf_b);
  }
  return true;
}

inline bool is_smooth(const Word& w, const Alphabet& ab) {
  return is_smooth(w.letters(), ab);
}

struct ChainFailure {
  std::size_t level;
  FailureReason reason;
  std::size_t run_index;
};

/// w, rho(w), rho^2(w), ... until the empty word or the first failure.
struct DerivativeChain {
  std::vector<Word> levels;
  bool smooth = false;
  std::optional<ChainFailure> failure;
};

inline DerivativeChain smooth_chain(const Word& w, const Alphabet& ab) {
  DerivativeChain chain;
  chain.levels.push_back(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!ab.contains(w[i])) {
      chain.failure = ChainFailure{0, FailureReason::letter_not_in_alphabet, i};
      return chain;
    }
  }
  std::vector<Letter> next;
  for (std::size_t step = 0; !chain.levels.back().empty(); ++step) {
    if (step > w.size()) {
      throw std::logic_error("derivative chain exceeded its length bound");
    }
    if (auto f = detail::rho_step(chain.levels.back().letters(), ab, next)) {
      chain.failure = ChainFailure{chain.levels.size() - 1, f->reason, f->run_index};
      return chain;
    }
    chain.levels.emplace_back(std::span<const Letter>(next));
  }
  chain.smooth = true;
  return chain;
}

}  // namespace smoothwords
