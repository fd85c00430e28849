#pragma once

#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "smoothwords/word.hpp"

namespace testing_helpers {

inline smoothwords::Word W(std::string_view s) { return smoothwords::parse_word_text(s); }

inline smoothwords::Word from_letters(const oracle::Letters& l) {
  return smoothwords::Word(std::vector<smoothwords::Letter>(l.begin(), l.end()));
}

inline oracle::Letters to_letters(const smoothwords::Word& w) {
  return oracle::Letters(w.begin(), w.end());
}

/// All words over {a,b} of every length 0..max_len.
inline std::vector<smoothwords::Word> all_words_up_to(std::size_t max_len, unsigned a, unsigned b) {
  std::vector<smoothwords::Word> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (auto& l : oracle::all_words(n, a, b)) out.push_back(from_letters(l));
  }
  return out;
}

}  // namespace testing_helpers
