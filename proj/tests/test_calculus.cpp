#include <gtest/gtest.h>

#include "helpers.hpp"
#include "smoothwords/calculus.hpp"

using namespace smoothwords;
using testing_helpers::W;

TEST(Differentiable, Examples) {
  EXPECT_FALSE(is_differentiable(W("21112"), Alphabet(1, 2)));
  EXPECT_TRUE(is_differentiable(W("122"), Alphabet(1, 2)));
  EXPECT_TRUE(is_differentiable(W("333111333131333111333"), Alphabet(1, 3)));
  EXPECT_TRUE(is_differentiable(Word{}, Alphabet(1, 2)));
  // boundary runs may take any length up to b
  EXPECT_TRUE(is_differentiable(W("11313"), Alphabet(1, 3)));
  EXPECT_FALSE(is_differentiable(W("31133"), Alphabet(1, 3)));
  EXPECT_THROW(is_differentiable(W("123"), Alphabet(1, 2)), invalid_argument);
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(W("121"), Alphabet(1, 2)), W("1"));
  EXPECT_EQ(derivative(W("1"), Alphabet(1, 2)), Word{});
  EXPECT_EQ(derivative(W("1"), Alphabet(1, 5)), Word{});
  EXPECT_EQ(derivative(W("333111333131333111333"), Alphabet(1, 3)), W("333111333"));
  EXPECT_EQ(derivative(Word{}, Alphabet(1, 2)), Word{});
}

TEST(Derivative, ErrorCarriesRunIndex) {
  try {
    derivative(W("21112"), Alphabet(1, 2));
    FAIL() << "expected not_differentiable";
  } catch (const not_differentiable& e) {
    EXPECT_EQ(e.run_index(), 1u);
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(W("3311133313133311133"), Alphabet(1, 3)), W("333111333"));
  EXPECT_EQ(rho(W("2"), Alphabet(1, 2)), Word{});
  EXPECT_EQ(rho(W("22122"), Alphabet(1, 2)), W("212"));
  EXPECT_THROW(rho(W("222"), Alphabet(1, 2)), not_closurely_differentiable);
  EXPECT_THROW(rho(W("1331"), Alphabet(1, 3)), not_closurely_differentiable);
}

TEST(RhoByFormula, Examples) {
  EXPECT_EQ(rho_by_formula(W("11"), Alphabet(1, 3)), W("3"));
  EXPECT_EQ(rho_by_formula(W("121"), Alphabet(1, 2)), W("1"));
  EXPECT_EQ(rho_by_formula(W("11311"), Alphabet(1, 3)), W("313"));
  EXPECT_EQ(rho(W("11311"), Alphabet(1, 3)), W("313"));
  EXPECT_THROW(rho_by_formula(W("1331"), Alphabet(1, 3)), not_closurely_differentiable);
}

TEST(RhoByFormula, AgreesWithDirectRhoExhaustively) {
  for (auto [a, b] : {std::pair{1u, 2u}, {1u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 4u}}) {
    const Alphabet ab(a, b);
    for (const Word& w : testing_helpers::all_words_up_to(10, a, b)) {
      bool direct_ok = true;
      Word direct;
      try {
        direct = rho(w, ab);
      } catch (const not_closurely_differentiable&) {
        direct_ok = false;
      }
      if (direct_ok) {
        ASSERT_EQ(rho_by_formula(w, ab), direct) << to_text(w);
      } else {
        ASSERT_THROW(rho_by_formula(w, ab), not_closurely_differentiable) << to_text(w);
      }
    }
  }
}

TEST(SmoothChain, Examples) {
  const auto c1 = smooth_chain(W("22"), Alphabet(1, 2));
  EXPECT_TRUE(c1.smooth);
  EXPECT_EQ(c1.levels, (std::vector<Word>{W("22"), W("2"), Word{}}));

  const auto c2 = smooth_chain(W("111"), Alphabet(1, 2));
  EXPECT_FALSE(c2.smooth);
  ASSERT_TRUE(c2.failure);
  EXPECT_EQ(c2.failure->level, 0u);
  EXPECT_EQ(c2.failure->reason, FailureReason::run_too_long);

  const auto c3 = smooth_chain(W("3111313111").pow(4), Alphabet(1, 3));
  EXPECT_TRUE(c3.smooth);
  EXPECT_TRUE(c3.levels.back().empty());
}

TEST(SmoothChain, EmptyWordIsSmooth) {
  const auto c = smooth_chain(Word{}, Alphabet(1, 2));
  EXPECT_TRUE(c.smooth);
  EXPECT_EQ(c.levels.size(), 1u);
}

TEST(SmoothChain, ReportsForeignLettersAndInteriorRuns) {
  const auto c = smooth_chain(W("1231"), Alphabet(1, 2));
  EXPECT_FALSE(c.smooth);
  EXPECT_EQ(c.failure->reason, FailureReason::letter_not_in_alphabet);
  EXPECT_EQ(c.failure->run_index, 2u);

  // rho(1331) fails on the interior run 33 at level 0
  const auto d = smooth_chain(W("13313"), Alphabet(1, 3));
  EXPECT_FALSE(d.smooth);
  EXPECT_EQ(d.failure->reason, FailureReason::interior_run_not_in_alphabet);
  EXPECT_EQ(d.failure->level, 0u);
}

TEST(SmoothChain, LevelsFollowRhoAndShrink) {
  const Alphabet ab(1, 3);
  for (const Word& w : testing_helpers::all_words_up_to(10, 1, 3)) {
    const auto c = smooth_chain(w, ab);
    ASSERT_LE(c.levels.size() - 1, w.size());
    for (std::size_t i = 1; i < c.levels.size(); ++i) {
      ASSERT_EQ(c.levels[i], rho(c.levels[i - 1], ab));
      ASSERT_LT(c.levels[i].size(), c.levels[i - 1].size());
    }
    ASSERT_EQ(c.smooth, is_smooth(w, ab));
  }
}

TEST(IsSmooth, AgreesWithNaiveOracle) {
  for (auto [a, b] : {std::pair{1u, 2u}, {1u, 3u}, {1u, 4u}, {2u, 3u}, {2u, 4u}, {3u, 4u}}) {
    const Alphabet ab(a, b);
    for (const Word& w : testing_helpers::all_words_up_to(11, a, b)) {
      ASSERT_EQ(is_smooth(w, ab), oracle::smooth(testing_helpers::to_letters(w), a, b))
          << ab.text() << " " << to_text(w);
    }
  }
}

TEST(DerivativePower, IteratesD) {
  const Alphabet ab(1, 3);
  const Word u = W("3111313111");
  EXPECT_EQ(derivative_power(u, 0, ab), u);
  EXPECT_EQ(derivative_power(u, 1, ab), W("31113"));
  EXPECT_EQ(derivative_power(u, 2, ab), W("3"));
  EXPECT_EQ(derivative_power(u, 3, ab), Word{});
}
