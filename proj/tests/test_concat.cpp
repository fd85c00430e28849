#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "smoothwords/concat.hpp"

using namespace smoothwords;
using testing_helpers::W;

namespace {

std::vector<Word> words(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(W(t));
  std::sort(out.begin(), out.end(), shortlex_less{});
  return out;
}

bool subset_of(const std::vector<Word>& xs, const DsigmaTable& t) {
  return std::all_of(xs.begin(), xs.end(), [&](const Word& w) { return t.contains(w); });
}

}  // namespace

TEST(DsigmaTable, LiteralSets) {
  EXPECT_EQ(dsigma_table(Alphabet(1, 2)).words(),
            words({"", "1", "2", "12", "21", "11", "22", "112", "211", "121", "122", "221",
                   "212", "1121", "1211", "1212", "2121", "2112", "1221", "1122", "2211",
                   "11211"}));
  EXPECT_EQ(dsigma_table(Alphabet(1, 3)).words(),
            words({"", "1", "3", "13", "31", "11", "33", "113", "311", "131", "313", "111",
                   "3111", "1113", "1311", "1131"}));
  EXPECT_EQ(dsigma_table(Alphabet(1, 4)).words(),
            words({"", "1", "4", "14", "41", "11", "44", "111", "411", "114", "141", "414",
                   "1111", "4111", "1114"}));
  EXPECT_EQ(dsigma_table(Alphabet(1, 6)).words(),
            words({"", "1", "6", "16", "61", "11", "66", "116", "611", "111", "1111"}));
  EXPECT_EQ(dsigma_table(Alphabet(2, 5)).words(),
            words({"", "2", "5", "25", "52", "22", "55", "222"}));
  EXPECT_EQ(dsigma_table(Alphabet(3, 7)).words(),
            words({"", "3", "7", "33", "77", "37", "73"}));
  EXPECT_EQ(dsigma_table(Alphabet(1, 2)).size(), 22u);
}

TEST(DsigmaTable, ContainsEmptyAndIsMirrorClosed) {
  for (auto [a, b] : {std::pair{1u, 2u}, {1u, 3u}, {1u, 4u}, {1u, 5u}, {2u, 3u}, {2u, 9u},
                      {3u, 4u}, {5u, 11u}}) {
    const auto t = dsigma_table(Alphabet(a, b));
    EXPECT_TRUE(t.contains(Word{}));
    for (const Word& w : t.words()) EXPECT_TRUE(t.contains(mirror(w))) << to_text(w);
  }
}

TEST(MiddleWitness, Examples) {
  const Alphabet ab(1, 2);
  EXPECT_EQ(middle_witness(W("2"), Word{}, W("2"), ab), W("2"));
  EXPECT_EQ(middle_witness(W("12"), Word{}, W("12"), ab), W("11"));
  EXPECT_EQ(middle_witness(Word{}, Word{}, Word{}, ab), Word{});
  EXPECT_THROW(middle_witness(W("22"), Word{}, W("2"), ab), precondition_violated);
}

TEST(CertifyConcat, SmallAlphabetsHaveNoViolations) {
  for (auto [a, b, L] : {std::tuple{1u, 2u, 8u}, {3u, 4u, 6u}, {2u, 3u, 6u}, {1u, 4u, 6u}}) {
    const Alphabet ab(a, b);
    const auto cert = certify_concat(ab, L);
    EXPECT_TRUE(cert.certified()) << ab.text();
    EXPECT_GT(cert.tested, 0u);
    EXPECT_TRUE(subset_of(cert.empirical_middles, dsigma_table(ab)));
  }
}

// The literal {1,3} table misses 133 and 331: u=13, x=1113, v=33 gives the
// smooth word 13111333 with D = 133 while D(u) = D(v) = empty.
TEST(CertifyConcat, OneThreeTableMissesTwoMiddleWords) {
  const Alphabet ab(1, 3);
  const Word uxv = W("13111333");
  EXPECT_TRUE(oracle::smooth(testing_helpers::to_letters(uxv), 1, 3));
  auto d = oracle::derivative(testing_helpers::to_letters(uxv), 1, 3);
  ASSERT_TRUE(d);
  EXPECT_EQ(testing_helpers::from_letters(*d), W("133"));
  EXPECT_EQ(middle_witness(W("13"), W("1113"), W("33"), ab), W("133"));
  EXPECT_FALSE(dsigma_table(ab).contains(W("133")));

  const auto cert = certify_concat(ab, 8);
  EXPECT_FALSE(cert.certified());
  std::set<std::pair<Word, Word>> kinds;
  for (const auto& v : cert.violations) {
    ASSERT_EQ(v.reason, ViolationReason::not_in_table);
    kinds.insert({v.x, *v.middle});
  }
  const std::set<std::pair<Word, Word>> expected{{W("1113"), W("133")}, {W("3111"), W("331")}};
  EXPECT_EQ(kinds, expected);
}

TEST(CertifyConcat, ViolationsAreSortedAndDeterministicAcrossJobs) {
  const Alphabet ab(1, 3);
  const auto one = certify_concat(ab, 6, {1, nullptr});
  const auto many = certify_concat(ab, 6, {4, nullptr});
  EXPECT_EQ(one.tested, many.tested);
  EXPECT_EQ(one.empirical_middles, many.empirical_middles);
  ASSERT_EQ(one.violations.size(), many.violations.size());
  for (std::size_t i = 0; i < one.violations.size(); ++i) {
    EXPECT_EQ(one.violations[i].u, many.violations[i].u);
    EXPECT_EQ(one.violations[i].v, many.violations[i].v);
  }
  EXPECT_TRUE(std::is_sorted(one.violations.begin(), one.violations.end()));
}

TEST(EmpiricalMiddleSet, Examples) {
  const auto m12 = empirical_middle_set(Alphabet(1, 2), 10);
  EXPECT_TRUE(subset_of(m12, dsigma_table(Alphabet(1, 2))));
  const auto m25 = empirical_middle_set(Alphabet(2, 5), 8);
  EXPECT_TRUE(subset_of(m25, dsigma_table(Alphabet(2, 5))));
  for (auto [a, b] : {std::pair{1u, 2u}, {3u, 5u}}) {
    const auto m = empirical_middle_set(Alphabet(a, b), 1);
    EXPECT_TRUE(std::find(m.begin(), m.end(), Word{}) != m.end());
  }
}

TEST(ThreeWay, DecomposesEveryTripleAtSmallSize) {
  for (auto [a, b] : {std::pair{1u, 2u}, {1u, 3u}, {2u, 5u}}) {
    const auto cert = certify_three_way(Alphabet(a, b), 5);
    EXPECT_GT(cert.tested, 0u);
    EXPECT_TRUE(cert.violations.empty()) << a << "," << b;
  }
  const auto t = dsigma_table(Alphabet(1, 2));
  auto split = three_way_witness(W("12"), W("1"), W("12"), t);
  ASSERT_TRUE(split);
  // D(12112) = 12, D(12) = D(1) = empty
  EXPECT_EQ(split->first + split->second, W("12"));
}

TEST(PowerDecomposition, Examples) {
  const Alphabet ab(1, 2);
  const auto pd = power_decomposition(W("12"), 2, ab);
  ASSERT_EQ(pd.levels.size(), 1u);
  EXPECT_EQ(pd.levels[0].level, 1u);
  EXPECT_EQ(pd.levels[0].witness, W("11"));

  const auto mirrored = power_decomposition(W("21"), 2, ab);
  ASSERT_EQ(mirrored.levels.size(), 1u);
  EXPECT_EQ(mirrored.levels[0].witness, W("11"));
}

TEST(PowerDecomposition, BiquadrateHasEveryLevel) {
  const Alphabet ab(1, 3);
  const Word u = W("3111313111");
  const auto pd = power_decomposition(u, 4, ab);
  // D(u) = 31113 has three runs, D^2(u) = 3 has one: k = 2
  ASSERT_EQ(pd.levels.size(), 2u);
  for (const auto& l : pd.levels) {
    EXPECT_EQ((l.base_derivative + l.witness).pow(3) + l.base_derivative, l.power_derivative);
    EXPECT_EQ(l.power_derivative, derivative_power(u.pow(4), l.level, ab));
    EXPECT_TRUE(dsigma_table(ab).contains(l.witness));
  }
}

TEST(PowerDecomposition, Errors) {
  EXPECT_THROW(power_decomposition(W("12"), 3, Alphabet(1, 2)), precondition_violated);
  EXPECT_THROW(power_decomposition(W("12"), 1, Alphabet(1, 2)), invalid_argument);
  // single-run base: no levels
  EXPECT_TRUE(power_decomposition(W("1"), 2, Alphabet(1, 2)).levels.empty());
}
