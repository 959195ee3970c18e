#include <gtest/gtest.h>

#include <random>

#include "relpat/member.hpp"
#include "relpat/reversal.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace relpat {
namespace {

using testing::make;

TEST(Combination, DependentGroupCoefficient) {
  const auto c = nonneg_combination({4, 0, 2, 2}, {{2, 0, 1, 1}}, CombinationMode::strictly_positive);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, CoefficientVector{2});
}

TEST(Combination, ZeroTarget) {
  const auto c = nonneg_combination({0, 0}, {{1, 0}, {0, 2}}, CombinationMode::nonnegative);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (CoefficientVector{0, 0}));
  EXPECT_FALSE(nonneg_combination({0, 0}, {{1, 0}}, CombinationMode::strictly_positive));
}

TEST(Combination, Errors) {
  try {
    nonneg_combination({1, 1}, {{0, 0}}, CombinationMode::nonnegative);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroGenerator);
  }
  try {
    nonneg_combination({1, 1}, {{1}}, CombinationMode::nonnegative);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Combination, RandomAgreesWithBoxEnumeration) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> entry(0, 3);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int round = 0; round < 400; ++round) {
    const std::size_t d = dim(rng);
    std::vector<std::vector<std::size_t>> gens(count(rng));
    for (auto& g : gens) {
      do {
        g.assign(d, 0);
        for (auto& x : g) x = entry(rng);
      } while (std::all_of(g.begin(), g.end(), [](std::size_t x) { return x == 0; }));
    }
    std::vector<std::size_t> target(d);
    for (auto& x : target) x = entry(rng) * 2;
    for (bool strict : {false, true}) {
      const auto mode = strict ? CombinationMode::strictly_positive : CombinationMode::nonnegative;
      const auto got = nonneg_combination(target, gens, mode);
      EXPECT_EQ(got.has_value(), testing::combination_exists(target, gens, strict));
      if (got) {
        for (std::size_t j = 0; j < d; ++j) {
          std::size_t s = 0;
          for (std::size_t i = 0; i < gens.size(); ++i) s += (*got)[i] * gens[i][j];
          EXPECT_EQ(s, target[j]);
        }
        if (strict) {
          for (auto c : *got) EXPECT_GE(c, 1u);
        }
      }
    }
  }
}

TEST(MemberLen, NonErasingPairWord) {
  const Word w = "aa" "ab" "aaaaaaaaa" "ab" "aaaaa";
  const auto hit = member_len(w, testing::nonerasing_p(), false);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(*hit->coefficients, (CoefficientVector{1, 3, 1}));
  EXPECT_EQ(hit->anchoring->gaps, (std::vector<std::size_t>{2, 9, 5}));
  EXPECT_FALSE(member_len(w, testing::nonerasing_q(), false).has_value());
}

TEST(MemberLen, WidePairWord) {
  const Word w = "a" + Word(100, 'b') + Word(9, 'a') + "a" + Word(100, 'b');
  EXPECT_TRUE(member_len(w, testing::wide_p()).has_value());
  EXPECT_FALSE(member_len(w, testing::wide_q()).has_value());
}

TEST(MemberLen, AllTerminal) {
  const auto rp = make("ab", "len", "abb");
  EXPECT_TRUE(member_len("abb", rp));
  EXPECT_FALSE(member_len("ab", rp));
}

TEST(MemberLen, EndBlocksPinAnchoring) {
  const auto rp = make("ab", "len", "ab x1 ba");
  EXPECT_TRUE(member_len("abba", rp));
  EXPECT_TRUE(member_len("ababba", rp));
  EXPECT_FALSE(member_len("aabba", rp));
  EXPECT_FALSE(member_len("abbab", rp));
}

TEST(MemberLen, WrongKind) {
  EXPECT_THROW(member_len("a", make("ab", "eq", "x1")), Error);
}

TEST(MemberLen, ContentIndependence) {
  const auto rp = testing::dependent_groups();
  std::mt19937_64 rng(2);
  for (const auto& gw : sample_lz_words(rp, {2, true}, 30, 77)) {
    const auto hit = member_len(gw.word, rp);
    ASSERT_TRUE(hit.has_value());
    // Rewrite every gap letter and keep the terminals in place.
    Word w = gw.word;
    const auto& anch = *hit->anchoring;
    std::vector<bool> fixed(w.size(), false);
    const auto& blocks = rp.blocks().terminal_blocks;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      for (std::size_t k = 0; k < blocks[j].size(); ++k) fixed[anch.positions[j] + k] = true;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!fixed[i]) w[i] = (rng() & 1) ? 'a' : 'b';
    }
    EXPECT_TRUE(member_len(w, rp).has_value()) << w;
  }
}

TEST(MemberUnify, Palindromes) {
  const auto rp = make("ab", "rev", "x1 x2", "(x1,x2)");
  EXPECT_TRUE(member_unify("abba", rp));
  EXPECT_FALSE(member_unify("aba", rp));
  EXPECT_TRUE(member_unify("", rp));
}

TEST(MemberUnify, PalindromeTripleWitness) {
  const auto sigma = Alphabet::from_string("ab");
  const auto source = triple_palindrome_pattern(sigma);
  const auto hit = member_unify("aabbaaaa", source);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(apply(source.pattern(), hit->substitution), "aabbaaaa");
  const auto at = anti_telltale(testing::palindrome_words(), testing::palindrome_decompositions(), sigma);
  EXPECT_FALSE(member_unify("aabbaaaa", at.pattern));
}

TEST(MemberUnify, ShortestFirstWitness) {
  const auto rp = make("ab", "eq", "x a y", "(x,y)");
  const auto hit = member_unify("aaa", rp);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->substitution.at("x"), "a");
  EXPECT_FALSE(member_unify("aab", rp));
}

TEST(MemberUnify, NonErasing) {
  const auto rp = make("ab", "eq", "x y", "(x,y)");
  EXPECT_TRUE(member_unify("", rp, true));
  EXPECT_FALSE(member_unify("", rp, false));
  EXPECT_TRUE(member_unify("abab", rp, false));
}

TEST(MemberUnify, Guards) {
  const auto rp = make("ab", "eq", "x1 x2", "");
  try {
    member_unify(Word(31, 'a'), rp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InstanceTooLarge);
  }
  EXPECT_THROW(member_unify("ab", rp, true, UnifyGuards{1, 30}), Error);
  EXPECT_NO_THROW(member_unify(Word(40, 'a'), rp, true, UnifyGuards{12, 40}));
}

TEST(Member, ErasingIsMonotone) {
  std::mt19937_64 rng(31);
  const auto sigma = Alphabet::from_string("ab");
  for (auto kind : {RelationKind::eq, RelationKind::rev, RelationKind::len}) {
    for (int round = 0; round < 10; ++round) {
      const auto rp = testing::random_pattern(rng, kind, sigma, {2, 3, 5, 2});
      for (const auto& w : words_upto(sigma, 7)) {
        if (is_member(w, rp, false)) EXPECT_TRUE(is_member(w, rp, true));
      }
    }
  }
}

TEST(Member, WitnessReconstructsWord) {
  std::mt19937_64 rng(37);
  const auto sigma = Alphabet::from_string("ab");
  for (auto kind : {RelationKind::eq, RelationKind::rev, RelationKind::len}) {
    for (int round = 0; round < 10; ++round) {
      const auto rp = testing::random_pattern(rng, kind, sigma, {2, 3, 5, 2});
      for (const auto& w : words_upto(sigma, 7)) {
        if (auto hit = member(w, rp)) {
          EXPECT_EQ(apply(rp.pattern(), hit->substitution), w);
          EXPECT_TRUE(validate(rp, hit->substitution).valid);
        }
      }
    }
  }
}

class OracleEquivalence : public ::testing::TestWithParam<RelationKind> {};

TEST_P(OracleEquivalence, AcceptedEqualsGenerated) {
  std::mt19937_64 rng(100 + static_cast<int>(GetParam()));
  const auto sigma = Alphabet::from_string("ab");
  for (int round = 0; round < 8; ++round) {
    const auto rp = testing::random_pattern(rng, GetParam(), sigma, {2, 3, 5, 2});
    for (bool erasing : {true, false}) {
      const auto accepted = lang_upto(rp, 8, {erasing});
      const auto generated = testing::generated_words(rp, 8, erasing);
      EXPECT_EQ(std::set<Word>(accepted.begin(), accepted.end()), generated)
          << serialize_pattern_file(rp);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, OracleEquivalence,
                         ::testing::Values(RelationKind::eq, RelationKind::rev, RelationKind::len));

TEST(Slice, WordsUptoShortLex) {
  const auto w = words_upto(Alphabet::from_string("ab"), 2);
  EXPECT_EQ(w, (std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"}));
}

TEST(Slice, AllTerminal) {
  EXPECT_EQ(lang_upto(make("ab", "len", "abb"), 5), std::vector<Word>{"abb"});
}

TEST(Slice, EvenPalindromes) {
  EXPECT_EQ(lang_upto(make("ab", "rev", "x1 x2", "(x1,x2)"), 4),
            (std::vector<Word>{"", "aa", "bb", "aaaa", "abba", "baab", "bbbb"}));
}

TEST(Slice, NonErasingPairEmptyBelow14) {
  EXPECT_TRUE(lang_upto(testing::nonerasing_p(), 12, {false}).empty());
  EXPECT_FALSE(lang_upto(testing::nonerasing_p(), 14, {false}).empty());
}

TEST(Slice, Budget) {
  try {
    lang_upto(make("abc", "len", "x1"), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Slice, CompareSelfAndSubset) {
  const auto p = make("ab", "len", "x1 x2 aaa x3 x4", "(x1,x2) (x2,x3) (x3,x4)");
  const auto q = make("ab", "len", "y1 y2 aaa y3 y4", "(y1,y2) (y3,y4)");
  EXPECT_EQ(slice_compare(p, p, 8).relation, SliceRelation::equal);
  const auto v = slice_compare(p, q, 10);
  EXPECT_EQ(v.relation, SliceRelation::subset);
  EXPECT_FALSE(v.in_a_not_b.has_value());
  ASSERT_TRUE(v.in_b_not_a.has_value());
  EXPECT_TRUE(is_member(*v.in_b_not_a, q));
  EXPECT_FALSE(is_member(*v.in_b_not_a, p));
}

TEST(Slice, WidePairCandidateComparison) {
  const Word w = "a" + Word(100, 'b') + Word(9, 'a') + "a" + Word(100, 'b');
  const auto v = compare_on_candidates(testing::wide_p(), testing::wide_q(), {w});
  EXPECT_TRUE(v.candidates_only);
  ASSERT_TRUE(v.in_a_not_b.has_value());
  EXPECT_EQ(*v.in_a_not_b, w);
}

}  // namespace
}  // namespace relpat
