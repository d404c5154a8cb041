#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "hnn/word.hpp"

using namespace hnn;

namespace {

Word W(const char* s) { return parse_word(s); }

TEST(Word, ConcatMergesAdjacentSymbols) {
  EXPECT_EQ(concat(W("g0^2"), W("g0^-2")), Word{});
  EXPECT_EQ(to_string(concat(W("g0"), W("g1"))), "g0 g1");
  EXPECT_EQ(concat(W("g0 t1"), W("t1^-1")), W("g0"));
}

TEST(Word, ConcatMatchesNaiveLetterMerge) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = gen::random_word(rng, 2, 2, 6);
    const Word v = gen::random_word(rng, 2, 2, 6);
    // naive: stack of unit letters with cancellation
    std::vector<Letter> stack;
    for (const auto& w : {u, v})
      for (const auto& l : unit_letters(w)) {
        if (!stack.empty() && stack.back().symbol == l.symbol && stack.back().exponent == -l.exponent)
          stack.pop_back();
        else
          stack.push_back(l);
      }
    EXPECT_EQ(concat(u, v), Word(std::span<const Letter>(stack)));
  }
}

TEST(Word, Invert) {
  EXPECT_EQ(invert(Word{}), Word{});
  EXPECT_EQ(to_string(invert(W("g0 g1^2"))), "g1^-2 g0^-1");
  EXPECT_EQ(to_string(invert(W("t1 g0 t1^-1"))), "t1 g0^-1 t1^-1");
}

TEST(Word, TLength) {
  EXPECT_EQ(t_length(Word{}), 0);
  EXPECT_EQ(t_length(W("t1^2 g0 t1^-1")), 3);
  EXPECT_EQ(t_length(W("g0^5")), 0);
  EXPECT_EQ(t_length(W("t1 t2^-3 g0 t1"), 2), 3);
}

TEST(Word, CyclicPermutations) {
  EXPECT_EQ(cyclic_permutations(Word{}), std::vector<Word>{Word{}});
  const auto xt = cyclic_permutations(W("g0 t1"));
  ASSERT_EQ(xt.size(), 2u);
  EXPECT_NE(std::find(xt.begin(), xt.end(), W("g0 t1")), xt.end());
  EXPECT_NE(std::find(xt.begin(), xt.end(), W("t1 g0")), xt.end());
  EXPECT_EQ(cyclic_permutations(W("g0^2")), std::vector<Word>{W("g0^2")});
}

TEST(Word, TextRoundTripAndErrors) {
  EXPECT_EQ(to_string(W("g0^2 t1^-1 g3")), "g0^2 t1^-1 g3");
  EXPECT_EQ(to_string(W("e")), "e");
  EXPECT_EQ(W("  g1   g1 "), W("g1^2"));
  EXPECT_THROW(W(""), ParseError);
  EXPECT_THROW(W("x1"), ParseError);
  EXPECT_THROW(W("g"), ParseError);
  EXPECT_THROW(W("t0"), ParseError);
  EXPECT_THROW(W("g1^"), ParseError);
  EXPECT_THROW(W("g1^0"), ParseError);
  EXPECT_THROW(W("g-1"), ParseError);
}

TEST(WordProperty, AlgebraicLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word u = gen::random_word(rng, 2, 2, 7);
    const Word v = gen::random_word(rng, 2, 2, 7);
    const Word w = gen::random_word(rng, 2, 2, 7);
    EXPECT_EQ(concat(concat(u, v), w), concat(u, concat(v, w)));
    EXPECT_EQ(invert(invert(u)), u);
    EXPECT_TRUE(concat(u, invert(u)).empty());
    EXPECT_LE(t_length(concat(u, v)), t_length(u) + t_length(v));
    const auto perms = cyclic_permutations(u);
    EXPECT_LE(static_cast<long>(perms.size()), std::max(1L, u.unit_length()));
    EXPECT_NE(std::find(perms.begin(), perms.end(), u), perms.end());
    EXPECT_EQ(parse_word(to_string(u)), u);
    for (std::size_t i = 1; i < u.size(); ++i) EXPECT_NE(u[i - 1].symbol, u[i].symbol);
  }
}

TEST(WordProperty, TLengthDropsOnlyByJunctionCancellation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word u = gen::random_word(rng, 2, 2, 6);
    const Word v = gen::random_word(rng, 2, 2, 6);
    auto units = unit_letters(u);
    long cancelled_stable = 0;
    for (const auto& l : unit_letters(v)) {
      if (!units.empty() && units.back().symbol == l.symbol && units.back().exponent == -l.exponent) {
        if (l.symbol.is_stable()) ++cancelled_stable;
        units.pop_back();
      } else {
        units.push_back(l);
      }
    }
    EXPECT_EQ(t_length(concat(u, v)), t_length(u) + t_length(v) - 2 * cancelled_stable);
  }
}

}  // namespace
