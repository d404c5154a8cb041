#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "hnn/minstruct.hpp"

namespace hnn::order {
namespace {

F2Element om(std::initializer_list<long> idx) { return F2Element::omega(idx); }

/// Longest chain a < x_1 < ... < x_k < b through `elems`, by memoised
/// recursion on the raw less() relation; -1 when a < b fails.
long brute_chain(const F2Element& a, const F2Element& b, const std::vector<F2Element>& elems) {
  if (!less(a, b)) return -1;
  std::map<std::size_t, long> memo;  // longest chain x < ... < b starting at elems[i], counting x
  std::function<long(std::size_t)> from = [&](std::size_t i) -> long {
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    long best = 1;
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (less(elems[i], elems[j]) && less(elems[j], b)) best = std::max(best, 1 + from(j));
    return memo[i] = best;
  };
  long best = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (less(a, elems[i]) && less(elems[i], b)) best = std::max(best, from(i));
  return best;
}

TEST(Add, Examples) {
  EXPECT_EQ(add(om({0, 1}), om({1})), om({0}));
  EXPECT_EQ(add(om({0, 3}), F2Element()), om({0, 3}));
  EXPECT_EQ(add(om({0}), om({3})), om({0, 3}));
  EXPECT_TRUE(add(om({2, 5}), om({2, 5})).is_zero());
}

TEST(Add, ModeMismatch) {
  const F2Element i = F2Element::unit(Mode::I, {1, -2});
  EXPECT_THROW(add(om({0}), i), ModeMismatch);
  EXPECT_THROW(less(om({0}), i), ModeMismatch);
  EXPECT_THROW(p_n(0, om({0}), i), ModeMismatch);
}

TEST(Less, Examples) {
  EXPECT_TRUE(less(F2Element(), om({0})));
  EXPECT_FALSE(less(om({0, 2}), om({1, 2})));
  EXPECT_FALSE(less(om({1, 2}), om({0, 2})));
  EXPECT_TRUE(equivalent(om({0, 2}), om({1, 2})));
  EXPECT_TRUE(less(om({1}), om({0, 3})));
  EXPECT_FALSE(less(F2Element(), F2Element()));
}

TEST(Less, ModeIOrderIsLexicographic) {
  auto u = [](long o, long k) { return F2Element::unit(Mode::I, {o, k}); };
  EXPECT_TRUE(less(u(0, 100), u(1, -100)));
  EXPECT_TRUE(less(u(1, -5), u(1, -4)));
  EXPECT_TRUE(less(u(1, 7), u(2, -7)));
  EXPECT_FALSE(valid_point(Mode::I, {0, -1}));
  EXPECT_TRUE(valid_point(Mode::I, {3, -1}));
  EXPECT_FALSE(valid_point(Mode::Omega, {1, 0}));
}

TEST(PN, Examples) {
  EXPECT_TRUE(p_n(0, om({1}), om({2})));
  EXPECT_TRUE(p_n(2, om({0}), om({3})));
  EXPECT_FALSE(p_n(1, om({0}), om({3})));
  EXPECT_FALSE(p_n(0, om({3}), om({0})));
  EXPECT_TRUE(p_n(0, F2Element(), om({0})));
}

TEST(PN, ModeIGapsAcrossCopiesAreInfinite) {
  auto u = [](long o, long k) { return F2Element::unit(Mode::I, {o, k}); };
  EXPECT_FALSE(points_between(u(0, 4), u(1, 0)).has_value());
  EXPECT_FALSE(points_between(F2Element(Mode::I), u(2, 0)).has_value());
  EXPECT_EQ(points_between(u(2, -3), u(2, 3)), 5);
  for (long n = 0; n <= 10; ++n) EXPECT_FALSE(p_n(n, u(1, 0), u(2, 0)));
}

TEST(PN, ClosedFormMatchesBruteForceOnOmega) {
  const auto elems = elements(omega_domain(6));  // every support <= 6
  ASSERT_EQ(elems.size(), 64u);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const long k = brute_chain(a, b, elems);
      for (long n = 0; n <= 6; ++n)
        ASSERT_EQ(p_n(n, a, b), k == n) << to_string(a) << " " << to_string(b) << " n=" << n;
    }
}

TEST(PN, ClosedFormMatchesBruteForceWithinACopy) {
  // Within a single Z-copy every intermediate point is in the window, so the
  // bounded chain search sees the whole gap.
  const auto d = i_domain(2, 3, 3, 2);
  const auto elems = elements(d);
  std::vector<F2Element> probes;
  for (const auto& p : d.points) probes.push_back(F2Element::unit(Mode::I, p));
  for (const auto& a : probes)
    for (const auto& b : probes) {
      const auto ta = *degree(a).top, tb = *degree(b).top;
      if (ta.ordinal != tb.ordinal || !less(a, b)) continue;
      const long k = brute_chain(a, b, elems);
      EXPECT_EQ(points_between(a, b), k) << to_string(a) << " " << to_string(b);
      EXPECT_TRUE(p_n(k, a, b));
    }
}

TEST(PN, PartitionIsExclusive) {
  const auto elems = elements(omega_domain(5));
  for (const auto& a : elems)
    for (const auto& b : elems) {
      int holds = 0;
      for (long n = 0; n <= 8; ++n) holds += p_n(n, a, b);
      EXPECT_EQ(holds, less(a, b) ? 1 : 0);
    }
}

TEST(Degree, SuccessorAndPredecessor) {
  EXPECT_EQ(successor(Mode::Omega, DegreeClass{}), (DegreeClass{IndexPoint{0, 0}}));
  EXPECT_FALSE(predecessor(Mode::Omega, DegreeClass{}).has_value());
  EXPECT_EQ(predecessor(Mode::Omega, DegreeClass{IndexPoint{0, 0}}), DegreeClass{});
  EXPECT_EQ(predecessor(Mode::I, DegreeClass{IndexPoint{2, -7}}), (DegreeClass{IndexPoint{2, -8}}));
  EXPECT_EQ(successor(Mode::I, DegreeClass{IndexPoint{2, -7}}), (DegreeClass{IndexPoint{2, -6}}));
}

TEST(Text, RoundTrip) {
  EXPECT_EQ(parse_element(Mode::Omega, "{0,3,5}"), om({0, 3, 5}));
  EXPECT_EQ(parse_element(Mode::Omega, "{5, 0}"), om({0, 5}));
  EXPECT_TRUE(parse_element(Mode::Omega, "{}").is_zero());
  const auto i = parse_element(Mode::I, "{(0,2),(3,-1)}");
  EXPECT_EQ(to_string(i), "{(0,2),(3,-1)}");
  EXPECT_EQ(to_string(om({0, 3})), "{0,3}");
}

TEST(Text, Errors) {
  EXPECT_THROW(parse_element(Mode::Omega, "{0,0}"), std::invalid_argument);
  EXPECT_THROW(parse_element(Mode::Omega, "0,1"), std::invalid_argument);
  EXPECT_THROW(parse_element(Mode::Omega, "{-1}"), std::invalid_argument);
  EXPECT_THROW(parse_element(Mode::I, "{(0,-1)}"), std::invalid_argument);
  EXPECT_THROW(parse_element(Mode::I, "{3}"), std::invalid_argument);
}

TEST(Domain, Sizes) {
  EXPECT_EQ(elements(omega_domain(8)).size(), 256u);
  const auto d = i_domain(3, 3, 3, 2);
  EXPECT_EQ(d.points.size(), 24u);
  EXPECT_EQ(elements(d).size(), 1u + 24u + 24u * 23u / 2u);
}

TEST(Axioms, OmegaBoundEight) {
  const auto rep = axiom_suite(omega_domain(8));
  ASSERT_EQ(rep.axioms.size(), 7u);
  for (const auto& a : rep.axioms) EXPECT_TRUE(a.pass()) << a.axiom << " " << a.first_failure;
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.domain_size, 256u);
}

TEST(Axioms, ModeIWindow) {
  const auto rep = axiom_suite(i_domain(3, 3, 3, 2));
  for (const auto& a : rep.axioms) EXPECT_TRUE(a.pass()) << a.axiom << " " << a.first_failure;
  EXPECT_TRUE(rep.pass());
}

TEST(Axioms, LiteralSecondClauseOfSevenFailsOnlyAtZero) {
  const auto rep = axiom_suite(omega_domain(4));
  EXPECT_EQ(rep.literal_axiom7.failures, 1u);
  EXPECT_EQ(rep.literal_axiom7.first_failure, "{} {}");
}

TEST(Axioms, SevenSpot) {
  EXPECT_TRUE(less(om({0}), om({1})));
  EXPECT_TRUE(equivalent(add(om({0}), om({1})), om({1})));
}

TEST(Embedding, BoundSix) {
  const auto rep = embedding_check(6);
  EXPECT_TRUE(rep.pass()) << rep.first_failure;
  EXPECT_EQ(rep.pairs, 64u * 64u);
}

TEST(Embedding, PreservesOrderOfUnits) {
  const auto a = F2Element::unit(Mode::I, {0, 2}), b = F2Element::unit(Mode::I, {0, 5});
  EXPECT_EQ(less(a, b), less(om({2}), om({5})));
}

}  // namespace
}  // namespace hnn::order
