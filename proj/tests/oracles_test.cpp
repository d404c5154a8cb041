#include <gtest/gtest.h>

#include <set>

#include "hnn/constructions.hpp"
#include "hnn/oracles.hpp"
#include "towers.hpp"

namespace hnn {
namespace {

Word w(std::string_view s) { return parse_word(s); }

std::vector<Word> words(const std::vector<NormalForm>& forms) {
  std::vector<Word> out;
  for (const auto& f : forms) out.push_back(f.word);
  return out;
}

TEST(EnumerateBall, RankOneRadiusTwo) {
  const auto b = words(enumerate_ball({2, -1, 100, 1}, ExtensionTower(1)));
  const std::set<Word> got(b.begin(), b.end());
  const std::set<Word> want{w("e"), w("g0"), w("g0^-1"), w("g0^2"), w("g0^-2")};
  EXPECT_EQ(got, want);
  EXPECT_EQ(b.size(), 5u);
}

TEST(EnumerateBall, RadiusZeroIsIdentity) {
  const auto b = words(enumerate_ball({0, -1, 100, 1}, gen::layered()));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_TRUE(b[0].empty());
}

TEST(EnumerateBall, FreeFactorAddsOneLetter) {
  const auto b = words(enumerate_ball({1, -1, 100, 1}, ExtensionTower(1).with_free_product()));
  const std::set<Word> got(b.begin(), b.end());
  const std::set<Word> want{w("e"), w("g0"), w("g0^-1"), w("t1"), w("t1^-1")};
  EXPECT_EQ(got, want);
}

TEST(EnumerateBall, StageTruncates) {
  const auto tower = gen::layered();
  const auto b = words(enumerate_ball({1, 0, 100, 1}, tower));
  EXPECT_EQ(b.size(), 5u);
  for (const auto& x : b) EXPECT_EQ(x.max_stage(), 0);
}

TEST(EnumerateBall, CapAndRadiusGuards) {
  EXPECT_THROW(enumerate_ball({3, -1, 10, 1}, gen::free_base()), CapExceeded);
  EXPECT_THROW(enumerate_ball({kMaxBallRadius + 1, -1, 1000000, 1}, gen::free_base()), PreconditionViolated);
}

TEST(EnumerateBall, Deterministic) {
  const BallSpec spec{3, -1, 10000, 9};
  EXPECT_EQ(enumerate_ball(spec, gen::layered()), enumerate_ball(spec, gen::layered()));
}

class OracleSuite : public ::testing::TestWithParam<int> {
 protected:
  static const ConstructionState& state() {
    static const ConstructionState st = [] {
      ConstructionState s = construction_start({});
      for (int i = 0; i < 4; ++i) s = tower_step(s);
      return s;
    }();
    return st;
  }
};

TEST_P(OracleSuite, NoCounterexamplesOnConstructionStages) {
  const int stage = GetParam();
  const auto& tower = state().tower;
  const BallSpec spec{2, stage, 20000, 3};
  std::vector<OracleVerdict> verdicts{
      check_dodatkowy(spec, tower, 4), check_cent(spec, tower, 4), check_cykr(spec, tower),
      check_ip(spec, tower),           check_nn(spec, tower, 4),   check_jsc(spec, tower, 4),
      check_torsion(spec, tower, 5),
  };
  if (tower.step(stage).is_free()) verdicts.push_back(check_aabb(spec, tower));
  for (const auto& v : verdicts) {
    EXPECT_TRUE(v.outcome == Outcome::Pass || v.outcome == Outcome::VacuousPass)
        << v.lemma_id << " stage " << stage << " " << to_string(v.outcome);
    EXPECT_EQ(v.outcome == Outcome::VacuousPass, v.premises == 0) << v.lemma_id;
    EXPECT_GT(v.tuples, 0u) << v.lemma_id;
  }
}

INSTANTIATE_TEST_SUITE_P(Stages, OracleSuite, ::testing::Values(1, 2, 3, 4));

TEST(Oracles, TorsionFreeTowersPass) {
  for (const auto& tower : {gen::free_z(), gen::hnn_base(), gen::layered()}) {
    const auto v = check_torsion({2, -1, 20000, 1}, tower, 5);
    EXPECT_EQ(v.outcome, Outcome::Pass) << format_tower(tower);
  }
}

TEST(Oracles, AabbNeedsFreeFactorStep) {
  EXPECT_THROW(check_aabb({2, -1, 20000, 1}, gen::hnn_base()), PreconditionViolated);
  const auto v = check_aabb({2, -1, 20000, 1}, gen::free_z());
  EXPECT_TRUE(v.outcome == Outcome::Pass || v.outcome == Outcome::VacuousPass);
}

TEST(Oracles, DodatkowyNeedsAStep) {
  EXPECT_THROW(check_dodatkowy({2, -1, 20000, 1}, gen::free_base(), 4), PreconditionViolated);
}

// In the Klein bottle group <g0, t1 | t1 g0 t1^-1 = g0^-1> the square
// (t1 g0)^2 equals t1^2, so unique roots fail. The oracle must notice and the
// witness must replay.
TEST(Oracles, KleinBottleBreaksUniqueRoots) {
  const auto tower = parse_tower("base rank=1\nstep 1 hnn source=g0 target=g0^-1\n");
  EXPECT_EQ(canonical(w("t1 g0 t1 g0"), tower), canonical(w("t1^2"), tower));
  const BallSpec spec{2, -1, 20000, 1};
  const auto v = check_nn(spec, tower, 4);
  ASSERT_EQ(v.outcome, Outcome::Counterexample);
  ASSERT_EQ(v.witness.size(), 2u);
  ASSERT_EQ(v.parameters.size(), 1u);
  const long n = v.parameters[0];
  EXPECT_EQ(canonical(power(v.witness[0], static_cast<int>(n)), tower),
            canonical(power(v.witness[1], static_cast<int>(n)), tower));
  EXPECT_NE(canonical(v.witness[0], tower), canonical(v.witness[1], tower));
  EXPECT_TRUE(replay(v, spec, tower));

  OracleVerdict tampered = v;
  tampered.witness[1] = tampered.witness[0];
  EXPECT_FALSE(replay(tampered, spec, tower));
}

TEST(Oracles, ReplayRejectsNonCounterexamples) {
  const BallSpec spec{2, -1, 20000, 1};
  const auto v = check_nn(spec, gen::free_z(), 4);
  EXPECT_FALSE(replay(v, spec, gen::free_z()));
}

TEST(Oracles, SameSpecSameVerdicts) {
  const auto tower = gen::layered();
  const BallSpec spec{2, -1, 20000, 11};
  auto same = [](const OracleVerdict& a, const OracleVerdict& b) {
    return a.lemma_id == b.lemma_id && a.outcome == b.outcome && a.witness == b.witness &&
           a.parameters == b.parameters && a.tuples == b.tuples && a.premises == b.premises &&
           a.undecided == b.undecided && a.exhaustive == b.exhaustive;
  };
  EXPECT_TRUE(same(check_cent(spec, tower, 4), check_cent(spec, tower, 4)));
  EXPECT_TRUE(same(check_nn(spec, tower, 4), check_nn(spec, tower, 4)));
  EXPECT_TRUE(same(check_jsc(spec, tower, 4), check_jsc(spec, tower, 4)));
}

TEST(Oracles, OutcomeNames) {
  EXPECT_EQ(to_string(Outcome::Pass), "Pass");
  EXPECT_EQ(to_string(Outcome::Counterexample), "Counterexample");
  EXPECT_EQ(to_string(Outcome::VacuousPass), "VacuousPass");
  EXPECT_EQ(to_string(Outcome::Undecided), "Undecided");
}

}  // namespace
}  // namespace hnn
