#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hnn/algebra.hpp"
#include "hnn/tower.hpp"
#include "hnn/word.hpp"

namespace hnn {

struct InsufficientPairs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Classical construction: every ordered pair (s, t) of nontrivial elements of
// a ball gets its own stable letter T_st with T_st s T_st^-1 = t.

struct ClassicalState {
  /// levels[i] is G_i; levels[0] is the free base.
  std::vector<ExtensionTower> levels;
  /// letters[i] maps (s, t) over G_i to the tower stage of T_st in G_{i+1}.
  std::vector<std::map<std::pair<Word, Word>, int>> letters;

  const ExtensionTower& top() const { return levels.back(); }
};

ClassicalState classical_start(int base_rank);

/// Adds G_{i+1} over the nontrivial elements of the radius ball of G_i.
/// Radius 0 returns the state unchanged.
ClassicalState classical_step(const ClassicalState& state, int ball_radius);

/// Distinct elements T_{u1 u0} T_{u2 u1} ... T_{uL u(L-1)} with u0 = uL = t_elt,
/// each commuting with t_elt. Cycles of length 3 (the shape T_st T_rs T_tr)
/// are listed first, longer cycles only when those run out.
std::vector<NormalForm> classical_centralizer_witnesses(const ClassicalState& state, const Word& t_elt,
                                                        int count);

// ---------------------------------------------------------------------------
// Alternating tower: odd steps add a free Z factor, even steps conjugate x
// onto the earliest queued root z.

enum class G0Mode { Free, Classical };

struct ConstructionConfig {
  int base_rank = 2;
  int radius = 2;
  G0Mode g0_mode = G0Mode::Free;
};

/// y = c x^n c^-1 in the stage where the entry was found.
struct LedgerEntry {
  Word conjugator;
  int exponent = 1;
};

struct QueuedZ {
  Word z;
  int created_stage = 0;
};

struct StageRecord {
  int stage = 0;
  StepKind kind = StepKind::FreeProductZ;
  std::optional<Word> z;   // consumed root on an HNN step
  bool fallback = false;   // even step without a usable root
  std::size_t queue_size = 0;
  std::size_t ledger_size = 0;
};

struct ConstructionState {
  ConstructionConfig config;
  ExtensionTower tower{2};
  int base_stage = 0;  // stage of G_0 inside `tower`
  Word x;
  std::map<Word, LedgerEntry> ledger;
  std::vector<QueuedZ> z_queue;
  /// y -> z_y, fixed once chosen.
  std::map<Word, Word> z_record;
  std::vector<StageRecord> history;
  std::size_t undecided_roots = 0;

  bool in_ledger(const Word& nf) const { return ledger.contains(nf); }
  int steps_taken() const { return tower.top_stage() - base_stage; }
};

ConstructionState construction_start(const ConstructionConfig& config);
ConstructionState tower_step(const ConstructionState& state);

/// Root z with z^n = y; recorded values are returned unchanged.
/// Throws PreconditionViolated when y is trivial or in the ledger.
Word z_witness(const Word& y, ConstructionState& state);

struct CheckOptions {
  int radius = 2;
  int power_bound = 4;
  std::size_t centralizer_candidates = 1000;
  std::size_t root_samples = 400;
  std::uint64_t seed = 1;
};

struct CentralizerCheck {
  Word y;
  std::size_t candidates = 0;
  std::size_t commuting = 0;
  std::vector<Word> violations;
};

struct RootCheck {
  Word y;
  Word z;
  std::size_t samples = 0;
  std::size_t premise_hits = 0;
  std::vector<std::pair<Word, int>> violations;  // (w, m)
  std::size_t undecided = 0;
};

struct ConditionReport {
  int stage = 0;
  StepKind kind = StepKind::FreeProductZ;
  std::optional<Word> z;
  bool fallback = false;
  bool fresh_letter = false;
  Word fresh_witness;
  std::vector<CentralizerCheck> centralizer;
  std::vector<RootCheck> roots;
  std::size_t base_ledger = 0, base_ball = 0;    // ledger members in the G_0 ball
  std::size_t stage_ledger = 0, stage_ball = 0;  // same for the current ball
  std::size_t checks = 0;
  std::size_t undecided = 0;
  std::vector<std::string> undecided_items;

  bool pass() const;
};

ConditionReport check_conditions(ConstructionState& state, const CheckOptions& options);

}  // namespace hnn
