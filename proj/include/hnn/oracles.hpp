#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnn/algebra.hpp"
#include "hnn/tower.hpp"

namespace hnn {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxBallRadius = 4;

/// Stage -1 means the top of the tower. The examined step is stage-1 -> stage.
struct BallSpec {
  int radius = 2;
  int stage = -1;
  std::size_t sample_cap = 20000;
  std::uint64_t seed = 1;
};

enum class Outcome { Pass, Counterexample, VacuousPass, Undecided };

std::string to_string(Outcome o);

struct OracleVerdict {
  std::string lemma_id;
  Outcome outcome = Outcome::VacuousPass;
  /// Counterexample words and integer parameters, in lemma-specific order.
  std::vector<Word> witness;
  std::vector<long> parameters;
  std::size_t tuples = 0;    // tuples examined
  std::size_t premises = 0;  // tuples satisfying the premise
  std::size_t undecided = 0;
  bool exhaustive = true;
};

/// Distinct normal forms of words of unit length <= radius in the stage.
/// Throws CapExceeded when there are more than sample_cap of them.
std::vector<NormalForm> enumerate_ball(const BallSpec& spec, const ExtensionTower& tower);

/// Tuples are enumerated exhaustively when the ball has at most this many
/// elements and sampled otherwise.
inline constexpr std::size_t kExhaustiveBall = 200;

OracleVerdict check_aabb(const BallSpec& spec, const ExtensionTower& tower);
OracleVerdict check_dodatkowy(const BallSpec& spec, const ExtensionTower& tower, int power_bound);
OracleVerdict check_cent(const BallSpec& spec, const ExtensionTower& tower, int power_bound);
OracleVerdict check_cykr(const BallSpec& spec, const ExtensionTower& tower);
OracleVerdict check_ip(const BallSpec& spec, const ExtensionTower& tower);
OracleVerdict check_nn(const BallSpec& spec, const ExtensionTower& tower, int power_bound);
OracleVerdict check_jsc(const BallSpec& spec, const ExtensionTower& tower, int power_bound);
OracleVerdict check_torsion(const BallSpec& spec, const ExtensionTower& tower, int order_bound);

/// Re-evaluates the lemma on a Counterexample's witness; true iff the
/// witness still violates the lemma.
bool replay(const OracleVerdict& verdict, const BallSpec& spec, const ExtensionTower& tower);

}  // namespace hnn
