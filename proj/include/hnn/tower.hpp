#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hnn/word.hpp"

namespace hnn {

/// Raised when a bounded cyclic-membership or coset search cannot certify
/// its answer; the caller should raise MembershipBounds.
class MembershipUndecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class StepKind { FreeProductZ, Hnn };

/// One layer of the tower. For Hnn the relation is t*source*t^-1 = target with
/// associated subgroups <source> and <target>; FreeProductZ has trivial ones.
struct ExtensionStep {
  StepKind kind = StepKind::FreeProductZ;
  Word source;
  Word target;
  int stage = 0;

  bool is_free() const { return kind == StepKind::FreeProductZ; }
};

/// Search limits for power and coset windows. The initial window for a word w
/// is max(|w|, floor); growth is abandoned past max_window.
struct MembershipBounds {
  long floor = 16;
  long max_window = 512;
};

namespace detail {
struct StageCache;
}

/// A base free group of rank `base_rank` followed by an ordered list of
/// extension steps; step i introduces stable letter t_i. Stage s denotes the
/// group after the first s steps.
///
/// Towers are values. Copies and extensions share the memo tables of common
/// stages, which stay valid because stage s depends only on steps 1..s.
class ExtensionTower {
 public:
  explicit ExtensionTower(int base_rank, MembershipBounds bounds = {});

  int base_rank() const { return base_rank_; }
  int top_stage() const { return static_cast<int>(steps_.size()); }
  const std::vector<ExtensionStep>& steps() const { return steps_; }
  /// 1-based: step(i) created stage i.
  const ExtensionStep& step(int stage) const { return steps_.at(stage - 1); }
  const MembershipBounds& bounds() const { return bounds_; }

  ExtensionTower with_free_product() const;
  /// Normalizes source and target in the current top stage; both must be
  /// non-identity.
  ExtensionTower with_hnn(const Word& source, const Word& target) const;
  ExtensionTower truncated(int stage) const;

  /// True iff every letter names a base generator < rank or a stage <= stage.
  bool valid_word(const Word& w, int stage) const;
  bool valid_word(const Word& w) const { return valid_word(w, top_stage()); }

  detail::StageCache& cache(int stage) const { return *caches_.at(stage); }

 private:
  int base_rank_;
  MembershipBounds bounds_;
  std::vector<ExtensionStep> steps_;
  std::vector<std::shared_ptr<detail::StageCache>> caches_;
};

/// Line-oriented tower description:
///   base rank=<r>
///   step <i> freeZ
///   step <i> hnn source=<word> target=<word>
/// Blank lines and lines starting with '#' are ignored.
ExtensionTower parse_tower(std::string_view text, MembershipBounds bounds = {});
std::string format_tower(const ExtensionTower& tower);

}  // namespace hnn
