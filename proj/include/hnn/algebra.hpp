#pragma once

#include <optional>
#include <vector>

#include "hnn/tower.hpp"
#include "hnn/word.hpp"

namespace hnn {

/// Canonical representative of a group element. Two words denote the same
/// element of the tower iff their normal forms are identical.
struct NormalForm {
  Word word;
  int tower_stage = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

enum class PinchOrder { Leftmost, Rightmost };

/// Removes pinches t^e g t^-e (g in the relevant associated subgroup) by
/// repeated rewriting, choosing the leftmost or the rightmost pinch at every
/// step, then reduces every stable-letter-free segment in the stage below.
/// The result is reduced but its segments are not coset-canonical.
Word britton_reduce(const Word& w, const ExtensionTower& tower,
                    PinchOrder order = PinchOrder::Leftmost);

NormalForm normal_form(const Word& w, const ExtensionTower& tower);
/// normal_form(w, tower).word
Word canonical(const Word& w, const ExtensionTower& tower);

/// k with w = g^k, or nullopt when no |k| <= bound works and powers of g are
/// certified to have outgrown w. Default bound is max(|w|, bounds.floor).
/// Throws MembershipUndecided when neither answer can be certified.
std::optional<long> in_cyclic(const Word& w, const Word& g, const ExtensionTower& tower,
                              std::optional<long> bound = std::nullopt);

struct CosetRep {
  long k = 0;
  Word rep;
};

/// a = generator^k * rep where rep is the shortlex-least normal form of the
/// right coset <generator>a.
CosetRep coset_rep(const Word& a, const Word& generator, const ExtensionTower& tower);

struct CyclicReduction {
  Word reduced;
  Word conjugator;
};

/// w = conjugator * reduced * conjugator^-1 with `reduced` cyclically reduced
/// in its home stage; descends through stages while the top stable letter
/// can be conjugated away. The conjugator is trivial iff w needed no
/// conjugation.
CyclicReduction cyclically_reduce(const Word& w, const ExtensionTower& tower);

/// Highest stage whose stable letter survives cyclic reduction (0 when w is
/// conjugate into the base free group).
int home_stage(const Word& w, const ExtensionTower& tower);

/// True iff w is conjugate into the subgroup generated by stages <= stage.
bool is_conjugate_into(const Word& w, const ExtensionTower& tower, int stage);

struct Root {
  Word root;
  int degree = 1;
};

/// Minimal root computed in the home stage of a. Throws PreconditionViolated
/// when a is trivial or conjugate into the base free group.
Root minimal_root(const Word& a, const ExtensionTower& tower);

/// Root of a nontrivial element of the base free group by period extraction.
Root free_minimal_root(const Word& a);

bool commutes(const Word& a, const Word& b, const ExtensionTower& tower);

/// Distinct normal forms of all words of unit length <= radius, shortlex order.
std::vector<Word> ball(const ExtensionTower& tower, int radius);

std::vector<NormalForm> centralizer_ball(const Word& y, const ExtensionTower& tower, int radius);

}  // namespace hnn
