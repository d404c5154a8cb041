#pragma once

#include <random>
#include <vector>

#include "hnn/word.hpp"

namespace hnn::gen {

/// Random unit-letter word over g0..g<rank-1> and t1..t<stages>. The result
/// is merged, so it may be shorter than `length`.
inline Word random_word(std::mt19937_64& rng, int rank, int stages, int length) {
  std::uniform_int_distribution<int> pick(0, 2 * (rank + stages) - 1);
  Word w;
  for (int i = 0; i < length; ++i) {
    const int c = pick(rng);
    const int sym = c / 2;
    const int e = c % 2 == 0 ? 1 : -1;
    w.push_back(sym < rank ? Letter{Symbol::base(sym), e} : Letter{Symbol::stable(sym - rank + 1), e});
  }
  return w;
}

}  // namespace hnn::gen
