#pragma once

#include <random>
#include <vector>

#include "hnn/tower.hpp"
#include "hnn/word.hpp"

namespace hnn::detail {

/// Unit letters g_i^{+-1} and t_s^{+-1} of every stage up to the top, in a
/// fixed order.
inline std::vector<Letter> alphabet(const ExtensionTower& tower) {
  std::vector<Letter> out;
  for (int i = 0; i < tower.base_rank(); ++i)
    for (int e : {1, -1}) out.push_back({Symbol::base(i), e});
  for (int s = 1; s <= tower.top_stage(); ++s)
    for (int e : {1, -1}) out.push_back({Symbol::stable(s), e});
  return out;
}

/// Product of `length` uniformly drawn unit letters (freely reduced).
inline Word random_word(std::mt19937_64& rng, const std::vector<Letter>& letters, int length) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

}  // namespace hnn::detail
