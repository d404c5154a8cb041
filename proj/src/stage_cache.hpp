#pragma once

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hnn/algebra.hpp"
#include "hnn/word.hpp"

namespace hnn::detail {

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    const std::size_t a = WordHash{}(p.first);
    return a ^ (WordHash{}(p.second) + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  }
};

/// Normal forms of g^k for k in [-(neg.size()-1), pos.size()-1].
struct PowerTable {
  std::vector<Word> pos{Word{}};
  std::vector<Word> neg{Word{}};
  std::unordered_map<Word, long> index{{Word{}, 0}};
};

/// Memo tables for one stage. Entries are keyed by words whose highest
/// stable letter is this stage. Operations lock stages from high to low.
struct StageCache {
  std::recursive_mutex mutex;
  std::unordered_map<Word, Word> normal_forms;
  std::unordered_map<std::pair<Word, Word>, CosetRep, WordPairHash> cosets;
  std::unordered_map<Word, PowerTable> powers;
};

}  // namespace hnn::detail
