#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hnn {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind : std::uint8_t { Base = 0, Stable = 1 };

/// A generator of the base free group (`g<i>`) or the stable letter of a
/// tower stage (`t<i>`, i >= 1).
struct Symbol {
  SymbolKind kind = SymbolKind::Base;
  int index = 0;

  static constexpr Symbol base(int id) { return {SymbolKind::Base, id}; }
  static constexpr Symbol stable(int stage) { return {SymbolKind::Stable, stage}; }

  constexpr bool is_stable() const { return kind == SymbolKind::Stable; }
  /// Tower stage the symbol belongs to; base generators live in stage 0.
  constexpr int stage() const { return is_stable() ? index : 0; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct Letter {
  Symbol symbol;
  int exponent = 1;

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// Run-length word over base generators and stable letters. Adjacent letters
/// never share a symbol and no exponent is zero, so the letter sequence is
/// always freely reduced. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word generator(int id, int exponent = 1);
  static Word stable(int stage, int exponent = 1);

  /// Appends with merging; a letter with exponent 0 is ignored.
  void push_back(Letter letter);
  void append(const Word& other);
  /// Prepends with merging.
  void push_front(Letter letter);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  /// Sum of |exponent| over all letters.
  long unit_length() const;
  /// Highest stage among stable letters, 0 when there are none.
  int max_stage() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex: unit length first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, int n);

/// Number of stable letters counted with multiplicity (all stages).
long t_length(const Word& w);
/// Number of letters t_stage^{+-1} counted with multiplicity.
long t_length(const Word& w, int stage);

/// All rotations of the unit-letter expansion of w, re-merged, sorted
/// shortlex and deduplicated.
std::vector<Word> cyclic_permutations(const Word& w);

/// Expands run-length letters into exponent +-1 letters.
std::vector<Letter> unit_letters(const Word& w);

std::string to_string(const Word& w);
std::string to_string(const Letter& l);
/// Parses whitespace-separated tokens `g<i>`, `t<i>` with optional `^<int>`;
/// `e` denotes the identity.
Word parse_word(std::string_view text);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace hnn

template <>
struct std::hash<hnn::Word> : hnn::WordHash {};
