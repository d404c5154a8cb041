#include "hnn/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace hnn {

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) push_back(l);
}

Word::Word(std::span<const Letter> letters) {
  for (const auto& l : letters) push_back(l);
}

Word Word::generator(int id, int exponent) { return Word{{Symbol::base(id), exponent}}; }

Word Word::stable(int stage, int exponent) { return Word{{Symbol::stable(stage), exponent}}; }

void Word::push_back(Letter letter) {
  if (letter.exponent == 0) return;
  if (!letters_.empty() && letters_.back().symbol == letter.symbol) {
    letters_.back().exponent += letter.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(letter);
}

void Word::push_front(Letter letter) {
  if (letter.exponent == 0) return;
  if (!letters_.empty() && letters_.front().symbol == letter.symbol) {
    letters_.front().exponent += letter.exponent;
    if (letters_.front().exponent == 0) letters_.erase(letters_.begin());
    return;
  }
  letters_.insert(letters_.begin(), letter);
}

void Word::append(const Word& other) {
  for (const auto& l : other.letters_) push_back(l);
}

long Word::unit_length() const {
  long n = 0;
  for (const auto& l : letters_) n += std::abs(l.exponent);
  return n;
}

int Word::max_stage() const {
  int s = 0;
  for (const auto& l : letters_) s = std::max(s, l.symbol.stage());
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.unit_length() <=> b.unit_length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

Word invert(const Word& w) {
  Word r;
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) r.push_back({it->symbol, -it->exponent});
  return r;
}

Word power(const Word& w, int n) {
  const Word base = n < 0 ? invert(w) : w;
  Word r;
  for (int i = 0; i < std::abs(n); ++i) r.append(base);
  return r;
}

long t_length(const Word& w) {
  long n = 0;
  for (const auto& l : w.letters())
    if (l.symbol.is_stable()) n += std::abs(l.exponent);
  return n;
}

long t_length(const Word& w, int stage) {
  long n = 0;
  for (const auto& l : w.letters())
    if (l.symbol == Symbol::stable(stage)) n += std::abs(l.exponent);
  return n;
}

std::vector<Letter> unit_letters(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const int sign = l.exponent > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(l.exponent); ++i) out.push_back({l.symbol, sign});
  }
  return out;
}

std::vector<Word> cyclic_permutations(const Word& w) {
  const auto units = unit_letters(w);
  std::vector<Word> out;
  if (units.empty()) return {Word{}};
  for (std::size_t shift = 0; shift < units.size(); ++shift) {
    Word r;
    for (std::size_t i = 0; i < units.size(); ++i) r.push_back(units[(shift + i) % units.size()]);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Letter& l) {
  std::string s = (l.symbol.is_stable() ? "t" : "g") + std::to_string(l.symbol.index);
  if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

namespace {

int parse_int(std::string_view text, std::string_view token) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("malformed letter '" + std::string(token) + "'");
  return value;
}

Letter parse_letter(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'g' && token[0] != 't'))
    throw ParseError("malformed letter '" + std::string(token) + "'");
  const auto caret = token.find('^');
  const auto index_text = token.substr(1, caret == std::string_view::npos ? token.npos : caret - 1);
  if (index_text.empty() || index_text.front() == '-' || index_text.front() == '+')
    throw ParseError("malformed letter '" + std::string(token) + "'");
  const int index = parse_int(index_text, token);
  const int exponent = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), token);
  if (exponent == 0) throw ParseError("zero exponent in '" + std::string(token) + "'");
  if (token[0] == 't') {
    if (index < 1) throw ParseError("stable letters are numbered from t1");
    return {Symbol::stable(index), exponent};
  }
  return {Symbol::base(index), exponent};
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  bool saw_identity = false;
  bool saw_letter = false;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    auto end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const auto token = text.substr(pos, end - pos);
    if (token == "e") {
      saw_identity = true;
    } else {
      w.push_back(parse_letter(token));
      saw_letter = true;
    }
    pos = end;
  }
  if (!saw_identity && !saw_letter) throw ParseError("empty word text (use 'e' for the identity)");
  return w;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& l : w.letters()) {
    const auto packed = (static_cast<std::uint64_t>(l.symbol.index) << 33) ^
                        (static_cast<std::uint64_t>(l.symbol.kind) << 32) ^
                        static_cast<std::uint32_t>(l.exponent);
    h ^= packed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace hnn
