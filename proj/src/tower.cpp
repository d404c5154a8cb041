#include "hnn/tower.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "hnn/algebra.hpp"
#include "stage_cache.hpp"

namespace hnn {

ExtensionTower::ExtensionTower(int base_rank, MembershipBounds bounds)
    : base_rank_(base_rank), bounds_(bounds) {
  if (base_rank < 1) throw PreconditionViolated("base rank must be positive");
  caches_.push_back(std::make_shared<detail::StageCache>());
}

ExtensionTower ExtensionTower::with_free_product() const {
  ExtensionTower next = *this;
  next.steps_.push_back({StepKind::FreeProductZ, {}, {}, top_stage() + 1});
  next.caches_.push_back(std::make_shared<detail::StageCache>());
  return next;
}

ExtensionTower ExtensionTower::with_hnn(const Word& source, const Word& target) const {
  if (!valid_word(source) || !valid_word(target))
    throw PreconditionViolated("hnn source/target use letters outside the tower");
  Word s = canonical(source, *this);
  Word t = canonical(target, *this);
  if (s.empty() || t.empty()) throw PreconditionViolated("hnn source and target must be non-identity");
  ExtensionTower next = *this;
  next.steps_.push_back({StepKind::Hnn, std::move(s), std::move(t), top_stage() + 1});
  next.caches_.push_back(std::make_shared<detail::StageCache>());
  return next;
}

ExtensionTower ExtensionTower::truncated(int stage) const {
  if (stage < 0 || stage > top_stage()) throw PreconditionViolated("truncation stage out of range");
  ExtensionTower t = *this;
  t.steps_.resize(stage);
  t.caches_.resize(stage + 1);
  return t;
}

bool ExtensionTower::valid_word(const Word& w, int stage) const {
  for (const auto& l : w.letters()) {
    if (l.symbol.is_stable()) {
      if (l.symbol.index < 1 || l.symbol.index > stage || stage > top_stage()) return false;
    } else if (l.symbol.index < 0 || l.symbol.index >= base_rank_) {
      return false;
    }
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(text), &used);
    if (used != text.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
}

}  // namespace

ExtensionTower parse_tower(std::string_view text, MembershipBounds bounds) {
  std::optional<ExtensionTower> tower;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
    pos = nl == text.npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (line.starts_with("base ")) {
      if (tower) throw ParseError(where + "duplicate base line");
      const auto rest = trim(line.substr(5));
      if (!rest.starts_with("rank=")) throw ParseError(where + "expected 'base rank=<r>'");
      tower.emplace(parse_positive(rest.substr(5), "rank"), bounds);
      continue;
    }
    if (!line.starts_with("step ")) throw ParseError(where + "unknown directive");
    if (!tower) throw ParseError(where + "step before base line");
    auto rest = trim(line.substr(5));
    const auto sp = rest.find(' ');
    if (sp == rest.npos) throw ParseError(where + "step without kind");
    const int index = parse_positive(rest.substr(0, sp), "step index");
    if (index != tower->top_stage() + 1)
      throw ParseError(where + "steps must be numbered consecutively from 1");
    rest = trim(rest.substr(sp + 1));
    if (rest == "freeZ") {
      *tower = tower->with_free_product();
      continue;
    }
    if (!rest.starts_with("hnn ")) throw ParseError(where + "step kind must be freeZ or hnn");
    rest = trim(rest.substr(4));
    const auto tpos = rest.find("target=");
    if (!rest.starts_with("source=") || tpos == rest.npos)
      throw ParseError(where + "expected 'hnn source=<word> target=<word>'");
    const Word source = parse_word(trim(rest.substr(7, tpos - 7)));
    const Word target = parse_word(trim(rest.substr(tpos + 7)));
    if (!tower->valid_word(source) || !tower->valid_word(target))
      throw ParseError(where + "hnn words may only use earlier letters");
    try {
      *tower = tower->with_hnn(source, target);
    } catch (const PreconditionViolated& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!tower) throw ParseError("missing 'base rank=<r>' line");
  return *tower;
}

std::string format_tower(const ExtensionTower& tower) {
  std::ostringstream out;
  out << "base rank=" << tower.base_rank() << '\n';
  for (const auto& st : tower.steps()) {
    out << "step " << st.stage;
    if (st.is_free())
      out << " freeZ\n";
    else
      out << " hnn source=" << to_string(st.source) << " target=" << to_string(st.target) << '\n';
  }
  return out.str();
}

}  // namespace hnn
