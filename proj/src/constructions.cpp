#include "hnn/constructions.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "sampling.hpp"

namespace hnn {

// ---------------------------------------------------------------------------
// classical

ClassicalState classical_start(int base_rank) {
  ClassicalState st;
  st.levels.emplace_back(base_rank);
  return st;
}

ClassicalState classical_step(const ClassicalState& state, int ball_radius) {
  if (ball_radius < 0) throw PreconditionViolated("classical_step: negative radius");
  if (ball_radius == 0) return state;
  ClassicalState next = state;
  const ExtensionTower& cur = state.top();
  std::vector<Word> elems = ball(cur, ball_radius);
  elems.erase(std::remove(elems.begin(), elems.end(), Word{}), elems.end());

  ExtensionTower grown = cur;
  std::map<std::pair<Word, Word>, int> letters;
  for (const auto& s : elems)
    for (const auto& t : elems) {
      grown = grown.with_hnn(s, t);
      letters.emplace(std::make_pair(s, t), grown.top_stage());
    }
  next.levels.push_back(std::move(grown));
  next.letters.push_back(std::move(letters));
  return next;
}

std::vector<NormalForm> classical_centralizer_witnesses(const ClassicalState& state, const Word& t_elt,
                                                        int count) {
  if (count < 1) throw PreconditionViolated("classical_centralizer_witnesses: count must be positive");
  if (state.letters.empty()) throw InsufficientPairs("no classical step has been taken");
  const ExtensionTower& tower = state.levels.at(1);
  const auto& letters = state.letters.front();
  const Word t = canonical(t_elt, state.levels.front());

  std::vector<Word> elems;
  for (const auto& [pair, stage] : letters)
    if (elems.empty() || elems.back() != pair.first) elems.push_back(pair.first);
  if (std::find(elems.begin(), elems.end(), t) == elems.end())
    throw PreconditionViolated("classical_centralizer_witnesses: element not registered at level 0");

  auto letter = [&](const Word& s, const Word& u) { return Word::stable(letters.at({s, u})); };

  std::vector<NormalForm> out;
  std::unordered_set<Word> seen;
  constexpr int max_cycle = 6;
  for (int L = 3; L <= max_cycle && static_cast<int>(out.size()) < count; ++L) {
    // odometer over the interior vertices u_1 .. u_{L-1}
    std::vector<std::size_t> idx(static_cast<std::size_t>(L - 1), 0);
    for (bool more = true; more && static_cast<int>(out.size()) < count;) {
      std::vector<Word> u{t};
      for (auto i : idx) u.push_back(elems[i]);
      u.push_back(t);
      Word w;
      for (std::size_t i = 0; i + 1 < u.size(); ++i) w.append(letter(u[i + 1], u[i]));
      const Word nf = canonical(w, tower);
      if (!nf.empty() && commutes(nf, t, tower) && seen.insert(nf).second)
        out.push_back({nf, tower.top_stage()});

      more = false;
      for (std::size_t d = idx.size(); d-- > 0;) {
        if (++idx[d] < elems.size()) {
          more = true;
          break;
        }
        idx[d] = 0;
      }
    }
  }
  if (static_cast<int>(out.size()) < count)
    throw InsufficientPairs("ball supplies only " + std::to_string(out.size()) + " witnesses");
  return out;
}

// ---------------------------------------------------------------------------
// alternating tower

namespace {

bool queue_before(const QueuedZ& a, const QueuedZ& b) {
  if (a.created_stage != b.created_stage) return a.created_stage < b.created_stage;
  if (a.z.unit_length() != b.z.unit_length()) return a.z.unit_length() < b.z.unit_length();
  return to_string(a.z) < to_string(b.z);
}

/// Conjugates c x^n c^-1 reachable through words of length <= 2r + 2,
/// together with their inverses.
void close_ledger(ConstructionState& st) {
  const long cap = 2L * st.config.radius + 2;
  const auto letters = detail::alphabet(st.tower);
  std::deque<Word> work;
  for (const auto& [y, entry] : st.ledger) work.push_back(y);
  // Inverse normal forms may be longer than the cap; they join regardless.
  auto admit = [&](const Word& y, const LedgerEntry& entry) {
    if (!st.ledger.emplace(y, entry).second) return;
    work.push_back(y);
    const Word inv = canonical(invert(y), st.tower);
    if (st.ledger.emplace(inv, LedgerEntry{entry.conjugator, -entry.exponent}).second) work.push_back(inv);
  };
  for (int n = 1; n <= cap; ++n)
    for (int sgn : {1, -1}) {
      const Word y = canonical(power(st.x, sgn * n), st.tower);
      if (y.unit_length() <= cap) admit(y, LedgerEntry{Word{}, sgn * n});
    }
  while (!work.empty()) {
    const Word y = std::move(work.front());
    work.pop_front();
    const LedgerEntry entry = st.ledger.at(y);
    for (const auto& l : letters) {
      const Word lw(std::span<const Letter>(&l, 1));
      const Word conj = canonical(concat(concat(lw, y), invert(lw)), st.tower);
      if (conj.unit_length() > cap || st.ledger.contains(conj)) continue;
      admit(conj, LedgerEntry{canonical(concat(lw, entry.conjugator), st.tower), entry.exponent});
    }
  }
}

bool admissible(const Word& z, ConstructionState& st) {
  if (z.empty() || st.in_ledger(z)) return false;
  try {
    return !st.in_ledger(cyclically_reduce(z, st.tower).reduced);
  } catch (const MembershipUndecided&) {
    return false;
  }
}

void scan_queue(ConstructionState& st) {
  const int stage = st.tower.top_stage();
  std::unordered_set<Word> queued;
  for (const auto& q : st.z_queue) queued.insert(q.z);
  for (const auto& y : ball(st.tower, st.config.radius)) {
    if (y.empty() || st.in_ledger(y)) continue;
    Word z;
    try {
      z = z_witness(y, st);
    } catch (const MembershipUndecided&) {
      ++st.undecided_roots;
      continue;
    }
    if (admissible(z, st) && queued.insert(z).second) st.z_queue.push_back({z, stage});
  }
  std::stable_sort(st.z_queue.begin(), st.z_queue.end(), queue_before);
}

}  // namespace

ConstructionState construction_start(const ConstructionConfig& config) {
  if (config.radius < 1) throw PreconditionViolated("construction radius must be positive");
  ConstructionState st;
  st.config = config;
  if (config.g0_mode == G0Mode::Classical) {
    st.tower = classical_step(classical_start(config.base_rank), 1).top();
  } else {
    st.tower = ExtensionTower(config.base_rank);
  }
  st.base_stage = st.tower.top_stage();
  st.x = Word::generator(0);
  close_ledger(st);
  scan_queue(st);
  return st;
}

ConstructionState tower_step(const ConstructionState& state) {
  ConstructionState st = state;
  StageRecord rec;
  const bool even = (st.steps_taken() + 1) % 2 == 0;
  if (even) {
    while (!st.z_queue.empty() && !admissible(st.z_queue.front().z, st)) st.z_queue.erase(st.z_queue.begin());
    if (st.z_queue.empty()) {
      rec.fallback = true;
    } else {
      rec.z = st.z_queue.front().z;
      st.z_queue.erase(st.z_queue.begin());
    }
  }
  st.tower = rec.z ? st.tower.with_hnn(st.x, *rec.z) : st.tower.with_free_product();
  rec.stage = st.tower.top_stage();
  rec.kind = rec.z ? StepKind::Hnn : StepKind::FreeProductZ;
  close_ledger(st);
  scan_queue(st);
  rec.queue_size = st.z_queue.size();
  rec.ledger_size = st.ledger.size();
  st.history.push_back(rec);
  return st;
}

Word z_witness(const Word& y, ConstructionState& state) {
  const Word nf = canonical(y, state.tower);
  if (nf.empty()) throw PreconditionViolated("z_witness: trivial element");
  if (state.in_ledger(nf)) throw PreconditionViolated("z_witness: " + to_string(nf) + " is conjugate to x");
  if (auto it = state.z_record.find(nf); it != state.z_record.end()) return it->second;
  const auto [c, conj] = cyclically_reduce(nf, state.tower);
  Word z;
  if (c.max_stage() == 0) {
    const Word r = free_minimal_root(c).root;
    z = canonical(concat(concat(conj, r), invert(conj)), state.tower);
  } else {
    z = minimal_root(nf, state.tower).root;
  }
  state.z_record.emplace(nf, z);
  return z;
}

bool ConditionReport::pass() const {
  if (!fresh_letter) return false;
  for (const auto& c : centralizer)
    if (!c.violations.empty()) return false;
  for (const auto& r : roots)
    if (!r.violations.empty()) return false;
  return true;
}

ConditionReport check_conditions(ConstructionState& state, const CheckOptions& options) {
  if (state.history.empty()) throw PreconditionViolated("check_conditions: no construction step taken");
  const ExtensionTower& tower = state.tower;
  const int top = tower.top_stage();
  const StageRecord& rec = state.history.back();
  ConditionReport rep;
  rep.stage = top;
  rep.kind = rec.kind;
  rep.z = rec.z;
  rep.fallback = rec.fallback;

  // (i) the new stable letter lies outside the previous stage
  rep.fresh_witness = canonical(Word::stable(top), tower);
  rep.fresh_letter = t_length(rep.fresh_witness, top) > 0;

  const auto letters = detail::alphabet(tower);
  std::mt19937_64 rng(options.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(top));
  const std::vector<Word> stage_ball = ball(tower, options.radius);

  // (iii) centralizers of ledger elements do not grow
  std::vector<Word> candidates = stage_ball;
  {
    std::unordered_set<Word> seen(candidates.begin(), candidates.end());
    const int max_len = 2 * options.radius + 2;
    std::uniform_int_distribution<int> len(1, max_len);
    for (std::size_t attempt = 0;
         candidates.size() < options.centralizer_candidates && attempt < 50 * options.centralizer_candidates;
         ++attempt) {
      const Word k = canonical(detail::random_word(rng, letters, len(rng)), tower);
      if (seen.insert(k).second) candidates.push_back(k);
    }
  }
  for (const auto& [y, entry] : state.ledger) {
    if (y.max_stage() >= top || y.unit_length() > options.radius) continue;
    CentralizerCheck cc;
    cc.y = y;
    cc.candidates = candidates.size();
    for (const auto& k : candidates) {
      ++rep.checks;
      if (!commutes(k, y, tower)) continue;
      ++cc.commuting;
      if (t_length(k, top) > 0) cc.violations.push_back(k);
    }
    rep.centralizer.push_back(std::move(cc));
  }

  // (iv) conjugates of powers that land in <z_y> come from <z_y>
  const std::size_t exhaustive = stage_ball.size() * static_cast<std::size_t>(options.power_bound);
  for (const auto& y : stage_ball) {
    if (y.empty() || state.in_ledger(y)) continue;
    RootCheck rc;
    rc.y = y;
    try {
      rc.z = z_witness(y, state);
    } catch (const MembershipUndecided&) {
      ++rep.checks;
      ++rep.undecided;
      rep.undecided_items.push_back("root of " + to_string(y));
      continue;
    }
    auto check = [&](const Word& w, int m) {
      ++rc.samples;
      ++rep.checks;
      try {
        const Word v = canonical(concat(concat(w, power(y, m)), invert(w)), tower);
        if (!in_cyclic(v, rc.z, tower)) return;
        ++rc.premise_hits;
        if (!in_cyclic(canonical(w, tower), rc.z, tower)) rc.violations.emplace_back(w, m);
      } catch (const MembershipUndecided&) {
        ++rc.undecided;
        ++rep.undecided;
        rep.undecided_items.push_back("membership for y=" + to_string(y) + " w=" + to_string(w) +
                                      " m=" + std::to_string(m));
      }
    };
    if (exhaustive <= options.root_samples) {
      for (const auto& w : stage_ball)
        for (int m = 1; m <= options.power_bound; ++m) check(w, m);
    } else {
      std::uniform_int_distribution<std::size_t> pick_w(0, stage_ball.size() - 1);
      std::uniform_int_distribution<int> pick_m(1, options.power_bound);
      for (std::size_t i = 0; i < options.root_samples; ++i) {
        const Word& w = stage_ball[pick_w(rng)];
        check(w, pick_m(rng));
      }
    }
    rep.roots.push_back(std::move(rc));
  }

  // (ii) progress
  for (const auto& y : ball(tower.truncated(state.base_stage), options.radius)) {
    if (y.empty()) continue;
    ++rep.base_ball;
    if (state.in_ledger(y)) ++rep.base_ledger;
  }
  for (const auto& y : stage_ball) {
    if (y.empty()) continue;
    ++rep.stage_ball;
    if (state.in_ledger(y)) ++rep.stage_ledger;
  }
  return rep;
}

}  // namespace hnn
