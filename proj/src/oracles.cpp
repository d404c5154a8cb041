#include "hnn/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>

namespace hnn {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "Pass";
    case Outcome::Counterexample: return "Counterexample";
    case Outcome::VacuousPass: return "VacuousPass";
    case Outcome::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

enum class Tuple { NotPremise, Holds, Violated };

/// The tower examined by a BallSpec and the stage below it.
struct Frame {
  ExtensionTower tower;
  int stage;
  int prev;

  Frame(const BallSpec& spec, const ExtensionTower& full)
      : tower(full.truncated(spec.stage < 0 ? full.top_stage() : spec.stage)),
        stage(tower.top_stage()),
        prev(tower.top_stage() - 1) {
    if (stage < 1) throw PreconditionViolated("lemma oracles need at least one extension step");
  }

  Word nf(const Word& w) const { return canonical(w, tower); }
  Word pow(const Word& w, long n) const { return nf(power(w, static_cast<int>(n))); }
  bool eligible(const Word& a) const { return !nf(a).empty() && !is_conjugate_into(a, tower, prev); }
};

// Per-lemma predicates. Each is also the replay check.

Tuple aabb(const Frame& f, const Word& a, const Word& b) {
  const Word ab = f.nf(concat(a, b));
  if (ab.empty() || !f.nf(concat(ab, concat(b, a))).empty()) return Tuple::NotPremise;
  return is_conjugate_into(ab, f.tower, f.prev) ? Tuple::Holds : Tuple::Violated;
}

Tuple dodatkowy(const Frame& f, const Word& a, long n) {
  if (!f.eligible(a)) return Tuple::NotPremise;
  return is_conjugate_into(f.pow(a, n), f.tower, f.prev) ? Tuple::Violated : Tuple::Holds;
}

Tuple cent(const Frame& f, const Word& w, const Word& c, const Word& a) {
  if (!f.eligible(a) || !commutes(w, c, f.tower) || !commutes(a, w, f.tower) || !commutes(a, c, f.tower))
    return Tuple::NotPremise;
  const Word nw = f.nf(w), nc = f.nf(c);
  if (nw.empty() && nc.empty()) return Tuple::Holds;
  const Word& longer =
      nc.empty() || (!nw.empty() && t_length(nw, f.stage) >= t_length(nc, f.stage)) ? nw : nc;
  std::vector<Word> roots;
  try {
    roots.push_back(minimal_root(longer, f.tower).root);
  } catch (const PreconditionViolated&) {
  }
  roots.push_back(minimal_root(a, f.tower).root);
  for (const auto& r : roots)
    if (in_cyclic(nw, r, f.tower) && in_cyclic(nc, r, f.tower)) return Tuple::Holds;
  return Tuple::Violated;
}

Tuple cykr(const Frame& f, const Word& zeta, long n) {
  if (!f.eligible(zeta)) return Tuple::NotPremise;
  if (!cyclically_reduce(f.pow(zeta, n), f.tower).conjugator.empty()) return Tuple::NotPremise;
  return cyclically_reduce(zeta, f.tower).conjugator.empty() ? Tuple::Holds : Tuple::Violated;
}

Tuple ip(const Frame& f, const Word& a) {
  if (!f.eligible(a)) return Tuple::NotPremise;
  const Root r = minimal_root(a, f.tower);
  const long bound = t_length(cyclically_reduce(a, f.tower).reduced, f.stage);
  if (r.degree > bound || f.pow(r.root, r.degree) != f.nf(a)) return Tuple::Violated;
  return minimal_root(r.root, f.tower).degree == 1 ? Tuple::Holds : Tuple::Violated;
}

Tuple nn(const Frame& f, const Word& a, const Word& b, long n) {
  if (!f.eligible(a) || !f.eligible(b) || f.pow(a, n) != f.pow(b, n)) return Tuple::NotPremise;
  return f.nf(a) == f.nf(b) ? Tuple::Holds : Tuple::Violated;
}

Tuple jsc(const Frame& f, const Word& a, const Word& b, long n, long m) {
  if (!f.eligible(a) || !f.eligible(b)) return Tuple::NotPremise;
  if (minimal_root(a, f.tower).degree != 1 || minimal_root(b, f.tower).degree != 1) return Tuple::NotPremise;
  if (f.pow(a, n) != f.pow(b, m)) return Tuple::NotPremise;
  return f.nf(a) == f.nf(b) && n == m ? Tuple::Holds : Tuple::Violated;
}

Tuple torsion(const Frame& f, const Word& a, long k) {
  if (f.nf(a).empty()) return Tuple::NotPremise;
  return f.pow(a, k).empty() ? Tuple::Violated : Tuple::Holds;
}

/// Accumulates tuple outcomes; stops at the first counterexample.
class Tally {
 public:
  explicit Tally(std::string id) { v_.lemma_id = std::move(id); }

  bool done() const { return found_; }

  void run(const std::function<Tuple()>& eval, std::vector<Word> witness, std::vector<long> params = {}) {
    if (found_) return;
    ++v_.tuples;
    try {
      switch (eval()) {
        case Tuple::NotPremise: break;
        case Tuple::Holds: ++v_.premises; break;
        case Tuple::Violated:
          ++v_.premises;
          found_ = true;
          v_.witness = std::move(witness);
          v_.parameters = std::move(params);
          break;
      }
    } catch (const MembershipUndecided&) {
      ++v_.undecided;
    }
  }
  void sampled() { v_.exhaustive = false; }

  OracleVerdict finish() {
    if (found_) v_.outcome = Outcome::Counterexample;
    else if (v_.undecided > 0) v_.outcome = Outcome::Undecided;
    else if (v_.premises == 0) v_.outcome = Outcome::VacuousPass;
    else v_.outcome = Outcome::Pass;
    return std::move(v_);
  }

 private:
  OracleVerdict v_;
  bool found_ = false;
};

std::vector<Word> words_of(const std::vector<NormalForm>& forms) {
  std::vector<Word> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.word);
  return out;
}

std::vector<Word> eligible_of(const Frame& f, const std::vector<Word>& ball, Tally& tally) {
  std::vector<Word> out;
  for (const auto& a : ball) {
    try {
      if (f.eligible(a)) out.push_back(a);
    } catch (const MembershipUndecided&) {
      tally.run([] () -> Tuple { throw MembershipUndecided("eligibility"); }, {});
    }
  }
  return out;
}

/// Ball elements plus their translates by powers of g0 on either side, the
/// shapes that the proof of root uniqueness has to exclude.
std::vector<Word> with_translates(const Frame& f, const std::vector<Word>& elems) {
  std::vector<Word> out = elems;
  const Word x = Word::generator(0);
  for (const auto& a : elems)
    for (int p : {-2, -1, 1, 2}) {
      out.push_back(f.nf(concat(power(x, p), a)));
      out.push_back(f.nf(concat(a, power(x, p))));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Indices of a seeded sample of `count` elements (all of them when fewer).
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  if (count >= n) return idx;
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

std::vector<NormalForm> enumerate_ball(const BallSpec& spec, const ExtensionTower& tower) {
  if (spec.radius < 0 || spec.radius > kMaxBallRadius)
    throw PreconditionViolated("ball radius must lie in [0, " + std::to_string(kMaxBallRadius) + "]");
  if (spec.stage > tower.top_stage()) throw PreconditionViolated("ball stage exceeds the tower");
  const ExtensionTower t = tower.truncated(spec.stage < 0 ? tower.top_stage() : spec.stage);
  const auto words = ball(t, spec.radius);
  if (words.size() > spec.sample_cap)
    throw CapExceeded("ball has " + std::to_string(words.size()) + " forms, cap is " +
                      std::to_string(spec.sample_cap));
  std::vector<NormalForm> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back({w, t.top_stage()});
  return out;
}

OracleVerdict check_aabb(const BallSpec& spec, const ExtensionTower& tower) {
  const Frame f(spec, tower);
  if (!f.tower.step(f.stage).is_free()) throw PreconditionViolated("check_aabb needs a free Z step");
  const auto elems = words_of(enumerate_ball(spec, tower));
  Tally tally("aabb");
  auto pair = [&](const Word& a, const Word& b) { tally.run([&] { return aabb(f, a, b); }, {a, b}); };
  if (elems.size() <= kExhaustiveBall) {
    for (const auto& a : elems)
      for (const auto& b : elems) pair(a, b);
  } else {
    tally.sampled();
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (std::size_t i = 0; i < spec.sample_cap && !tally.done(); ++i) {
      const Word& a = elems[pick(rng)];
      pair(a, elems[pick(rng)]);
    }
  }
  return tally.finish();
}

OracleVerdict check_dodatkowy(const BallSpec& spec, const ExtensionTower& tower, int power_bound) {
  const Frame f(spec, tower);
  Tally tally("dodatkowy");
  const auto elems = eligible_of(f, words_of(enumerate_ball(spec, tower)), tally);
  for (const auto& a : elems)
    for (long n = 1; n <= power_bound; ++n) tally.run([&] { return dodatkowy(f, a, n); }, {a}, {n});
  return tally.finish();
}

OracleVerdict check_cent(const BallSpec& spec, const ExtensionTower& tower, int power_bound) {
  const Frame f(spec, tower);
  Tally tally("cent");
  const auto ball_words = words_of(enumerate_ball(spec, tower));
  const auto elems = eligible_of(f, ball_words, tally);
  std::vector<std::size_t> picks = sample_indices(elems.size(), elems.size(), spec.seed);
  if (ball_words.size() > kExhaustiveBall) {
    tally.sampled();
    picks = sample_indices(elems.size(), std::max<std::size_t>(1, spec.sample_cap / ball_words.size()), spec.seed);
  }
  for (auto i : picks) {
    const Word& a = elems[i];
    // candidates commuting with a: its centralizer in the ball and powers of its root
    std::vector<Word> cands;
    try {
      const Word r = minimal_root(a, f.tower).root;
      for (long k = -power_bound; k <= power_bound; ++k) cands.push_back(f.pow(r, k));
      for (const auto& c : ball_words)
        if (commutes(c, a, f.tower)) cands.push_back(c);
    } catch (const MembershipUndecided&) {
      tally.run([]() -> Tuple { throw MembershipUndecided("centralizer candidates"); }, {a});
      continue;
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& w : cands)
      for (const auto& c : cands) tally.run([&] { return cent(f, w, c, a); }, {w, c, a});
  }
  return tally.finish();
}

OracleVerdict check_cykr(const BallSpec& spec, const ExtensionTower& tower) {
  const Frame f(spec, tower);
  Tally tally("cykr");
  const auto elems = eligible_of(f, words_of(enumerate_ball(spec, tower)), tally);
  for (const auto& z : elems)
    for (long n = 1; n <= 3; ++n) tally.run([&] { return cykr(f, z, n); }, {z}, {n});
  return tally.finish();
}

OracleVerdict check_ip(const BallSpec& spec, const ExtensionTower& tower) {
  const Frame f(spec, tower);
  Tally tally("ip");
  const auto elems = eligible_of(f, words_of(enumerate_ball(spec, tower)), tally);
  for (const auto& a : elems) tally.run([&] { return ip(f, a); }, {a});
  return tally.finish();
}

OracleVerdict check_nn(const BallSpec& spec, const ExtensionTower& tower, int power_bound) {
  const Frame f(spec, tower);
  Tally tally("nn");
  const auto elems = eligible_of(f, with_translates(f, words_of(enumerate_ball(spec, tower))), tally);
  for (long n = 1; n <= power_bound && !tally.done(); ++n) {
    std::map<Word, std::vector<Word>> buckets;
    for (const auto& a : elems) buckets[f.pow(a, n)].push_back(a);
    for (const auto& [p, same] : buckets)
      for (const auto& a : same)
        for (const auto& b : same) tally.run([&] { return nn(f, a, b, n); }, {a, b}, {n});
  }
  return tally.finish();
}

OracleVerdict check_jsc(const BallSpec& spec, const ExtensionTower& tower, int power_bound) {
  const Frame f(spec, tower);
  Tally tally("jsc");
  std::vector<Word> rootless;
  for (const auto& a : eligible_of(f, with_translates(f, words_of(enumerate_ball(spec, tower))), tally)) {
    try {
      if (minimal_root(a, f.tower).degree == 1) rootless.push_back(a);
    } catch (const MembershipUndecided&) {
      tally.run([]() -> Tuple { throw MembershipUndecided("root"); }, {a});
    }
  }
  std::map<Word, std::vector<std::pair<Word, long>>> buckets;
  for (const auto& a : rootless)
    for (long n = 1; n <= power_bound; ++n) buckets[f.pow(a, n)].emplace_back(a, n);
  for (const auto& [p, same] : buckets)
    for (const auto& [a, n] : same)
      for (const auto& [b, m] : same) tally.run([&] { return jsc(f, a, b, n, m); }, {a, b}, {n, m});
  return tally.finish();
}

OracleVerdict check_torsion(const BallSpec& spec, const ExtensionTower& tower, int order_bound) {
  const Frame f(spec, tower);
  Tally tally("torsion");
  for (const auto& a : words_of(enumerate_ball(spec, tower)))
    for (long k = 2; k <= order_bound; ++k) tally.run([&] { return torsion(f, a, k); }, {a}, {k});
  return tally.finish();
}

bool replay(const OracleVerdict& v, const BallSpec& spec, const ExtensionTower& tower) {
  if (v.outcome != Outcome::Counterexample) return false;
  const Frame f(spec, tower);
  const auto& w = v.witness;
  const auto& p = v.parameters;
  Tuple t = Tuple::NotPremise;
  if (v.lemma_id == "aabb") t = aabb(f, w.at(0), w.at(1));
  else if (v.lemma_id == "dodatkowy") t = dodatkowy(f, w.at(0), p.at(0));
  else if (v.lemma_id == "cent") t = cent(f, w.at(0), w.at(1), w.at(2));
  else if (v.lemma_id == "cykr") t = cykr(f, w.at(0), p.at(0));
  else if (v.lemma_id == "ip") t = ip(f, w.at(0));
  else if (v.lemma_id == "nn") t = nn(f, w.at(0), w.at(1), p.at(0));
  else if (v.lemma_id == "jsc") t = jsc(f, w.at(0), w.at(1), p.at(0), p.at(1));
  else if (v.lemma_id == "torsion") t = torsion(f, w.at(0), p.at(0));
  return t == Tuple::Violated;
}

}  // namespace hnn
