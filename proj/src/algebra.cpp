#include "hnn/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

#include "sampling.hpp"
#include "stage_cache.hpp"

namespace hnn {
namespace {

using Lock = std::scoped_lock<std::recursive_mutex>;
using detail::PowerTable;

int sign(int v) { return v > 0 ? 1 : -1; }

/// Letters of a stage-s normal form after its head, stored reversed so the
/// front of the word is the back of the vector.
class Tail {
 public:
  bool empty() const { return rev_.empty(); }
  const Letter& front() const { return rev_.back(); }

  void push_front(Letter l) {
    if (!rev_.empty() && rev_.back().symbol == l.symbol) {
      rev_.back().exponent += l.exponent;
      if (rev_.back().exponent == 0) rev_.pop_back();
    } else if (l.exponent != 0) {
      rev_.push_back(l);
    }
  }
  void push_front(const Word& w) {
    auto ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push_front(*it);
  }
  void pop_unit_front() {
    auto& l = rev_.back();
    l.exponent -= sign(l.exponent);
    if (l.exponent == 0) rev_.pop_back();
  }
  /// Removes and returns the letters before the next occurrence of `stop`.
  Word take_prefix_until(Symbol stop) {
    Word w;
    while (!rev_.empty() && rev_.back().symbol != stop) {
      w.push_back(rev_.back());
      rev_.pop_back();
    }
    return w;
  }
  void append_to(Word& w) const {
    for (auto it = rev_.rbegin(); it != rev_.rend(); ++it) w.push_back(*it);
  }

 private:
  std::vector<Letter> rev_;
};

/// A word at stage s as segments a_0 .. a_m separated by unit letters
/// t_s^{eps_1} .. t_s^{eps_m}; eps[i] sits between segs[i] and segs[i+1].
struct StageSplit {
  std::vector<Word> segs;
  std::vector<int> eps;
};

StageSplit split_stage(const Word& w, int s) {
  StageSplit out;
  out.segs.emplace_back();
  const Symbol t = Symbol::stable(s);
  for (const auto& l : w.letters()) {
    if (l.symbol == t) {
      for (int i = 0; i < std::abs(l.exponent); ++i) {
        out.eps.push_back(sign(l.exponent));
        out.segs.emplace_back();
      }
    } else {
      out.segs.back().push_back(l);
    }
  }
  return out;
}

Word join_stage(const StageSplit& sp, int s, std::size_t first_eps = 0) {
  Word w = first_eps == 0 ? sp.segs[0] : Word{};
  for (std::size_t i = first_eps; i < sp.eps.size(); ++i) {
    w.push_back({Symbol::stable(s), sp.eps[i]});
    w.append(sp.segs[i + 1]);
  }
  return w;
}

const Word& gen_for(const ExtensionStep& st, int eps) { return eps > 0 ? st.source : st.target; }
const Word& img_for(const ExtensionStep& st, int eps) { return eps > 0 ? st.target : st.source; }

class Engine {
 public:
  explicit Engine(const ExtensionTower& tower) : tower_(tower), bounds_(tower.bounds()) {}

  /// Normal form of u*v where v is already a normal form.
  Word mul(const Word& u, const Word& v) const {
    const int s = std::max(u.max_stage(), v.max_stage());
    if (s == 0) return concat(u, v);
    const ExtensionStep& st = tower_.step(s);
    const Symbol t = Symbol::stable(s);

    Word head;
    Tail tail;
    {
      auto ls = v.letters();
      std::size_t first_t = 0;
      while (first_t < ls.size() && ls[first_t].symbol != t) ++first_t;
      head = Word(ls.subspan(0, first_t));
      for (std::size_t i = ls.size(); i-- > first_t;) tail.push_front(ls[i]);
    }

    auto apply_t = [&](int eps) {
      if (!tail.empty() && tail.front().symbol == t && sign(tail.front().exponent) == -eps) {
        std::optional<long> j;
        if (st.is_free()) {
          if (head.empty()) j = 0;
        } else {
          j = member(head, gen_for(st, eps), std::nullopt);
        }
        if (j) {
          tail.pop_unit_front();
          Word b1 = tail.take_prefix_until(t);
          head = st.is_free() ? std::move(b1) : mul(power_of(img_for(st, eps), *j), b1);
          return;
        }
      }
      if (st.is_free()) {
        tail.push_front(head);
        head = Word{};
      } else {
        const CosetRep cr = coset(head, gen_for(st, eps));
        tail.push_front(cr.rep);
        head = power_of(img_for(st, eps), cr.k);
      }
      tail.push_front(Letter{t, eps});
    };

    auto ls = u.letters();
    std::size_t i = ls.size();
    while (i > 0) {
      const Letter& l = ls[i - 1];
      if (l.symbol == t) {
        for (int k = 0; k < std::abs(l.exponent); ++k) apply_t(sign(l.exponent));
        --i;
        continue;
      }
      std::size_t j = i - 1;
      while (j > 0 && ls[j - 1].symbol != t) --j;
      head = mul(Word(ls.subspan(j, i - j)), head);
      i = j;
    }
    tail.append_to(head);
    return head;
  }

  Word normal(const Word& w) const {
    const int s = w.max_stage();
    if (s == 0) return w;
    auto& cache = tower_.cache(s);
    Lock lock(cache.mutex);
    if (auto it = cache.normal_forms.find(w); it != cache.normal_forms.end()) return it->second;
    Word r = mul(w, Word{});
    cache.normal_forms.emplace(w, r);
    return r;
  }

  /// Normal form of g^k; g must be a normal form.
  Word power_of(const Word& g, long k) const {
    if (k == 0 || g.empty()) return Word{};
    auto& cache = tower_.cache(g.max_stage());
    Lock lock(cache.mutex);
    PowerTable& table = cache.powers[g];
    extend(table, g, std::labs(k), k > 0);
    return k > 0 ? table.pos[k] : table.neg[-k];
  }

  /// w, g normal forms, g non-trivial.
  std::optional<long> member(const Word& w, const Word& g, std::optional<long> bound) const {
    if (w.empty()) return 0;
    auto& cache = tower_.cache(g.max_stage());
    Lock lock(cache.mutex);
    PowerTable& table = cache.powers[g];
    const long len = w.unit_length();
    const long b = bound.value_or(std::max(len, bounds_.floor));
    extend(table, g, b, true);
    extend(table, g, b, false);
    if (auto it = table.index.find(w); it != table.index.end()) return it->second;

    auto certified = [&](const std::vector<Word>& side) {
      const auto n = side.size();
      if (n < 4) return false;
      const long l0 = side[n - 3].unit_length(), l1 = side[n - 2].unit_length(),
                 l2 = side[n - 1].unit_length();
      return l0 < l1 && l1 < l2 && l0 > len;
    };
    for (bool positive : {true, false}) {
      auto& side = positive ? table.pos : table.neg;
      while (!certified(side)) {
        if (static_cast<long>(side.size()) > bounds_.max_window)
          throw MembershipUndecided("cannot certify membership of " + to_string(w) + " in <" +
                                    to_string(g) + ">");
        extend(table, g, static_cast<long>(side.size()), positive);
        if (side.back() == w) return positive ? static_cast<long>(side.size() - 1)
                                              : -static_cast<long>(side.size() - 1);
      }
    }
    return std::nullopt;
  }

  /// a, g normal forms, g non-trivial.
  CosetRep coset(const Word& a, const Word& g) const {
    if (a.empty()) return {0, Word{}};
    const int s = std::max(a.max_stage(), g.max_stage());
    auto& cache = tower_.cache(s);
    Lock lock(cache.mutex);
    const auto key = std::make_pair(g, a);
    if (auto it = cache.cosets.find(key); it != cache.cosets.end()) return it->second;

    const Word g_inv = invert(g);
    CosetRep best{0, a};
    const long window = std::max(a.unit_length(), bounds_.floor);
    for (int dir : {1, -1}) {
      const Word& step = dir > 0 ? g_inv : g;
      Word c = a;
      std::vector<long> lens{a.unit_length()};
      for (long k = 1;; ++k) {
        c = mul(step, c);
        if (c < best.rep) best = {dir * k, c};
        lens.push_back(c.unit_length());
        const auto n = lens.size();
        if (k >= window && n >= 4 && lens[n - 3] < lens[n - 2] && lens[n - 2] < lens[n - 1] &&
            lens[n - 3] > best.rep.unit_length())
          break;
        if (k > bounds_.max_window)
          throw MembershipUndecided("cannot certify coset representative of " + to_string(a) +
                                    " modulo <" + to_string(g) + ">");
      }
    }
    cache.cosets.emplace(key, best);
    return best;
  }

  const ExtensionTower& tower() const { return tower_; }

 private:
  void extend(PowerTable& table, const Word& g, long n, bool positive) const {
    auto& side = positive ? table.pos : table.neg;
    const Word factor = positive ? g : invert(g);
    while (static_cast<long>(side.size()) <= n) {
      Word next = mul(factor, side.back());
      const long k = static_cast<long>(side.size());
      table.index.emplace(next, positive ? k : -k);
      side.push_back(std::move(next));
    }
  }

  const ExtensionTower& tower_;
  MembershipBounds bounds_;
};

void require_valid(const Word& w, const ExtensionTower& tower) {
  if (!tower.valid_word(w))
    throw PreconditionViolated("word '" + to_string(w) + "' uses letters outside the tower");
}

/// Cyclic reduction of a freely reduced word: w = y c y^-1.
CyclicReduction free_cyclic_reduce(const Word& w) {
  auto units = unit_letters(w);
  std::size_t lo = 0, hi = units.size();
  while (hi - lo >= 2 && units[lo].symbol == units[hi - 1].symbol &&
         units[lo].exponent == -units[hi - 1].exponent) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  for (std::size_t i = 0; i < lo; ++i) out.conjugator.push_back(units[i]);
  for (std::size_t i = lo; i < hi; ++i) out.reduced.push_back(units[i]);
  return out;
}

}  // namespace

Word canonical(const Word& w, const ExtensionTower& tower) {
  require_valid(w, tower);
  return Engine(tower).normal(w);
}

NormalForm normal_form(const Word& w, const ExtensionTower& tower) {
  return {canonical(w, tower), tower.top_stage()};
}

std::optional<long> in_cyclic(const Word& w, const Word& g, const ExtensionTower& tower,
                              std::optional<long> bound) {
  require_valid(w, tower);
  require_valid(g, tower);
  Engine eng(tower);
  const Word gn = eng.normal(g);
  if (gn.empty()) throw PreconditionViolated("in_cyclic: generator is trivial");
  return eng.member(eng.normal(w), gn, bound);
}

CosetRep coset_rep(const Word& a, const Word& generator, const ExtensionTower& tower) {
  require_valid(a, tower);
  require_valid(generator, tower);
  Engine eng(tower);
  const Word gn = eng.normal(generator);
  if (gn.empty()) throw PreconditionViolated("coset_rep: generator is trivial");
  return eng.coset(eng.normal(a), gn);
}

Word britton_reduce(const Word& w, const ExtensionTower& tower, PinchOrder order) {
  require_valid(w, tower);
  const int s = w.max_stage();
  if (s == 0) return w;
  const ExtensionStep& st = tower.step(s);
  const ExtensionTower lower = tower.truncated(s - 1);
  StageSplit sp = split_stage(w, s);

  auto pinch_power = [&](std::size_t i) -> std::optional<long> {
    // Pinch t^{eps[i-1]} segs[i] t^{eps[i]} with eps[i-1] = -eps[i].
    if (sp.eps[i - 1] != -sp.eps[i]) return std::nullopt;
    if (st.is_free()) return canonical(sp.segs[i], lower).empty() ? std::optional<long>(0) : std::nullopt;
    return in_cyclic(sp.segs[i], gen_for(st, sp.eps[i - 1]), lower);
  };

  for (;;) {
    const std::size_t m = sp.eps.size();
    std::optional<std::size_t> at;
    std::optional<long> power;
    for (std::size_t n = 1; n < m; ++n) {
      const std::size_t i = order == PinchOrder::Leftmost ? n : m - n;
      if (auto p = pinch_power(i)) {
        at = i;
        power = p;
        break;
      }
    }
    if (!at) break;
    const std::size_t i = *at;
    Word merged = sp.segs[i - 1];
    if (!st.is_free()) merged.append(hnn::power(img_for(st, sp.eps[i - 1]), static_cast<int>(*power)));
    merged.append(sp.segs[i + 1]);
    sp.segs[i - 1] = std::move(merged);
    sp.segs.erase(sp.segs.begin() + static_cast<long>(i), sp.segs.begin() + static_cast<long>(i) + 2);
    sp.eps.erase(sp.eps.begin() + static_cast<long>(i) - 1, sp.eps.begin() + static_cast<long>(i) + 1);
  }
  for (auto& seg : sp.segs) seg = britton_reduce(seg, lower, order);
  return join_stage(sp, s);
}

CyclicReduction cyclically_reduce(const Word& w, const ExtensionTower& tower) {
  require_valid(w, tower);
  Engine eng(tower);
  Word cur = eng.normal(w);
  Word conj;
  auto conjugate_by = [&](const Word& c) {
    // cur <- c^-1 cur c, conj <- conj c
    cur = eng.normal(concat(concat(invert(c), cur), c));
    conj = eng.normal(concat(conj, c));
  };
  for (;;) {
    const int s = cur.max_stage();
    if (s == 0) {
      auto fr = free_cyclic_reduce(cur);
      return {fr.reduced, eng.normal(concat(conj, fr.conjugator))};
    }
    const ExtensionStep& st = tower.step(s);
    const StageSplit sp = split_stage(cur, s);
    const Word& a0 = sp.segs.front();
    const Word& am = sp.segs.back();
    const int first = sp.eps.front(), last = sp.eps.back();

    bool wrap_pinch = false;
    if (last == -first) {
      const Word wrap = eng.normal(concat(am, a0));
      wrap_pinch = st.is_free() ? wrap.empty() : eng.member(wrap, gen_for(st, last), std::nullopt).has_value();
    }
    if (wrap_pinch) {
      Word c = a0;
      c.push_back({Symbol::stable(s), first});
      conjugate_by(c);
      continue;
    }
    if (am.empty() || a0.empty()) return {cur, conj};
    if (!st.is_free() && eng.member(eng.normal(a0), img_for(st, first), std::nullopt)) return {cur, conj};
    conjugate_by(a0);
    return {cur, conj};
  }
}

int home_stage(const Word& w, const ExtensionTower& tower) {
  return cyclically_reduce(w, tower).reduced.max_stage();
}

bool is_conjugate_into(const Word& w, const ExtensionTower& tower, int stage) {
  if (stage < 0 || stage > tower.top_stage()) throw PreconditionViolated("stage out of range");
  return home_stage(w, tower) <= stage;
}

Root free_minimal_root(const Word& a) {
  if (a.max_stage() != 0) throw PreconditionViolated("free_minimal_root: word has stable letters");
  if (a.empty()) throw PreconditionViolated("free_minimal_root: trivial element");
  const auto cr = free_cyclic_reduce(a);
  const auto units = unit_letters(cr.reduced);
  const std::size_t n = units.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = units[i] == units[i - p];
    if (!periodic) continue;
    Word r = cr.conjugator;
    for (std::size_t i = 0; i < p; ++i) r.push_back(units[i]);
    r.append(invert(cr.conjugator));
    return {r, static_cast<int>(n / p)};
  }
  return {a, 1};
}

Root minimal_root(const Word& a, const ExtensionTower& tower) {
  require_valid(a, tower);
  Engine eng(tower);
  if (eng.normal(a).empty()) throw PreconditionViolated("minimal_root: trivial element");
  const auto [c, y] = cyclically_reduce(a, tower);
  const int s = c.max_stage();
  if (s == 0) throw PreconditionViolated("minimal_root: element is conjugate into the base group");
  const ExtensionStep& st = tower.step(s);
  const StageSplit sp = split_stage(c, s);
  const long L = static_cast<long>(sp.eps.size());
  const Word y_inv = invert(y);

  for (long n = L; n >= 2; --n) {
    if (L % n != 0) continue;
    const long k = L / n;
    bool periodic = true;
    for (long i = 0; i + k < L && periodic; ++i) periodic = sp.eps[i] == sp.eps[i + k];
    if (!periodic) continue;
    const Word suffix = join_stage(sp, s, static_cast<std::size_t>((n - 1) * k));
    const long window = st.is_free() ? 0 : std::max(c.unit_length(), tower.bounds().floor);
    const Word& img = img_for(st, sp.eps.front());
    for (long step = 0; step <= 2 * window; ++step) {
      const long j = step % 2 == 0 ? step / 2 : -(step + 1) / 2;
      Word b0 = sp.segs.front();
      if (j != 0) b0.append(power(img, static_cast<int>(-j)));
      const Word cand = eng.normal(concat(b0, suffix));
      if (eng.normal(power(cand, static_cast<int>(n))) == c)
        return {eng.normal(concat(concat(y, cand), y_inv)), static_cast<int>(n)};
    }
  }
  return {eng.normal(a), 1};
}

bool commutes(const Word& a, const Word& b, const ExtensionTower& tower) {
  Word comm = concat(a, b);
  comm.append(invert(a));
  comm.append(invert(b));
  return canonical(comm, tower).empty();
}

std::vector<Word> ball(const ExtensionTower& tower, int radius) {
  const std::vector<Letter> alphabet = detail::alphabet(tower);

  Engine eng(tower);
  std::unordered_set<Word> seen{Word{}};
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (const auto& l : alphabet) {
        if (!w.empty() && w.back().symbol == l.symbol && w.back().exponent == -l.exponent) continue;
        auto grown = w;
        grown.push_back(l);
        seen.insert(eng.normal(Word(std::span<const Letter>(grown))));
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalForm> centralizer_ball(const Word& y, const ExtensionTower& tower, int radius) {
  if (canonical(y, tower).empty()) throw PreconditionViolated("centralizer_ball: y is trivial");
  std::vector<NormalForm> out;
  for (const auto& k : ball(tower, radius))
    if (commutes(k, y, tower)) out.push_back({k, tower.top_stage()});
  return out;
}

}  // namespace hnn
