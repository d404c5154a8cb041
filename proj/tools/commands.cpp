#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hnn/constructions.hpp"
#include "hnn/field.hpp"
#include "hnn/minstruct.hpp"
#include "hnn/oracles.hpp"

namespace hnn::cli {

using json = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  std::string elapsed() const {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << s << " s";
    return out.str();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ExtensionTower load_tower(const std::string& spec) {
  if (spec.empty()) return ExtensionTower(2);
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tower(buf.str());
  }
  std::string text = spec;
  for (char& c : text)
    if (c == ';') c = '\n';
  return parse_tower(text);
}

json header(const RunConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = cfg.command;
  return j;
}

void require_positive(long v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string(name) + " must be positive");
}

std::string kind_name(StepKind k) { return k == StepKind::Hnn ? "hnn" : "freeZ"; }

G0Mode parse_g0(const std::string& s) {
  if (s == "free") return G0Mode::Free;
  if (s == "classical") return G0Mode::Classical;
  throw std::invalid_argument("g0 mode must be 'free' or 'classical', got '" + s + "'");
}

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_string(w));
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------

Report run_reduce(const RunConfig& cfg) {
  const auto tower = load_tower(cfg.tower);
  const Word w = parse_word(cfg.word);
  if (!tower.valid_word(w)) throw std::invalid_argument("word '" + cfg.word + "' uses letters outside the tower");
  const NormalForm nf = normal_form(w, tower);
  Report r;
  r.data = header(cfg);
  r.data["config"] = {{"tower", format_tower(tower)}, {"word", cfg.word}};
  r.data["result"] = {{"normal_form", to_string(nf.word)}, {"stage", nf.tower_stage}};
  r.text = to_string(nf.word) + "\n";
  return r;
}

// ---------------------------------------------------------------------------

Report run_build(const RunConfig& cfg) {
  if (cfg.stages < 0) throw std::invalid_argument("stages must be nonnegative");
  require_positive(cfg.radius, "radius");
  require_positive(cfg.power_bound, "power bound");
  const Stopwatch clock;
  ConstructionConfig cc;
  cc.radius = cfg.radius;
  cc.g0_mode = parse_g0(cfg.g0_mode);
  ConstructionState st = construction_start(cc);
  const CheckOptions opt{cfg.radius, cfg.power_bound, cfg.candidates, cfg.root_samples, cfg.seed};

  Report r;
  r.data = header(cfg);
  r.data["config"] = {{"stages", cfg.stages},         {"radius", cfg.radius},
                      {"power_bound", cfg.power_bound}, {"candidates", cfg.candidates},
                      {"root_samples", cfg.root_samples}, {"seed", cfg.seed},
                      {"g0_mode", cfg.g0_mode}};
  r.data["base"] = {{"stage", st.base_stage},
                    {"x", to_string(st.x)},
                    {"ledger_size", st.ledger.size()},
                    {"queue_size", st.z_queue.size()}};
  std::ostringstream text;
  text << "alternating construction, G0 = " << cfg.g0_mode << " (stage " << st.base_stage << "), x = "
       << to_string(st.x) << "\n"
       << "base: ledger " << st.ledger.size() << ", queue " << st.z_queue.size() << "\n";

  json stages = json::array();
  std::size_t total_checks = 0, total_undecided = 0, prev_num = 0, prev_den = 1;
  bool all_pass = true, monotone = true, fallback_seen = false;
  for (int k = 1; k <= cfg.stages; ++k) {
    st = tower_step(st);
    const ConditionReport rep = check_conditions(st, opt);
    const auto& rec = st.history.back();

    json iii_viol = json::array();
    std::size_t min_candidates = 0, commuting = 0;
    for (std::size_t i = 0; i < rep.centralizer.size(); ++i) {
      const auto& c = rep.centralizer[i];
      min_candidates = i == 0 ? c.candidates : std::min(min_candidates, c.candidates);
      commuting += c.commuting;
      for (const auto& v : c.violations) iii_viol.push_back({{"y", to_string(c.y)}, {"k", to_string(v)}});
    }
    json iv_viol = json::array();
    std::size_t samples = 0, hits = 0;
    for (const auto& rc : rep.roots) {
      samples += rc.samples;
      hits += rc.premise_hits;
      for (const auto& [w, m] : rc.violations)
        iv_viol.push_back({{"y", to_string(rc.y)}, {"z", to_string(rc.z)}, {"w", to_string(w)}, {"m", m}});
    }
    const bool grows = rep.base_ledger * prev_den >= prev_num * rep.base_ball;
    monotone &= grows;
    prev_num = rep.base_ledger;
    prev_den = rep.base_ball;
    all_pass &= rep.pass();
    fallback_seen |= rec.fallback;
    total_checks += rep.checks;
    total_undecided += rep.undecided;

    json entry;
    entry["stage"] = rep.stage;
    entry["kind"] = kind_name(rep.kind);
    entry["z"] = rep.z ? json(to_string(*rep.z)) : json(nullptr);
    entry["fallback"] = rec.fallback;
    entry["queue_size"] = rec.queue_size;
    entry["ledger_size"] = rec.ledger_size;
    entry["i"] = {{"pass", rep.fresh_letter}, {"fresh", to_string(rep.fresh_witness)}};
    entry["ii"] = {{"base_ledger", rep.base_ledger},
                   {"base_ball", rep.base_ball},
                   {"stage_ledger", rep.stage_ledger},
                   {"stage_ball", rep.stage_ball},
                   {"nondecreasing", grows}};
    entry["iii"] = {{"pass", iii_viol.empty()},
                    {"ledger_elements", rep.centralizer.size()},
                    {"min_candidates", min_candidates},
                    {"commuting", commuting},
                    {"violations", iii_viol}};
    entry["iv"] = {{"pass", iv_viol.empty()},
                   {"elements", rep.roots.size()},
                   {"samples", samples},
                   {"premise_hits", hits},
                   {"violations", iv_viol}};
    entry["checks"] = rep.checks;
    entry["undecided"] = rep.undecided;
    entry["undecided_items"] = rep.undecided_items;
    entry["pass"] = rep.pass();
    stages.push_back(entry);

    text << "stage " << rep.stage << " " << kind_name(rep.kind);
    if (rep.z) text << " z = " << to_string(*rep.z);
    if (rec.fallback) text << " (queue empty: free factor instead)";
    text << "\n  (i) fresh letter " << to_string(rep.fresh_witness) << (rep.fresh_letter ? " ok" : " MISSING")
         << "\n  (ii) ledger covers " << rep.base_ledger << "/" << rep.base_ball << " of the G0 ball, "
         << rep.stage_ledger << "/" << rep.stage_ball << " of the stage ball" << (grows ? "" : " (DECREASED)")
         << "\n  (iii) " << rep.centralizer.size() << " ledger elements, >= " << min_candidates
         << " candidates each, " << iii_viol.size() << " violations"
         << "\n  (iv) " << rep.roots.size() << " elements, " << samples << " samples, " << hits << " premise hits, "
         << iv_viol.size() << " violations"
         << "\n  checks " << rep.checks << ", undecided " << rep.undecided << ", queue " << rec.queue_size
         << ", ledger " << rec.ledger_size << (rep.pass() ? "" : "  FAIL") << "\n";
  }
  r.data["stages"] = stages;
  const bool budget = total_undecided * 100 <= total_checks;
  r.data["summary"] = {{"pass", all_pass},
                       {"ledger_fraction_nondecreasing", monotone},
                       {"fallback_steps", fallback_seen},
                       {"checks", total_checks},
                       {"undecided", total_undecided},
                       {"undecided_within_one_percent", budget}};
  r.failed = !all_pass;
  text << "summary: " << (all_pass ? "all conditions hold" : "VIOLATIONS FOUND") << ", ledger fraction "
       << (monotone ? "nondecreasing" : "DECREASED") << ", undecided " << total_undecided << "/" << total_checks
       << "\ntime: " << clock.elapsed() << "\n";
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------------------

Report run_lemmas(const RunConfig& cfg) {
  require_positive(cfg.power_bound, "power bound");
  require_positive(cfg.order_bound, "order bound");
  require_positive(static_cast<long>(cfg.cap), "cap");
  const Stopwatch clock;
  ExtensionTower tower(2);
  int first = 1;
  std::string source;
  if (!cfg.tower.empty()) {
    tower = load_tower(cfg.tower);
    source = "tower";
  } else {
    ConstructionConfig cc;
    cc.radius = cfg.radius;
    cc.g0_mode = parse_g0(cfg.g0_mode);
    ConstructionState st = construction_start(cc);
    for (int k = 0; k < cfg.stages; ++k) st = tower_step(st);
    tower = st.tower;
    first = st.base_stage + 1;
    source = "construction";
  }
  if (tower.top_stage() < first) throw std::invalid_argument("lemma oracles need at least one extension step");

  Report r;
  r.data = header(cfg);
  json config = {{"source", source}};
  if (source == "tower") config["tower"] = format_tower(tower);
  else config.update({{"stages", cfg.stages}, {"g0_mode", cfg.g0_mode}});
  config.update({{"radius", cfg.radius},
                 {"power_bound", cfg.power_bound},
                 {"order_bound", cfg.order_bound},
                 {"cap", cfg.cap},
                 {"seed", cfg.seed}});
  r.data["config"] = config;

  std::ostringstream text;
  text << "lemma oracles on stages " << first << ".." << tower.top_stage() << ", radius " << cfg.radius << "\n";
  json stages = json::array();
  json vacuous = json::array();
  std::size_t counterexamples = 0, undecided = 0;
  for (int s = first; s <= tower.top_stage(); ++s) {
    const BallSpec spec{cfg.radius, s, cfg.cap, cfg.seed};
    const std::size_t ball_size = enumerate_ball(spec, tower).size();
    std::vector<OracleVerdict> verdicts;
    if (tower.step(s).is_free()) verdicts.push_back(check_aabb(spec, tower));
    verdicts.push_back(check_dodatkowy(spec, tower, cfg.power_bound));
    verdicts.push_back(check_cent(spec, tower, cfg.power_bound));
    verdicts.push_back(check_cykr(spec, tower));
    verdicts.push_back(check_ip(spec, tower));
    verdicts.push_back(check_nn(spec, tower, cfg.power_bound));
    verdicts.push_back(check_jsc(spec, tower, cfg.power_bound));
    verdicts.push_back(check_torsion(spec, tower, cfg.order_bound));

    text << "stage " << s << " (" << kind_name(tower.step(s).kind) << "), ball " << ball_size << "\n";
    json vs = json::array();
    for (const auto& v : verdicts) {
      json e = {{"lemma", v.lemma_id},           {"outcome", to_string(v.outcome)}, {"tuples", v.tuples},
                {"premises", v.premises},        {"undecided", v.undecided},       {"exhaustive", v.exhaustive},
                {"witness", words_json(v.witness)}, {"parameters", v.parameters}};
      text << "  " << std::left << std::setw(10) << v.lemma_id << std::setw(15) << to_string(v.outcome)
           << "tuples " << v.tuples << ", premises " << v.premises;
      if (v.undecided) text << ", undecided " << v.undecided;
      if (!v.exhaustive) text << ", sampled";
      if (v.outcome == Outcome::Counterexample) {
        const bool replays = replay(v, spec, tower);
        e["replays"] = replays;
        ++counterexamples;
        text << "\n    counterexample:";
        for (const auto& w : v.witness) text << " [" << to_string(w) << "]";
        for (long p : v.parameters) text << " " << p;
        text << (replays ? " (replays)" : " (DOES NOT REPLAY)");
      }
      if (v.outcome == Outcome::VacuousPass) vacuous.push_back(v.lemma_id + "@" + std::to_string(s));
      undecided += v.undecided;
      text << "\n";
      vs.push_back(e);
    }
    stages.push_back({{"stage", s}, {"kind", kind_name(tower.step(s).kind)}, {"ball", ball_size}, {"verdicts", vs}});
  }
  r.data["stages"] = stages;
  r.data["summary"] = {{"counterexamples", counterexamples}, {"undecided", undecided}, {"vacuous", vacuous}};
  r.failed = counterexamples > 0;
  text << "summary: " << counterexamples << " counterexamples, " << undecided << " undecided tuples\n";
  text << "vacuous passes:";
  if (vacuous.empty()) text << " none";
  for (const auto& v : vacuous) text << " " << v.get<std::string>();
  text << "\ntime: " << clock.elapsed() << "\n";
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

json matrix_json(const field::Matrix<field::Rational>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(field::format_rational(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += "    " + line + "\n";
  return out;
}

}  // namespace

Report run_field(const RunConfig& cfg) {
  using namespace field;
  require_positive(cfg.instances, "instances");
  const Stopwatch clock;
  const ExtFieldSpec spec = parse_spec(cfg.extension);
  const Rational alpha = parse_rational(cfg.alpha), beta = parse_rational(cfg.beta);
  const int n = spec.n;

  Report r;
  r.data = header(cfg);
  r.data["config"] = {{"extension", cfg.extension},
                      {"alpha", format_rational(alpha)},
                      {"beta", format_rational(beta)},
                      {"instances", cfg.instances},
                      {"seed", cfg.seed}};
  std::ostringstream text;

  const auto mul = mul_matrix(alpha, spec);
  const auto inv = explicit_inverse(alpha, spec);
  const bool inverse_ok = inv * mul == Matrix<Rational>::Identity(n, n);
  const auto m = m_matrix(alpha, beta, spec);
  const Rational entry = m_entry_formula(alpha, beta, spec);
  const bool entry_ok = entry == m(n - 2, n - 1);
  json q = json::array();
  for (const auto& v : q_values(alpha, spec)) q.push_back(format_rational(v));
  r.data["instance"] = {{"mul_matrix", matrix_json(mul)},
                        {"q", q},
                        {"inverse", matrix_json(inv)},
                        {"inverse_identity", inverse_ok},
                        {"m_matrix", matrix_json(m)},
                        {"m_entry", format_rational(entry)},
                        {"m_entry_matches", entry_ok}};
  text << "instance " << cfg.extension << ", alpha = " << format_rational(alpha)
       << ", beta = " << format_rational(beta) << "\n  alpha a + 1:\n"
       << indent(format_matrix(mul)) << "  inverse:\n"
       << indent(format_matrix(inv)) << "  inverse * (alpha a + 1) = I: " << (inverse_ok ? "yes" : "NO")
       << "\n  M:\n"
       << indent(format_matrix(m)) << "  M_{m-1,m} closed form " << format_rational(entry)
       << (entry_ok ? " matches" : " DIFFERS") << "\n";
  bool pass = inverse_ok && entry_ok;

  json batches = json::array();
  for (int k = 2; k <= 6; ++k) {
    const auto b = random_batch(k, cfg.instances, cfg.seed);
    pass &= b.pass();
    batches.push_back({{"n", b.n},
                       {"instances", b.instances},
                       {"inverse_ok", b.inverse_ok},
                       {"entry_ok", b.entry_ok},
                       {"rejected", b.rejected}});
    text << "random n = " << k << ": inverse " << b.inverse_ok << "/" << b.instances << ", entry " << b.entry_ok
         << "/" << b.instances << ", singular draws rejected " << b.rejected << "\n";
  }
  r.data["random"] = batches;

  json symbolic = json::array();
  std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + 0x5157);
  std::uniform_int_distribution<int> num(1, 9), sign(0, 1);
  for (int k = 2; k <= 4; ++k) {
    ExtFieldSpec s{k, {}};
    for (int i = 0; i < k; ++i) s.b.emplace_back(sign(rng) ? num(rng) : -num(rng), num(rng));
    const auto res = symbolic_check(s);
    pass &= res.pass();
    json b = json::array();
    std::string btext;
    for (const auto& c : s.b) {
      b.push_back(format_rational(c));
      btext += (btext.empty() ? "" : ",") + format_rational(c);
    }
    symbolic.push_back({{"n", k},
                        {"b", b},
                        {"inverse_identity", res.inverse_identity},
                        {"entry_matches", res.entry_matches},
                        {"entry_nonzero", !res.entry.is_zero()},
                        {"entry_numerator", to_string(res.entry)}});
    text << "symbolic n = " << k << " b = " << btext << ": inverse identity "
         << (res.inverse_identity ? "holds" : "FAILS") << ", closed form " << (res.entry_matches ? "matches" : "DIFFERS")
         << ", numerator of M_{m-1,m} " << (res.entry.is_zero() ? "VANISHES" : "is nonzero") << "\n";
  }
  r.data["symbolic"] = symbolic;
  r.data["summary"] = {{"pass", pass}};
  r.failed = !pass;
  text << "summary: " << (pass ? "all identities hold" : "IDENTITY FAILURE") << "\ntime: " << clock.elapsed() << "\n";
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

json axioms_json(const order::AxiomReport& rep) {
  json a = json::array();
  auto one = [](const order::AxiomResult& x) {
    return json{{"axiom", x.axiom},          {"name", x.name},
                {"checked", x.checked},      {"failures", x.failures},
                {"first_failure", x.first_failure}, {"note", x.note},
                {"pass", x.pass()}};
  };
  for (const auto& x : rep.axioms) a.push_back(one(x));
  return {{"domain_size", rep.domain_size}, {"axioms", a}, {"literal_axiom7", one(rep.literal_axiom7)}, {"pass", rep.pass()}};
}

void axioms_text(std::ostringstream& text, const std::string& title, const order::AxiomReport& rep) {
  text << title << ", " << rep.domain_size << " elements: " << (rep.pass() ? "all axioms hold" : "FAILURE") << "\n";
  for (const auto& x : rep.axioms) {
    text << "  " << x.axiom << " " << std::left << std::setw(44) << x.name << (x.pass() ? "pass" : "FAIL") << " ("
         << x.checked << " checks)";
    if (!x.first_failure.empty()) text << " first failure: " << x.first_failure;
    if (!x.note.empty()) text << "; " << x.note;
    text << "\n";
  }
  text << "  literal reading of 7 (x ~ y -> x + y < x with x = 0 allowed): " << rep.literal_axiom7.failures
       << " failures";
  if (!rep.literal_axiom7.first_failure.empty()) text << ", e.g. " << rep.literal_axiom7.first_failure;
  text << " (informational)\n";
}

}  // namespace

Report run_minstruct(const RunConfig& cfg) {
  using namespace order;
  if (cfg.omega_bound < 1 || cfg.omega_bound > 9)
    throw std::invalid_argument("omega bound must lie in 1..9 (the suite is cubic in 2^bound)");
  if (cfg.copies < 1 || cfg.offset < 0 || cfg.support < 1 || cfg.support > 3)
    throw std::invalid_argument("mode I window needs copies >= 1, offset >= 0, support in 1..3");
  if (cfg.embed_bound < 1 || cfg.embed_bound > 9) throw std::invalid_argument("embedding bound must lie in 1..9");
  const Stopwatch clock;
  const auto omega = axiom_suite(omega_domain(cfg.omega_bound));
  const auto idom = i_domain(cfg.copies, cfg.offset, 3, static_cast<std::size_t>(cfg.support));
  const auto imode = axiom_suite(idom);
  const auto emb = embedding_check(cfg.embed_bound);

  Report r;
  r.data = header(cfg);
  r.data["config"] = {{"omega_bound", cfg.omega_bound},
                      {"copies", cfg.copies},
                      {"offset", cfg.offset},
                      {"support", cfg.support},
                      {"embed_bound", cfg.embed_bound}};
  r.data["omega"] = axioms_json(omega);
  r.data["I"] = axioms_json(imode);
  r.data["embedding"] = {
      {"bound", cfg.embed_bound}, {"pairs", emb.pairs}, {"failures", emb.failures}, {"first_failure", emb.first_failure},
      {"pass", emb.pass()}};
  const bool pass = omega.pass() && imode.pass() && emb.pass();
  r.data["summary"] = {{"pass", pass}};
  r.failed = !pass;

  std::ostringstream text;
  axioms_text(text, "mode omega, points 0.." + std::to_string(cfg.omega_bound - 1), omega);
  axioms_text(text,
              "mode I, " + std::to_string(idom.points.size()) + " points (" + std::to_string(cfg.copies) +
                  " Z-copies, offsets within " + std::to_string(cfg.offset) + "), support <= " +
                  std::to_string(cfg.support),
              imode);
  text << "embedding omega -> I, bound " << cfg.embed_bound << ": " << emb.pairs << " pairs, " << emb.failures
       << " failures\n";
  text << "summary: " << (pass ? "all checks hold" : "FAILURE") << "\ntime: " << clock.elapsed() << "\n";
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------------------

Report run_classical(const RunConfig& cfg) {
  if (cfg.radius < 0) throw std::invalid_argument("radius must be nonnegative");
  require_positive(cfg.count, "count");
  const Stopwatch clock;
  const auto st = classical_step(classical_start(2), cfg.radius);
  const Word t = parse_word(cfg.element);

  Report r;
  r.data = header(cfg);
  r.data["config"] = {{"radius", cfg.radius}, {"count", cfg.count}, {"element", cfg.element}};
  std::size_t pairs = 0, relations_ok = 0;
  if (!st.letters.empty())
    for (const auto& [pair, stage] : st.letters[0]) {
      ++pairs;
      const Word T = Word::stable(stage);
      if (normal_form(concat(concat(T, pair.first), invert(T)), st.top()) == normal_form(pair.second, st.top()))
        ++relations_ok;
    }
  const auto witnesses = classical_centralizer_witnesses(st, t, cfg.count);
  std::set<Word> distinct;
  std::size_t commuting = 0;
  json ws = json::array();
  for (const auto& nf : witnesses) {
    distinct.insert(nf.word);
    if (commutes(nf.word, t, st.top())) ++commuting;
    ws.push_back(to_string(nf.word));
  }
  const bool pass = relations_ok == pairs && distinct.size() == witnesses.size() && commuting == witnesses.size() &&
                    witnesses.size() >= static_cast<std::size_t>(cfg.count);
  r.data["pairs"] = pairs;
  r.data["relations_ok"] = relations_ok;
  r.data["witnesses"] = ws;
  r.data["distinct"] = distinct.size();
  r.data["commuting"] = commuting;
  r.data["summary"] = {{"pass", pass}};
  r.failed = !pass;

  std::ostringstream text;
  text << "classical step at radius " << cfg.radius << ": " << pairs << " stable letters, " << relations_ok
       << " relations verified\n"
       << witnesses.size() << " centralizer witnesses for " << to_string(t) << ": " << distinct.size()
       << " distinct, " << commuting << " commute\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(witnesses.size(), 5); ++i)
    text << "  " << to_string(witnesses[i].word) << "\n";
  if (witnesses.size() > 5) text << "  ...\n";
  text << "summary: " << (pass ? "pass" : "FAILURE") << "\ntime: " << clock.elapsed() << "\n";
  r.text = text.str();
  return r;
}

Report run(const RunConfig& cfg) {
  if (cfg.command == "reduce") return run_reduce(cfg);
  if (cfg.command == "build") return run_build(cfg);
  if (cfg.command == "lemmas") return run_lemmas(cfg);
  if (cfg.command == "field") return run_field(cfg);
  if (cfg.command == "minstruct") return run_minstruct(cfg);
  if (cfg.command == "classical") return run_classical(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace hnn::cli
