// Exit status: 0 when every check holds, 1 when a counterexample or failed
// identity is reported, 2 on usage, parse or precondition errors.

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

namespace {

int emit_error(const hnn::cli::RunConfig& cfg, bool structured, const std::string& message) {
  if (structured) {
    nlohmann::ordered_json j;
    j["schema_version"] = hnn::cli::kSchemaVersion;
    j["command"] = cfg.command;
    j["error"] = message;
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "error: " << message << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  hnn::cli::RunConfig cfg;
  std::string format = "text";

  CLI::App app{"HNN towers, lemma oracles, field identities and ordered exponent-2 groups"};
  app.set_config("--config", "", "Read options from a TOML or INI file");
  app.require_subcommand(1);

  app.add_option("--tower", cfg.tower, "Tower file, or inline text with ';' between lines");
  app.add_option("--stages", cfg.stages, "Construction steps")->capture_default_str();
  app.add_option("--radius", cfg.radius, "Ball radius")->capture_default_str();
  app.add_option("--power-bound", cfg.power_bound, "Largest exponent examined")->capture_default_str();
  app.add_option("--order-bound", cfg.order_bound, "Largest torsion order examined")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Ball size cap and sample count for oracles")->capture_default_str();
  app.add_option("--candidates", cfg.candidates, "Centralizer candidates per ledger element")->capture_default_str();
  app.add_option("--root-samples", cfg.root_samples, "Root-condition sample budget per element")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for every sampled quantity")->capture_default_str();
  app.add_option("--g0-mode", cfg.g0_mode, "Base group: free or classical")
      ->check(CLI::IsMember({"free", "classical"}))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Print the normal form of a word")->fallthrough();
  reduce->add_option("word", cfg.word, "Word such as \"t1 g0 t1^-1\"")->required();

  app.add_subcommand("build", "Run the alternating construction and check its conditions")->fallthrough();
  app.add_subcommand("lemmas", "Run every lemma oracle on each stage")->fallthrough();

  auto* field = app.add_subcommand("field", "Check the multiplication-matrix identities")->fallthrough();
  field->add_option("--extension", cfg.extension, "n=<int> b=<c0,...,c(n-1)>")->capture_default_str();
  field->add_option("--alpha", cfg.alpha, "Exact scalar p or p/q")->capture_default_str();
  field->add_option("--beta", cfg.beta, "Exact scalar p or p/q")->capture_default_str();
  field->add_option("--instances", cfg.instances, "Random instances per degree")->capture_default_str();

  auto* ms = app.add_subcommand("minstruct", "Run the axiom suites and the embedding check")->fallthrough();
  ms->add_option("--omega-bound", cfg.omega_bound, "Index points in mode omega")->capture_default_str();
  ms->add_option("--copies", cfg.copies, "Z-copies in mode I")->capture_default_str();
  ms->add_option("--offset", cfg.offset, "Offsets -k..k per copy")->capture_default_str();
  ms->add_option("--support", cfg.support, "Largest support in mode I")->capture_default_str();
  ms->add_option("--embed-bound", cfg.embed_bound, "Bound for the embedding check")->capture_default_str();

  auto* cl = app.add_subcommand("classical", "One classical step and its centralizer witnesses")->fallthrough();
  cl->add_option("--count", cfg.count, "Witnesses requested")->capture_default_str();
  cl->add_option("--element", cfg.element, "Registered element whose centralizer is sampled")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "classical" && app.get_option("--radius")->count() == 0) cfg.radius = 1;
  const bool structured = format == "structured";

  try {
    const auto report = hnn::cli::run(cfg);
    if (structured) std::cout << report.data.dump(2) << "\n";
    else std::cout << report.text;
    return report.failed ? 1 : 0;
  } catch (const std::exception& e) {
    return emit_error(cfg, structured, e.what());
  }
}
