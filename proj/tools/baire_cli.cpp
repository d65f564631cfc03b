#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "baire/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "baire: subshifts of the countable-alphabet shift and exact "
      "distributional-chaos statistics"};
  app.require_subcommand(1);

  baire::RunConfig config;
  std::string word_text, budget_text, m_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--rng-seed", config.rng_seed, "64-bit seed recorded in outputs");
    cmd->add_option("--out", config.out_path, "output file (CSV or prefix dump)");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget_text,
                    "symbol budget per verification pass");
    cmd->add_option("--max-j", config.max_j, "largest checkpoint ordinal");
    cmd->add_option("--pairs", config.pairs, "number of pairs to draw");
  };

  CLI::App* gen = app.add_subcommand("gen", "write a point prefix");
  gen->add_option("--kind", config.gen_kind,
                  "constant|periodic|sft|dense|sbt");
  gen->add_option("--basis", config.basis_path, "forbidden-word basis file");
  gen->add_option("--seed-config", config.seed_path, "periodic seed file");
  gen->add_option("--word", word_text, "cylinder/periodic word");
  gen->add_option("--p", config.p, "dense word length");
  gen->add_option("--g", config.g, "dense family index");
  gen->add_option("--n", config.n, "prefix length to write");
  add_common(gen);

  CLI::App* xi = app.add_subcommand("xi", "exact xi trajectory CSV");
  xi->add_option("--x-file", config.x_path, "prefix dump for x")->required();
  xi->add_option("--y-file", config.y_path, "prefix dump for y")->required();
  xi->add_option("--window", config.window_t, "dyadic threshold exponent t");
  xi->add_option("--n", config.n, "largest prefix length (0 = all available)");
  std::string predicate = "window";
  xi->add_option("--predicate", predicate, "window|strict");
  add_common(xi);

  CLI::App* vsft = app.add_subcommand("verify-sft",
                                      "cylinder-family checkpoint verdicts");
  vsft->add_option("--basis", config.basis_path, "basis file")->required();
  vsft->add_option("--word", word_text, "allowed cylinder word (default 0)");
  vsft->add_option("--q", config.q, "lower-checkpoint window");
  add_budget(vsft);
  add_common(vsft);

  CLI::App* vdense = app.add_subcommand("verify-dense",
                                        "dense-family checks and verdicts");
  vdense->add_option("--basis", config.basis_path, "basis file")->required();
  vdense->add_option("--p", config.p, "largest word length");
  vdense->add_option("--g", config.g, "largest family index");
  vdense->add_option("--window", config.window_t, "lower-checkpoint window");
  add_budget(vdense);
  add_common(vdense);

  CLI::App* vsbt = app.add_subcommand("verify-sbt",
                                      "bounded-type pipeline verdicts");
  vsbt->add_option("--basis", config.basis_path,
                   "basis file (omit for the full shift, N = 1)");
  vsbt->add_option("--seed-config", config.seed_path, "seed file")->required();
  vsbt->add_option("--window", config.sbt_R, "lower-checkpoint window R");
  add_budget(vsbt);
  add_common(vsbt);

  CLI::App* lemmas = app.add_subcommand("lemmas",
                                        "distinctness witness trials");
  lemmas->add_option("--safe-k", config.safe_k, "safe symbol K");
  lemmas->add_option("--p", config.p, "first offset parameter");
  lemmas->add_option("--q", config.q, "second offset parameter");
  lemmas->add_option("--trials", config.trials, "trials per lemma");
  add_common(lemmas);

  CLI::App* bounds = app.add_subcommand("bounds", "exact bound tables");
  bounds->add_option("--variant", config.variant, "sft|dense|sbt");
  bounds->add_option("--word", word_text, "cylinder word (for |w|)");
  bounds->add_option("--p", config.p, "dense word length");
  bounds->add_option("--q", config.q, "sft lower window");
  bounds->add_option("--window", config.window_t, "dense lower window");
  bounds->add_option("--M", m_text, "block length for the sbt table");
  bounds->add_option("--max-j", config.max_j, "largest checkpoint index");
  add_common(bounds);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!word_text.empty()) config.word = baire::parse_word(word_text);
    if (!budget_text.empty()) config.symbol_budget = baire::BigInt(budget_text);
    if (!m_text.empty()) config.sbt_M = baire::BigInt(m_text);
    if (xi->parsed()) {
      if (predicate == "strict")
        config.predicate = baire::XiPredicate::strict_metric;
      else if (predicate != "window")
        throw std::invalid_argument("--predicate must be window or strict");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (gen->parsed()) config.command = baire::Command::gen;
  else if (xi->parsed()) config.command = baire::Command::xi;
  else if (vsft->parsed()) config.command = baire::Command::verify_sft;
  else if (vdense->parsed()) config.command = baire::Command::verify_dense;
  else if (vsbt->parsed()) config.command = baire::Command::verify_sbt;
  else if (lemmas->parsed()) config.command = baire::Command::lemmas;
  else if (bounds->parsed()) config.command = baire::Command::bounds;

  // Defaults that differ per command.
  if (vdense->parsed()) {
    if (vdense->count("--p") == 0) config.p = 3;
    if (vdense->count("--g") == 0) config.g = 2;
    if (vdense->count("--max-j") == 0) config.max_j = 5;
  }
  if (vsbt->parsed() && vsbt->count("--max-j") == 0) config.max_j = 2;
  if (vsbt->parsed() && vsbt->count("--budget") == 0)
    config.symbol_budget = baire::BigInt(250000000);

  return baire::run(config, std::cout, std::cerr);
}
