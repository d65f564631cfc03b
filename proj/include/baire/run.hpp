#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "baire/bigint.hpp"
#include "baire/chaos_stats.hpp"
#include "baire/core.hpp"

namespace baire {

enum class Command { gen, xi, verify_sft, verify_dense, verify_sbt, lemmas, bounds };

/// Batch configuration. Identical configs produce byte-identical artifacts:
/// every random choice flows from rng_seed and the seed is recorded in the
/// output metadata.
struct RunConfig {
  Command command = Command::bounds;

  std::string basis_path;
  std::string seed_path;
  std::string out_path;
  std::string x_path, y_path;  // xi inputs (prefix dumps)

  std::string gen_kind = "sft";  // constant|periodic|sft|dense|sbt
  std::string variant = "sft";   // bounds table variant

  Word word;                 // cylinder word / periodic word / constant symbol
  std::uint64_t p = 3;       // dense word length (verify-dense: largest p)
  std::uint64_t g = 2;       // dense family index (verify-dense: largest g)
  std::uint64_t q = 3;       // cylinder lower window
  std::uint64_t window_t = 2;
  std::uint64_t max_j = 6;
  BigInt symbol_budget = BigInt(200000000);
  std::uint64_t trials = 1000;
  std::uint64_t rng_seed = 1;
  std::uint64_t n = 256;     // gen prefix length / xi max length (0 = all)
  std::uint64_t safe_k = 2;  // lemmas: the safe symbol to build alphabets from
  std::uint64_t pairs = 10;
  std::uint64_t sbt_R = 4;
  BigInt sbt_M = BigInt(30);  // bounds table only
  XiPredicate predicate = XiPredicate::window_agree;
};

/// Executes the command; returns the process exit status. Summary goes to
/// `out`, diagnostics to `err`; CSV artifacts are written to out_path when
/// set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Seed configuration file: lines `z <symbols>`, `x <symbols>`,
/// `y <symbols>`, optional `selector random <seed>` or
/// `selector bits <0/1 symbols>` (repeated periodically). `#` comments and
/// blank lines are ignored.
struct SeedConfig {
  Word z, x, y;
  std::optional<std::uint64_t> selector_seed;
  Word selector_bits;
};
SeedConfig load_seed_config(const std::string& path);

}  // namespace baire
