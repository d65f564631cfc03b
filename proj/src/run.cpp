#include "baire/run.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "baire/constructions.hpp"
#include "baire/metric.hpp"
#include "baire/point_stream.hpp"
#include "baire/rng.hpp"
#include "baire/subshift.hpp"
#include "baire/verification.hpp"

namespace baire {

namespace {

using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_csv_file(const std::string& path, const Metadata& metadata,
                    const std::vector<CsvRow>& rows) {
  if (path.empty()) return;
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write output file: " + path);
  write_csv(os, metadata, rows);
}

std::string rat_summary(const BigRat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r).str() << '/'
     << boost::multiprecision::denominator(r).str() << " ("
     << std::setprecision(6) << rat_to_double(r) << ')';
  return os.str();
}

void print_outcome(std::ostream& out, const std::string& label,
                   const CheckpointOutcome& outcome) {
  for (const auto& r : outcome.reports) {
    out << label << ' ' << checkpoint_kind_name(r.kind) << " j=" << r.ordinal
        << " slot=" << r.slot << " n=" << r.n.str()
        << " ratio=" << rat_summary(r.ratio) << " bound=" << rat_summary(r.bound)
        << ' ' << (r.satisfied ? "OK" : "FAIL") << '\n';
  }
  for (const auto& s : outcome.skipped) {
    out << label << ' ' << checkpoint_kind_name(s.kind) << " j=" << s.ordinal;
    if (s.slot) out << " slot=" << *s.slot;
    out << " skipped: " << s.reason << '\n';
  }
}

SubshiftSpec load_spec_or_full_shift(const RunConfig& config) {
  if (!config.basis_path.empty()) return load_basis_file(config.basis_path);
  return SubshiftSpec::full_shift();
}

PointStream build_gen_stream(const RunConfig& config, const SubshiftSpec& spec,
                             Metadata& metadata) {
  if (config.gen_kind == "constant") {
    const Symbol s = config.word.empty() ? 0 : config.word[0];
    metadata.emplace_back("symbol", std::to_string(s));
    return constant_stream(s);
  }
  if (config.gen_kind == "periodic") {
    if (config.word.empty())
      throw std::invalid_argument("gen periodic needs --word");
    return periodic_stream(config.word);
  }
  if (config.gen_kind == "sft") {
    const Word w = config.word.empty() ? Word{0} : config.word;
    const Symbol K = compute_safe_symbol_K(spec.basis());
    PointStream base =
        seeded_two_symbol_stream(K, K + 1, subseed(config.rng_seed, 100, 0));
    metadata.emplace_back("w", word_to_string(w));
    metadata.emplace_back("K", std::to_string(K));
    return make_sft_member(spec, w, std::move(base)).point;
  }
  if (config.gen_kind == "dense") {
    const Symbol K = compute_safe_symbol_K(spec.basis());
    const Symbol lo = 2 * (K + config.g);
    PointStream base = seeded_two_symbol_stream(
        lo, lo + config.p, subseed(config.rng_seed, 101, 0),
        Word{lo, lo + config.p});
    DenseMember m = make_dense_member(spec, config.p, config.g, std::move(base));
    metadata.emplace_back("w", word_to_string(m.w));
    metadata.emplace_back("r_g", std::to_string(m.r));
    return m.point;
  }
  if (config.gen_kind == "sbt") {
    if (config.seed_path.empty())
      throw std::invalid_argument("gen sbt needs --seed-config");
    SeedConfig sc = load_seed_config(config.seed_path);
    SbtSeedData seed = make_sbt_seed(spec, sc.z, sc.x, sc.y);
    PointStream selector =
        sc.selector_bits.empty()
            ? seeded_two_symbol_stream(
                  0, 1, sc.selector_seed.value_or(config.rng_seed))
            : periodic_stream(sc.selector_bits);
    metadata.emplace_back("M", seed.M.str());
    return make_sbt_member(seed, std::move(selector)).point;
  }
  throw std::invalid_argument("unknown gen kind: " + config.gen_kind);
}

int run_gen(const RunConfig& config, std::ostream& out) {
  SubshiftSpec spec = load_spec_or_full_shift(config);
  Metadata metadata{{"command", "gen"},
                    {"kind", config.gen_kind},
                    {"rng_seed", std::to_string(config.rng_seed)}};
  PointStream stream = build_gen_stream(config, spec, metadata);
  std::ostringstream header;
  for (const auto& [k, v] : metadata) header << k << '=' << v << ' ';
  if (!config.out_path.empty()) {
    std::ofstream os(config.out_path, std::ios::binary | std::ios::trunc);
    if (!os)
      throw std::runtime_error("cannot write output file: " + config.out_path);
    write_prefix(os, stream, config.n, header.str());
  } else {
    write_prefix(out, stream, config.n, header.str());
  }
  return 0;
}

int run_xi(const RunConfig& config, std::ostream& out) {
  if (config.x_path.empty() || config.y_path.empty())
    throw std::invalid_argument("xi needs --x-file and --y-file");
  PointStream x = file_backed_stream(read_prefix_file(config.x_path));
  PointStream y = file_backed_stream(read_prefix_file(config.y_path));
  const std::uint64_t len =
      std::min(*x.bounded_length(), *y.bounded_length());
  const std::uint64_t T = config.predicate == XiPredicate::strict_metric
                              ? config.window_t + 1
                              : config.window_t;
  if (len < T) throw std::invalid_argument("prefixes shorter than the window");
  std::uint64_t n_max = len - T + 1;
  if (config.n > 0) n_max = std::min(n_max, config.n);
  if (n_max == 0) throw std::invalid_argument("nothing to evaluate");

  std::vector<std::uint64_t> grid;
  for (std::uint64_t v = 1; v < n_max; v *= 2) grid.push_back(v);
  grid.push_back(n_max);
  std::vector<std::uint64_t> counts =
      xi_count_multi(x, y, config.window_t, config.predicate, grid);

  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows.push_back(CsvRow{BigInt(grid[i]), BigInt(counts[i]),
                          xi_ratio(BigInt(counts[i]), BigInt(grid[i])),
                          std::nullopt, "xi", i, std::nullopt});
  }
  Metadata metadata{{"command", "xi"},
                    {"x", config.x_path},
                    {"y", config.y_path},
                    {"window_t", std::to_string(config.window_t)},
                    {"predicate", xi_predicate_name(config.predicate)},
                    {"rng_seed", std::to_string(config.rng_seed)}};
  write_csv_file(config.out_path, metadata, rows);
  if (config.out_path.empty()) write_csv(out, metadata, rows);
  out << "xi: evaluated " << grid.size() << " prefix lengths up to " << n_max
      << "; final ratio " << rat_summary(xi_ratio(BigInt(counts.back()),
                                                  BigInt(grid.back())))
      << '\n';
  return 0;
}

Metadata verify_metadata(const RunConfig& config, const char* command,
                         const SubshiftSpec& spec) {
  Metadata m{{"command", command},
             {"basis", config.basis_path.empty() ? "(full shift)"
                                                 : config.basis_path},
             {"rng_seed", std::to_string(config.rng_seed)},
             {"budget", config.symbol_budget.str()},
             {"max_j", std::to_string(config.max_j)},
             {"pairs", std::to_string(config.pairs)}};
  if (spec.gluing_constant())
    m.emplace_back("N", std::to_string(*spec.gluing_constant()));
  return m;
}

int run_verify_sft(const RunConfig& config, std::ostream& out) {
  SubshiftSpec spec = load_spec_or_full_shift(config);
  const Word w = config.word.empty() ? Word{0} : config.word;
  SftVerification v =
      verify_sft_family(spec, w, config.q, config.max_j, config.symbol_budget,
                        config.pairs, config.rng_seed);
  std::vector<CsvRow> rows;
  for (const auto& pr : v.pairs)
    for (const auto& r : pr.outcome.reports) rows.push_back(to_csv_row(r));
  Metadata metadata = verify_metadata(config, "verify-sft", spec);
  metadata.emplace_back("w", word_to_string(w));
  metadata.emplace_back("q", std::to_string(config.q));
  write_csv_file(config.out_path, metadata, rows);
  for (const auto& pr : v.pairs)
    print_outcome(out, "pair " + std::to_string(pr.pair_index), pr.outcome);
  const bool ok = v.all_satisfied();
  out << "verify-sft: K=" << v.K << " pairs=" << v.pairs.size() << ' '
      << (ok ? "ALL SATISFIED" : "UNSATISFIED REPORTS PRESENT") << '\n';
  return ok ? 0 : 1;
}

int run_verify_dense(const RunConfig& config, std::ostream& out) {
  SubshiftSpec spec = load_spec_or_full_shift(config);
  DenseVerification v = verify_dense_family(
      spec, config.p, config.g, config.window_t, config.max_j,
      config.symbol_budget, config.rng_seed);
  std::vector<CsvRow> rows;
  for (const auto& pr : v.pairs)
    for (const auto& r : pr.outcome.reports) rows.push_back(to_csv_row(r));
  Metadata metadata = verify_metadata(config, "verify-dense", spec);
  metadata.emplace_back("p_max", std::to_string(config.p));
  metadata.emplace_back("g_max", std::to_string(config.g));
  metadata.emplace_back("window_t", std::to_string(config.window_t));
  write_csv_file(config.out_path, metadata, rows);

  for (const auto& c : v.prefix_checks)
    out << "member p=" << c.p << " g=" << c.g << " starts with its word: "
        << (c.starts_with_word ? "OK" : "FAIL") << '\n';
  for (const auto& c : v.density_checks)
    out << "density z=(" << word_to_string(c.period) << ")^inf p=" << c.p
        << " g=" << c.g << ": "
        << (c.within_two_to_minus_p ? "OK" : "FAIL") << '\n';
  for (const auto& pr : v.pairs) {
    std::ostringstream label;
    label << dense_pair_shape_name(pr.shape) << " (p=" << pr.p << ",g=" << pr.g
          << ")x(q=" << pr.q << ",h=" << pr.h << ')';
    print_outcome(out, label.str(), pr.outcome);
  }
  const bool ok = v.all_satisfied();
  out << "verify-dense: K=" << v.K << ' '
      << (ok ? "ALL SATISFIED" : "UNSATISFIED REPORTS PRESENT") << '\n';
  return ok ? 0 : 1;
}

int run_verify_sbt(const RunConfig& config, std::ostream& out) {
  SubshiftSpec spec = load_spec_or_full_shift(config);
  if (config.seed_path.empty())
    throw std::invalid_argument("verify-sbt needs --seed-config");
  SeedConfig sc = load_seed_config(config.seed_path);
  SbtVerification v = verify_sbt_family(
      spec, sc.z, sc.x, sc.y, config.sbt_R, config.max_j, config.symbol_budget,
      config.pairs, config.rng_seed);
  std::vector<CsvRow> rows;
  for (const auto& pr : v.pairs)
    for (const auto& r : pr.outcome.reports) rows.push_back(to_csv_row(r));
  Metadata metadata = verify_metadata(config, "verify-sbt", spec);
  metadata.emplace_back("R", std::to_string(config.sbt_R));
  metadata.emplace_back("M", v.M.str());
  write_csv_file(config.out_path, metadata, rows);

  out << "seed: p=" << v.p << " q=" << v.q << " r=" << v.r
      << " a=" << word_to_string(v.a) << " M=" << v.M.str()
      << " A=" << v.A.str() << " B=" << v.B.str() << " C=" << v.C.str()
      << " theta=" << v.theta << '\n';
  for (std::size_t i = 0; i < v.pairs.size(); ++i) {
    const auto& pr = v.pairs[i];
    out << "pair " << i << (pr.bit0_differs ? " (bit0 differs)" : " (bit0 shared)")
        << " witness slot=" << pr.witness.slot
        << " index=" << pr.witness.index.str() << ' '
        << (pr.witness_verified ? "verified" : "UNVERIFIED") << '\n';
    print_outcome(out, "pair " + std::to_string(i), pr.outcome);
  }
  const bool ok = v.all_satisfied();
  out << "verify-sbt: " << (ok ? "ALL SATISFIED" : "UNSATISFIED REPORTS PRESENT")
      << '\n';
  return ok ? 0 : 1;
}

int run_lemmas(const RunConfig& config, std::ostream& out) {
  const Symbol K = config.safe_k;
  const std::uint64_t g = 0, h = 1;
  LemmaTrials gh = distinctness_trials(K, g, h, config.p, config.p,
                                       config.trials, config.rng_seed);
  LemmaTrials pq = distinctness_trials(K, g, g, config.p, config.q == config.p
                                                              ? config.p + 1
                                                              : config.q,
                                       config.trials, config.rng_seed + 1);
  out << "lemma g!=h: " << gh.witnesses << '/' << gh.trials
      << " witnesses, max gamma " << gh.max_gamma << '\n';
  out << "lemma p!=q: " << pq.witnesses << '/' << pq.trials
      << " witnesses, max gamma " << pq.max_gamma << '\n';
  const bool ok =
      gh.witnesses == gh.trials && pq.witnesses == pq.trials;
  out << "lemmas: " << (ok ? "ALL WITNESSES FOUND" : "MISSING WITNESSES")
      << '\n';
  return ok ? 0 : 1;
}

int run_bounds(const RunConfig& config, std::ostream& out) {
  std::shared_ptr<const Schedule> sched;
  const std::uint64_t w_len = config.word.empty() ? 1 : config.word.size();
  if (config.variant == "sft") {
    sched = Schedule::sft_cylinder(w_len);
  } else if (config.variant == "dense") {
    sched = Schedule::dense();
  } else if (config.variant == "sbt") {
    sched = Schedule::sbt(config.sbt_M);
  } else {
    throw std::invalid_argument("bounds variant must be sft|dense|sbt");
  }
  out << "variant=" << config.variant << '\n';
  out << std::left << std::setw(4) << "j" << std::setw(24) << "s_j"
      << std::setw(28) << "m_j" << "lower, upper\n";
  for (std::uint64_t j = 1; j <= config.max_j; ++j) {
    BigRat lower, upper;
    if (config.variant == "sft") {
      lower = bound_sft_lower(j, config.q, *sched);
      upper = bound_sft_upper(j, w_len, *sched);
    } else if (config.variant == "dense") {
      lower = bound_dense_lower(j, config.window_t, config.p, 0, *sched);
      upper = bound_dense_upper(j, config.p, 0, *sched);
    } else {
      lower = bound_sbt_lower(j, config.window_t, *sched);
      upper = bound_sbt_upper(j, *sched);
    }
    out << std::left << std::setw(4) << j << std::setw(24)
        << sched->s(j).str() << std::setw(28) << sched->m(j).str()
        << rat_summary(lower) << ", " << rat_summary(upper) << '\n';
  }
  return 0;
}

}  // namespace

SeedConfig load_seed_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open seed config: " + path);
  SeedConfig sc;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto rest = [&] {
      std::string r;
      std::getline(ls, r);
      return r;
    };
    try {
      if (key == "z") sc.z = parse_word(rest());
      else if (key == "x") sc.x = parse_word(rest());
      else if (key == "y") sc.y = parse_word(rest());
      else if (key == "selector") {
        std::string mode;
        ls >> mode;
        if (mode == "random") {
          std::uint64_t s = 0;
          if (!(ls >> s)) throw std::invalid_argument("selector random needs a seed");
          sc.selector_seed = s;
        } else if (mode == "bits") {
          sc.selector_bits = parse_word(rest());
          for (Symbol b : sc.selector_bits)
            if (b > 1) throw std::invalid_argument("selector bits must be 0/1");
          if (sc.selector_bits.empty())
            throw std::invalid_argument("selector bits must be nonempty");
        } else {
          throw std::invalid_argument("selector mode must be random|bits");
        }
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ": line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  if (sc.z.empty() || sc.x.empty() || sc.y.empty())
    throw std::invalid_argument(path + ": seed config needs z, x and y words");
  return sc;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::gen: return run_gen(config, out);
      case Command::xi: return run_xi(config, out);
      case Command::verify_sft: return run_verify_sft(config, out);
      case Command::verify_dense: return run_verify_dense(config, out);
      case Command::verify_sbt: return run_verify_sbt(config, out);
      case Command::lemmas: return run_lemmas(config, out);
      case Command::bounds: return run_bounds(config, out);
    }
    err << "unknown command\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace baire
