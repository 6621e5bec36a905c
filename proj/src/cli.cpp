#include "ndscape/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "ndscape/analysis.hpp"
#include "ndscape/annealer.hpp"
#include "ndscape/errors.hpp"
#include "ndscape/extension.hpp"
#include "ndscape/ga.hpp"
#include "ndscape/generator.hpp"
#include "ndscape/io.hpp"
#include "ndscape/netfit.hpp"
#include "ndscape/reference.hpp"
#include "ndscape/rng.hpp"

namespace ndl::cli {

namespace {

// Sub-stream ids fed to derive_seed.
constexpr std::uint64_t kStreamGenerate = 0;
constexpr std::uint64_t kStreamAnneal = 1;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string command_line;
  std::string input;  // file currently being parsed, for error messages
};

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::string csv_header(const Context& ctx, std::optional<std::uint64_t> seed) {
  return "# ndscape " NDSCAPE_VERSION " seed=" + (seed ? std::to_string(*seed) : std::string("none")) +
         " cmd=" + ctx.command_line + "\n";
}

void emit(Context& ctx, const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(ctx.out);
    ctx.out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string slurp(Context& ctx, const std::string& path) {
  ctx.input = path.empty() || path == "-" ? "<stdin>" : path;
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(ctx.in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

bool is_extended(const std::string& text) { return text.rfind("XNDL", 0) == 0; }

ExtendedLandscape load_any(Context& ctx, const std::string& path) {
  const std::string text = slurp(ctx, path);
  std::istringstream stream(text);
  if (is_extended(text)) return read_xndl(stream);
  return ExtendedLandscape(read_ndl(stream));
}

Landscape load_plain(Context& ctx, const std::string& path) {
  std::istringstream stream(slurp(ctx, path));
  return read_ndl(stream);
}

DegreeDistribution load_csv(Context& ctx, const std::string& path) {
  std::istringstream stream(slurp(ctx, path));
  return read_distribution_csv(stream);
}

// Flattened view used by reports that need the whole table.
Landscape as_table(const ExtendedLandscape& x) {
  if (x.components().size() == 1) return x.components().front();
  return x.flatten();
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  int n = 16;
  std::string target;
  std::uint64_t seed = 1;
  bool skip_anneal = false;
  std::uint64_t anneal_budget = 64;
  double temperature = AnnealSchedule{}.initial_temperature;
  double cooling = AnnealSchedule{}.cooling_factor;
  bool allow_large = false;
  std::string trace;
  std::string log;
  std::string out;
};

int run_gen(Context& ctx, const GenArgs& a) {
  const DegreeDistribution target = load_csv(ctx, a.target);
  ctx.input.clear();
  if (target.max_degree() != a.n)
    throw ContractError("target has degrees 0.." + std::to_string(target.max_degree()) + " but --n is " +
                        std::to_string(a.n));

  Rng gen_rng(derive_seed(a.seed, kStreamGenerate));
  std::vector<FreezeRecord> log;
  GeneratorOptions options;
  options.allow_large = a.allow_large;
  if (!a.log.empty()) options.log = &log;
  Landscape landscape = generate_nd(a.n, target, gen_rng, options);
  const double before = rms_distance(degree_distribution(landscape), target);

  AnnealStats stats;
  if (!a.skip_anneal) {
    AnnealSchedule schedule = AnnealSchedule::defaults(a.n);
    schedule.initial_temperature = a.temperature;
    schedule.cooling_factor = a.cooling;
    schedule.total_moves = a.anneal_budget * schedule.moves_per_epoch;
    Rng sa_rng(derive_seed(a.seed, kStreamAnneal));
    landscape = refine(landscape, target, schedule, sa_rng, &stats);
  }
  const double after = a.skip_anneal ? before : stats.final_energy;

  emit(ctx, a.out, [&](std::ostream& o) { write_ndl(o, landscape); });
  if (!a.trace.empty()) {
    emit(ctx, a.trace, [&](std::ostream& o) {
      o << csv_header(ctx, a.seed) << "move,energy\n";
      for (const auto& p : stats.trace) o << p.move << ',' << format_double(p.energy) << '\n';
    });
  }
  if (!a.log.empty()) {
    emit(ctx, a.log, [&](std::ostream& o) {
      o << csv_header(ctx, a.seed) << "genotype,degree\n";
      for (const auto& r : log) o << r.genotype.value << ',' << r.degree << '\n';
    });
  }
  ctx.err << "distance before anneal " << format_double(before) << ", after " << format_double(after) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- ref

struct RefArgs {
  std::string family;
  int n = 16;
  int k = 4;
  double p = 0.8;
  std::string zeroing = "component";
  int q = 2;
  int m = 20;
  int blocks = 4;
  int block_size = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_ref(Context& ctx, const RefArgs& a) {
  Rng rng(derive_seed(a.seed, kStreamGenerate));
  std::optional<Landscape> landscape;
  if (a.family == "royal-road") {
    if (a.blocks < 1) throw ContractError("--blocks must be at least 1");
    const int size = a.block_size > 0 ? a.block_size : a.n / a.blocks;
    landscape = royal_road(a.n, a.blocks, size);
  } else if (a.family == "nk") {
    landscape = nk_family(a.n, a.k, NkPlain{}, rng);
  } else if (a.family == "nkp") {
    landscape = nk_family(
        a.n, a.k, NkProbabilistic{a.p, a.zeroing == "entry" ? NkpZeroing::entry : NkpZeroing::component}, rng);
  } else if (a.family == "nkq") {
    landscape = nk_family(a.n, a.k, NkQuantized{a.q}, rng);
  } else {
    landscape = technological(a.n, a.k, a.m, rng);
  }
  emit(ctx, a.out, [&](std::ostream& o) { write_ndl(o, *landscape); });
  return kOk;
}

// ---------------------------------------------------------------- trap

struct TrapArgs {
  std::string in;
  double b = kDeceptiveTrap.b;
  double r = kDeceptiveTrap.r;
  double noise = kDefaultTrapNoise;
  std::uint32_t anchor = 0;
  std::uint64_t seed = 1;
  std::string networks;
  std::string out;
};

int run_trap(Context& ctx, const TrapArgs& a) {
  const Landscape input = load_plain(ctx, a.in);
  ctx.input.clear();
  Rng rng(derive_seed(a.seed, kStreamGenerate));
  const TrapAssignment result = assign_trap(input, {a.b, a.r}, {a.noise, Genotype{a.anchor}}, rng);
  for (const auto& w : result.warnings) ctx.err << "warning: " << w << '\n';
  emit(ctx, a.out, [&](std::ostream& o) { write_ndl(o, result.landscape); });
  if (!a.networks.empty()) {
    emit(ctx, a.networks, [&](std::ostream& o) {
      o << csv_header(ctx, a.seed) << "network_id,size,centroid_distance,fitness\n";
      for (const auto& nf : result.networks)
        o << nf.network_id << ',' << nf.size << ',' << format_double(nf.centroid_distance) << ','
          << format_double(nf.fitness) << '\n';
    });
  }
  return kOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string in;
  std::string report = "degrees";
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_analyze(Context& ctx, const AnalyzeArgs& a) {
  const ExtendedLandscape input = load_any(ctx, a.in);
  ctx.input.clear();
  const bool stochastic = a.report == "scatter" && a.sample > 0;
  const std::string header = csv_header(ctx, stochastic ? std::optional<std::uint64_t>(a.seed) : std::nullopt);

  if (a.report == "degrees") {
    const DegreeDistribution d = input.components().size() == 1 ? degree_distribution(input.components().front())
                                                                 : extended_distribution(input);
    const DistributionStats s = distribution_stats(d);
    emit(ctx, a.out, [&](std::ostream& o) {
      o << header << "# mean=" << format_double(s.mean) << " std=" << format_double(s.std) << '\n';
      write_distribution_csv(o, d);
    });
    return kOk;
  }

  const Landscape table = as_table(input);
  if (a.report == "networks") {
    const NetworkPartition part = partition_networks(table);
    emit(ctx, a.out, [&](std::ostream& o) {
      o << header << "network_id,size,fitness,first_member,adjacent\n";
      for (std::size_t k = 0; k < part.networks.size(); ++k) {
        const auto& nn = part.networks[k];
        o << k << ',' << nn.members.size() << ',' << format_double(nn.fitness) << ',' << nn.members.front().value
          << ',' << part.adjacency[k].size() << '\n';
      }
    });
  } else if (a.report == "ranks") {
    const auto ranking = network_size_ranking(table);
    emit(ctx, a.out, [&](std::ostream& o) {
      o << header << "rank,size\n";
      for (const auto& e : ranking) o << e.rank << ',' << e.size << '\n';
    });
  } else if (a.report == "fdc") {
    const FdcReport r = fdc(table);
    emit(ctx, a.out, [&](std::ostream& o) {
      o << header << "fdc,classification,genotypes,optima\n"
        << format_double(r.fdc) << ',' << difficulty_name(r.classification) << ',' << r.m << ','
        << r.optima_count << '\n';
    });
  } else {
    Rng rng(derive_seed(a.seed, kStreamGenerate));
    const auto points = fdc_scatter(table, a.sample == 0 ? table.size() : a.sample, rng);
    emit(ctx, a.out, [&](std::ostream& o) {
      o << header << "distance,fitness\n";
      for (const auto& p : points) o << p.distance << ',' << format_double(p.fitness) << '\n';
    });
  }
  return kOk;
}

// ---------------------------------------------------------------- ga

struct GaArgs {
  std::vector<std::string> inputs;
  GaParams params;
  std::string trap = "-";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_ga(Context& ctx, const GaArgs& a) {
  a.params.validate();
  std::ostringstream rows;
  for (std::size_t i = 0; i < a.inputs.size(); ++i) {
    const ExtendedLandscape landscape = load_any(ctx, a.inputs[i]);
    ctx.input.clear();
    const DegreeDistribution d = extended_distribution(landscape);
    const Objective objective(landscape);
    const SuccessRate sr = success_rate(objective, a.params, derive_seed(a.seed, i), a.jobs);
    rows << a.inputs[i] << ',' << format_double(distribution_stats(d).mean) << ',' << a.trap << ','
         << format_double(sr.rate) << ',' << format_double(sr.half_width) << '\n';
  }
  emit(ctx, a.out, [&](std::ostream& o) {
    o << csv_header(ctx, a.seed) << "landscape,mean_degree,trap,success_rate,ci_half_width\n" << rows.str();
  });
  return kOk;
}

// ---------------------------------------------------------------- extend / convolve / window

int run_extend(Context& ctx, const std::vector<std::string>& inputs, const std::string& out) {
  std::optional<ExtendedLandscape> acc;
  for (const auto& path : inputs) {
    ExtendedLandscape next = load_any(ctx, path);
    acc = acc ? extend(*acc, next) : std::move(next);
  }
  ctx.input.clear();
  emit(ctx, out, [&](std::ostream& o) { write_xndl(o, *acc); });
  return kOk;
}

int run_convolve(Context& ctx, const std::vector<std::string>& inputs, const std::string& out) {
  const DegreeDistribution a = load_csv(ctx, inputs[0]);
  const DegreeDistribution b = load_csv(ctx, inputs[1]);
  ctx.input.clear();
  const DegreeDistribution c = convolve(a, b);
  emit(ctx, out, [&](std::ostream& o) {
    o << csv_header(ctx, std::nullopt);
    write_distribution_csv(o, c);
  });
  return kOk;
}

int run_window(Context& ctx, int p, int w, int n, const std::string& out) {
  const DegreeDistribution d = window_distribution(p, w, n);
  emit(ctx, out, [&](std::ostream& o) {
    o << csv_header(ctx, std::nullopt);
    write_distribution_csv(o, d);
  });
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neutral-degree landscape construction and analysis", "ndscape"};
  app.set_version_flag("--version", NDSCAPE_VERSION);
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a landscape matching a degree distribution");
  gen_cmd->add_option("--n", gen.n, "Number of bits")->check(CLI::Range(1, kMaxStoredBits));
  gen_cmd->add_option("--target", gen.target, "Target distribution CSV")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--skip-anneal", gen.skip_anneal, "Skip simulated-annealing refinement");
  gen_cmd->add_option("--anneal-budget", gen.anneal_budget, "Annealing length in epochs of 2^N moves")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--temperature", gen.temperature, "Initial annealing temperature");
  gen_cmd->add_option("--cooling", gen.cooling, "Cooling factor per epoch");
  gen_cmd->add_flag("--allow-large", gen.allow_large, "Permit N above 16");
  gen_cmd->add_option("--trace", gen.trace, "Write the annealing energy trace CSV");
  gen_cmd->add_option("--log", gen.log, "Write the construction log CSV");
  gen_cmd->add_option("--out", gen.out, "Output .ndl (default stdout)");

  RefArgs ref;
  auto* ref_cmd = app.add_subcommand("ref", "Emit a reference landscape");
  ref_cmd->add_option("--family", ref.family, "Landscape family")
      ->required()
      ->check(CLI::IsMember({"royal-road", "nk", "nkp", "nkq", "tech"}));
  ref_cmd->add_option("--n", ref.n, "Number of bits")->check(CLI::Range(1, kMaxStoredBits));
  ref_cmd->add_option("--k", ref.k, "Epistasis K");
  ref_cmd->add_option("--p", ref.p, "NKp zero probability");
  ref_cmd->add_option("--zeroing", ref.zeroing, "NKp zeroing granularity")
      ->check(CLI::IsMember({"component", "entry"}));
  ref_cmd->add_option("--q", ref.q, "NKq levels");
  ref_cmd->add_option("--m", ref.m, "Technological levels");
  ref_cmd->add_option("--blocks", ref.blocks, "Royal Road block count");
  ref_cmd->add_option("--block-size", ref.block_size, "Royal Road block size (default N / blocks)");
  ref_cmd->add_option("--seed", ref.seed, "Random seed");
  ref_cmd->add_option("--out", ref.out, "Output .ndl (default stdout)");

  TrapArgs trap;
  auto* trap_cmd = app.add_subcommand("trap", "Assign trap fitness to neutral networks");
  trap_cmd->add_option("--in", trap.in, "Input .ndl")->required();
  trap_cmd->add_option("--b", trap.b, "Basin boundary");
  trap_cmd->add_option("--r", trap.r, "Deceptive optimum height");
  trap_cmd->add_option("--noise", trap.noise, "Noise amplitude (0 disables)");
  trap_cmd->add_option("--anchor", trap.anchor, "Genotype of the optimal network");
  trap_cmd->add_option("--seed", trap.seed, "Random seed");
  trap_cmd->add_option("--networks", trap.networks, "Write per-network CSV");
  trap_cmd->add_option("--out", trap.out, "Output .ndl (default stdout)");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report on a landscape");
  analyze_cmd->add_option("--in", analyze.in, "Input .ndl or .xndl (default stdin)");
  analyze_cmd->add_option("--report", analyze.report, "Report kind")
      ->check(CLI::IsMember({"degrees", "networks", "ranks", "fdc", "scatter"}));
  analyze_cmd->add_option("--sample", analyze.sample, "Scatter sample size (default all)");
  analyze_cmd->add_option("--seed", analyze.seed, "Random seed for sampling");
  analyze_cmd->add_option("--out", analyze.out, "Output CSV (default stdout)");

  GaArgs ga;
  auto* ga_cmd = app.add_subcommand("ga", "Measure GA success rates");
  ga_cmd->add_option("inputs", ga.inputs, "Landscape files")->required();
  ga_cmd->add_option("--runs", ga.params.runs, "Independent runs per landscape");
  ga_cmd->add_option("--pop", ga.params.population, "Population size");
  ga_cmd->add_option("--gens", ga.params.generations, "Generations");
  ga_cmd->add_option("--mut", ga.params.mutation_rate, "Mutation rate");
  ga_cmd->add_option("--xover", ga.params.crossover_rate, "Crossover rate");
  ga_cmd->add_option("--tour", ga.params.tournament, "Tournament size");
  ga_cmd->add_flag("--elitism", ga.params.elitism, "Keep the best individual");
  ga_cmd->add_option("--trap", ga.trap, "Label written to the trap column");
  ga_cmd->add_option("--jobs", ga.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ga_cmd->add_option("--seed", ga.seed, "Random seed");
  ga_cmd->add_option("--out", ga.out, "Output CSV (default stdout)");

  std::vector<std::string> extend_inputs;
  std::string extend_out;
  auto* extend_cmd = app.add_subcommand("extend", "Combine landscapes additively");
  extend_cmd->add_option("inputs", extend_inputs, "Component .ndl or .xndl files")->required();
  extend_cmd->add_option("--out", extend_out, "Output .xndl (default stdout)");

  std::vector<std::string> convolve_inputs;
  std::string convolve_out;
  auto* convolve_cmd = app.add_subcommand("convolve", "Convolve two degree distributions");
  convolve_cmd->add_option("inputs", convolve_inputs, "Two distribution CSV files")->required()->expected(2);
  convolve_cmd->add_option("--out", convolve_out, "Output CSV (default stdout)");

  int wp = 0, ww = 1, wn = 16;
  std::string window_out;
  auto* window_cmd = app.add_subcommand("window", "Emit a uniform window distribution");
  window_cmd->add_option("--p", wp, "First degree")->required();
  window_cmd->add_option("--w", ww, "Window width")->required();
  window_cmd->add_option("--n", wn, "Number of bits");
  window_cmd->add_option("--out", window_out, "Output CSV (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx{in, out, err, join(args), {}};
  try {
    if (*gen_cmd) return run_gen(ctx, gen);
    if (*ref_cmd) return run_ref(ctx, ref);
    if (*trap_cmd) return run_trap(ctx, trap);
    if (*analyze_cmd) return run_analyze(ctx, analyze);
    if (*ga_cmd) return run_ga(ctx, ga);
    if (*extend_cmd) return run_extend(ctx, extend_inputs, extend_out);
    if (*convolve_cmd) return run_convolve(ctx, convolve_inputs, convolve_out);
    if (*window_cmd) return run_window(ctx, wp, ww, wn, window_out);
  } catch (const ParseError& e) {
    err << "ndscape: " << ctx.input << ": " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    err << "ndscape: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "ndscape: " << e.what() << '\n';
    return kContract;
  }
  return kUsage;
}

}  // namespace ndl::cli
