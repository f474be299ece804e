#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "linerec/graph_io.hpp"
#include "linerec/random.hpp"
#include "linerec/relations.hpp"
#include "sweep.hpp"

namespace linerec::cli {

namespace {

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  unsigned bits = 0;
  std::uint64_t seed = 1;
  std::string noise = "none";
  std::string out = "instance";
};

struct ReconstructArgs {
  std::string lengths;
  std::string graph;
  bool optimistic = false;
  bool percycle = false;
  std::size_t n = 0;
  std::string out;
};

struct SweepArgs {
  std::string family;
  std::string n = "4..10";
  std::size_t trials = 50;
  double target_rate = 0.9;
  std::string noise = "random";
  bool optimistic = false;
  std::uint64_t seed = 1;
  std::size_t ensembles = 5;
  std::string out;
  std::string gnuplot;
  bool no_wall_time = false;
};

struct KbasisArgs {
  std::string lengths;
  std::string graph;
  std::size_t k = 3;
  int noise_allowance = -1;
  std::string out;
};

NoiseModel::Mode parse_noise(const std::string& s) {
  if (s == "none") return NoiseModel::Mode::None;
  if (s == "random") return NoiseModel::Mode::Random;
  throw Error(Failure::InvalidArgument, "unknown noise model '" + s + "'");
}

template <typename Writer>
void write_file(const std::string& path, Writer&& write) {
  std::ofstream os(path);
  if (!os) throw Error(Failure::InvalidArgument, "cannot write " + path);
  write(os);
}

int exit_code_for(const ReconstructionResult& r) {
  if (r.succeeded()) return Ok;
  if (r.reason && (*r.reason == Failure::InvalidArgument || *r.reason == Failure::ParseError)) return InputError;
  return DetectedFailure;
}

unsigned bit_length(const LengthVector& l) {
  std::size_t bits = 0;
  for (const auto& x : l)
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return static_cast<unsigned>(bits);
}

void report(std::ostream& out, const ReconstructionResult& r, std::size_t m) {
  out << "status: " << to_string(r.status) << '\n';
  if (r.reason) out << "reason: " << to_string(*r.reason) << '\n';
  if (!r.message.empty()) out << "message: " << r.message << '\n';
  out << "m: " << m << '\n';
  if (r.graph.m() == m && m > 0) {
    out << "n: " << r.graph.n() << '\n';
    out << "c: " << m + 1 - r.graph.n() << '\n';
  } else {
    out << "c: " << r.cycle_rows.rows() << '\n';
  }
  out << "medium_vectors: " << r.medium_count << '\n';
  if (r.status == Status::CombinatorialSuccess || r.status == Status::Inconsistent)
    out << "residual: " << std::setprecision(10) << r.residual << '\n';
  if (r.not_three_connected) out << "warning: recovered graph is not 3-connected; output is one 2-isomorphic realisation\n";
  if (r.undetected_risk) out << "warning: vertex count unknown; relation count not validated\n";
  out << std::fixed << std::setprecision(3) << "time_relations_ms: " << r.timings.relations_ms << '\n'
      << "time_realize_ms: " << r.timings.realize_ms << '\n'
      << "time_orient_ms: " << r.timings.orient_ms << '\n'
      << "time_layout_ms: " << r.timings.layout_ms << '\n';
  out.unsetf(std::ios::floatfield);
}

void write_result(const std::string& prefix, const ReconstructionResult& r) {
  if (prefix.empty() || !r.succeeded()) return;
  write_file(prefix + ".graph", [&](std::ostream& os) { write_graph(os, r.graph); });
  write_file(prefix + ".config", [&](std::ostream& os) { write_integers(os, r.configuration); });
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.bits == 0) throw Error(Failure::InvalidArgument, "--bits must be positive");
  const GraphFamily family = parse_family(a.family);
  const NoiseModel::Mode noise = parse_noise(a.noise);
  const Graph g = generate_graph(family, a.n, derive_seed(a.seed, {1}));
  const Configuration p = sample_generic_configuration(g, a.bits, derive_seed(a.seed, {2}));
  const LengthVector l = apply_noise(measure(g, p), NoiseModel{noise, {}}, derive_seed(a.seed, {3}));
  write_file(a.out + ".graph", [&](std::ostream& os) { write_graph(os, g); });
  write_file(a.out + ".config", [&](std::ostream& os) { write_integers(os, p); });
  write_file(a.out + ".lengths", [&](std::ostream& os) { write_integers(os, l); });
  out << "wrote " << a.out << ".graph " << a.out << ".config " << a.out << ".lengths (n=" << g.n() << ", m=" << g.m()
      << ")\n";
  return Ok;
}

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& out) {
  const LengthVector l = load_integers(a.lengths);
  if (l.empty()) throw Error(Failure::ParseError, a.lengths + " holds no lengths");
  PipelineOptions options;
  options.optimistic = a.optimistic;
  if (a.n > 0) options.known_vertices = a.n;

  ReconstructionResult r;
  if (!a.graph.empty()) {
    const Graph g = load_graph(a.graph);
    if (g.m() != l.size())
      throw Error(Failure::ParseError, "graph has " + std::to_string(g.m()) + " edges but " + a.lengths + " holds " +
                                           std::to_string(l.size()) + " lengths");
    r = a.percycle ? reconstruct_labeled_percycle(g, l, options) : reconstruct_labeled(g, l, options);
  } else {
    if (a.percycle) throw Error(Failure::InvalidArgument, "--percycle needs --graph");
    if (a.optimistic && a.n == 0) throw Error(Failure::InvalidArgument, "--optimistic without --graph needs --n");
    r = reconstruct_unlabeled(l, options);
  }
  report(out, r, l.size());
  write_result(a.out, r);
  return exit_code_for(r);
}

int cmd_kbasis(const KbasisArgs& a, std::ostream& out) {
  if (a.k < 3) throw Error(Failure::InvalidArgument, "--k must be at least 3");
  const LengthVector l = load_integers(a.lengths);
  if (l.empty()) throw Error(Failure::ParseError, a.lengths + " holds no lengths");
  std::optional<Graph> g;
  if (!a.graph.empty()) {
    g = load_graph(a.graph);
    if (g->m() != l.size()) throw Error(Failure::ParseError, "graph and lengths disagree on m");
  }
  std::optional<unsigned> allowance;
  if (a.noise_allowance >= 0) allowance = static_cast<unsigned>(a.noise_allowance);

  ReconstructionResult r;
  try {
    const CycleSpaceBasis basis = kbasis_relations(l, a.k, allowance);
    r = reconstruct_from_cycle_space(basis.rows, l, g);
  } catch (const Error& e) {
    if (e.kind() == Failure::InvalidArgument) throw;
    r.status = Status::DetectedFailure;
    r.reason = e.kind();
    r.message = e.what();
  }
  out << "bits: " << bit_length(l) << '\n';
  out << "k: " << a.k << '\n';
  report(out, r, l.size());
  write_result(a.out, r);
  return exit_code_for(r);
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  config.family = parse_family(a.family);
  config.n_range = parse_range(a.n);
  if (!(a.target_rate > 0 && a.target_rate < 1)) throw Error(Failure::InvalidArgument, "--target-rate must be in (0,1)");
  if (a.trials == 0) throw Error(Failure::InvalidArgument, "--trials must be at least 1");
  config.target_rate = a.target_rate;
  config.trials = a.trials;
  config.noise = parse_noise(a.noise);
  config.optimistic = a.optimistic;
  config.seed = a.seed;
  config.ensembles = a.ensembles;
  config.record_time = !a.no_wall_time;

  std::vector<SpotCheck> checks;
  const auto rows = run_sweep(config, &checks);

  auto emit = [&](std::ostream& os) {
    write_csv_header(os);
    for (const auto& row : rows) write_csv_row(os, row, config.record_time);
  };
  if (a.out.empty() || a.out == "-") {
    emit(out);
  } else {
    write_file(a.out, emit);
    const std::string script = a.gnuplot.empty() ? a.out + ".gp" : a.gnuplot;
    write_file(script, [&](std::ostream& os) { write_gnuplot_script(os, a.out); });
  }
  for (const auto& c : checks) {
    err << "monotonicity check " << to_string(config.family) << " n=" << c.n << ": rate(b=" << c.b_low
        << ")=" << c.rate_low << " rate(b=" << c.b_high << ")=" << c.rate_high
        << (c.violated ? " VIOLATED" : " ok") << '\n';
  }
  return Ok;
}

}  // namespace

std::vector<std::size_t> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw Error(Failure::InvalidArgument, "bad vertex count '" + s + "' in '" + text + "'");
    return std::stoul(s);
  };
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = number(text.substr(0, dots));
    const std::size_t hi = number(text.substr(dots + 2));
    if (lo > hi) throw Error(Failure::InvalidArgument, "empty range '" + text + "'");
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(number(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconstruct 1-D point configurations from unlabeled edge lengths"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a graph, configuration and lengths");
  generate->add_option("--family", gen.family, "cycle | near3regular | complete")->required();
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_option("--bits", gen.bits, "Coordinate bits b")->required();
  generate->add_option("--seed", gen.seed, "Master seed");
  generate->add_option("--noise", gen.noise, "none | random")->check(CLI::IsMember({"none", "random"}));
  generate->add_option("--out", gen.out, "Output prefix for .graph/.config/.lengths");

  ReconstructArgs rec;
  auto* reconstruct = app.add_subcommand("reconstruct", "Recover graph and configuration from lengths");
  reconstruct->add_option("lengths", rec.lengths, "Lengths file")->required();
  reconstruct->add_option("--graph", rec.graph, "Graph file (labeled mode)");
  reconstruct->add_flag("--optimistic", rec.optimistic, "Keep the c shortest reduced vectors (needs n)");
  reconstruct->add_flag("--percycle", rec.percycle, "Labeled mode, one reduction per fundamental cycle");
  reconstruct->add_option("--n", rec.n, "Known vertex count");
  reconstruct->add_option("--out", rec.out, "Write recovered .graph/.config with this prefix");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Bits needed to recover the cycle space, per n");
  sweep->add_option("--family", sw.family, "cycle | near3regular | complete")->required();
  sweep->add_option("--n", sw.n, "Vertex counts: 4..10 or 4,6,8");
  sweep->add_option("--trials", sw.trials, "Trials per (n, b) cell");
  sweep->add_option("--target-rate", sw.target_rate, "Required success rate");
  sweep->add_option("--noise", sw.noise, "none | random")->check(CLI::IsMember({"none", "random"}));
  sweep->add_flag("--optimistic", sw.optimistic, "Use n to keep the c shortest vectors instead of thresholding");
  sweep->add_option("--seed", sw.seed, "Master seed");
  sweep->add_option("--ensembles", sw.ensembles, "Graph ensembles per n (near3regular)");
  sweep->add_option("--out", sw.out, "CSV path (default stdout); a gnuplot script is written next to it");
  sweep->add_option("--gnuplot", sw.gnuplot, "gnuplot script path");
  sweep->add_flag("--no-wall-time", sw.no_wall_time, "Write wall_ms as 0 for byte-identical output");

  KbasisArgs kb;
  auto* kbasis = app.add_subcommand("kbasis", "Reconstruct using short cycle relations only");
  kbasis->add_option("lengths", kb.lengths, "Lengths file")->required();
  kbasis->add_option("--graph", kb.graph, "Graph file (labeled mode)");
  kbasis->add_option("--k", kb.k, "Maximum cycle length");
  kbasis->add_option("--noise-allowance", kb.noise_allowance, "Accept |<v,l>| up to this value");
  kbasis->add_option("--out", kb.out, "Write recovered .graph/.config with this prefix");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*reconstruct) return cmd_reconstruct(rec, out);
    if (*sweep) return cmd_sweep(sw, out, err);
    if (*kbasis) return cmd_kbasis(kb, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }
  return InputError;
}

}  // namespace linerec::cli
