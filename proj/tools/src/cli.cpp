#include "qnet_cli/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qnet/community.hpp"
#include "qnet/error.hpp"
#include "qnet/graph_io.hpp"
#include "qnet/netinfo.hpp"
#include "qnet/operators.hpp"
#include "qnet/percolation.hpp"
#include "qnet/rank.hpp"
#include "qnet/serialize.hpp"
#include "qnet/walk.hpp"

namespace qnet::cli {

namespace {

struct Common {
  std::vector<std::string> inputs;
  std::string output = "-";
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool directed = false;
};

struct WalkArgs {
  std::string mode = "evolve";
  std::string generator = "adjacency";
  std::string initial = "basis";
  Index source = 0;
  Index target = -1;
  std::string t_grid = "0:10:0.1";
};

struct RankArgs {
  std::string variant = "classical";
  double damping = 0.85;
  double alpha = 0.5;
  std::size_t steps = 200;
  std::string reg = "arrival";
  double t_final = 200.0;
  double dt = 0.0;
  double threshold = 1e-8;
  std::string jumps = "transfer";
  double tol = 1e-13;
};

struct DensityArgs {
  std::string density = "propagator";
  double tau = 1.0;
  std::string scan_er;
};

struct CommunityArgs {
  std::string measure = "long-time";
  double time = 0.01;
  std::optional<double> horizon;
  double theta = std::numbers::pi / 2.0;
  Index k = 2;
};

struct PercolateArgs {
  std::string lattice;
  Index random_nodes = 0;
  double p = 0.5;
  std::string p_grid;
  std::size_t trials = 100;
  bool emergence = false;
  std::string n_grid = "16,32,64";
  std::string c_grid = "0.5:4:0.5";
  double z = 1.0;
  std::string pattern = "triangle";
};

std::uint64_t default_seed() {
  const char* env = std::getenv("QNET_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("QNET_SEED is not an unsigned integer: ") + env);
  }
}

void add_common(CLI::App* sub, Common& c, bool many_inputs) {
  auto* in = sub->add_option("-i,--input", c.inputs, many_inputs ? "Edge-list files (repeatable)" : "Edge-list file")
                 ->required()
                 ->check(CLI::ExistingFile);
  if (!many_inputs) in->expected(1);
  sub->add_option("-o,--output", c.output, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "RNG seed (default: $QNET_SEED or 0)");
  sub->add_option("--threads", c.threads, "Worker threads for trials and pairs")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  sub->add_flag("--directed", c.directed, "Parse inputs as directed graphs");
}

Graph load(const Common& c, std::size_t k = 0) {
  EdgeListOptions opts;
  opts.directed = c.directed;
  return load_edge_list_file(c.inputs.at(k), opts);
}

double positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError(std::string(name) + " must be positive");
  return x;
}

std::string run_walk(const Common& c, const WalkArgs& a) {
  const Graph g = load(c);
  const Index n = g.node_count();
  const std::vector<double> times = parse_grid(a.t_grid);
  if (a.mode == "chiral") {
    if (a.target < 0) throw ValidationError("--target is required for --mode chiral");
    const ChiralReport r = chiral_transport_report(g, a.source, a.target, times);
    if (c.format == "json") return dump(to_json(r));
    std::ostringstream out;
    out.precision(17);
    out << "t,forward,time_reversed\n";
    for (std::size_t k = 0; k < r.times.size(); ++k)
      out << r.times[k] << ',' << r.forward[k] << ',' << r.time_reversed[k] << '\n';
    return out.str();
  }
  if (a.mode == "quantumness") {
    const auto ref = a.initial == "mixed" ? QuantumnessReference::MaximallyMixed
                                          : QuantumnessReference::UniformPure;
    if (a.initial == "basis") throw ValidationError("quantumness takes --initial uniform or mixed");
    const QuantumnessResult q = quantumness(g, ref);
    std::vector<double> ground(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) ground[i] = q.ground_state(i).real();
    if (c.format == "csv") {
      std::ostringstream out;
      out.precision(17);
      out << "epsilon\n" << q.epsilon << '\n';
      return out.str();
    }
    return dump({{"epsilon", q.epsilon}, {"ground_state", ground}});
  }

  if (a.source < 0 || a.source >= n) throw ValidationError("--source is not a node of the graph");
  ComplexMatrix rho0;
  if (a.initial == "basis") {
    rho0 = basis_state(n, a.source);
  } else if (a.initial == "uniform") {
    rho0 = uniform_superposition(n);
  } else {
    rho0 = maximally_mixed(n);
  }
  const GeneratorKind kind =
      a.generator == "laplacian" ? GeneratorKind::QuantumLaplacian : GeneratorKind::Adjacency;
  const WalkSpec spec = make_walk_spec(g, kind, rho0, times);
  const OccupationResult r = a.mode == "long-time" ? long_time_average(spec) : evolve(spec);
  if (c.format == "json") return dump(to_json(r));
  std::ostringstream out;
  if (a.mode == "long-time") {
    RealMatrix m(n, 2);
    for (Index i = 0; i < n; ++i) m.row(i) << r.average[i], r.variance[i];
    write_csv(out, m, {"average", "variance"});
  } else {
    write_occupation_csv(out, r);
  }
  return out.str();
}

std::string run_rank(const Common& c, const RankArgs& a) {
  const Graph g = load(c);
  RankingResult r;
  if (a.variant == "interpolated" || a.variant == "qsw") {
    LindbladRankOptions opts;
    opts.damping = a.damping;
    opts.t_final = positive(a.t_final, "--t-final");
    opts.dt = a.dt;
    opts.threshold = positive(a.threshold, "--threshold");
    opts.jumps = a.jumps == "dephasing" ? JumpForm::Dephasing : JumpForm::Transfer;
    r = a.variant == "qsw" ? qsw_activity(g, opts) : interpolated_rank(g, a.alpha, opts);
  } else {
    const GoogleMatrix gm = google_matrix(g, a.damping);
    if (a.variant == "classical") {
      r = classical_pagerank(gm, positive(a.tol, "--tol"));
    } else if (a.variant == "adiabatic") {
      r = adiabatic_rank(gm);
    } else {
      if (a.steps < 1) throw ValidationError("--steps must be at least 1");
      r = szegedy_rank(gm, a.steps,
                       a.reg == "departure" ? SzegedyRegister::Departure : SzegedyRegister::Arrival);
    }
  }
  if (c.format == "json") return dump(to_json(r));
  std::ostringstream out;
  write_ranking_csv(out, r);
  return out.str();
}

DensityMatrix make_density(const Graph& g, const DensityArgs& a) {
  if (a.density == "rescaled") return density_rescaled(g);
  return density_propagator(g, positive(a.tau, "--tau"));
}

std::string run_entropy(const Common& c, const DensityArgs& a) {
  const Graph g = load(c);
  const DensityMatrix rho = make_density(g, a);
  const double s = vn_entropy(rho);
  Json j{{"entropy_bits", s}, {"density", a.density}, {"nodes", g.node_count()}};
  if (a.density == "propagator") j["tau"] = a.tau;
  std::optional<LikelihoodScan> scan;
  if (!a.scan_er.empty()) {
    scan = scan_erdos_renyi(rho, parse_grid(a.scan_er), positive(a.tau, "--tau"));
    j["er_scan"] = to_json(*scan);
  }
  if (c.format == "json") return dump(j);
  std::ostringstream out;
  out.precision(17);
  if (scan) {
    out << "p,log_likelihood_bits,kl_bits\n";
    for (std::size_t k = 0; k < scan->grid.size(); ++k)
      out << scan->grid[k] << ',' << scan->log_likelihood[k] << ',' << scan->kl[k] << '\n';
  } else {
    out << "entropy_bits\n" << s << '\n';
  }
  return out.str();
}

std::string run_compare(const Common& c, const DensityArgs& a) {
  if (c.inputs.size() != 2) throw ValidationError("compare needs exactly two --input files");
  const Graph ga = load(c, 0);
  const Graph gb = load(c, 1);
  if (ga.node_count() != gb.node_count()) throw ValidationError("compared graphs differ in node count");
  const DensityMatrix ra = make_density(ga, a);
  const DensityMatrix rb = make_density(gb, a);
  const RelativeEntropy ab = kl_divergence(ra, rb);
  const RelativeEntropy ba = kl_divergence(rb, ra);
  const double jsd = js_divergence(ra, rb);
  const double dist = js_distance(ra, rb);
  Json j{{"entropy_bits", {vn_entropy(ra), vn_entropy(rb)}},
         {"js_divergence", jsd},
         {"js_distance", dist},
         {"kl_ab_bits", finite_or_null(ab.bits)},
         {"kl_ba_bits", finite_or_null(ba.bits)},
         {"density", a.density}};
  if (!ab.diagnostic.empty()) j["kl_ab_diagnostic"] = ab.diagnostic;
  if (!ba.diagnostic.empty()) j["kl_ba_diagnostic"] = ba.diagnostic;
  if (a.density == "propagator") j["tau"] = a.tau;
  if (c.format == "json") return dump(j);
  std::ostringstream out;
  out.precision(17);
  out << "js_divergence,js_distance,kl_ab_bits,kl_ba_bits\n"
      << jsd << ',' << dist << ',' << ab.bits << ',' << ba.bits << '\n';
  return out.str();
}

std::string run_communities(const Common& c, const CommunityArgs& a) {
  const Graph g = load(c);
  std::optional<ClosenessMatrix> closeness;
  Partition p;
  if (a.measure == "magnetic" || a.measure == "spectral") {
    KMeansOptions km;
    km.seed = c.seed;
    if (a.measure == "magnetic") {
      p = magnetic_partition(g, a.theta, a.k, km);
      closeness = closeness_magnetic(g, a.theta, a.k);
    } else {
      p = spectral_partition(g, a.k, km);
    }
  } else {
    const ComplexMatrix h = hermitian_adjacency(g);
    if (a.measure == "short-time") {
      closeness = closeness_short_time_transport(h, positive(a.time, "--time"));
    } else if (a.measure == "long-time") {
      closeness = closeness_long_time_transport(h, a.horizon);
    } else if (a.measure == "fidelity") {
      closeness = closeness_fidelity(h);
    } else {
      closeness = closeness_link_failure(h, c.threads);
    }
    p = agglomerate(*closeness);
  }
  if (c.format == "json") {
    Json j{{"partition", to_json(p)}};
    if (closeness) j["closeness"] = to_json(*closeness);
    return dump(j);
  }
  std::ostringstream out;
  out << "node,community\n";
  for (std::size_t v = 0; v < p.assignment.size(); ++v) out << v << ',' << p.assignment[v] << '\n';
  return out.str();
}

Lattice parse_lattice(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw ValidationError("--lattice expects WxH, got '" + text + "'");
  try {
    std::size_t used_w = 0;
    std::size_t used_h = 0;
    const std::string ws = text.substr(0, x);
    const std::string hs = text.substr(x + 1);
    const Index w = std::stol(ws, &used_w);
    const Index h = std::stol(hs, &used_h);
    if (used_w != ws.size() || used_h != hs.size()) throw std::invalid_argument("trailing");
    return {w, h};
  } catch (const std::exception&) {
    throw ValidationError("--lattice expects WxH, got '" + text + "'");
  }
}

SubgraphPattern parse_pattern(const std::string& name) {
  static const std::map<std::string, SubgraphPattern (*)()> table{
      {"edge", &SubgraphPattern::edge},
      {"path3", &SubgraphPattern::path3},
      {"triangle", &SubgraphPattern::triangle},
      {"square", &SubgraphPattern::square},
      {"k4", &SubgraphPattern::complete4}};
  return table.at(name)();
}

std::vector<Index> parse_counts(const std::string& text) {
  std::vector<Index> out;
  for (double v : parse_grid(text)) {
    if (v < 1.0 || v != std::floor(v)) throw ValidationError("--n-grid needs positive integers");
    out.push_back(static_cast<Index>(v));
  }
  return out;
}

std::string run_percolate(const Common& c, const PercolateArgs& a) {
  if (a.trials < 1) throw ValidationError("--trials must be at least 1");
  const int modes = (a.emergence ? 1 : 0) + (a.lattice.empty() ? 0 : 1) + (a.random_nodes > 0 ? 1 : 0);
  if (modes != 1) throw ValidationError("choose exactly one of --lattice, --random or --emergence");
  std::ostringstream out;
  if (a.emergence) {
    const EmergenceCurve curve = subgraph_emergence(parse_counts(a.n_grid), parse_grid(a.c_grid), a.z,
                                                    parse_pattern(a.pattern), a.trials, c.seed,
                                                    c.threads);
    if (c.format == "json") return dump(to_json(curve));
    write_emergence_csv(out, curve);
    return out.str();
  }
  if (a.random_nodes > 0) {
    const ClusterStats s = cep_random_graph(a.random_nodes, LinkState(a.p), a.trials, c.seed, c.threads);
    if (c.format == "json") return dump(to_json(s));
    write_trials_csv(out, s);
    return out.str();
  }
  const Lattice lattice = parse_lattice(a.lattice);
  if (!a.p_grid.empty()) {
    const SpanningCurve curve = spanning_curve(lattice, parse_grid(a.p_grid), a.trials, c.seed, c.threads);
    if (c.format == "json") return dump(to_json(curve));
    write_spanning_csv(out, curve);
    return out.str();
  }
  const ClusterStats s = cep_lattice(lattice, LinkState(a.p), a.trials, c.seed, c.threads);
  if (c.format == "json") return dump(to_json(s));
  write_trials_csv(out, s);
  return out.str();
}

std::string run_layers(const Common& c, const DensityArgs& a) {
  if (c.inputs.size() < 2) throw ValidationError("layers needs at least two --input files");
  LayerStack stack;
  for (std::size_t k = 0; k < c.inputs.size(); ++k) {
    stack.layers.push_back(load(c, k));
    stack.labels.push_back(c.inputs[k].substr(c.inputs[k].find_last_of('/') + 1));
  }
  const LayerClustering lc = layer_cluster(stack, positive(a.tau, "--tau"), c.threads);
  if (c.format == "json") {
    return dump({{"labels", stack.labels},
                 {"tau", a.tau},
                 {"distances", to_json(lc.distances)},
                 {"dendrogram", to_json(lc.dendrogram)}});
  }
  std::ostringstream out;
  write_csv(out, lc.distances, stack.labels);
  return out.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("bad number");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("cannot parse grid value '" + s + "' in '" + text + "'");
    }
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw ValidationError("range grid must be start:stop:step, got '" + text + "'");
    const double a = number(parts[0]);
    const double b = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step > 0.0) || b < a) throw ValidationError("range grid needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 1000000) throw ValidationError("range grid has too many points");
    for (std::size_t k = 0; k < count; ++k) out.push_back(a + static_cast<double>(k) * step);
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(number(part));
  }
  if (out.empty()) throw ValidationError("empty grid");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum complex-network toolkit", "qnet"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  WalkArgs walk;
  RankArgs rank;
  DensityArgs density;
  CommunityArgs community;
  PercolateArgs perc;
  std::optional<std::string> seed_error;
  try {
    common.seed = default_seed();
  } catch (const ValidationError& e) {
    seed_error = e.what();
  }

  auto* w = app.add_subcommand("walk", "Continuous-time quantum walk occupation probabilities");
  add_common(w, common, false);
  w->add_option("--mode", walk.mode, "evolve | long-time | chiral | quantumness")
      ->check(CLI::IsMember({"evolve", "long-time", "chiral", "quantumness"}))
      ->capture_default_str();
  w->add_option("--generator", walk.generator, "adjacency | laplacian (L_Q)")
      ->check(CLI::IsMember({"adjacency", "laplacian"}))
      ->capture_default_str();
  w->add_option("--initial", walk.initial, "basis (at --source) | uniform | mixed")
      ->check(CLI::IsMember({"basis", "uniform", "mixed"}))
      ->capture_default_str();
  w->add_option("--source", walk.source, "Source node")->capture_default_str();
  w->add_option("--target", walk.target, "Target node for --mode chiral");
  w->add_option("--t-grid", walk.t_grid, "Times as start:stop:step or a comma list")
      ->capture_default_str();

  auto* r = app.add_subcommand("rank", "PageRank and its quantum variants");
  add_common(r, common, false);
  r->add_option("--variant", rank.variant, "classical | adiabatic | szegedy | interpolated | qsw")
      ->check(CLI::IsMember({"classical", "adiabatic", "szegedy", "interpolated", "qsw"}))
      ->capture_default_str();
  r->add_option("--damping", rank.damping, "Google-matrix damping")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  r->add_option("--alpha", rank.alpha, "Interpolation weight of the dissipator")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  r->add_option("--steps", rank.steps, "Szegedy steps")->capture_default_str();
  r->add_option("--register", rank.reg, "Szegedy register: arrival | departure")
      ->check(CLI::IsMember({"arrival", "departure"}))
      ->capture_default_str();
  r->add_option("--t-final", rank.t_final, "Lindblad integration horizon")->capture_default_str();
  r->add_option("--dt", rank.dt, "Lindblad step (0 = automatic)")->capture_default_str();
  r->add_option("--threshold", rank.threshold, "Lindblad stationarity threshold")->capture_default_str();
  r->add_option("--jumps", rank.jumps, "transfer | dephasing")
      ->check(CLI::IsMember({"transfer", "dephasing"}))
      ->capture_default_str();
  r->add_option("--tol", rank.tol, "Power-iteration L1 tolerance")->capture_default_str();

  auto add_density = [&](CLI::App* sub) {
    sub->add_option("--density", density.density, "propagator | rescaled")
        ->check(CLI::IsMember({"rescaled", "propagator"}))
        ->capture_default_str();
    sub->add_option("--tau", density.tau, "Propagator resolution")->capture_default_str();
  };
  auto* e = app.add_subcommand("entropy", "Von Neumann entropy of a network density matrix");
  add_common(e, common, false);
  add_density(e);
  e->add_option("--scan-er", density.scan_er, "Erdos-Renyi p grid for a likelihood scan");

  auto* cmp = app.add_subcommand("compare", "Jensen-Shannon and relative entropy between two graphs");
  add_common(cmp, common, true);
  add_density(cmp);

  auto* comm = app.add_subcommand("communities", "Quantum closeness and community detection");
  add_common(comm, common, false);
  comm->add_option("--measure", community.measure,
                   "short-time | long-time | fidelity | link-failure | magnetic | spectral")
      ->check(CLI::IsMember({"short-time", "long-time", "fidelity", "link-failure", "magnetic", "spectral"}))
      ->capture_default_str();
  comm->add_option("--time", community.time, "Short-time horizon")->capture_default_str();
  comm->add_option("--horizon", community.horizon, "Finite long-time horizon (default infinite)");
  comm->add_option("--theta", community.theta, "Magnetic flux in (0, pi)")->capture_default_str();
  comm->add_option("--k", community.k, "Number of communities (magnetic, spectral)")->capture_default_str();

  auto* p = app.add_subcommand("percolate", "Entanglement percolation Monte Carlo");
  p->add_option("-o,--output", common.output, "Output path, '-' for stdout")->capture_default_str();
  p->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  p->add_option("--seed", common.seed, "RNG seed (default: $QNET_SEED or 0)");
  p->add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  p->add_option("--lattice", perc.lattice, "Square lattice WxH");
  p->add_option("--random", perc.random_nodes, "Complete graph of N nodes (CEP on G(N, p))");
  p->add_flag("--emergence", perc.emergence, "Subgraph emergence in G(N, c N^-z)");
  p->add_option("--p", perc.p, "Link parameter p (SCP = p)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  p->add_option("--p-grid", perc.p_grid, "Lattice spanning curve over a p grid");
  p->add_option("--trials", perc.trials, "Monte Carlo trials")->capture_default_str();
  p->add_option("--n-grid", perc.n_grid, "Emergence node counts")->capture_default_str();
  p->add_option("--c-grid", perc.c_grid, "Emergence prefactors c")->capture_default_str();
  p->add_option("--z", perc.z, "Emergence scaling exponent")->capture_default_str();
  p->add_option("--pattern", perc.pattern, "edge | path3 | triangle | square | k4")
      ->check(CLI::IsMember({"edge", "path3", "triangle", "square", "k4"}))
      ->capture_default_str();

  auto* l = app.add_subcommand("layers", "Jensen-Shannon clustering of multiplex layers");
  add_common(l, common, true);
  l->add_option("--tau", density.tau, "Propagator resolution")->capture_default_str();

  std::vector<std::string> argv_store{"qnet"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qnet: error: " << e.what() << '\n';
    return 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const bool seed_given = app.get_subcommands().front()->count("--seed") > 0;
    if (seed_error && !seed_given) throw ValidationError(*seed_error);
    std::string text;
    if (name == "walk") {
      text = run_walk(common, walk);
    } else if (name == "rank") {
      text = run_rank(common, rank);
    } else if (name == "entropy") {
      text = run_entropy(common, density);
    } else if (name == "compare") {
      text = run_compare(common, density);
    } else if (name == "communities") {
      text = run_communities(common, community);
    } else if (name == "percolate") {
      text = run_percolate(common, perc);
    } else {
      text = run_layers(common, density);
    }
    emit(common.output, text, out);
    return 0;
  } catch (const ValidationError& ex) {
    err << "qnet " << name << ": invalid input: " << ex.what() << '\n';
    return 1;
  } catch (const NumericalError& ex) {
    err << "qnet " << name << ": numerical failure: " << ex.what() << '\n';
    return 2;
  } catch (const IoError& ex) {
    err << "qnet " << name << ": i/o error: " << ex.what() << '\n';
    return 3;
  } catch (const std::exception& ex) {
    err << "qnet " << name << ": numerical failure: " << ex.what() << '\n';
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qnet::cli
