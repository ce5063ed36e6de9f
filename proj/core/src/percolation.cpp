#include "qnet/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qnet/error.hpp"
#include "qnet/generators.hpp"
#include "qnet/parallel.hpp"
#include "qnet/random.hpp"

namespace qnet {

Eigen::Vector2cd QubitState::amplitudes() const {
  return {Complex(std::cos(alpha), 0.0), std::exp(-kI * theta) * std::sin(alpha)};
}

double QubitState::probability_zero() const { return std::cos(alpha) * std::cos(alpha); }
double QubitState::probability_one() const { return std::sin(alpha) * std::sin(alpha); }

LinkState::LinkState(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("link parameter p must lie in [0, 1]");
}

Eigen::Vector4d LinkState::amplitudes() const {
  return {std::sqrt(2.0 - p_) / std::sqrt(2.0), 0.0, 0.0, std::sqrt(p_) / std::sqrt(2.0)};
}

std::pair<double, double> LinkState::schmidt_coefficients() const {
  return {(2.0 - p_) / 2.0, p_ / 2.0};
}

double singlet_conversion_probability(const LinkState& link) {
  return 2.0 * link.schmidt_coefficients().second;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

namespace {

Graph sample_gnp(Index n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) g.add_edge(i, j);
  return g;
}

}  // namespace

Graph sample_quantum_random_graph(Index n, double p, std::uint64_t seed) {
  if (n < 0) throw ValidationError("node count must be non-negative");
  const double scp = singlet_conversion_probability(LinkState(p));
  auto rng = substream(seed, 0);
  return sample_gnp(n, scp, rng);
}

SubgraphPattern SubgraphPattern::edge() { return {generators::path(2)}; }
SubgraphPattern SubgraphPattern::path3() { return {generators::path(3)}; }
SubgraphPattern SubgraphPattern::triangle() { return {generators::complete(3)}; }
SubgraphPattern SubgraphPattern::square() { return {generators::cycle(4)}; }
SubgraphPattern SubgraphPattern::complete4() { return {generators::complete(4)}; }

namespace {

void require_pattern(const SubgraphPattern& pattern) {
  if (pattern.nodes() < 1) throw ValidationError("subgraph pattern is empty");
  if (pattern.nodes() > kMaxPatternNodes) {
    throw ValidationError("subgraph pattern exceeds the exact-search cap of " +
                          std::to_string(kMaxPatternNodes) + " nodes");
  }
}

bool has_edge(const std::vector<std::vector<NodeId>>& adj, NodeId a, NodeId b) {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

}  // namespace

bool contains_subgraph(const Graph& host, const SubgraphPattern& pattern) {
  require_pattern(pattern);
  const Index k = pattern.nodes();
  if (k > host.node_count()) return false;
  const auto host_adj = host.neighbours();
  const auto pat_adj = pattern.graph.neighbours();

  // Visit pattern nodes so that each one, where possible, has an earlier
  // neighbour whose image restricts the candidates.
  std::vector<NodeId> order;
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  while (static_cast<Index>(order.size()) < k) {
    NodeId next = -1;
    std::size_t best_links = 0;
    for (NodeId v = 0; v < k; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (NodeId u : pat_adj[v]) links += placed[u] ? 1 : 0;
      const bool better = next < 0 || links > best_links ||
                          (links == best_links && pat_adj[v].size() > pat_adj[next].size());
      if (better) {
        next = v;
        best_links = links;
      }
    }
    placed[next] = true;
    order.push_back(next);
  }

  std::vector<NodeId> image(static_cast<std::size_t>(k), -1);
  std::vector<bool> used(static_cast<std::size_t>(host.node_count()), false);

  auto consistent = [&](NodeId pv, NodeId hv) {
    for (NodeId pu : pat_adj[pv]) {
      if (image[pu] >= 0 && !has_edge(host_adj, image[pu], hv)) return false;
    }
    return static_cast<Index>(host_adj[hv].size()) >= static_cast<Index>(pat_adj[pv].size());
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const NodeId pv = order[depth];
    NodeId anchor = -1;
    for (NodeId pu : pat_adj[pv])
      if (image[pu] >= 0) {
        anchor = image[pu];
        break;
      }
    auto attempt = [&](NodeId hv) {
      if (used[hv] || !consistent(pv, hv)) return false;
      image[pv] = hv;
      used[hv] = true;
      const bool found = self(self, depth + 1);
      image[pv] = -1;
      used[hv] = false;
      return found;
    };
    if (anchor >= 0) {
      for (NodeId hv : host_adj[anchor])
        if (attempt(hv)) return true;
    } else {
      for (NodeId hv = 0; hv < host.node_count(); ++hv)
        if (attempt(hv)) return true;
    }
    return false;
  };
  return search(search, 0);
}

std::uint64_t automorphism_count(const SubgraphPattern& pattern) {
  require_pattern(pattern);
  const Index k = pattern.nodes();
  const RealMatrix a = pattern.graph.as_undirected().weight_matrix().cwiseSign();
  std::vector<Index> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool same = true;
    for (Index i = 0; i < k && same; ++i)
      for (Index j = 0; j < k && same; ++j) same = a(i, j) == a(perm[i], perm[j]);
    count += same ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

double expected_subgraph_count(Index n, double p, const SubgraphPattern& pattern) {
  const Index k = pattern.nodes();
  if (n < k) return 0.0;
  double falling = 1.0;
  for (Index i = 0; i < k; ++i) falling *= static_cast<double>(n - i);
  return falling / static_cast<double>(automorphism_count(pattern)) *
         std::pow(p, static_cast<double>(pattern.links()));
}

namespace {

std::optional<double> crossing_point(const std::vector<double>& x, const std::vector<double>& y,
                                     double level) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (y[k] >= level) {
      if (k == 0) return x[0];
      const double t = (level - y[k - 1]) / (y[k] - y[k - 1]);
      return x[k - 1] + t * (x[k] - x[k - 1]);
    }
  }
  return std::nullopt;
}

}  // namespace

EmergenceCurve subgraph_emergence(const std::vector<Index>& n_grid, const std::vector<double>& c_grid,
                                  double z, const SubgraphPattern& pattern, std::size_t trials,
                                  std::uint64_t seed, unsigned threads) {
  require_pattern(pattern);
  if (trials < 1) throw ValidationError("emergence needs at least one trial");
  if (pattern.links() < 1) throw ValidationError("pattern needs at least one link");
  EmergenceCurve out;
  out.z = z;
  out.critical_z = static_cast<double>(pattern.nodes()) / static_cast<double>(pattern.links());
  if (std::abs(z - out.critical_z) <= 1e-12) {
    out.regime = EmergenceRegime::Critical;
  } else {
    out.regime = z > out.critical_z ? EmergenceRegime::Below : EmergenceRegime::Above;
  }

  std::uint64_t stream = 0;
  for (Index n : n_grid) {
    std::vector<double> fractions;
    for (double c : c_grid) {
      const double p = std::clamp(c * std::pow(static_cast<double>(n), -z), 0.0, 1.0);
      std::vector<char> hit(trials, 0);
      const std::uint64_t base = stream;
      parallel_for(trials, threads, [&](std::size_t t) {
        auto rng = substream(seed, base + t);
        hit[t] = contains_subgraph(sample_gnp(n, p, rng), pattern) ? 1 : 0;
      });
      stream += trials;
      const double fraction =
          static_cast<double>(std::count(hit.begin(), hit.end(), 1)) / static_cast<double>(trials);
      out.points.push_back({n, c, p, fraction, expected_subgraph_count(n, p, pattern)});
      fractions.push_back(fraction);
    }
    out.transition[n] = {crossing_point(c_grid, fractions, 0.1),
                         crossing_point(c_grid, fractions, 0.9)};
  }
  return out;
}

namespace {

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials) {
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

struct TrialOutcome {
  TrialRecord record;
  std::vector<std::size_t> sizes;
};

ClusterStats summarise(std::vector<TrialOutcome> outcomes, double p_bond, std::size_t nodes) {
  ClusterStats out;
  out.p_bond = p_bond;
  out.nodes = nodes;
  std::size_t spanning = 0;
  double largest = 0.0;
  for (TrialOutcome& o : outcomes) {
    spanning += o.record.spanning ? 1 : 0;
    largest += o.record.largest_fraction;
    for (std::size_t s : o.sizes) ++out.size_histogram[s];
    out.trials.push_back(o.record);
  }
  const double count = static_cast<double>(outcomes.size());
  out.spanning_probability = static_cast<double>(spanning) / count;
  out.largest_fraction_mean = largest / count;
  out.spanning_ci = wilson_interval(spanning, outcomes.size());
  return out;
}

std::vector<std::size_t> cluster_sizes(UnionFind& uf) {
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < uf.count(); ++v)
    if (uf.find(v) == v) sizes.push_back(uf.size_of(v));
  return sizes;
}

}  // namespace

ClusterStats bond_percolation(Lattice lattice, double p_bond, std::size_t trials,
                              std::uint64_t seed, unsigned threads) {
  if (lattice.width < 2 || lattice.height < 2) throw ValidationError("lattice sides must be >= 2");
  if (!(p_bond >= 0.0 && p_bond <= 1.0)) throw ValidationError("p_bond must lie in [0, 1]");
  if (trials < 1) throw ValidationError("at least one trial is required");
  const auto w = static_cast<std::size_t>(lattice.width);
  const auto h = static_cast<std::size_t>(lattice.height);
  const std::size_t nodes = w * h;

  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    auto rng = substream(seed, t);
    UnionFind uf(nodes);
    std::size_t open = 0;
    // Fixed bond order (right, then down, row-major) keeps draws aligned
    // across p.
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < w; ++c) {
        const std::size_t id = r * w + c;
        if (c + 1 < w && uniform01(rng) < p_bond) {
          uf.unite(id, id + 1);
          ++open;
        }
        if (r + 1 < h && uniform01(rng) < p_bond) {
          uf.unite(id, id + w);
          ++open;
        }
      }
    }
    std::vector<char> left(nodes, 0);
    for (std::size_t r = 0; r < h; ++r) left[uf.find(r * w)] = 1;
    bool spans = false;
    for (std::size_t r = 0; r < h && !spans; ++r) spans = left[uf.find(r * w + w - 1)] != 0;

    TrialOutcome& o = outcomes[t];
    o.sizes = cluster_sizes(uf);
    o.record = {t, spans,
                static_cast<double>(*std::max_element(o.sizes.begin(), o.sizes.end())) /
                    static_cast<double>(nodes),
                o.sizes.size(), open};
  });
  return summarise(std::move(outcomes), p_bond, nodes);
}

ClusterStats cep_lattice(Lattice lattice, const LinkState& link, std::size_t trials,
                         std::uint64_t seed, unsigned threads) {
  return bond_percolation(lattice, singlet_conversion_probability(link), trials, seed, threads);
}

ClusterStats cep_random_graph(Index n, const LinkState& link, std::size_t trials,
                              std::uint64_t seed, unsigned threads) {
  if (n < 1) throw ValidationError("random graph needs at least one node");
  if (trials < 1) throw ValidationError("at least one trial is required");
  const double p = singlet_conversion_probability(link);
  const auto nodes = static_cast<std::size_t>(n);
  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    auto rng = substream(seed, t);
    const Graph g = sample_gnp(n, p, rng);
    UnionFind uf(nodes);
    for (const Edge& e : g.edges()) uf.unite(static_cast<std::size_t>(e.src), static_cast<std::size_t>(e.dst));
    TrialOutcome& o = outcomes[t];
    o.sizes = cluster_sizes(uf);
    o.record = {t, false,
                static_cast<double>(*std::max_element(o.sizes.begin(), o.sizes.end())) /
                    static_cast<double>(nodes),
                o.sizes.size(), g.edge_count()};
  });
  return summarise(std::move(outcomes), p, nodes);
}

SpanningCurve spanning_curve(Lattice lattice, const std::vector<double>& p_grid,
                             std::size_t trials, std::uint64_t seed, unsigned threads) {
  SpanningCurve out;
  out.p = p_grid;
  for (double p : p_grid) {
    out.spanning_probability.push_back(
        bond_percolation(lattice, p, trials, seed, threads).spanning_probability);
  }
  out.crossing = crossing_point(out.p, out.spanning_probability, 0.5);
  return out;
}

}  // namespace qnet
