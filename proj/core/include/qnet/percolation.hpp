#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/types.hpp"

namespace qnet {

/// cos(alpha)|0> + e^{-i theta} sin(alpha)|1>.
struct QubitState {
  double alpha = 0.0;
  double theta = 0.0;

  Eigen::Vector2cd amplitudes() const;
  double probability_zero() const;
  double probability_one() const;
};

/// Two-qubit link (sqrt(2 - p)|00> + sqrt(p)|11>) / sqrt 2, 0 <= p <= 1.
class LinkState {
 public:
  explicit LinkState(double p);

  double p() const noexcept { return p_; }
  /// Coefficients on |00>, |01>, |10>, |11>.
  Eigen::Vector4d amplitudes() const;
  /// Schmidt weights, largest first: ((2 - p)/2, p/2).
  std::pair<double, double> schmidt_coefficients() const;

 private:
  double p_;
};

/// Optimal LOCC probability of converting the link into a maximally
/// entangled pair: twice the smaller Schmidt weight, i.e. exactly p.
double singlet_conversion_probability(const LinkState& link);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }
  std::size_t count() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Each of the N(N-1)/2 links succeeds in conversion independently with
/// probability SCP(p).
Graph sample_quantum_random_graph(Index n, double p, std::uint64_t seed);

struct SubgraphPattern {
  Graph graph;
  Index nodes() const { return graph.node_count(); }
  Index links() const { return static_cast<Index>(graph.edge_count()); }

  static SubgraphPattern edge();
  static SubgraphPattern path3();
  static SubgraphPattern triangle();
  static SubgraphPattern square();
  static SubgraphPattern complete4();
};

inline constexpr Index kMaxPatternNodes = 5;

/// Whether `host` contains `pattern` as a (not necessarily induced) subgraph.
bool contains_subgraph(const Graph& host, const SubgraphPattern& pattern);

/// Number of automorphisms of the pattern (brute force).
std::uint64_t automorphism_count(const SubgraphPattern& pattern);

/// Expected copies in G(N, p): N!/(N-n)! / |Aut| * p^l.
double expected_subgraph_count(Index n, double p, const SubgraphPattern& pattern);

enum class EmergenceRegime { Below, Critical, Above };

struct EmergencePoint {
  Index n = 0;
  double c = 0.0;
  double p = 0.0;
  double fraction = 0.0;
  double expected_count = 0.0;
};

struct EmergenceCurve {
  double z = 0.0;
  double critical_z = 0.0;  // n / l
  EmergenceRegime regime = EmergenceRegime::Critical;
  std::vector<EmergencePoint> points;  // N-major, c-minor
  // Per N: interpolated c where the fraction first crosses 0.1 and 0.9.
  std::map<Index, std::pair<std::optional<double>, std::optional<double>>> transition;
};

/// Fraction of G(N, c N^-z) samples containing the pattern, over grids of N
/// and c.
EmergenceCurve subgraph_emergence(const std::vector<Index>& n_grid, const std::vector<double>& c_grid,
                                  double z, const SubgraphPattern& pattern, std::size_t trials,
                                  std::uint64_t seed, unsigned threads = 1);

struct TrialRecord {
  std::size_t trial = 0;
  bool spanning = false;
  double largest_fraction = 0.0;
  std::size_t clusters = 0;
  std::size_t open_bonds = 0;
};

struct ClusterStats {
  double p_bond = 0.0;
  std::size_t nodes = 0;
  double spanning_probability = 0.0;
  double largest_fraction_mean = 0.0;
  // 95% Wilson interval on the spanning probability.
  std::pair<double, double> spanning_ci{0.0, 0.0};
  // cluster size -> number of clusters of that size, summed over trials.
  std::map<std::size_t, std::size_t> size_histogram;
  std::vector<TrialRecord> trials;
};

struct Lattice {
  Index width = 0;
  Index height = 0;
};

/// Bond percolation on an open square lattice; a trial spans when one
/// cluster touches both the left and right columns. Trial t uses substream
/// (seed, t), and bond b opens when its uniform draw is below p, so runs at
/// different p share random numbers.
ClusterStats bond_percolation(Lattice lattice, double p_bond, std::size_t trials,
                              std::uint64_t seed, unsigned threads = 1);

/// Classical entanglement percolation: bond percolation with p_bond = SCP.
ClusterStats cep_lattice(Lattice lattice, const LinkState& link, std::size_t trials,
                         std::uint64_t seed, unsigned threads = 1);

/// CEP on the complete graph: cluster statistics of G(N, SCP(p)).
/// `spanning` is not defined here and is left false.
ClusterStats cep_random_graph(Index n, const LinkState& link, std::size_t trials,
                              std::uint64_t seed, unsigned threads = 1);

struct SpanningCurve {
  std::vector<double> p;
  std::vector<double> spanning_probability;
  std::optional<double> crossing;  // linear interpolation through 1/2
};

SpanningCurve spanning_curve(Lattice lattice, const std::vector<double>& p_grid,
                             std::size_t trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace qnet
