#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/linkage.hpp"
#include "qnet/tolerances.hpp"
#include "qnet/types.hpp"

namespace qnet {

enum class ClosenessMeasure { ShortTimeTransport, LongTimeTransport, Fidelity, LinkFailure, MagneticPhase };

std::string to_string(ClosenessMeasure m);

/// Symmetric, non-negative node-pair closeness with zero diagonal.
struct ClosenessMatrix {
  RealMatrix values;
  ClosenessMeasure measure = ClosenessMeasure::LongTimeTransport;
  std::optional<double> time;
  // Pairs whose value carries no information (e.g. no shared response).
  std::vector<std::pair<Index, Index>> flagged;
  std::string warning;
};

/// Time-averaged transfer probability |<j|U_s|i>|^2 over s in [0, T],
/// symmetrised over direction. `horizon` = nullopt takes T -> infinity
/// through the eigenspace projectors.
RealMatrix average_transport(const ComplexMatrix& h, std::optional<double> horizon,
                             const Tolerances& tol = kDefaultTolerances);

/// Transport averaged over [0, t]; to leading order proportional to
/// |H_ij|^2 t^2 / 3. Warns when t ||H|| > 0.1.
ClosenessMatrix closeness_short_time_transport(const ComplexMatrix& h, double t,
                                               const Tolerances& tol = kDefaultTolerances);

/// Transport averaged over [0, T]; the default is the infinite-time limit.
ClosenessMatrix closeness_long_time_transport(const ComplexMatrix& h,
                                              std::optional<double> horizon = std::nullopt,
                                              const Tolerances& tol = kDefaultTolerances);

/// For each pair start in (|i> + |j>)/sqrt 2 and compare the long-time
/// averaged site populations P with the initial ones q through the
/// classical fidelity (sum_m sqrt(P_m q_m))^2.
ClosenessMatrix closeness_fidelity(const ComplexMatrix& h,
                                   const Tolerances& tol = kDefaultTolerances);

/// Response of long-time populations (uniform superposition start) to the
/// removal of each coupling. Affinity(u, v) = 1 / (1 + d) where d is the
/// normalised distance ||r_u - r_v|| / (||r_u|| + ||r_v||) over removals not
/// touching u or v. Pairs with no removal affecting both are flagged.
ClosenessMatrix closeness_link_failure(const ComplexMatrix& h, unsigned threads = 1,
                                       const Tolerances& tol = kDefaultTolerances);

struct Partition {
  std::vector<Index> assignment;  // node -> community
  std::vector<std::vector<Index>> communities;  // sorted, ordered by first member
  Dendrogram dendrogram;  // merge heights are average closeness
  std::vector<double> quality;  // quality[k] = after k merges
  std::size_t best_level = 0;
  bool tie = false;  // flat closeness: no level is preferred
};

/// Average-linkage agglomeration merging the closest pair first. The
/// quality of a level is the intra-community share of closeness mass minus
/// its expectation under a strength-preserving null model.
Partition agglomerate(const ClosenessMatrix& c);

/// D_s - Gamma (.) A_s with A_s = (W + W^T)/2 and
/// Gamma_uv = exp(i theta (W_uv - W_vu)).
ComplexMatrix magnetic_laplacian(const Graph& g, double theta);

struct KMeansOptions {
  std::uint64_t seed = 0x5eed;
  int restarts = 16;
  int max_iterations = 300;
};

/// Seeded k-means++ with restarts on the rows of `points`.
std::vector<Index> kmeans(const RealMatrix& points, Index k, const KMeansOptions& options = {});

/// Clusters nodes by the lowest eigenvectors of the magnetic Laplacian. The
/// embedding keeps m in [k, 2k] vectors, cut at the largest eigengap; rows are
/// normalised and clustered through x x^+, which ignores per-node phase.
/// Requires 0 < theta < pi.
Partition magnetic_partition(const Graph& g, double theta, Index k,
                             const KMeansOptions& options = {});

/// |<x_u, x_v>| between the row-normalised spectral embeddings used by
/// magnetic_partition.
ClosenessMatrix closeness_magnetic(const Graph& g, double theta, Index k);

/// The theta = 0 case: spectral clustering of the symmetrised graph.
Partition spectral_partition(const Graph& g, Index k, const KMeansOptions& options = {});

/// Communities from an assignment vector (relabelled by first occurrence).
Partition partition_from_assignment(const std::vector<Index>& assignment);

}  // namespace qnet
