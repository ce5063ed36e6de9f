#include "qnet/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include "qnet/error.hpp"
#include "qnet/parallel.hpp"
#include "qnet/random.hpp"
#include "qnet/spectral.hpp"
#include "qnet/walk.hpp"

namespace qnet {

std::string to_string(ClosenessMeasure m) {
  switch (m) {
    case ClosenessMeasure::ShortTimeTransport: return "short-time-transport";
    case ClosenessMeasure::LongTimeTransport: return "long-time-transport";
    case ClosenessMeasure::Fidelity: return "fidelity";
    case ClosenessMeasure::LinkFailure: return "link-failure";
    case ClosenessMeasure::MagneticPhase: return "magnetic-phase";
  }
  return "unknown";
}

RealMatrix average_transport(const ComplexMatrix& h, std::optional<double> horizon,
                             const Tolerances& tol) {
  if (horizon && !(*horizon > 0.0)) throw ValidationError("transport horizon must be positive");
  const EigenDecomposition eig = hermitian_eig(h, std::nullopt, tol);
  const Index n = h.rows();
  const RealVector& lambda = eig.eigenvalues();
  const ComplexMatrix& v = eig.eigenvectors();

  // kernel(k, l) = (1/T) int_0^T exp(-i (l_k - l_l) s) ds, or its T -> inf
  // limit: 1 inside an eigenspace and 0 across.
  ComplexMatrix kernel = ComplexMatrix::Zero(n, n);
  for (const Eigenspace& s : eig.eigenspaces()) {
    kernel.block(s.begin, s.begin, s.size, s.size).setOnes();
  }
  if (horizon) {
    const double t = *horizon;
    for (Index k = 0; k < n; ++k) {
      for (Index l = 0; l < n; ++l) {
        const double w = lambda(k) - lambda(l);
        if (std::abs(w * t) < 1e-8) {
          kernel(k, l) = Complex(1.0, -0.5 * w * t);
        } else {
          kernel(k, l) = (1.0 - std::exp(-kI * w * t)) / (kI * w * t);
        }
      }
    }
  }

  RealMatrix p = RealMatrix::Zero(n, n);  // p(i, j): from i to j
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const ComplexVector a = v.row(j).transpose().cwiseProduct(v.row(i).adjoint());
      p(i, j) = std::max(0.0, (a.transpose() * kernel * a.conjugate())(0, 0).real());
    }
  }
  return 0.5 * (p + p.transpose());
}

ClosenessMatrix closeness_short_time_transport(const ComplexMatrix& h, double t,
                                               const Tolerances& tol) {
  if (!(t > 0.0)) throw ValidationError("short-time closeness needs t > 0");
  ClosenessMatrix out;
  out.measure = ClosenessMeasure::ShortTimeTransport;
  out.time = t;
  out.values = average_transport(h, t, tol);
  const EigenDecomposition eig = hermitian_eig(h, std::nullopt, tol);
  const double norm = eig.dimension() > 0 ? eig.eigenvalues().cwiseAbs().maxCoeff() : 0.0;
  if (t * norm > 0.1) {
    out.warning = "t * ||H|| = " + std::to_string(t * norm) +
                  " exceeds 0.1; closeness is no longer proportional to |H_ij|";
  }
  return out;
}

ClosenessMatrix closeness_long_time_transport(const ComplexMatrix& h, std::optional<double> horizon,
                                              const Tolerances& tol) {
  ClosenessMatrix out;
  out.measure = ClosenessMeasure::LongTimeTransport;
  out.time = horizon;
  out.values = average_transport(h, horizon, tol);
  return out;
}

ClosenessMatrix closeness_fidelity(const ComplexMatrix& h, const Tolerances& tol) {
  const EigenDecomposition eig = hermitian_eig(h, std::nullopt, tol);
  const Index n = h.rows();
  const std::vector<ComplexMatrix> projectors = eig.projectors();

  ClosenessMatrix out;
  out.measure = ClosenessMeasure::Fidelity;
  out.values = RealMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      // Long-time population of site m from (|i> + |j>)/sqrt 2:
      // sum_k |P_k(m, i) + P_k(m, j)|^2 / 2. Only sites i and j enter the
      // fidelity against the initial populations (1/2, 1/2).
      double pi = 0.0;
      double pj = 0.0;
      for (const ComplexMatrix& proj : projectors) {
        pi += 0.5 * std::norm(proj(i, i) + proj(i, j));
        pj += 0.5 * std::norm(proj(j, i) + proj(j, j));
      }
      const double root = std::sqrt(0.5 * pi) + std::sqrt(0.5 * pj);
      const double fidelity = std::min(1.0, root * root);
      out.values(i, j) = fidelity;
      out.values(j, i) = fidelity;
    }
  }
  return out;
}

namespace {

RealVector long_time_populations(const ComplexMatrix& h, const Tolerances& tol) {
  const Index n = h.rows();
  const OccupationResult r = long_time_average({h, uniform_superposition(n), {}}, tol);
  return Eigen::Map<const RealVector>(r.average.data(), n);
}

}  // namespace

ClosenessMatrix closeness_link_failure(const ComplexMatrix& h, unsigned threads,
                                       const Tolerances& tol) {
  require_hermitian(h, tol);
  const Index n = h.rows();
  const double scale = n > 0 ? h.cwiseAbs().maxCoeff() : 0.0;
  std::vector<std::pair<Index, Index>> couplings;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (std::abs(h(i, j)) > tol.hermitian_rel * scale) couplings.emplace_back(i, j);

  const RealVector base = long_time_populations(h, tol);
  RealMatrix response(static_cast<Index>(couplings.size()), n);
  parallel_for(couplings.size(), threads, [&](std::size_t r) {
    ComplexMatrix cut = h;
    const auto [i, j] = couplings[r];
    cut(i, j) = 0.0;
    cut(j, i) = 0.0;
    response.row(static_cast<Index>(r)) = (long_time_populations(cut, tol) - base).transpose();
  });

  ClosenessMatrix out;
  out.measure = ClosenessMeasure::LinkFailure;
  out.values = RealMatrix::Zero(n, n);
  const double silent = 1e-12;
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      double diff = 0.0;
      double norm_u = 0.0;
      double norm_v = 0.0;
      bool shared = false;
      for (std::size_t r = 0; r < couplings.size(); ++r) {
        const auto [a, b] = couplings[r];
        if (a == u || a == v || b == u || b == v) continue;
        const double ru = response(static_cast<Index>(r), u);
        const double rv = response(static_cast<Index>(r), v);
        diff += (ru - rv) * (ru - rv);
        norm_u += ru * ru;
        norm_v += rv * rv;
        if (std::abs(ru) > silent && std::abs(rv) > silent) shared = true;
      }
      const double denom = std::sqrt(norm_u) + std::sqrt(norm_v);
      const double d = denom > 0.0 ? std::sqrt(diff) / denom : 0.0;
      out.values(u, v) = out.values(v, u) = 1.0 / (1.0 + d);
      if (!shared) out.flagged.emplace_back(u, v);
    }
  }
  return out;
}

Partition partition_from_assignment(const std::vector<Index>& assignment) {
  Partition out;
  std::map<Index, Index> relabel;
  out.assignment.resize(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    auto [it, inserted] = relabel.try_emplace(assignment[i], static_cast<Index>(relabel.size()));
    out.assignment[i] = it->second;
  }
  out.communities.assign(relabel.size(), {});
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    out.communities[out.assignment[i]].push_back(static_cast<Index>(i));
  }
  return out;
}

namespace {

double partition_quality(const RealMatrix& c, const std::vector<Index>& assignment, Index groups) {
  const double total = c.sum() - c.trace();
  if (!(total > 0.0)) return 0.0;
  RealVector intra = RealVector::Zero(groups);
  RealVector strength = RealVector::Zero(groups);
  const Index n = c.rows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      strength(assignment[i]) += c(i, j);
      if (assignment[i] == assignment[j]) intra(assignment[i]) += c(i, j);
    }
  }
  return intra.sum() / total - (strength / total).squaredNorm();
}

}  // namespace

Partition agglomerate(const ClosenessMatrix& closeness) {
  const RealMatrix& c = closeness.values;
  const Index n = c.rows();
  if (c.cols() != n) throw ValidationError("closeness matrix must be square");
  if (n == 0) return {};
  if ((c - c.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, c.cwiseAbs().maxCoeff())) {
    throw ValidationError("closeness matrix must be symmetric");
  }

  Dendrogram dendrogram = average_linkage(c, LinkageOrder::LargestFirst);

  // Replay the merges, scoring every level.
  std::vector<Index> cluster_of(static_cast<std::size_t>(n));
  std::iota(cluster_of.begin(), cluster_of.end(), 0);
  std::vector<std::vector<Index>> members(static_cast<std::size_t>(2 * n - 1));
  for (Index i = 0; i < n; ++i) members[i] = {i};
  std::vector<std::vector<Index>> level_assignments{cluster_of};
  std::vector<double> quality{partition_quality(c, cluster_of, 2 * n - 1)};
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const Merge& m = dendrogram.merges[k];
    const Index id = n + static_cast<Index>(k);
    members[id] = members[m.a];
    members[id].insert(members[id].end(), members[m.b].begin(), members[m.b].end());
    for (Index node : members[id]) cluster_of[node] = id;
    level_assignments.push_back(cluster_of);
    quality.push_back(partition_quality(c, cluster_of, 2 * n - 1));
  }

  bool flat = true;
  if (!dendrogram.merges.empty()) {
    const double first = dendrogram.merges.front().height;
    const double scale = std::max(1.0, std::abs(first));
    for (const Merge& m : dendrogram.merges) {
      if (std::abs(m.height - first) > 1e-12 * scale) flat = false;
    }
  }

  std::size_t best = quality.size() - 1;
  if (!flat) {
    // Highest quality; ties go to the coarser level.
    for (std::size_t k = quality.size(); k-- > 0;) {
      if (quality[k] > quality[best] + 1e-12) best = k;
    }
  }

  Partition out = partition_from_assignment(level_assignments[best]);
  out.dendrogram = std::move(dendrogram);
  out.quality = std::move(quality);
  out.best_level = best;
  out.tie = flat;
  return out;
}

ComplexMatrix magnetic_laplacian(const Graph& g, double theta) {
  const RealMatrix w = g.weight_matrix();
  const RealMatrix sym = 0.5 * (w + w.transpose());
  const Index n = g.node_count();
  ComplexMatrix lap(n, n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      lap(u, v) = -sym(u, v) * std::exp(kI * theta * (w(u, v) - w(v, u)));
    }
  }
  lap.diagonal() += sym.rowwise().sum().cast<Complex>();
  return lap;
}

std::vector<Index> kmeans(const RealMatrix& points, Index k, const KMeansOptions& options) {
  const Index n = points.rows();
  if (k < 1 || k > n) throw ValidationError("k must lie in [1, number of points]");
  std::mt19937_64 rng(options.seed);
  std::vector<Index> best_labels(static_cast<std::size_t>(n), 0);
  double best_inertia = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    // k-means++ seeding.
    RealMatrix centres(k, points.cols());
    centres.row(0) = points.row(static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(n))));
    RealVector nearest = (points.rowwise() - centres.row(0)).rowwise().squaredNorm();
    for (Index c = 1; c < k; ++c) {
      const double total = nearest.sum();
      Index pick = 0;
      if (total > 0.0) {
        double target = uniform01(rng) * total;
        while (pick < n - 1 && target >= nearest(pick)) target -= nearest(pick++);
      } else {
        pick = static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      }
      centres.row(c) = points.row(pick);
      nearest = nearest.cwiseMin((points.rowwise() - centres.row(c)).rowwise().squaredNorm());
    }

    std::vector<Index> labels(static_cast<std::size_t>(n), -1);
    double inertia = 0.0;
    for (int it = 0; it < options.max_iterations; ++it) {
      bool changed = false;
      inertia = 0.0;
      for (Index i = 0; i < n; ++i) {
        Index arg = 0;
        double dist = std::numeric_limits<double>::infinity();
        for (Index c = 0; c < k; ++c) {
          const double d = (points.row(i) - centres.row(c)).squaredNorm();
          if (d < dist) {
            dist = d;
            arg = c;
          }
        }
        inertia += dist;
        if (labels[i] != arg) {
          labels[i] = arg;
          changed = true;
        }
      }
      if (!changed) break;
      for (Index c = 0; c < k; ++c) {
        RealVector sum = RealVector::Zero(points.cols());
        Index count = 0;
        for (Index i = 0; i < n; ++i) {
          if (labels[i] == c) {
            sum += points.row(i).transpose();
            ++count;
          }
        }
        if (count > 0) centres.row(c) = sum.transpose() / static_cast<double>(count);
      }
    }
    if (inertia < best_inertia - 1e-12) {
      best_inertia = inertia;
      best_labels = labels;
    }
  }
  return best_labels;
}

namespace {

// Unit-normalised rows of the m lowest eigenvectors. m is taken at the
// largest eigengap in [k, 2k] so that degenerate eigenspaces are not cut.
ComplexMatrix spectral_embedding(const ComplexMatrix& lap, Index k) {
  const EigenDecomposition eig = hermitian_eig(lap);
  const RealVector& w = eig.eigenvalues();
  const Index n = lap.rows();
  Index m = k;
  double best_gap = -1.0;
  for (Index c = k; c <= std::min(2 * k, n - 1); ++c) {
    const double gap = w(c) - w(c - 1);
    if (gap > best_gap + 1e-12) {
      best_gap = gap;
      m = c;
    }
  }
  ComplexMatrix x = eig.eigenvectors().leftCols(m);
  for (Index i = 0; i < n; ++i) {
    const double norm = x.row(i).norm();
    if (norm > 0.0) x.row(i) /= norm;
  }
  return x;
}

// Per-node phase is arbitrary, so cluster on x x^+ (real and imaginary parts).
RealMatrix phase_invariant_features(const ComplexMatrix& x) {
  const Index m = x.cols();
  RealMatrix f(x.rows(), 2 * m * m);
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        const Complex z = x(i, a) * std::conj(x(i, b));
        f(i, a * m + b) = z.real();
        f(i, m * m + a * m + b) = z.imag();
      }
    }
  }
  return f;
}

Partition embed_and_cluster(const Graph& g, double theta, Index k, const KMeansOptions& options) {
  if (k < 2) throw ValidationError("k must be at least 2");
  if (k > g.node_count()) throw ValidationError("k exceeds the number of nodes");
  const RealMatrix features = phase_invariant_features(spectral_embedding(magnetic_laplacian(g, theta), k));
  return partition_from_assignment(kmeans(features, k, options));
}

}  // namespace

Partition magnetic_partition(const Graph& g, double theta, Index k, const KMeansOptions& options) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw ValidationError("theta must lie in (0, pi)");
  return embed_and_cluster(g, theta, k, options);
}

Partition spectral_partition(const Graph& g, Index k, const KMeansOptions& options) {
  return embed_and_cluster(g, 0.0, k, options);
}

ClosenessMatrix closeness_magnetic(const Graph& g, double theta, Index k) {
  if (k < 1 || k > g.node_count()) throw ValidationError("k must lie in [1, N]");
  const ComplexMatrix x = spectral_embedding(magnetic_laplacian(g, theta), k);
  const Index n = g.node_count();
  ClosenessMatrix out;
  out.measure = ClosenessMeasure::MagneticPhase;
  out.values = RealMatrix::Zero(n, n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      out.values(u, v) = out.values(v, u) = std::abs(x.row(u).dot(x.row(v)));
    }
  }
  return out;
}

}  // namespace qnet
