#pragma once

#include <vector>

#include "qnet/types.hpp"

namespace qnet {

struct Merge {
  Index a = 0;  // cluster ids: leaves are 0..n-1, merge k creates n + k
  Index b = 0;
  double height = 0.0;  // average-linkage value at which a and b joined
  Index size = 0;
};

struct Dendrogram {
  std::vector<Merge> merges;
  std::vector<Index> order;  // leaf order for plotting
};

enum class LinkageOrder {
  SmallestFirst,  // distances
  LargestFirst,  // similarities
};

/// Average-linkage (UPGMA) agglomeration of a symmetric matrix. Ties merge
/// the lexicographically smallest pair of active clusters.
Dendrogram average_linkage(const RealMatrix& values, LinkageOrder order);

}  // namespace qnet
