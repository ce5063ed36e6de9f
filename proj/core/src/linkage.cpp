#include "qnet/linkage.hpp"

#include <limits>

#include "qnet/error.hpp"

namespace qnet {

Dendrogram average_linkage(const RealMatrix& values, LinkageOrder order) {
  const Index n = values.rows();
  if (values.cols() != n) throw ValidationError("linkage matrix must be square");
  Dendrogram out;
  if (n == 0) return out;

  // Active clusters: id, member leaves, and inter-cluster mean values.
  std::vector<Index> ids(static_cast<std::size_t>(n));
  std::vector<std::vector<Index>> members(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    ids[i] = i;
    members[i] = {i};
  }
  RealMatrix d = values;
  std::vector<std::vector<Index>> children(static_cast<std::size_t>(2 * n - 1));

  while (ids.size() > 1) {
    std::size_t best_a = 0;
    std::size_t best_b = 1;
    const double sign = order == LinkageOrder::SmallestFirst ? 1.0 : -1.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        if (sign * d(static_cast<Index>(a), static_cast<Index>(b)) < best) {
          best = sign * d(static_cast<Index>(a), static_cast<Index>(b));
          best_a = a;
          best_b = b;
        }

    const Index new_id = n + static_cast<Index>(out.merges.size());
    const auto size_a = static_cast<double>(members[best_a].size());
    const auto size_b = static_cast<double>(members[best_b].size());
    out.merges.push_back({ids[best_a], ids[best_b], sign * best,
                          static_cast<Index>(members[best_a].size() + members[best_b].size())});
    children[new_id] = {ids[best_a], ids[best_b]};

    // Merge b into a: size-weighted mean.
    const auto m = static_cast<Index>(ids.size());
    for (Index k = 0; k < m; ++k) {
      const double merged = (size_a * d(best_a, k) + size_b * d(best_b, k)) / (size_a + size_b);
      d(best_a, k) = merged;
      d(k, best_a) = merged;
    }
    d(best_a, best_a) = 0.0;
    members[best_a].insert(members[best_a].end(), members[best_b].begin(), members[best_b].end());
    ids[best_a] = new_id;

    // Drop row/column b.
    RealMatrix reduced(m - 1, m - 1);
    for (Index r = 0, rr = 0; r < m; ++r) {
      if (r == static_cast<Index>(best_b)) continue;
      for (Index c = 0, cc = 0; c < m; ++c) {
        if (c == static_cast<Index>(best_b)) continue;
        reduced(rr, cc++) = d(r, c);
      }
      ++rr;
    }
    d = std::move(reduced);
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(best_b));
    members.erase(members.begin() + static_cast<std::ptrdiff_t>(best_b));
  }

  // Leaf order: depth-first from the root, left child first.
  std::vector<Index> stack{ids.front()};
  while (!stack.empty()) {
    const Index node = stack.back();
    stack.pop_back();
    if (node < n) {
      out.order.push_back(node);
    } else {
      stack.push_back(children[node][1]);
      stack.push_back(children[node][0]);
    }
  }
  return out;
}

}  // namespace qnet
