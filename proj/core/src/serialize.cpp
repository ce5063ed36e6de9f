#include "qnet/serialize.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace qnet {

namespace {

void put(std::ostream& out, double x) {
  out.precision(std::numeric_limits<double>::max_digits10);
  out << x;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const char* regime_name(EmergenceRegime r) {
  switch (r) {
    case EmergenceRegime::Below: return "below";
    case EmergenceRegime::Critical: return "critical";
    case EmergenceRegime::Above: return "above";
  }
  return "unknown";
}

}  // namespace

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json to_json(const OccupationResult& r) {
  return {{"times", r.times},
          {"probabilities", r.probabilities},
          {"average", r.average},
          {"variance", r.variance}};
}

Json to_json(const ChiralReport& r) {
  return {{"times", r.times},
          {"forward", r.forward},
          {"time_reversed", r.time_reversed},
          {"max_site_deviation", r.max_site_deviation},
          {"max_directional_bias", r.max_directional_bias},
          {"symmetry_broken", r.symmetry_broken}};
}

Json to_json(const RankingResult& r) {
  Json j{{"variant", to_string(r.variant)},
         {"scores", r.scores},
         {"converged", r.converged},
         {"iterations", r.iterations}};
  if (!r.variance.empty()) j["variance"] = r.variance;
  if (r.ground_eigenvalue) j["ground_eigenvalue"] = *r.ground_eigenvalue;
  if (r.alpha) j["alpha"] = *r.alpha;
  if (r.convergence_time) {
    j["convergence_time"] = *r.convergence_time;
    j["max_trace_drift"] = r.max_trace_drift;
    j["min_eigenvalue"] = r.min_eigenvalue;
  }
  if (r.degenerate) {
    j["degenerate"] = true;
    j["ground_vectors"] = r.ground_vectors;
  }
  return j;
}

Json to_json(const Dendrogram& d, const std::string& height_key) {
  Json merges = Json::array();
  for (const Merge& m : d.merges) {
    merges.push_back({{"a", m.a}, {"b", m.b}, {height_key, finite_or_null(m.height)}, {"size", m.size}});
  }
  return {{"merges", merges}, {"order", d.order}};
}

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(finite_or_null(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ClosenessMatrix& c) {
  Json flagged = Json::array();
  for (const auto& [a, b] : c.flagged) flagged.push_back({a, b});
  Json j{{"measure", to_string(c.measure)}, {"values", to_json(c.values)}, {"flagged", flagged}};
  j["time"] = optional_json(c.time);
  if (!c.warning.empty()) j["warning"] = c.warning;
  return j;
}

Json to_json(const Partition& p) {
  return {{"assignment", p.assignment},
          {"communities", p.communities},
          {"dendrogram", to_json(p.dendrogram, "closeness")},
          {"quality", p.quality},
          {"best_level", p.best_level},
          {"tie", p.tie}};
}

Json to_json(const ClusterStats& s) {
  Json hist = Json::array();
  for (const auto& [size, count] : s.size_histogram) hist.push_back({size, count});
  return {{"p", s.p_bond},
          {"nodes", s.nodes},
          {"trials", s.trials.size()},
          {"spanning_prob", s.spanning_probability},
          {"largest_fraction_mean", s.largest_fraction_mean},
          {"ci", {s.spanning_ci.first, s.spanning_ci.second}},
          {"size_histogram", hist}};
}

Json to_json(const EmergenceCurve& c) {
  Json points = Json::array();
  for (const EmergencePoint& p : c.points) {
    points.push_back({{"n", p.n},
                      {"c", p.c},
                      {"p", p.p},
                      {"fraction", p.fraction},
                      {"expected_count", p.expected_count}});
  }
  Json transition = Json::array();
  for (const auto& [n, cs] : c.transition) {
    transition.push_back({{"n", n}, {"c_low", optional_json(cs.first)}, {"c_high", optional_json(cs.second)}});
  }
  return {{"z", c.z},
          {"critical_z", c.critical_z},
          {"regime", regime_name(c.regime)},
          {"points", points},
          {"transition", transition}};
}

Json to_json(const SpanningCurve& c) {
  return {{"p", c.p}, {"spanning_prob", c.spanning_probability}, {"crossing", optional_json(c.crossing)}};
}

Json to_json(const LikelihoodScan& s) {
  Json ll = Json::array();
  Json kl = Json::array();
  for (double x : s.log_likelihood) ll.push_back(finite_or_null(x));
  for (double x : s.kl) kl.push_back(finite_or_null(x));
  return {{"grid", s.grid}, {"log_likelihood_bits", ll}, {"kl_bits", kl}, {"best", s.grid.at(s.best)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_csv(std::ostream& out, const RealMatrix& m, const std::vector<std::string>& header) {
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  if (!header.empty()) out << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      put(out, m(i, j));
    }
    out << '\n';
  }
}

void write_trials_csv(std::ostream& out, const ClusterStats& s) {
  out << "trial,spanning,largest_fraction,clusters,open_bonds\n";
  for (const TrialRecord& t : s.trials) {
    out << t.trial << ',' << (t.spanning ? 1 : 0) << ',';
    put(out, t.largest_fraction);
    out << ',' << t.clusters << ',' << t.open_bonds << '\n';
  }
}

void write_occupation_csv(std::ostream& out, const OccupationResult& r) {
  out << "t";
  for (std::size_t v = 0; v < r.probabilities.size(); ++v) out << ",p" << v;
  out << '\n';
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    put(out, r.times[k]);
    for (const auto& row : r.probabilities) {
      out << ',';
      put(out, row[k]);
    }
    out << '\n';
  }
}

void write_ranking_csv(std::ostream& out, const RankingResult& r) {
  out << "node,score" << (r.variance.empty() ? "" : ",variance") << '\n';
  for (std::size_t v = 0; v < r.scores.size(); ++v) {
    out << v << ',';
    put(out, r.scores[v]);
    if (!r.variance.empty()) {
      out << ',';
      put(out, r.variance[v]);
    }
    out << '\n';
  }
}

void write_emergence_csv(std::ostream& out, const EmergenceCurve& c) {
  out << "n,c,p,fraction,expected_count\n";
  for (const EmergencePoint& p : c.points) {
    out << p.n << ',';
    put(out, p.c);
    out << ',';
    put(out, p.p);
    out << ',';
    put(out, p.fraction);
    out << ',';
    put(out, p.expected_count);
    out << '\n';
  }
}

void write_spanning_csv(std::ostream& out, const SpanningCurve& c) {
  out << "p,spanning_prob\n";
  for (std::size_t k = 0; k < c.p.size(); ++k) {
    put(out, c.p[k]);
    out << ',';
    put(out, c.spanning_probability[k]);
    out << '\n';
  }
}

}  // namespace qnet
