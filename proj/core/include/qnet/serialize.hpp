#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qnet/community.hpp"
#include "qnet/linkage.hpp"
#include "qnet/netinfo.hpp"
#include "qnet/percolation.hpp"
#include "qnet/rank.hpp"
#include "qnet/walk.hpp"

namespace qnet {

using Json = nlohmann::json;

/// Non-finite doubles become null.
Json finite_or_null(double x);

Json to_json(const OccupationResult& r);
Json to_json(const ChiralReport& r);
Json to_json(const RankingResult& r);
/// `height_key` names the merge value ("distance" for layers, "closeness" for
/// community dendrograms).
Json to_json(const Dendrogram& d, const std::string& height_key = "distance");
Json to_json(const ClosenessMatrix& c);
Json to_json(const Partition& p);
Json to_json(const ClusterStats& s);  // summary only; trials go to CSV
Json to_json(const EmergenceCurve& c);
Json to_json(const SpanningCurve& c);
Json to_json(const LikelihoodScan& s);
Json to_json(const RealMatrix& m);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

// CSV writers. Doubles use max_digits10.
void write_csv(std::ostream& out, const RealMatrix& m, const std::vector<std::string>& header = {});
void write_trials_csv(std::ostream& out, const ClusterStats& s);
void write_occupation_csv(std::ostream& out, const OccupationResult& r);
void write_ranking_csv(std::ostream& out, const RankingResult& r);
void write_emergence_csv(std::ostream& out, const EmergenceCurve& c);
void write_spanning_csv(std::ostream& out, const SpanningCurve& c);

}  // namespace qnet
