#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hqs/qubit_id.hpp"

namespace hqs {

enum class DeviceLayout { Ladder };  // the FIG-1 arrangement

struct Ball {
  QubitId center;
  int radius{0};
  std::set<QubitId> members;
};

// The merged interaction graph G^(t): simulated-system grid rows 1..t plus
// the device ladder (bath chain, bath-sink rungs, bath-system attachment at
// the frontier row t). Distances are cached all-pairs at construction;
// unreachable pairs are reported as an empty optional, never a sentinel.
class InteractionGraph {
 public:
  InteractionGraph(std::set<QubitId> vertices,
                   std::set<std::pair<QubitId, QubitId>> edges, int time);

  int time() const { return time_; }
  const std::set<QubitId>& vertices() const { return vertices_; }
  const std::set<std::pair<QubitId, QubitId>>& edges() const { return edges_; }
  bool has_vertex(const QubitId& q) const { return vertices_.count(q) > 0; }

  std::optional<int> distance(const QubitId& u, const QubitId& v) const;
  Ball ball(const QubitId& center, int radius) const;
  std::set<QubitId> grow_support(const std::set<QubitId>& support,
                                 int d) const;

  std::string dump_edge_list() const;

 private:
  std::set<QubitId> vertices_;
  std::set<std::pair<QubitId, QubitId>> edges_;
  int time_;
  std::vector<QubitId> order_;
  std::map<QubitId, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> dist_;  // -1 = unreachable
};

InteractionGraph build_interaction_graph(int t, int lx, int ly,
                                         DeviceLayout layout);

// Parse the plain-text edge list emitted by dump_edge_list (one "u v" pair
// per line, vertices as register:row:col).
std::set<std::pair<QubitId, QubitId>> parse_edge_list(const std::string& text);

}  // namespace hqs
