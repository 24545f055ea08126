#include "hqs/interaction_graph.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace hqs {
namespace {

std::pair<QubitId, QubitId> ordered_edge(const QubitId& a, const QubitId& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

InteractionGraph::InteractionGraph(
    std::set<QubitId> vertices, std::set<std::pair<QubitId, QubitId>> edges,
    int time)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), time_(time) {
  for (const auto& [u, v] : edges_)
    if (vertices_.count(u) == 0 || vertices_.count(v) == 0)
      throw std::invalid_argument("edge endpoint not a vertex");
  order_.assign(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = int(i);
  adj_.assign(order_.size(), {});
  for (const auto& [u, v] : edges_) {
    adj_[index_[u]].push_back(index_[v]);
    adj_[index_[v]].push_back(index_[u]);
  }
  // Eager all-pairs BFS; graphs here have at most a few hundred vertices.
  dist_.assign(order_.size(), std::vector<int>(order_.size(), -1));
  for (std::size_t s = 0; s < order_.size(); ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    std::deque<int> queue{int(s)};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj_[u])
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          queue.push_back(w);
        }
    }
  }
}

std::optional<int> InteractionGraph::distance(const QubitId& u,
                                              const QubitId& v) const {
  auto iu = index_.find(u);
  auto iv = index_.find(v);
  if (iu == index_.end() || iv == index_.end())
    throw std::invalid_argument("distance: vertex absent");
  int d = dist_[iu->second][iv->second];
  if (d < 0) return std::nullopt;
  return d;
}

Ball InteractionGraph::ball(const QubitId& center, int radius) const {
  auto ic = index_.find(center);
  if (ic == index_.end()) throw std::invalid_argument("ball: center absent");
  Ball b;
  b.center = center;
  b.radius = radius;
  const auto& d = dist_[ic->second];
  for (std::size_t i = 0; i < order_.size(); ++i)
    if (d[i] >= 0 && d[i] <= radius) b.members.insert(order_[i]);
  return b;
}

std::set<QubitId> InteractionGraph::grow_support(
    const std::set<QubitId>& support, int d) const {
  if (d < 0) throw std::invalid_argument("grow_support: negative distance");
  std::set<QubitId> out;
  for (const auto& q : support) {
    auto iq = index_.find(q);
    if (iq == index_.end())
      throw std::invalid_argument("grow_support: vertex absent");
    const auto& dists = dist_[iq->second];
    for (std::size_t i = 0; i < order_.size(); ++i)
      if (dists[i] >= 0 && dists[i] <= d) out.insert(order_[i]);
  }
  return out;
}

std::string InteractionGraph::dump_edge_list() const {
  std::ostringstream os;
  for (const auto& [u, v] : edges_)
    os << to_string(u) << " " << to_string(v) << "\n";
  return os.str();
}

InteractionGraph build_interaction_graph(int t, int lx, int ly,
                                         DeviceLayout layout) {
  if (layout != DeviceLayout::Ladder)
    throw std::invalid_argument("unsupported device layout");
  if (lx < 2) throw std::invalid_argument("lx must be >= 2");
  if (t < 1 || t > ly) throw std::invalid_argument("t out of range");
  std::set<QubitId> vs;
  std::set<std::pair<QubitId, QubitId>> es;
  // Simulated system: grid rows 1..t.
  for (int r = 1; r <= t; ++r)
    for (int c = 0; c < lx; ++c) {
      vs.insert(QubitId::system(r, c));
      if (c + 1 < lx)
        es.insert(ordered_edge(QubitId::system(r, c), QubitId::system(r, c + 1)));
      if (r > 1)
        es.insert(ordered_edge(QubitId::system(r - 1, c), QubitId::system(r, c)));
    }
  // Device: bath chain, bath-sink rungs, bath-system attachment at row t.
  for (int c = 0; c < lx; ++c) {
    vs.insert(QubitId::bath(c));
    vs.insert(QubitId::sink(t, c));
    if (c + 1 < lx)
      es.insert(ordered_edge(QubitId::bath(c), QubitId::bath(c + 1)));
    es.insert(ordered_edge(QubitId::bath(c), QubitId::sink(t, c)));
    es.insert(ordered_edge(QubitId::bath(c), QubitId::system(t, c)));
  }
  return InteractionGraph(std::move(vs), std::move(es), t);
}

std::set<std::pair<QubitId, QubitId>> parse_edge_list(const std::string& text) {
  std::set<std::pair<QubitId, QubitId>> es;
  std::istringstream is(text);
  std::string a, b;
  while (is >> a >> b) es.insert(ordered_edge(parse_qubit(a), parse_qubit(b)));
  return es;
}

}  // namespace hqs
