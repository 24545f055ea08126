#include "hqs/surface_code.hpp"

#include <algorithm>

namespace hqs {
namespace {

bool in_lattice(int row, int col, int lx, int ly) {
  return row >= 1 && row <= ly && col >= 0 && col < lx;
}

// Entity scheduled within one round: a generator plus its register mapping.
struct Entity {
  bool x_type;
  int leftmost_col;
  std::vector<QubitId> members;
  std::vector<QubitId> new_row_members;
  int anchor_col;
};

}  // namespace

std::vector<SurfaceStabilizer> surface_code_generators(int lx, int ly) {
  if (lx < 2 || ly < 2) throw std::invalid_argument("lattice too small");
  std::vector<SurfaceStabilizer> out;
  for (int r = 0; r <= ly; ++r)
    for (int c = -1; c <= lx - 1; ++c) {
      SurfaceStabilizer s;
      s.x_type = ((r + c) % 2 + 2) % 2 == 1;
      s.anchor_row = r;
      s.anchor_col = c;
      for (int dr = 0; dr <= 1; ++dr)
        for (int dc = 0; dc <= 1; ++dc)
          if (in_lattice(r + dr, c + dc, lx, ly))
            s.sites.emplace_back(r + dr, c + dc);
      if (s.sites.size() == 4) {
        out.push_back(std::move(s));
      } else if (s.sites.size() == 2) {
        const bool horizontal = s.sites[0].first == s.sites[1].first;
        // Rotated-code boundary: X pairs on the top/bottom rows, Z pairs on
        // the left/right columns.
        if (horizontal == s.x_type) out.push_back(std::move(s));
      }
    }
  return out;
}

PauliString stabilizer_pauli(const SurfaceStabilizer& s) {
  std::map<QubitId, char> letters;
  for (auto [r, c] : s.sites)
    letters.emplace(QubitId::system(r, c), s.x_type ? 'X' : 'Z');
  return PauliString(std::move(letters));
}

PauliString logical_z_row(int lx, int row) {
  std::map<QubitId, char> letters;
  for (int c = 0; c < lx; ++c) letters.emplace(QubitId::system(row, c), 'Z');
  return PauliString(std::move(letters));
}

void append_stabilizer_subroutine(CircuitBuilder& builder, bool x_type,
                                  const std::vector<QubitId>& members,
                                  const std::vector<QubitId>& new_row_members,
                                  const QubitId& ancilla,
                                  std::map<QubitId, Mat>& omega_sink,
                                  std::vector<QubitId>& sink) {
  sink.push_back(ancilla);
  omega_sink.emplace(ancilla, x_type ? ketplus_dm() : ket0_dm());
  // Correction targets the lowest-column member on the newest row; rounds
  // run entities in descending leftmost-column order so this qubit is not
  // inside any same-type generator set earlier in the round.
  if (new_row_members.empty())
    throw std::invalid_argument("subroutine needs a correction target");
  QubitId target = new_row_members.front();
  for (const auto& q : new_row_members)
    if (q.col < target.col) target = q;
  if (x_type) {
    for (const auto& q : members)
      builder.push_layer(make_gate("CNOT", ancilla, q));
    builder.push_layer(make_gate("CNOT", target, ancilla));
  } else {
    for (const auto& q : members)
      builder.push_layer(make_gate("CNOT", q, ancilla));
    builder.push_layer(make_gate("CNOT", ancilla, target));
  }
}

namespace {

// Map a lattice site to its register at step t: row t lives on the system,
// row t+1 on the bath, row t+2 on the sink row.
QubitId site_register(int row, int col, int t) {
  if (row == t) return QubitId::system(t, col);
  if (row == t + 1) return QubitId::bath(col);
  if (row == t + 2) return QubitId::sink(t, col);
  throw std::logic_error("site outside the step-" + std::to_string(t) +
                         " window");
}

Entity make_entity(const SurfaceStabilizer& s, int t) {
  Entity e;
  e.x_type = s.x_type;
  e.anchor_col = s.anchor_col;
  e.leftmost_col = s.sites.front().second;
  int newest_row = 0;
  for (auto [r, c] : s.sites) {
    e.leftmost_col = std::min(e.leftmost_col, c);
    newest_row = std::max(newest_row, r);
  }
  for (auto [r, c] : s.sites) {
    e.members.push_back(site_register(r, c, t));
    if (r == newest_row)
      e.new_row_members.push_back(site_register(r, c, t));
  }
  return e;
}

void run_round(CircuitBuilder& builder, std::vector<Entity> entities,
               int& next_ancilla_slot, std::map<QubitId, Mat>& omega_sink,
               std::vector<QubitId>& sink) {
  std::sort(entities.begin(), entities.end(),
            [](const Entity& a, const Entity& b) {
              return a.leftmost_col > b.leftmost_col;
            });
  for (const auto& e : entities) {
    const QubitId anc =
        QubitId::ancilla(next_ancilla_slot++, std::max(e.anchor_col, 0));
    for (const auto& q : e.members) builder.allow(q, anc);
    append_stabilizer_subroutine(builder, e.x_type, e.members,
                                 e.new_row_members, anc, omega_sink, sink);
  }
}

}  // namespace

TransitionMap surface_code_transition_order(int lx, int t, int ly,
                                            bool z_before_x) {
  if (lx < 3 || lx % 2 == 0)
    throw std::invalid_argument("surface code needs odd lx >= 3");
  if (t < 1 || t > ly) throw std::invalid_argument("t out of range");

  EdgeSet adjacency;
  for (int c = 0; c < lx; ++c) {
    if (c + 1 < lx) add_edge(adjacency, QubitId::bath(c), QubitId::bath(c + 1));
    add_edge(adjacency, QubitId::bath(c), QubitId::system(t, c));
    add_edge(adjacency, QubitId::bath(c), QubitId::sink(t, c));
  }
  CircuitBuilder builder(std::move(adjacency));

  RegisterPartition part;
  part.bath = bath_row(lx);
  part.system = system_row(t, lx);
  std::map<QubitId, Mat> omega_system, omega_sink;
  for (const auto& q : part.system) omega_system.emplace(q, ket0_dm());
  std::vector<QubitId> sink;
  if (t <= ly - 2) {
    for (const auto& q : sink_row(t, lx)) {
      sink.push_back(q);
      omega_sink.emplace(q, ket0_dm());
    }
  }

  builder.begin_layer();
  for (int c = 0; c < lx; ++c)
    builder.push(make_gate("SWAP", QubitId::bath(c), QubitId::system(t, c)));

  const auto gens = surface_code_generators(lx, ly);
  auto collect = [&](auto pred) {
    std::vector<Entity> es;
    for (const auto& g : gens)
      if (pred(g)) es.push_back(make_entity(g, t));
    return es;
  };
  int slot = 0;

  // Bottom-row X pairs ride with step 1, before the spanning layers.
  if (t == 1)
    run_round(builder,
              collect([&](const SurfaceStabilizer& g) {
                return g.anchor_row == 0;
              }),
              slot, omega_sink, sink);

  auto layer_round = [&](int anchor_row, bool want_x, bool with_top_pairs) {
    run_round(builder,
              collect([&](const SurfaceStabilizer& g) {
                if (g.x_type != want_x) return false;
                if (g.anchor_row == anchor_row) return true;
                return with_top_pairs && want_x && g.anchor_row == ly &&
                       anchor_row == ly - 1;
              }),
              slot, omega_sink, sink);
  };

  if (t <= ly - 1) {
    const bool top = (t == ly - 1);
    if (z_before_x) {
      layer_round(t, false, false);
      layer_round(t, true, top);
    } else {
      layer_round(t, true, top);
      layer_round(t, false, false);
    }
  }
  if (t <= ly - 2) {
    if (z_before_x) {
      layer_round(t + 1, false, false);
      layer_round(t + 1, true, false);
    } else {
      layer_round(t + 1, true, false);
      layer_round(t + 1, false, false);
    }
  }

  part.sink = sink;
  return build_transition_map(builder.finish(), std::move(omega_system),
                              std::move(omega_sink), std::move(part), t, lx);
}

TransitionMap surface_code_transition(int lx, int t, int ly) {
  return surface_code_transition_order(lx, t, ly, /*z_before_x=*/false);
}

}  // namespace hqs
