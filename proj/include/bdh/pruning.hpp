#pragma once

#include <unordered_map>

#include "bdh/core.hpp"
#include "bdh/forbidden.hpp"

namespace bdh {

/// One construction step: the graph grows from a single initial vertex by
/// pendant additions (new degree-1 vertex on the anchor) and twin additions
/// (new same-class vertex copying the anchor's neighborhood).
struct PruningStep {
  enum class Kind { initial, pendant, twin };
  Kind kind{Kind::initial};
  Vertex vertex{};
  Vertex anchor{};  // meaningful for pendant/twin only
  friend bool operator==(const PruningStep&, const PruningStep&) = default;
};

struct PruningSequence {
  int nx = 0;
  int ny = 0;
  std::vector<PruningStep> steps;

  /// One step per line: `I v`, `P v anchor`, `T v anchor`.
  std::string serialize() const {
    std::ostringstream out;
    for (const auto& s : steps) {
      switch (s.kind) {
        case PruningStep::Kind::initial: out << "I " << to_string(s.vertex) << "\n"; break;
        case PruningStep::Kind::pendant:
          out << "P " << to_string(s.vertex) << " " << to_string(s.anchor) << "\n";
          break;
        case PruningStep::Kind::twin:
          out << "T " << to_string(s.vertex) << " " << to_string(s.anchor) << "\n";
          break;
      }
    }
    return out.str();
  }

  static PruningSequence parse(std::string_view text) {
    PruningSequence seq;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ls(line);
      std::string tag, v_lab, a_lab;
      if (!(ls >> tag)) continue;
      PruningStep step;
      if (tag == "I") {
        if (!(ls >> v_lab)) throw ParseError(line_no, "malformed initial step");
        step.kind = PruningStep::Kind::initial;
      } else if (tag == "P" || tag == "T") {
        if (!(ls >> v_lab >> a_lab)) throw ParseError(line_no, "malformed step");
        step.kind = tag == "P" ? PruningStep::Kind::pendant : PruningStep::Kind::twin;
        auto a = vertex_from_label(a_lab);
        if (!a) throw ParseError(line_no, "bad anchor label");
        step.anchor = *a;
      } else {
        throw ParseError(line_no, "unrecognized step tag `" + tag + "`");
      }
      auto v = vertex_from_label(v_lab);
      if (!v) throw ParseError(line_no, "bad vertex label");
      step.vertex = *v;
      seq.steps.push_back(step);
      seq.nx = std::max(seq.nx, step.vertex.side == Side::X ? step.vertex.index + 1 : 0);
      seq.ny = std::max(seq.ny, step.vertex.side == Side::Y ? step.vertex.index + 1 : 0);
    }
    return seq;
  }
};

/// Rebuilds the graph a sequence describes; throws on structural violations
/// (missing/duplicate vertices, bad anchors, misplaced initial step).
inline BipartiteGraph replay(const PruningSequence& seq) {
  BipartiteGraph g(seq.nx, seq.ny);
  std::array<std::vector<char>, 2> present{std::vector<char>(seq.nx, 0), std::vector<char>(seq.ny, 0)};
  auto is_present = [&](Vertex v) {
    return g.has(v) && present[side_index(v.side)][v.index];
  };
  bool first = true;
  int placed = 0;
  for (const auto& step : seq.steps) {
    Vertex v = step.vertex;
    if (!g.has(v)) throw std::invalid_argument("replay: vertex out of range " + to_string(v));
    if (is_present(v)) throw std::invalid_argument("replay: vertex added twice " + to_string(v));
    if (step.kind == PruningStep::Kind::initial) {
      if (!first) throw std::invalid_argument("replay: initial step must come first");
    } else {
      if (first) throw std::invalid_argument("replay: sequence must start with the initial step");
      if (!is_present(step.anchor)) throw std::invalid_argument("replay: anchor not present");
      if (step.kind == PruningStep::Kind::pendant) {
        if (step.anchor.side == v.side) throw std::invalid_argument("replay: pendant anchor in same class");
        g.add_edge(v, step.anchor);
      } else {
        if (step.anchor.side != v.side) throw std::invalid_argument("replay: twin anchor in other class");
        std::vector<int> nbs(g.neighbors(step.anchor).begin(), g.neighbors(step.anchor).end());
        for (int nb : nbs) g.add_edge(v, {opposite(v.side), nb});
      }
    }
    present[side_index(v.side)][v.index] = 1;
    ++placed;
    first = false;
  }
  if (placed != seq.nx + seq.ny)
    throw std::invalid_argument("replay: sequence does not cover every vertex");
  return g;
}

/// Greedy elimination: repeatedly delete the smallest pendant vertex, else the
/// smallest vertex that duplicates an earlier vertex's neighborhood. Succeeds
/// exactly on connected hole- and domino-free inputs; the returned sequence is
/// in construction order.
inline std::optional<PruningSequence> pruning_sequence(const BipartiteGraph& g) {
  if (!g.connected()) throw std::invalid_argument("pruning_sequence: graph must be connected");
  const int total = g.total_vertices();
  PruningSequence seq{g.n(Side::X), g.n(Side::Y), {}};
  if (total == 0) return std::nullopt;

  std::array<std::vector<std::vector<int>>, 2> adj;
  for (Side s : {Side::X, Side::Y}) {
    adj[side_index(s)].resize(g.n(s));
    for (int i = 0; i < g.n(s); ++i) {
      auto nb = g.neighbors({s, i});
      adj[side_index(s)][i].assign(nb.begin(), nb.end());
    }
  }
  std::array<std::vector<char>, 2> alive{std::vector<char>(g.n(Side::X), 1),
                                         std::vector<char>(g.n(Side::Y), 1)};
  auto all_vertices = g.vertices();
  int alive_count = total;

  auto remove = [&](Vertex v) {
    alive[side_index(v.side)][v.index] = 0;
    for (int nb : adj[side_index(v.side)][v.index]) {
      auto& lst = adj[side_index(opposite(v.side))][nb];
      lst.erase(std::lower_bound(lst.begin(), lst.end(), v.index));
    }
    adj[side_index(v.side)][v.index].clear();
    --alive_count;
  };

  std::vector<PruningStep> removed;
  while (alive_count > 1) {
    bool progressed = false;
    for (Vertex v : all_vertices) {
      if (!alive[side_index(v.side)][v.index]) continue;
      const auto& nbs = adj[side_index(v.side)][v.index];
      if (nbs.size() == 1) {
        removed.push_back({PruningStep::Kind::pendant, v, Vertex{opposite(v.side), nbs[0]}});
        remove(v);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      std::unordered_map<std::uint64_t, std::vector<Vertex>> buckets;
      for (Vertex v : all_vertices) {
        if (!alive[side_index(v.side)][v.index]) continue;
        const auto& nbs = adj[side_index(v.side)][v.index];
        std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(side_index(v.side));
        for (int nb : nbs) {
          h ^= static_cast<std::uint64_t>(nb) + 0x9e3779b97f4a7c15ull;
          h *= 1099511628211ull;
        }
        auto& bucket = buckets[h];
        Vertex match{};
        bool found = false;
        for (Vertex u : bucket) {
          if (u.side == v.side && adj[side_index(u.side)][u.index] == nbs) {
            match = u;
            found = true;
            break;
          }
        }
        if (found) {
          removed.push_back({PruningStep::Kind::twin, v, match});
          remove(v);
          progressed = true;
          break;
        }
        bucket.push_back(v);
      }
    }
    if (!progressed) return std::nullopt;
  }

  for (Vertex v : all_vertices)
    if (alive[side_index(v.side)][v.index]) seq.steps.push_back({PruningStep::Kind::initial, v, {}});
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) seq.steps.push_back(*it);
  return seq;
}

struct BdhVerdict {
  std::optional<PruningSequence> sequence;
  std::optional<ForbiddenSubgraph> certificate;
  bool yes() const { return sequence.has_value(); }
};

/// Recognition with certificates: a replayable construction sequence on yes,
/// an induced domino or hole on no.
inline BdhVerdict is_bdh(const BipartiteGraph& g) {
  BdhVerdict verdict;
  verdict.sequence = pruning_sequence(g);
  if (verdict.sequence) return verdict;
  verdict.certificate = find_forbidden(g);
  if (!verdict.certificate)
    throw std::logic_error("is_bdh: elimination failed but no forbidden subgraph found");
  return verdict;
}

}  // namespace bdh
