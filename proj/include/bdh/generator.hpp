#pragma once

#include "bdh/pruning.hpp"

namespace bdh {

struct GeneratedInstance {
  BipartiteGraph graph;
  PruningSequence sequence;
};

/// Random construction sequence: each step is a pendant with probability
/// `pendant_bias`, else a twin, with a uniformly random anchor. The second
/// vertex is always a pendant. With `no_universal` the last three steps are a
/// fixed pendant pattern that leaves no vertex adjacent to the whole opposite
/// class (requires n >= 6).
inline PruningSequence generate_bdh_sequence(int n, std::uint64_t seed, double pendant_bias,
                                             bool no_universal = false) {
  if (n < 1) throw std::invalid_argument("generate_bdh_sequence: n must be positive");
  if (pendant_bias < 0.0 || pendant_bias > 1.0)
    throw std::invalid_argument("generate_bdh_sequence: bias must be in [0,1]");
  if (no_universal && n < 6)
    throw std::invalid_argument("generate_bdh_sequence: no-universal graphs need n >= 6");

  SplitMix64 rng(seed ^ 0xb5ad4eceda1ce2a9ull);
  PruningSequence seq;
  std::vector<Vertex> existing;
  auto fresh = [&](Side s) {
    int idx = s == Side::X ? seq.nx++ : seq.ny++;
    return Vertex{s, idx};
  };
  auto push = [&](PruningStep::Kind kind, Side side, Vertex anchor) {
    Vertex v = fresh(side);
    seq.steps.push_back({kind, v, anchor});
    existing.push_back(v);
    return v;
  };

  Side initial_side = (rng.next() & 1) ? Side::Y : Side::X;
  push(PruningStep::Kind::initial, initial_side, {});
  for (int i = 1; i < n; ++i) {
    if (no_universal && i >= n - 3) {
      // Closing pattern w1-w2-w3: w2 hangs off w1 and w3 off w2, so w2's
      // neighborhood misses every older vertex and each older vertex misses
      // one of w1, w3. Orient so the first anchor class has >= 2 vertices.
      Side first_new = seq.nx >= 2 ? Side::Y : Side::X;
      std::vector<Vertex> anchors;
      for (Vertex v : existing)
        if (v.side == opposite(first_new)) anchors.push_back(v);
      Vertex w1 = push(PruningStep::Kind::pendant, first_new, anchors[rng.below(static_cast<int>(anchors.size()))]);
      Vertex w2 = push(PruningStep::Kind::pendant, opposite(first_new), w1);
      push(PruningStep::Kind::pendant, first_new, w2);
      break;
    }
    Vertex anchor = existing[rng.below(static_cast<int>(existing.size()))];
    bool pendant = i == 1 || rng.unit() < pendant_bias;
    if (pendant) {
      push(PruningStep::Kind::pendant, opposite(anchor.side), anchor);
    } else {
      push(PruningStep::Kind::twin, anchor.side, anchor);
    }
  }
  return seq;
}

inline GeneratedInstance generate_bdh(int n, std::uint64_t seed, double pendant_bias,
                                      bool no_universal = false) {
  PruningSequence seq = generate_bdh_sequence(n, seed, pendant_bias, no_universal);
  return {replay(seq), std::move(seq)};
}

}  // namespace bdh
