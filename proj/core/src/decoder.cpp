#include "rscsim/decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "rscsim/blossom.hpp"

namespace rscsim {

namespace {

void accumulate(Matching& m, const MatchingGraph& graph, int a, int b) {
  m.pairs.push_back({a, b});
  m.total_weight_int += graph.dist_int(a, b);
  m.total_weight += graph.dist(a, b);
  m.logical_parity = m.logical_parity != graph.path_payload(a, b);
}

void check_reachable(const Matching& m) {
  if (m.total_weight_int >= MatchingGraph::kUnreachable) {
    throw std::runtime_error("matching uses a disconnected defect pair");
  }
}

}  // namespace

Matching mwpm(const MatchingGraph& graph, std::span<const int> defects) {
  if (!graph.finalized()) throw std::logic_error("graph not finalized");
  Matching result;
  const int n = static_cast<int>(defects.size());
  if (n == 0) return result;

  // Vertices 0..n-1 are the defects, n..2n-1 boundary clones. Matching a
  // defect with any clone sends it to the boundary; leftover clones pair up
  // for free.
  BlossomMatcher matcher(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      matcher.set_weight(i, j, graph.dist_int(defects[i], defects[j]));
      matcher.set_weight(n + i, n + j, 0);
    }
    const std::int64_t to_boundary = graph.dist_int(defects[i], graph.boundary());
    for (int j = 0; j < n; ++j) matcher.set_weight(i, n + j, to_boundary);
  }
  const std::vector<int> mate = matcher.solve();

  for (int i = 0; i < n; ++i) {
    const int j = mate[i];
    if (j < n) {
      if (j > i) accumulate(result, graph, defects[i], defects[j]);
    } else {
      accumulate(result, graph, defects[i], graph.boundary());
    }
  }
  check_reachable(result);
  return result;
}

namespace {

struct BruteState {
  const MatchingGraph* graph = nullptr;
  std::span<const int> defects;
  std::vector<int> partner;  // -1 unmatched, -2 boundary
  std::vector<int> best_partner;
  std::int64_t best = 0;
  bool found = false;

  void search(std::int64_t acc) {
    int i = 0;
    const int n = static_cast<int>(defects.size());
    while (i < n && partner[i] != -1) ++i;
    if (i == n) {
      if (!found || acc < best) {
        best = acc;
        best_partner = partner;
        found = true;
      }
      return;
    }
    if (found && acc >= best) return;
    for (int j = i + 1; j < n; ++j) {
      if (partner[j] != -1) continue;
      partner[i] = j;
      partner[j] = i;
      search(acc + graph->dist_int(defects[i], defects[j]));
      partner[i] = partner[j] = -1;
    }
    partner[i] = -2;
    search(acc + graph->dist_int(defects[i], graph->boundary()));
    partner[i] = -1;
  }
};

}  // namespace

Matching brute_force_mwpm(const MatchingGraph& graph, std::span<const int> defects) {
  if (!graph.finalized()) throw std::logic_error("graph not finalized");
  if (defects.size() > 10) {
    throw std::invalid_argument("brute-force matcher accepts at most 10 defects");
  }
  Matching result;
  if (defects.empty()) return result;

  BruteState state;
  state.graph = &graph;
  state.defects = defects;
  state.partner.assign(defects.size(), -1);
  state.search(0);

  for (int i = 0; i < static_cast<int>(defects.size()); ++i) {
    const int j = state.best_partner[i];
    if (j == -2) {
      accumulate(result, graph, defects[i], graph.boundary());
    } else if (j > i) {
      accumulate(result, graph, defects[i], defects[j]);
    }
  }
  check_reachable(result);
  return result;
}

std::vector<int> defect_nodes(const MatchingGraph& graph, const DetectionEventSet& events) {
  if (events.basis != graph.basis) {
    throw std::invalid_argument("event basis does not match graph basis");
  }
  std::vector<int> nodes;
  nodes.reserve(events.defects.size());
  for (const DetectionEvent& ev : events.defects) {
    nodes.push_back(graph.detector(ev.stabilizer, ev.round));
  }
  return nodes;
}

bool decode(const MatchingGraph& graph, const DetectionEventSet& events) {
  return mwpm(graph, defect_nodes(graph, events)).logical_parity;
}

}  // namespace rscsim
