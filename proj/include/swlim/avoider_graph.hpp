#pragma once
// Explicit avoider graphs with cutoff: construction (edge rules one/two),
// exact walk counting, SCC pruning, and the plain-text cache format.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "swlim/catalan.hpp"
#include "swlim/perm.hpp"

namespace swlim {

struct PatternSpec {
  Perm pattern;      // avoided pattern, ends in its maximum
  Perm trim_target;  // pattern minus the final maximum, standardised
  static PatternSpec make(const Perm& pattern);
};

enum class EdgeRule { version_one = 1, version_two = 2 };

struct AvoiderGraph {
  PatternSpec spec;
  int cutoff = 0;
  EdgeRule rule = EdgeRule::version_two;
  std::vector<Perm> verts;                            // sorted by (length, lex)
  std::vector<std::vector<std::pair<int, int>>> out;  // (target, multiplicity), sorted
  int start = -1;                                     // index of (1)
  std::vector<Perm> dropped;                          // filled by pruning

  int index_of(const Perm& p) const;  // -1 if absent
  long long edge_count() const;       // sum of multiplicities
};

// Vertices: all nonempty trim_target-avoiders of length <= N. Edges: insert a
// new maximum at every position, trim; boundary (length N+1, no trim) edges
// are redirected to the standardised length-N prefix under version_two and
// dropped under version_one.
AvoiderGraph build_avoider_graph(const PatternSpec& spec, int N, EdgeRule rule,
                                 long long vertex_cap = 5'000'000);

// Subgraph induced by the SCC containing `hub` (default: vertex 21 when
// present, else the start). Increasing permutations outside that SCC fall out
// naturally. Throws on an empty/degenerate result.
AvoiderGraph prune_for_spectral(const AvoiderGraph& g,
                                std::optional<Perm> hub = std::nullopt);

// W[k] for k = 1..k_max: walks with k-1 steps from the start, exact.
std::vector<BigInt> count_walks(const AvoiderGraph& g, int k_max);
// Same but from an arbitrary source vertex.
std::vector<BigInt> count_walks_from(const AvoiderGraph& g, int src, int k_max);

enum class StatKeyer { initial_run, descent_set, short_count };
struct StatKey {
  int n = 0;
  int r = 0;            // initial_run / short_count keyers
  std::uint32_t mask = 0;  // descent_set keyer
  auto operator<=>(const StatKey&) const = default;
};
StatKey stat_key(const Perm& p, StatKeyer k);
std::vector<StatKey> class_statistics(const AvoiderGraph& g, StatKeyer k);

// Tarjan SCC over an adjacency structure; returns component id per vertex,
// ids in reverse topological order.
std::vector<int> tarjan_scc(const std::vector<std::vector<std::pair<int, int>>>& adj);

// Cache format: `avgraph v1 <pattern> <cutoff> <edge_rule>`, then `idx perm`
// per vertex (perm comma-separated), then `src dst mult` per edge.
void write_graph_cache(std::ostream& os, const AvoiderGraph& g);
AvoiderGraph read_graph_cache(std::istream& is);

}  // namespace swlim
