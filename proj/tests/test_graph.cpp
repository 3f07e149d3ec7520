#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "swlim/avoider_graph.hpp"

using namespace swlim;

TEST_CASE("PatternSpec splits off the final maximum") {
  auto s = PatternSpec::make({1, 3, 2, 4});
  CHECK(s.trim_target == Perm{1, 3, 2});
  CHECK_THROWS_AS(PatternSpec::make({1, 4, 2, 3}), std::invalid_argument);
}

TEST_CASE("vertex sets are the trim-target avoiders") {
  long long catalan_cum[] = {0, 1, 3, 8, 22, 64, 196};
  for (int N = 1; N <= 6; ++N) {
    auto g = build_avoider_graph(PatternSpec::make({1, 3, 2, 4}), N, EdgeRule::version_two);
    CHECK((long long)g.verts.size() == catalan_cum[N]);
    CHECK(g.start >= 0);
    CHECK(g.verts[g.start] == Perm{1});
  }
}

TEST_CASE("version_two out-multiplicity is n + 1") {
  for (Perm pat : {Perm{1, 3, 2, 4}, Perm{2, 1, 3, 4}, Perm{3, 1, 2, 4}, Perm{2, 1, 3}}) {
    auto g = build_avoider_graph(PatternSpec::make(pat), 6, EdgeRule::version_two);
    for (size_t i = 0; i < g.verts.size(); ++i) {
      long long deg = 0;
      for (auto& [j, m] : g.out[i]) deg += m;
      CHECK(deg == (long long)g.verts[i].size() + 1);
    }
  }
}

TEST_CASE("version_one drops exactly the boundary insertions") {
  auto spec = PatternSpec::make({1, 3, 2, 4});
  auto g1 = build_avoider_graph(spec, 5, EdgeRule::version_one);
  auto g2 = build_avoider_graph(spec, 5, EdgeRule::version_two);
  CHECK(g1.verts == g2.verts);
  CHECK(g1.edge_count() < g2.edge_count());
  for (size_t i = 0; i < g1.verts.size(); ++i) {
    long long deg = 0;
    for (auto& [j, m] : g1.out[i]) deg += m;
    CHECK(deg <= (long long)g1.verts[i].size() + 1);
  }
}

TEST_CASE("walk counts hit the avoider counts on the diagonal") {
  for (int n = 2; n <= 7; ++n) {
    auto g = build_avoider_graph(PatternSpec::make({1, 3, 2, 4}), n, EdgeRule::version_two);
    auto W = count_walks(g, n);
    CHECK(W[n] == BigInt(count_avoiders({1, 3, 2, 4}, n)));
    CHECK(W[1] == 1);
  }
}

TEST_CASE("tarjan on a toy graph") {
  // 0 <-> 1, 2 -> 0, 3 isolated
  std::vector<std::vector<std::pair<int, int>>> adj{{{1, 1}}, {{0, 1}}, {{0, 1}}, {}};
  auto comp = tarjan_scc(adj);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[0] != comp[2]);
  CHECK(comp[2] != comp[3]);
}

TEST_CASE("prune_for_spectral keeps the hub component") {
  auto g = build_avoider_graph(PatternSpec::make({2, 1, 3, 4}), 6, EdgeRule::version_one);
  auto h = prune_for_spectral(g);
  CHECK(h.verts.size() < g.verts.size());
  CHECK(h.index_of(Perm{2, 1}) >= 0);
  // increasing permutations fall out (no way back under version_one)
  CHECK(h.index_of(Perm{1, 2, 3, 4, 5, 6}) == -1);
  CHECK(!h.dropped.empty());
  // every kept vertex reaches and is reached: single SCC
  auto comp = tarjan_scc(h.out);
  for (int c : comp) CHECK(c == comp[0]);
}

TEST_CASE("class statistics keyers") {
  auto g = build_avoider_graph(PatternSpec::make({1, 3, 2, 4}), 5, EdgeRule::version_two);
  auto ks = class_statistics(g, StatKeyer::short_count);
  REQUIRE(ks.size() == g.verts.size());
  for (size_t i = 0; i < ks.size(); ++i) {
    CHECK(ks[i].n == (int)g.verts[i].size());
    CHECK(ks[i].r == short_count(g.verts[i]));
  }
}

TEST_CASE("graph cache round trip") {
  for (auto rule : {EdgeRule::version_one, EdgeRule::version_two}) {
    auto g = build_avoider_graph(PatternSpec::make({1, 3, 2, 4}), 6, rule);
    std::stringstream ss;
    write_graph_cache(ss, g);
    auto h = read_graph_cache(ss);
    CHECK(h.verts == g.verts);
    CHECK(h.cutoff == g.cutoff);
    CHECK(h.rule == g.rule);
    CHECK(h.spec.pattern == g.spec.pattern);
    CHECK(count_walks(h, 10) == count_walks(g, 10));
    // byte-identical rewrite
    std::stringstream ss2;
    write_graph_cache(ss2, h);
    CHECK(ss2.str() == ss.str());
  }
}

TEST_CASE("cache rejects malformed headers") {
  std::stringstream ss("avgraph v2 1324 5 2\n");
  CHECK_THROWS_AS(read_graph_cache(ss), std::invalid_argument);
}
