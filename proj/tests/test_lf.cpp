#include "oracles.hpp"

#include "ramsey_forge/cliques.hpp"
#include "ramsey_forge/graph_io.hpp"
#include "ramsey_forge/lf.hpp"
#include "ramsey_forge/subgraph.hpp"

#include <doctest.h>

#include <mpfr.h>
#include <random>
#include <set>

using namespace rf;

namespace {

// Decompositions by filtering every set partition of the edges.
std::set<std::vector<std::vector<std::size_t>>> brute_decompositions(const Graph& f) {
  std::set<std::vector<std::vector<std::size_t>>> out;
  const auto m = f.edges().size();
  for (const auto& rgs : oracle::set_partitions(m)) {
    EdgeDecomposition d;
    for (std::size_t e = 0; e < m; ++e) {
      if (rgs[e] >= d.parts.size()) d.parts.resize(rgs[e] + 1);
      d.parts[rgs[e]].push_back(e);
    }
    if (is_valid_decomposition(f, d)) out.insert(d.parts);
  }
  return out;
}

Graph graph_of(const BipartiteGraph& b) { return b.to_graph(); }

}  // namespace

TEST_SUITE("lf-machinery") {

TEST_CASE("decomposition examples") {
  const auto k3 = enumerate_decompositions(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].parts.size() == 3);
  CHECK(enumerate_decompositions(complete_graph(2)).size() == 1);
  const auto p3 = enumerate_decompositions(path_graph(3));
  CHECK(p3.size() == 2);
  CHECK_THROWS(enumerate_decompositions(complete_graph(6)));
}

TEST_CASE("enumeration matches filtered set partitions") {
  std::vector<Graph> fs{complete_graph(3), complete_graph(4), cycle_graph(4), cycle_graph(5),
                        path_graph(5), petersen_graph().induced(std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6})};
  for (std::uint64_t seed = 0; seed < 6; ++seed) fs.push_back(oracle::random_graph(6, 0.4, seed));
  for (const auto& f : fs) {
    if (f.edge_count() > 10) continue;
    const auto fast = enumerate_decompositions(f);
    const auto brute = brute_decompositions(f);
    CHECK(fast.size() == brute.size());
    for (const auto& d : fast) {
      CHECK(is_valid_decomposition(f, d));
      CHECK(brute.count(d.parts) == 1);
    }
    CHECK(enumerate_decompositions_serial(f) == fast);
  }
}

TEST_CASE("validator rejects bad decompositions") {
  const Graph k3 = complete_graph(3);
  CHECK_FALSE(is_valid_decomposition(k3, {{{0, 1, 2}}}));      // odd cycle
  CHECK_FALSE(is_valid_decomposition(k3, {{{0, 1}, {2}}}));    // share two vertices
  CHECK_FALSE(is_valid_decomposition(k3, {{{0}, {1}}}));       // not a cover
  CHECK_FALSE(is_valid_decomposition(k3, {{{0}, {0}, {1, 2}}}));
  CHECK(is_valid_decomposition(k3, {{{0}, {1}, {2}}}));
}

TEST_CASE("J graphs") {
  const Graph k3 = complete_graph(3);
  const auto j = build_J(k3, enumerate_decompositions(k3)[0]);
  CHECK(oracle::brute_isomorphic(graph_of(j), cycle_graph(6)));
  const auto jk2 = build_J(complete_graph(2), enumerate_decompositions(complete_graph(2))[0]);
  CHECK(oracle::brute_isomorphic(graph_of(jk2), path_graph(3)));
  const Graph p3 = path_graph(3);
  for (const auto& d : enumerate_decompositions(p3))
    if (d.parts.size() == 2) CHECK(oracle::brute_isomorphic(graph_of(build_J(p3, d)), path_graph(5)));
  // Degree identity: part-vertex degree = |V(F_i)|.
  const Graph c5 = cycle_graph(5);
  for (const auto& d : enumerate_decompositions(c5)) {
    const auto b = build_J(c5, d);
    std::size_t left = 0, right = 0;
    for (std::size_t i = 0; i < b.left_size(); ++i) left += b.left_degree(i);
    for (std::size_t v = 0; v < b.right_size(); ++v) right += b.right_degree(v);
    CHECK(left == right);
  }
}

TEST_CASE("the family L(F)") {
  const auto lk3 = build_L(complete_graph(3));
  REQUIRE(lk3.size() == 2);
  CHECK(oracle::brute_isomorphic(lk3[0], cycle_graph(4)) != oracle::brute_isomorphic(lk3[1], cycle_graph(4)));
  bool has_c6 = false;
  for (const auto& g : lk3) has_c6 = has_c6 || oracle::brute_isomorphic(g, cycle_graph(6));
  CHECK(has_c6);
  const auto lk2 = build_L(complete_graph(2));
  REQUIRE(lk2.size() == 2);
  bool has_p3 = false;
  for (const auto& g : lk2) has_p3 = has_p3 || oracle::brute_isomorphic(g, path_graph(3));
  CHECK(has_p3);
  const auto lc5 = build_L(cycle_graph(5));
  bool has_c10 = false;
  for (const auto& g : lc5) has_c10 = has_c10 || (g.order() == 10 && isomorphic(g, cycle_graph(10)));
  CHECK(has_c10);
  // Members are pairwise non-isomorphic and stable under a rerun.
  for (std::size_t i = 0; i < lc5.size(); ++i)
    for (std::size_t j = i + 1; j < lc5.size(); ++j) CHECK_FALSE(isomorphic(lc5[i], lc5[j]));
  const auto again = build_L(cycle_graph(5));
  REQUIRE(again.size() == lc5.size());
  for (std::size_t i = 0; i < lc5.size(); ++i) CHECK(again[i] == lc5[i]);
}

TEST_CASE("canonical form agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const Graph a = oracle::random_graph(n, 0.45, seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 gen(seed);
    std::shuffle(perm.begin(), perm.end(), gen);
    Graph b(n);
    for (const auto& e : a.edges()) b.add_edge(perm[e.u], perm[e.v]);
    CHECK(canonical_code(a) == canonical_code(b));
    const Graph other = oracle::random_graph(n, 0.45, seed + 1000);
    CHECK((canonical_code(a) == canonical_code(other)) == oracle::brute_isomorphic(a, other));
    CHECK(oracle::brute_isomorphic(canonical_form(a), a));
  }
}

TEST_CASE("subgraph search agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph host = oracle::random_graph(8, 0.5, seed);
    const Graph pat = oracle::random_graph(4, 0.5, seed + 77);
    const auto m = find_subgraph(host, pat);
    CHECK(m.has_value() == oracle::brute_contains(host, pat));
    if (m)
      for (const auto& e : pat.edges()) CHECK(host.adjacent((*m)[e.u], (*m)[e.v]));
  }
}

TEST_CASE("biregularity") {
  BipartiteGraph k23(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) k23.add_edge(i, j);
  CHECK(is_biregular(k23, 2, 3));
  CHECK_FALSE(is_biregular(k23, 3, 2));
  BipartiteGraph c6(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    c6.add_edge(i, i);
    c6.add_edge(i, (i + 1) % 3);
  }
  CHECK(is_biregular(c6, 2, 2));
  BipartiteGraph p3(1, 2);
  p3.add_edge(0, 0);
  p3.add_edge(0, 1);
  CHECK(is_biregular(p3, 1, 2));
  CHECK_FALSE(is_biregular(p3, 2, 2));
}

TEST_CASE("family freeness") {
  BipartiteGraph c6(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    c6.add_edge(i, i);
    c6.add_edge(i, (i + 1) % 3);
  }
  CHECK(is_family_free(c6, {cycle_graph(4)}).free);
  BipartiteGraph k22(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) k22.add_edge(i, j);
  const auto hit = is_family_free(k22, {cycle_graph(4)});
  CHECK_FALSE(hit.free);
  CHECK(hit.member == 0u);
  CHECK(hit.embedding.size() == 4);
  const auto fano = fano_incidence();
  CHECK(is_biregular(fano, 3, 3));
  CHECK(is_family_free(fano, {cycle_graph(4)}).free);
  CHECK(girth(fano.to_graph()) == 6);
}

TEST_CASE("fkt bounds") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 300; ++i) {
    const BigInt n = 2 + gen() % 1000000;
    const BigInt a = 1 + gen() % 1000, b = 1 + gen() % 1000, m = 1 + gen() % 1000000;
    const auto f = fkt_bounds(m, n, a, b, i % 2 ? LogBase::base2 : LogBase::natural);
    const Interval eight = Interval(8L) * f.t0;
    CHECK(mpfr_equal_p(eight.lo(), f.t.lo()));
    CHECK(mpfr_equal_p(eight.hi(), f.t.hi()));
  }
  const auto sym = fkt_bounds(100, 100, 10, 10);
  const Interval l = log_big(100);
  CHECK(certainly_le(sym.t0, Interval(256L) * l * l * Interval(100L) / Interval(100L) + Interval(1e-9)));
  CHECK(sym.density_coefficient == Rational(100, 25600));
  CHECK_FALSE(sym.hypothesis_ok);
  CHECK(fkt_bounds(1, 2, BigInt(1) << 40, 1).hypothesis_ok);
  CHECK_THROWS(fkt_bounds(1, 1, 1, 1));
}

}  // TEST_SUITE
