#include "oracles.hpp"

#include "ramsey_forge/cliques.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/host.hpp"
#include "ramsey_forge/subgraph.hpp"

#include <doctest.h>

#include <cmath>

using namespace rf;

namespace {

// Exhaustive density predicate, written independently of the library sweep.
bool naive_density(const Graph& g, std::size_t R, const Rational& alpha) {
  const std::size_t n = g.order();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto vs = oracle::subset(m);
    if (vs.size() < R) continue;
    const Rational lhs = 2 * static_cast<long>(oracle::induced_edges(g, vs));
    if (lhs < alpha * static_cast<long>(vs.size() * vs.size())) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("host-lab") {

TEST_CASE("built-in hosts") {
  const Graph c5 = builtin_host("c5");
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(is_clique_free(c5, 3).free);
  const Graph k = builtin_host("kneser(5,2)");
  CHECK(k.order() == 10);
  CHECK(k.edge_count() == 15);
  CHECK(girth(k) == 5);
  for (Vertex v = 0; v < 10; ++v) CHECK(k.degree(v) == 3);
  CHECK(isomorphic(k, petersen_graph()));
  CHECK(isomorphic(builtin_host("mycielski(2)"), cycle_graph(5)));
  CHECK(builtin_host("mycielski(1)") == complete_graph(2));
  const Graph grotzsch = builtin_host("mycielski(3)");
  CHECK(grotzsch.order() == 11);
  CHECK(grotzsch.edge_count() == 20);
  CHECK(is_clique_free(grotzsch, 3).free);
  CHECK(builtin_host("K6") == complete_graph(6));
  CHECK(builtin_host("empty(4)").edge_count() == 0);
  CHECK_THROWS(builtin_host("kneser(3,2)"));
  CHECK_THROWS(builtin_host("nonsense"));
}

TEST_CASE("local density examples") {
  const auto k6 = local_density_check(complete_graph(6), 2, Rational(1, 4), DensityMode::exact());
  CHECK(k6.pass);
  CHECK(k6.conclusive);
  const auto e5 = local_density_check(empty_graph(5), 2, Rational(1, 4), DensityMode::exact());
  CHECK_FALSE(e5.pass);
  CHECK(e5.witness.size() >= 2);
  CHECK(e5.witness_edges == 0);
  CHECK(e5.witness_margin < 0);
  const auto c5 = local_density_check(cycle_graph(5), 6, Rational(1), DensityMode::exact());
  CHECK(c5.pass);
  CHECK(c5.vacuous);
}

TEST_CASE("exact density sweep matches the naive predicate") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const Graph g = oracle::random_graph(n, 0.5, seed);
    const std::size_t R = 1 + seed % n;
    const Rational alpha(1 + seed % 5, 8);
    const auto v = local_density_check(g, R, alpha, DensityMode::exact());
    CHECK(v.pass == naive_density(g, R, alpha));
    CHECK(local_density_check_serial(g, R, alpha, DensityMode::exact()).witness == v.witness);
  }
}

TEST_CASE("sampled density") {
  const auto s = local_density_check(complete_graph(30), 5, Rational(1, 2), DensityMode::sampled(2000, 9));
  CHECK(s.pass);
  CHECK_FALSE(s.conclusive);
  const auto f = local_density_check(empty_graph(30), 5, Rational(1, 2), DensityMode::sampled(50, 9));
  CHECK_FALSE(f.pass);
  CHECK(f.conclusive);
  CHECK_THROWS(local_density_check(complete_graph(30), 5, Rational(1, 2), DensityMode::exact()));
}

TEST_CASE("host certificates") {
  const auto c5 = certify_host(cycle_graph(5), 3, 6, Rational(1), DensityMode::exact());
  CHECK(c5.clique_free);
  CHECK(c5.density == DensityStatus::vacuous);
  const auto k6 = certify_host(complete_graph(6), 4, 2, Rational(1, 8), DensityMode::exact());
  CHECK_FALSE(k6.clique_free);
  CHECK(k6.density == DensityStatus::exact_pass);
  const auto p = certify_host(petersen_graph(), 3, 11, Rational(1), DensityMode::exact());
  CHECK(p.clique_free);
  CHECK(p.density == DensityStatus::vacuous);
  CHECK_THROWS(certify_host(petersen_graph(), 3, 2, Rational(0), DensityMode::exact()));
  CHECK_THROWS(certify_host(petersen_graph(), 3, 0, Rational(1), DensityMode::exact()));
}

TEST_CASE("independent-set bound examples") {
  const auto a = prop4_bound(10, 8, 2, Rational(1, 4), 8);
  REQUIRE(a.exact);
  CHECK(*a.exact == 45);
  CHECK(a.decay_hypothesis == Tri::yes);
  const auto b = prop4_bound(5, 1, 5, Rational(1), 1);
  CHECK(*b.exact == 5);
  const auto z = prop4_bound(10, 1, 2, Rational(1, 4), 5);
  CHECK(z.zero_bound);
  CHECK(*z.exact == 0);
  CHECK_THROWS(prop4_bound(10, 3, 2, Rational(1, 4), 2));
  const auto big = mv_params_at(Variant::r4t, 40);
  const auto rep = prop4_bound(big.n, big.r, big.R, big.alpha, big.t);
  CHECK_FALSE(rep.exact);
  CHECK(rep.log_bound.is_finite());
  CHECK(rep.decay_hypothesis == Tri::yes);
}

TEST_CASE("construction parameters") {
  // t at the left end of the q = 2^40 interval.
  const auto p = mv_params_at(Variant::r4t, 40);
  CHECK(p.q == BigInt(1) << 40);
  CHECK(p.n == p.q * p.q * (p.q * p.q - p.q + 1));
  CHECK(p.R == (BigInt(1) << 24) * p.q * p.q);
  CHECK(p.alpha == Rational(1, BigInt(256) * p.q));
  CHECK_NOTHROW(p.validate());
  const auto again = mv_params(Variant::r4t, p.t);
  CHECK(again.q_exponent == 40);
  CHECK(again.t == p.t);
  CHECK_THROWS_WITH(mv_params(Variant::r4t, 100), doctest::Contains("below construction range"));
  const auto r3 = mv_params_at(Variant::r3t, 40);
  CHECK(r3.n == pow_big(r3.q, 3) + r3.q * r3.q + r3.q + 1);
  CHECK(mv_params(Variant::r3t, r3.t).q_exponent == 40);
  // Larger t lands on a larger q.
  CHECK(mv_params(Variant::r4t, mv_params_at(Variant::r4t, 45).t).q_exponent == 45);
  const auto sub = mv_params_at(Variant::r4t, 10);
  CHECK_FALSE(sub.notes.empty());
  CHECK_THROWS(sub.validate());
}

TEST_CASE("adjacent t-intervals abut") {
  for (auto v : {Variant::r4t, Variant::r3t})
    for (unsigned k = 40; k < 140; ++k) {
      const auto a = t_interval(v, k, Rational(1), LogBase::natural);
      const auto b = t_interval(v, k + 1, Rational(1), LogBase::natural);
      CHECK(possibly_le(b.lower, a.upper));
      CHECK(certainly_lt(a.lower, a.upper));
    }
}

}  // TEST_SUITE
