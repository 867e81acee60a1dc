#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/chain.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/host.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rf {

/// A vertex map pi: V(G) -> V(H) and the coloring it induces on E(G).
/// Edge uv is red iff pi(u)pi(v) is an edge of H; every other edge of G,
/// including those whose endpoints collide, is blue.
struct ColoringSample {
  std::vector<Vertex> pi;
  Graph red;
  Graph blue;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Uniform map from stream `stream` of `seed`. Throws if h is empty.
std::vector<Vertex> sample_map(std::size_t g_order, std::size_t h_order,
                               std::uint64_t seed, std::uint64_t stream);
ColoringSample coloring_from_map(const Graph& g, const Graph& h, std::vector<Vertex> pi);
ColoringSample sample_coloring(const Graph& g, const Graph& h, std::uint64_t seed,
                               std::uint64_t stream = 0);

struct MonoScan {
  std::optional<std::vector<Vertex>> red_witness;
  std::optional<std::vector<Vertex>> blue_witness;
  bool clean() const { return !red_witness && !blue_witness; }
};

MonoScan mono_clique_scan(const ColoringSample& sample, std::size_t t1, std::size_t t2);

inline constexpr std::size_t kDefaultRhoTCap = 256;

// Exact probability that a uniform map sends t labelled points onto an
// independent set of h: sum_i N_i(h) Surj(t, i) / n^t.
Rational rho_exact(const Graph& h, std::size_t t, std::size_t t_cap = kDefaultRhoTCap,
                   std::size_t profile_limit = 40);

/// Log-domain evaluation of the two-sum upper bound on rho used with the
/// construction parameters, and its simplified two-term form.
struct RhoBoundReport {
  BigInt t;
  BigInt split;     // floor(t/8): first sum runs i = 1..split
  Interval log_first_sum;
  Interval log_second_sum;
  Interval log_two_sum;      // log of the displayed bound
  Interval log_first_simplified;   // log 2 n^{-(t - t/8)} t^t
  Interval log_second_simplified;  // log 2 (q/log^2 q)^t (t/n)^t
  Interval log_simplified;
  std::vector<ChainStep> steps;
};

RhoBoundReport rho_analytic_bound(const MVParams& params);

struct BlueRate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  std::vector<Vertex> clique;  // the fixed K_t being tracked
};

// Throws std::invalid_argument if g has no K_t.
BlueRate monte_carlo_blue_rate(const Graph& g, const Graph& h, std::size_t t,
                               std::uint64_t trials, std::uint64_t seed);
BlueRate monte_carlo_blue_rate_serial(const Graph& g, const Graph& h, std::size_t t,
                                      std::uint64_t trials, std::uint64_t seed);

struct GoodColoringResult {
  std::optional<ColoringSample> sample;  // first clean attempt
  std::uint64_t attempts = 0;            // attempts examined
  std::uint64_t blue_hits = 0;           // attempts with a blue K_{t2}
  std::uint64_t red_hits = 0;            // always 0 for a K_{t1}-free host
  bool found() const { return sample.has_value(); }
  double blue_hit_rate() const {
    return attempts ? static_cast<double>(blue_hits) / static_cast<double>(attempts) : 0.0;
  }
};

// Attempt i uses stream i of `seed`, so the first success is the same for
// any thread count. Throws std::invalid_argument unless h is K_{t1}-free.
GoodColoringResult find_good_coloring(const Graph& g, const Graph& h, std::size_t t1,
                                      std::size_t t2, std::uint64_t max_attempts,
                                      std::uint64_t seed);
GoodColoringResult find_good_coloring_serial(const Graph& g, const Graph& h,
                                             std::size_t t1, std::size_t t2,
                                             std::uint64_t max_attempts,
                                             std::uint64_t seed);

}  // namespace rf
