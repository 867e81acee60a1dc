#include "ramsey_forge/coloring.hpp"

#include "ramsey_forge/cliques.hpp"
#include "ramsey_forge/rng.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rf {

namespace {

constexpr std::size_t kExplicitTerms = 64;
constexpr std::uint64_t kAttemptBlock = 1024;

Interval neg_inf() { return log(Interval(0L)); }

// log of a sum of positive terms f(lo..hi) whose consecutive ratios
// f(i+1)/f(i) are at least exp(log_ratio) > 1 throughout. The top terms are
// summed explicitly and the rest bounded by a geometric series.
template <typename Term>
Interval geometric_top_sum(const BigInt& lo, const BigInt& hi, const Interval& log_ratio,
                           Term&& term) {
  if (hi < lo) return neg_inf();
  Interval explicit_sum = term(hi);
  BigInt i = hi - 1;
  std::size_t taken = 1;
  for (; i >= lo && taken < kExplicitTerms; --i, ++taken) explicit_sum = log_add(explicit_sum, term(i));
  if (i < lo) return explicit_sum;
  if (mpfr_sgn(log_ratio.lo()) <= 0)
    throw std::domain_error("sum is not geometrically dominated by its top terms");
  // Tail: sum_{j>=1} f(i+1) r^{-j} = f(i+1) / (r - 1).
  const Interval log_r_minus_1 = log_ratio + log1m_exp(-log_ratio);
  const Interval tail = term(i + 1) - log_r_minus_1;
  return Interval::hull(explicit_sum, log_add(explicit_sum, tail));
}

Rational check_cap(std::size_t t, std::size_t cap) {
  if (t == 0) throw std::invalid_argument("rho_exact needs t >= 1");
  if (t > cap) throw std::invalid_argument("t exceeds the configured cap of " + std::to_string(cap));
  return 0;
}

}  // namespace

std::vector<Vertex> sample_map(std::size_t g_order, std::size_t h_order, std::uint64_t seed,
                               std::uint64_t stream) {
  if (h_order == 0) throw std::invalid_argument("host graph has no vertices");
  CounterRng rng(seed, stream);
  std::vector<Vertex> pi(g_order);
  for (auto& p : pi) p = static_cast<Vertex>(rng.below(h_order));
  return pi;
}

ColoringSample coloring_from_map(const Graph& g, const Graph& h, std::vector<Vertex> pi) {
  if (pi.size() != g.order()) throw std::invalid_argument("map size does not match G");
  ColoringSample s;
  s.red = Graph(g.order());
  s.blue = Graph(g.order());
  for (const auto& e : g.edges()) {
    if (h.adjacent(pi[e.u], pi[e.v])) s.red.add_edge(e.u, e.v);
    else s.blue.add_edge(e.u, e.v);
  }
  s.pi = std::move(pi);
  return s;
}

ColoringSample sample_coloring(const Graph& g, const Graph& h, std::uint64_t seed,
                               std::uint64_t stream) {
  auto s = coloring_from_map(g, h, sample_map(g.order(), h.order(), seed, stream));
  s.seed = seed;
  s.stream = stream;
  return s;
}

MonoScan mono_clique_scan(const ColoringSample& sample, std::size_t t1, std::size_t t2) {
  MonoScan scan;
  scan.red_witness = find_clique(sample.red, t1);
  scan.blue_witness = find_clique(sample.blue, t2);
  return scan;
}

Rational rho_exact(const Graph& h, std::size_t t, std::size_t t_cap, std::size_t profile_limit) {
  check_cap(t, t_cap);
  if (h.order() == 0) throw std::invalid_argument("host graph has no vertices");
  const auto profile = independence_profile(h, profile_limit);
  BigInt favourable = 0;
  const std::size_t top = std::min(t, profile.size() - 1);
  for (std::size_t i = 1; i <= top; ++i)
    if (profile[i] != 0)
      favourable += profile[i] * surjections(static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(i));
  return Rational(favourable, pow_big(BigInt(h.order()), t));
}

RhoBoundReport rho_analytic_bound(const MVParams& params) {
  const BigInt& t = params.t;
  if (t < 8) throw std::invalid_argument("rho bound needs t >= 8");
  RhoBoundReport rep;
  rep.t = t;
  rep.split = t / 8;
  // C(n, i) vanishes for i > n, so the first sum stops at min(t/8, n).
  const BigInt m = rep.split < params.n ? rep.split : params.n;

  const Interval log_n = log_big(params.n);
  const Interval log_t = log_big(t);
  const Interval tt(t);
  const Interval lq = log_in_base(params.q, params.log_base);
  const Interval log_beta = log_big(params.q) - Interval(2L) * log(lq);  // log(q / log^2 q)

  auto first_term = [&](const BigInt& i) {
    return log_binomial(params.n, i) + tt * (log_big(i) - log_n);
  };
  auto second_term = [&](const BigInt& i) {
    return Interval(i) * log_beta + tt * (log_big(i) - log_n);
  };

  // Ratios first(i+1)/first(i) = (n-i)/(i+1) ((i+1)/i)^t decrease in i, so
  // the smallest is at i = m - 1; likewise for the second sum at i = t - 1.
  Interval first_ratio(0L);
  if (m >= 2)
    first_ratio = log_big(params.n - m + 1) - log_big(m) + tt * (log_big(m) - log_big(m - 1));
  const Interval second_ratio = log_beta + tt * (log_t - log_big(t - 1));

  rep.log_first_sum = geometric_top_sum(BigInt(1), m, first_ratio, first_term);
  rep.log_second_sum = geometric_top_sum(rep.split + 1, t, second_ratio, second_term);
  rep.log_two_sum = log_add(rep.log_first_sum, rep.log_second_sum);

  const Interval log2 = Interval::ln2();
  const Interval seven_eighths_t(Rational(t * 7, 8));
  rep.log_first_simplified = log2 - seven_eighths_t * log_n + tt * log_t;
  rep.log_second_simplified = log2 + tt * log_beta + tt * (log_t - log_n);
  rep.log_simplified = log_add(rep.log_first_simplified, rep.log_second_simplified);

  rep.steps.push_back(make_step("sum_{i<=t/8} C(n,i)(i/n)^t <= 2 n^{-(t-t/8)} t^t",
                                rep.log_first_sum, rep.log_first_simplified));
  rep.steps.push_back(make_step("sum_{i>t/8} (q/log^2 q)^i (i/n)^t <= 2 (q/log^2 q)^t (t/n)^t",
                                rep.log_second_sum, rep.log_second_simplified));
  rep.steps.push_back(make_step("two-sum bound <= simplified two-term bound", rep.log_two_sum,
                                rep.log_simplified));
  rep.steps.push_back(make_step("rho bound < 1", rep.log_two_sum, Interval(0L)));
  return rep;
}

BlueRate monte_carlo_blue_rate(const Graph& g, const Graph& h, std::size_t t,
                               std::uint64_t trials, std::uint64_t seed) {
  auto clique = find_clique(g, t);
  if (!clique) throw std::invalid_argument("G contains no K_" + std::to_string(t));
  if (h.order() == 0) throw std::invalid_argument("host graph has no vertices");
  const auto& k = *clique;
  std::uint64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const auto pi = sample_map(g.order(), h.order(), seed, trial);
    bool blue = true;
    for (std::size_t a = 0; a < k.size() && blue; ++a)
      for (std::size_t b = a + 1; b < k.size(); ++b)
        if (h.adjacent(pi[k[a]], pi[k[b]])) {
          blue = false;
          break;
        }
    hits += blue;
  }
  BlueRate r;
  r.hits = hits;
  r.trials = trials;
  r.clique = k;
  r.estimate = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
  r.std_error = trials ? std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(trials)) : 0.0;
  return r;
}

BlueRate monte_carlo_blue_rate_serial(const Graph& g, const Graph& h, std::size_t t,
                                      std::uint64_t trials, std::uint64_t seed) {
  auto clique = find_clique(g, t);
  if (!clique) throw std::invalid_argument("G contains no K_" + std::to_string(t));
  BlueRate r;
  r.clique = *clique;
  r.trials = trials;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const auto s = sample_coloring(g, h, seed, trial);
    bool blue = true;
    for (std::size_t a = 0; a < r.clique.size(); ++a)
      for (std::size_t b = a + 1; b < r.clique.size(); ++b)
        blue = blue && s.blue.adjacent(r.clique[a], r.clique[b]);
    r.hits += blue;
  }
  r.estimate = trials ? static_cast<double>(r.hits) / static_cast<double>(trials) : 0.0;
  r.std_error = trials ? std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(trials)) : 0.0;
  return r;
}

namespace {

void check_host_free(const Graph& h, std::size_t t1) {
  if (t1 < 2) throw std::invalid_argument("t1 must be at least 2");
  if (!is_clique_free(h, t1).free)
    throw std::invalid_argument("host is not K_" + std::to_string(t1) + "-free");
}

enum Outcome : std::uint8_t { kClean = 0, kBlue = 1, kRed = 2 };

std::uint8_t classify(const Graph& g, const Graph& h, std::size_t t1, std::size_t t2,
                      std::uint64_t seed, std::uint64_t attempt) {
  const auto s = sample_coloring(g, h, seed, attempt);
  const auto scan = mono_clique_scan(s, t1, t2);
  return static_cast<std::uint8_t>((scan.blue_witness ? kBlue : 0) | (scan.red_witness ? kRed : 0));
}

}  // namespace

GoodColoringResult find_good_coloring(const Graph& g, const Graph& h, std::size_t t1,
                                      std::size_t t2, std::uint64_t max_attempts,
                                      std::uint64_t seed) {
  check_host_free(h, t1);
  GoodColoringResult res;
  std::vector<std::uint8_t> outcome;
  for (std::uint64_t start = 0; start < max_attempts; start += kAttemptBlock) {
    const std::uint64_t len = std::min(kAttemptBlock, max_attempts - start);
    outcome.assign(len, 0);
#pragma omp parallel for schedule(static)
    for (std::uint64_t j = 0; j < len; ++j) outcome[j] = classify(g, h, t1, t2, seed, start + j);
    for (std::uint64_t j = 0; j < len; ++j) {
      ++res.attempts;
      if (outcome[j] == kClean) {
        res.sample = sample_coloring(g, h, seed, start + j);
        return res;
      }
      res.blue_hits += (outcome[j] & kBlue) != 0;
      res.red_hits += (outcome[j] & kRed) != 0;
    }
  }
  return res;
}

GoodColoringResult find_good_coloring_serial(const Graph& g, const Graph& h, std::size_t t1,
                                             std::size_t t2, std::uint64_t max_attempts,
                                             std::uint64_t seed) {
  check_host_free(h, t1);
  GoodColoringResult res;
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    ++res.attempts;
    auto s = sample_coloring(g, h, seed, attempt);
    const auto scan = mono_clique_scan(s, t1, t2);
    if (scan.clean()) {
      res.sample = std::move(s);
      return res;
    }
    res.blue_hits += scan.blue_witness.has_value();
    res.red_hits += scan.red_witness.has_value();
  }
  return res;
}

}  // namespace rf
