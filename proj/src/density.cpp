#include "ramsey_forge/density.hpp"

#include "ramsey_forge/rng.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rf {

namespace {

using Wide = __int128;

struct ScaledAlpha {
  Wide num;
  Wide den;
};

ScaledAlpha scale(const Rational& alpha) {
  const BigInt num = boost::multiprecision::numerator(alpha);
  const BigInt den = boost::multiprecision::denominator(alpha);
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max());
  if (abs(num) > limit || den > limit)
    throw std::invalid_argument("alpha numerator/denominator exceed 64 bits");
  return {static_cast<Wide>(num.convert_to<std::int64_t>()),
          static_cast<Wide>(den.convert_to<std::int64_t>())};
}

// Scaled margin den * (2e - alpha x^2).
Wide scaled_margin(const ScaledAlpha& a, std::uint64_t edges, std::uint64_t size) {
  return 2 * static_cast<Wide>(edges) * a.den - a.num * static_cast<Wide>(size * size);
}

struct Best {
  Wide margin = 0;
  std::uint64_t key = std::numeric_limits<std::uint64_t>::max();  // mask or trial
  std::uint64_t edges = 0;
  bool any = false;

  void offer(Wide m, std::uint64_t k, std::uint64_t e) {
    if (!any || m < margin || (m == margin && k < key)) {
      margin = m;
      key = k;
      edges = e;
      any = true;
    }
  }
  void merge(const Best& o) {
    if (o.any) offer(o.margin, o.key, o.edges);
  }
};

DensityVerdict vacuous_verdict() {
  DensityVerdict v;
  v.pass = true;
  v.vacuous = true;
  return v;
}

DensityVerdict finish(const Best& best, const ScaledAlpha& a, std::uint64_t checked,
                      std::vector<Vertex> witness, bool sampled) {
  DensityVerdict v;
  v.subsets_checked = checked;
  v.pass = !best.any || best.margin >= 0;
  v.conclusive = !(sampled && v.pass);
  v.witness = std::move(witness);
  v.witness_edges = best.edges;
  if (best.any) {
    const auto m = static_cast<long long>(best.margin);
    v.witness_margin = Rational(BigInt(m), BigInt(static_cast<long long>(a.den)));
  }
  return v;
}

void check_common(const Graph& g, std::size_t R, DensityMode mode, std::size_t exact_limit) {
  if (mode.kind == DensityMode::Kind::exact && g.order() > exact_limit)
    throw std::invalid_argument("exact density check supports at most " +
                                std::to_string(exact_limit) + " vertices");
  if (R == 0) throw std::invalid_argument("R must be at least 1");
}

// Sizes k in [R, n] weighted by C(n, k), as a cumulative distribution.
std::vector<double> size_cdf(std::size_t n, std::size_t R) {
  std::vector<double> logw;
  for (std::size_t k = R; k <= n; ++k)
    logw.push_back(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
  const double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> cdf(logw.size());
  double acc = 0;
  for (std::size_t i = 0; i < logw.size(); ++i) {
    acc += std::exp(logw[i] - top);
    cdf[i] = acc;
  }
  for (auto& c : cdf) c /= acc;
  return cdf;
}

// Uniform subset among those of size >= R, as a sorted vertex list.
std::vector<Vertex> random_subset(std::size_t n, std::size_t R, const std::vector<double>& cdf,
                                  CounterRng& rng) {
  const double u = rng.uniform();
  std::size_t idx = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
  idx = std::min(idx, cdf.size() - 1);
  const std::size_t k = R + idx;
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + rng.below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::uint64_t induced_edges(const Graph& g, const std::vector<Vertex>& xs) {
  std::vector<std::uint64_t> in(g.words(), 0);
  for (auto v : xs) in[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::uint64_t twice = 0;
  for (auto v : xs) {
    const auto row = g.row(v);
    for (std::size_t w = 0; w < row.size(); ++w) twice += std::popcount(row[w] & in[w]);
  }
  return twice / 2;
}

}  // namespace

DensityVerdict local_density_check(const Graph& g, std::size_t R, const Rational& alpha,
                                   DensityMode mode, std::size_t exact_limit) {
  check_common(g, R, mode, exact_limit);
  if (R > g.order()) return vacuous_verdict();
  const ScaledAlpha a = scale(alpha);
  const std::size_t n = g.order();

  if (mode.kind == DensityMode::Kind::exact) {
    const std::uint64_t total = std::uint64_t{1} << n;
    Best best;
    std::uint64_t checked = 0;
#pragma omp parallel
    {
      Best local;
      std::uint64_t local_checked = 0;
#pragma omp for schedule(static)
      for (std::uint64_t s = 0; s < total; ++s) {
        const auto size = static_cast<std::uint64_t>(std::popcount(s));
        if (size < R) continue;
        std::uint64_t twice = 0;
        for (Mask r = s; r; r &= r - 1)
          twice += std::popcount(g.row64(static_cast<Vertex>(std::countr_zero(r))) & s);
        ++local_checked;
        local.offer(scaled_margin(a, twice / 2, size), s, twice / 2);
      }
#pragma omp critical
      {
        best.merge(local);
        checked += local_checked;
      }
    }
    return finish(best, a, checked, mask_to_vertices(best.key), false);
  }

  const auto cdf = size_cdf(n, R);
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static)
    for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
      CounterRng rng(mode.seed, trial);
      const auto xs = random_subset(n, R, cdf, rng);
      const auto e = induced_edges(g, xs);
      local.offer(scaled_margin(a, e, xs.size()), trial, e);
    }
#pragma omp critical
    best.merge(local);
  }
  std::vector<Vertex> witness;
  if (best.any) {
    CounterRng rng(mode.seed, best.key);
    witness = random_subset(n, R, cdf, rng);
  }
  return finish(best, a, mode.trials, std::move(witness), true);
}

DensityVerdict local_density_check_serial(const Graph& g, std::size_t R, const Rational& alpha,
                                          DensityMode mode, std::size_t exact_limit) {
  check_common(g, R, mode, exact_limit);
  if (R > g.order()) return vacuous_verdict();
  const ScaledAlpha a = scale(alpha);
  const std::size_t n = g.order();
  Best best;
  std::uint64_t checked = 0;

  if (mode.kind == DensityMode::Kind::exact) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      const auto xs = mask_to_vertices(s);
      if (xs.size() < R) continue;
      std::uint64_t e = 0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) e += g.adjacent(xs[i], xs[j]);
      ++checked;
      best.offer(scaled_margin(a, e, xs.size()), s, e);
    }
    return finish(best, a, checked, mask_to_vertices(best.key), false);
  }

  const auto cdf = size_cdf(n, R);
  std::vector<Vertex> witness;
  for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
    CounterRng rng(mode.seed, trial);
    auto xs = random_subset(n, R, cdf, rng);
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) e += g.adjacent(xs[i], xs[j]);
    const auto before = best.key;
    best.offer(scaled_margin(a, e, xs.size()), trial, e);
    if (best.key != before) witness = std::move(xs);
  }
  return finish(best, a, mode.trials, std::move(witness), true);
}

}  // namespace rf
