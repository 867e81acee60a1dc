#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rf {

inline constexpr std::size_t kDefaultExactDensityLimit = 24;

struct DensityMode {
  enum class Kind { exact, sampled } kind = Kind::exact;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static DensityMode exact() { return {}; }
  static DensityMode sampled(std::uint64_t trials, std::uint64_t seed) {
    return {Kind::sampled, trials, seed};
  }
};

/// Outcome of testing 2 e(g[X]) >= alpha |X|^2 over subsets |X| >= R.
///
/// `witness` is the tested X minimising 2e(X) - alpha|X|^2 (ties: smallest
/// vertex mask in exact mode, earliest trial in sampled mode). A sampled pass
/// is evidence only; `conclusive` is false for it.
struct DensityVerdict {
  bool pass = true;
  bool vacuous = false;     // R > n: no qualifying subset
  bool conclusive = true;
  std::uint64_t subsets_checked = 0;
  std::vector<Vertex> witness;
  std::uint64_t witness_edges = 0;
  Rational witness_margin;  // 2e(X) - alpha|X|^2 at the witness
};

DensityVerdict local_density_check(const Graph& g, std::size_t R,
                                   const Rational& alpha, DensityMode mode,
                                   std::size_t exact_limit = kDefaultExactDensityLimit);
DensityVerdict local_density_check_serial(const Graph& g, std::size_t R,
                                          const Rational& alpha, DensityMode mode,
                                          std::size_t exact_limit = kDefaultExactDensityLimit);

}  // namespace rf
