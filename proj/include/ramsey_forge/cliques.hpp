#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rf {

// Counts cliques of every size: result[k] is the number of k-vertex cliques,
// with result[0] = 1. Pivot-based clique-tree enumeration over bit rows, so
// the cost tracks the number of maximal-ish branches rather than the number of
// cliques. The parallel version splits the root branches across threads; the
// sums are integers, so the result does not depend on scheduling.
std::vector<std::uint64_t> clique_profile(const Graph& g);
std::vector<std::uint64_t> clique_profile_serial(const Graph& g);

BigInt count_cliques(const Graph& g, std::size_t k);

struct IndependenceProfile {
  std::vector<BigInt> counts;  // counts[i] = independent sets of size i

  BigInt total() const;
  std::size_t independence_number() const;
  const BigInt& operator[](std::size_t i) const { return counts[i]; }
  std::size_t size() const { return counts.size(); }
};

inline constexpr std::size_t kDefaultProfileLimit = 40;

// Throws std::invalid_argument ("too large for exact profile") when
// g.order() > limit.
IndependenceProfile independence_profile(const Graph& g,
                                         std::size_t limit = kDefaultProfileLimit);
IndependenceProfile independence_profile_serial(
    const Graph& g, std::size_t limit = kDefaultProfileLimit);

// Finds a k-clique inside the vertex set `within`, or nullopt.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k,
                                               Mask within);
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k);

struct CliqueFreeness {
  bool free = true;
  std::vector<Vertex> witness;  // a k-clique when !free
};

// Requires k >= 2.
CliqueFreeness is_clique_free(const Graph& g, std::size_t k);

// nullopt means infinite girth (a forest).
std::optional<std::size_t> girth(const Graph& g);

inline constexpr std::size_t kDefaultTwoDensityLimit = 20;

// max (e(G')-1)/(|G'|-2) over connected subgraphs with at least 3 vertices.
// Throws std::domain_error when no such subgraph exists (including n < 3).
Rational two_density(const Graph& g,
                     std::size_t limit = kDefaultTwoDensityLimit);

}  // namespace rf
