#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rf {

inline constexpr std::uint64_t kDefaultArrowBudget = 1'000'000'000ull;

/// Verdict of an arrowing search. `witness` holds the red edges of a coloring
/// with no red target-1 and no blue target-2; it is present exactly when the
/// search completed with arrows == false. When `budget_exhausted` is set the
/// search makes no claim.
struct ArrowVerdict {
  bool arrows = false;
  bool budget_exhausted = false;
  std::optional<std::vector<Edge>> witness;
  std::uint64_t nodes = 0;
};

// Does every red/blue coloring of g contain a red K_{t1} or a blue K_{t2}?
// Requires t1, t2 >= 1 and g.order() <= 64.
ArrowVerdict arrows_clique(const Graph& g, std::size_t t1, std::size_t t2,
                           std::uint64_t budget = kDefaultArrowBudget);
ArrowVerdict arrows_clique_serial(const Graph& g, std::size_t t1, std::size_t t2,
                                  std::uint64_t budget = kDefaultArrowBudget);

// Same question with arbitrary targets (subgraph containment).
ArrowVerdict arrows_general(const Graph& g, const Graph& h1, const Graph& h2,
                            std::uint64_t budget = kDefaultArrowBudget);

// True iff the red/blue split of g's edges avoids a red h1 and a blue h2.
bool coloring_avoids(const Graph& g, const std::vector<Edge>& red, const Graph& h1,
                     const Graph& h2);

// C(known_r, s): K_{known_r} is (t1,t2)-Ramsey when known_r = r(t1,t2).
BigInt chvatal_upper_bound(std::size_t t1, std::size_t t2, std::size_t s,
                           std::size_t known_r);

}  // namespace rf
