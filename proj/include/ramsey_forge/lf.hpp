#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/host.hpp"
#include "ramsey_forge/interval.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rf {

/// Partition of E(F) into parts, each spanning a bipartite edge-induced
/// subgraph, with every two parts sharing at most one vertex. Parts hold edge
/// indices into F.edges(), sorted, and parts are ordered by their least edge.
struct EdgeDecomposition {
  std::vector<std::vector<std::size_t>> parts;
  friend bool operator==(const EdgeDecomposition&, const EdgeDecomposition&) = default;
};

/// Bipartite graph with left part [m] and right part [n]; rows are left
/// vertices, bit j of row i set iff i ~ j.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t m, std::size_t n);

  std::size_t left_size() const { return m_; }
  std::size_t right_size() const { return n_; }
  void add_edge(std::size_t left, std::size_t right);
  bool adjacent(std::size_t left, std::size_t right) const;
  std::size_t left_degree(std::size_t left) const;
  std::size_t right_degree(std::size_t right) const;
  std::size_t edge_count() const;

  // Ordinary graph on m + n vertices, left side first.
  Graph to_graph() const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<bool>> adj_;
};

inline constexpr std::size_t kMaxDecompositionEdges = 12;

std::vector<EdgeDecomposition> enumerate_decompositions(const Graph& f);
std::vector<EdgeDecomposition> enumerate_decompositions_serial(const Graph& f);

// Checks the partition, bipartite and pairwise-intersection conditions.
bool is_valid_decomposition(const Graph& f, const EdgeDecomposition& d);

BipartiteGraph build_J(const Graph& f, const EdgeDecomposition& d);

// { J(H) : H in E(F) } together with C4, deduplicated up to isomorphism and
// sorted by canonical code. Members are in canonical form.
std::vector<Graph> build_L(const Graph& f);

bool is_biregular(const BipartiteGraph& b, std::size_t a, std::size_t bb);

struct FamilyFreeness {
  bool free = true;
  std::optional<std::size_t> member;      // index of the embedded member
  std::vector<Vertex> embedding;          // member vertex -> host vertex
};

FamilyFreeness is_family_free(const BipartiteGraph& b, const std::vector<Graph>& family);

// Point-line incidence graph of the Fano plane: 7 points (left), 7 lines.
BipartiteGraph fano_incidence();

struct FktBounds {
  Interval log_n;
  Interval t0;   // 2^8 n (log n)^2 / (ab)
  Interval t;    // 2^11 n (log n)^2 / (ab)
  Interval g;    // b t0 / log n
  Interval hypothesis_lhs;  // 2^12 (log n)^3, compared against a
  bool hypothesis_ok = false;  // a >= 2^12 (log n)^3, certified
  Interval subset_threshold;   // 2^10 m log n / a
  Rational density_coefficient;  // a^2 / (2^8 m)
};

// Requires n >= 2 and a, b >= 1.
FktBounds fkt_bounds(const BigInt& m, const BigInt& n, const BigInt& a, const BigInt& b,
                     LogBase base = LogBase::natural);

}  // namespace rf
