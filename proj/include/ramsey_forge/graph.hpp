#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rf {

using Vertex = std::uint32_t;
using Mask = std::uint64_t;

// Vertex count at which operations with exponential cost refuse to run.
inline constexpr std::size_t kMaxExactVertices = 64;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph stored as symmetric adjacency bit rows.
///
/// Each row holds `words()` 64-bit words; bit j of row i is set iff {i, j} is
/// an edge. The diagonal is always zero. Graphs are immutable once built and
/// safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::string label = {});

  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::string label = {});

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + v * words_, words_};
  }
  // Single-word row; requires order() <= 64.
  Mask row64(Vertex v) const { return words_ ? rows_[v * words_] : 0; }
  // Mask of all vertices; requires order() <= 64.
  Mask all64() const {
    return n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
  }

  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  Graph complement() const;
  Graph induced(std::span<const Vertex> vertices) const;

  // Throws std::invalid_argument if order() exceeds kMaxExactVertices.
  void require_exact(const char* what) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::string label_;
};

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

std::vector<Vertex> mask_to_vertices(Mask m);
Mask vertices_to_mask(std::span<const Vertex> vs);

}  // namespace rf
