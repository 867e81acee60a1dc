#include "ramsey_forge/graph.hpp"

#include <bit>
#include <stdexcept>

namespace rf {

Graph::Graph(std::size_t n, std::string label)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0), label_(std::move(label)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string label) {
  Graph g(n, std::move(label));
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : rows_) twice += std::popcount(w);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.push_back({u, v});
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  rows_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

Graph Graph::complement() const {
  Graph c(n_, label_.empty() ? std::string{} : "co-" + label_);
  for (Vertex u = 0; u < n_; ++u) {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = ~rows_[u * words_ + w];
      const std::size_t base = w * 64;
      if (base + 64 > n_) bits &= (n_ - base == 64) ? ~std::uint64_t{0}
                                                     : ((std::uint64_t{1} << (n_ - base)) - 1);
      if (u / 64 == w) bits &= ~(std::uint64_t{1} << (u & 63));
      c.rows_[u * words_ + w] = bits;
    }
  }
  return c;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph s(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        s.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return s;
}

void Graph::require_exact(const char* what) const {
  if (n_ > kMaxExactVertices)
    throw std::invalid_argument(std::string(what) + ": graph has " + std::to_string(n_) +
                                " vertices, exact operations support at most 64");
}

Graph complete_graph(std::size_t n) {
  Graph g(n, "K" + std::to_string(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n, "empty" + std::to_string(n)); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n, "C" + std::to_string(n));
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n, "P" + std::to_string(n));
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask vertices_to_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (auto v : vs) m |= Mask{1} << v;
  return m;
}

}  // namespace rf
