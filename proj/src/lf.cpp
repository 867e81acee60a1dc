#include "ramsey_forge/lf.hpp"

#include "ramsey_forge/graph_io.hpp"
#include "ramsey_forge/subgraph.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rf {

BipartiteGraph::BipartiteGraph(std::size_t m, std::size_t n)
    : m_(m), n_(n), adj_(m, std::vector<bool>(n, false)) {}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right) {
  if (left >= m_ || right >= n_) throw std::out_of_range("bipartite vertex out of range");
  adj_[left][right] = true;
}

bool BipartiteGraph::adjacent(std::size_t left, std::size_t right) const {
  return adj_.at(left).at(right);
}

std::size_t BipartiteGraph::left_degree(std::size_t left) const {
  const auto& row = adj_.at(left);
  return static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
}

std::size_t BipartiteGraph::right_degree(std::size_t right) const {
  std::size_t d = 0;
  for (const auto& row : adj_) d += row.at(right);
  return d;
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < m_; ++i) e += left_degree(i);
  return e;
}

Graph BipartiteGraph::to_graph() const {
  Graph g(m_ + n_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (adj_[i][j]) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(m_ + j));
  return g;
}

namespace {

bool bipartite_edge_set(const std::vector<Edge>& edges, const std::vector<std::size_t>& part,
                        std::size_t n) {
  // Parity union-find.
  std::vector<std::size_t> parent(n);
  std::vector<int> parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    int p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return std::pair{v, p};
  };
  for (auto e : part) {
    auto [ru, pu] = find(edges[e].u);
    auto [rv, pv] = find(edges[e].v);
    if (ru == rv) {
      if (pu == pv) return false;
      continue;
    }
    parent[ru] = rv;
    parity[ru] = pu ^ pv ^ 1;
  }
  return true;
}

class Enumerator {
 public:
  explicit Enumerator(const Graph& f) : f_(f), edges_(f.edges()) {
    if (edges_.size() > kMaxDecompositionEdges)
      throw std::invalid_argument("graph has too many edges to enumerate decompositions");
    f.require_exact("enumerate_decompositions");
  }

  std::size_t edge_count() const { return edges_.size(); }

  // Restricted growth strings of length `depth` whose blocks satisfy the
  // (monotone) part conditions.
  void prefixes(std::size_t depth, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> rgs;
    walk(rgs, depth, [&](const std::vector<std::size_t>& p) { out.push_back(p); });
  }

  void complete(std::vector<std::size_t> rgs, std::vector<EdgeDecomposition>& out) {
    walk(rgs, edges_.size(), [&](const std::vector<std::size_t>& p) { out.push_back(to_decomposition(p)); });
  }

 private:
  template <class Emit>
  void walk(std::vector<std::size_t>& rgs, std::size_t depth, Emit&& emit) {
    if (rgs.size() == depth) {
      emit(rgs);
      return;
    }
    const std::size_t blocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs.push_back(b);
      if (feasible(rgs)) walk(rgs, depth, emit);
      rgs.pop_back();
    }
  }

  // Checks only the block that received the newest edge.
  bool feasible(const std::vector<std::size_t>& rgs) const {
    const std::size_t b = rgs.back();
    std::vector<std::size_t> part;
    std::map<std::size_t, Mask> others;
    Mask mine = 0;
    for (std::size_t e = 0; e < rgs.size(); ++e) {
      const Mask m = (Mask{1} << edges_[e].u) | (Mask{1} << edges_[e].v);
      if (rgs[e] == b) {
        part.push_back(e);
        mine |= m;
      } else {
        others[rgs[e]] |= m;
      }
    }
    for (const auto& [c, m] : others)
      if (std::popcount(m & mine) > 1) return false;
    return bipartite_edge_set(edges_, part, f_.order());
  }

  EdgeDecomposition to_decomposition(const std::vector<std::size_t>& rgs) const {
    EdgeDecomposition d;
    for (std::size_t e = 0; e < rgs.size(); ++e) {
      if (rgs[e] >= d.parts.size()) d.parts.resize(rgs[e] + 1);
      d.parts[rgs[e]].push_back(e);
    }
    return d;
  }

  const Graph& f_;
  std::vector<Edge> edges_;
};

}  // namespace

std::vector<EdgeDecomposition> enumerate_decompositions_serial(const Graph& f) {
  Enumerator en(f);
  std::vector<EdgeDecomposition> out;
  en.complete({}, out);
  return out;
}

std::vector<EdgeDecomposition> enumerate_decompositions(const Graph& f) {
  Enumerator en(f);
  std::vector<std::vector<std::size_t>> tasks;
  en.prefixes(std::min<std::size_t>(4, en.edge_count()), tasks);
  std::vector<std::vector<EdgeDecomposition>> chunks(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < tasks.size(); ++i) en.complete(tasks[i], chunks[i]);
  std::vector<EdgeDecomposition> out;
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(out));
  return out;
}

bool is_valid_decomposition(const Graph& f, const EdgeDecomposition& d) {
  const auto edges = f.edges();
  std::vector<int> seen(edges.size(), 0);
  std::vector<std::vector<bool>> touches;
  for (const auto& part : d.parts) {
    if (part.empty()) return false;
    std::vector<bool> vs(f.order(), false);
    for (auto e : part) {
      if (e >= edges.size() || seen[e]++) return false;
      vs[edges[e].u] = vs[edges[e].v] = true;
    }
    // BFS 2-colouring of the part.
    std::vector<int> side(f.order(), -1);
    for (Vertex s = 0; s < f.order(); ++s) {
      if (!vs[s] || side[s] >= 0) continue;
      side[s] = 0;
      std::vector<Vertex> queue{s};
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const Vertex x = queue[h];
        for (auto e : part) {
          Vertex y;
          if (edges[e].u == x) y = edges[e].v;
          else if (edges[e].v == x) y = edges[e].u;
          else continue;
          if (side[y] < 0) {
            side[y] = 1 - side[x];
            queue.push_back(y);
          } else if (side[y] == side[x]) {
            return false;
          }
        }
      }
    }
    touches.push_back(std::move(vs));
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  for (std::size_t i = 0; i < touches.size(); ++i)
    for (std::size_t j = i + 1; j < touches.size(); ++j) {
      std::size_t shared = 0;
      for (std::size_t v = 0; v < f.order(); ++v) shared += touches[i][v] && touches[j][v];
      if (shared > 1) return false;
    }
  return true;
}

BipartiteGraph build_J(const Graph& f, const EdgeDecomposition& d) {
  const auto edges = f.edges();
  BipartiteGraph j(d.parts.size(), f.order());
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (auto e : d.parts[i]) {
      j.add_edge(i, edges.at(e).u);
      j.add_edge(i, edges.at(e).v);
    }
  return j;
}

std::vector<Graph> build_L(const Graph& f) {
  const auto decs = enumerate_decompositions(f);
  std::vector<std::string> codes(decs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < decs.size(); ++i)
    codes[i] = canonical_code(build_J(f, decs[i]).to_graph());
  codes.push_back(canonical_code(cycle_graph(4)));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(from_graph6(c));
  return out;
}

bool is_biregular(const BipartiteGraph& b, std::size_t a, std::size_t bb) {
  for (std::size_t j = 0; j < b.right_size(); ++j)
    if (b.right_degree(j) != a) return false;
  for (std::size_t i = 0; i < b.left_size(); ++i)
    if (b.left_degree(i) != bb) return false;
  return true;
}

FamilyFreeness is_family_free(const BipartiteGraph& b, const std::vector<Graph>& family) {
  const Graph host = b.to_graph();
  for (std::size_t i = 0; i < family.size(); ++i)
    if (auto m = find_subgraph(host, family[i])) return {false, i, *m};
  return {};
}

BipartiteGraph fano_incidence() {
  BipartiteGraph b(7, 7);
  for (std::size_t line = 0; line < 7; ++line)
    for (std::size_t off : {0, 1, 3}) b.add_edge((line + off) % 7, line);
  return b;
}

FktBounds fkt_bounds(const BigInt& m, const BigInt& n, const BigInt& a, const BigInt& b,
                     LogBase base) {
  if (n < 2) throw std::invalid_argument("fkt bounds need n >= 2");
  if (a < 1 || b < 1 || m < 1) throw std::invalid_argument("fkt bounds need m, a, b >= 1");
  FktBounds out;
  out.log_n = log_in_base(n, base);
  const Interval l2 = out.log_n * out.log_n;
  const Interval ab(BigInt(a * b));
  // Same operation order for t0 and t so that t = 8 t0 exactly.
  out.t0 = Interval(BigInt(n * 256)) * l2 / ab;
  out.t = Interval(BigInt(n * 2048)) * l2 / ab;
  out.g = Interval(b) * out.t0 / out.log_n;
  out.hypothesis_lhs = Interval(4096L) * l2 * out.log_n;
  out.hypothesis_ok = certainly_le(out.hypothesis_lhs, Interval(a));
  out.subset_threshold = Interval(BigInt(m * 1024)) * out.log_n / Interval(a);
  out.density_coefficient = Rational(a * a, m * 256);
  return out;
}

}  // namespace rf
