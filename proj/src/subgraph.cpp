#include "ramsey_forge/subgraph.hpp"

#include "ramsey_forge/graph_io.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace rf {

namespace {

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {
    host.require_exact("subgraph search");
    if (pattern.order() > 64) throw std::invalid_argument("pattern too large");
    host_deg_.resize(host.order());
    for (Vertex v = 0; v < host.order(); ++v) host_deg_[v] = host.degree(v);
    image_.assign(pattern.order(), 0);
  }

  // Search with the given pattern vertices pinned to host vertices.
  std::optional<std::vector<Vertex>> run(const std::vector<std::pair<Vertex, Vertex>>& pinned) {
    const std::size_t p = pat_.order();
    if (p > host_.order()) return std::nullopt;
    std::vector<bool> placed(p, false);
    Mask used = 0;
    order_.clear();
    for (auto [pv, hv] : pinned) {
      if (pat_.degree(pv) > host_deg_[hv] || (used >> hv & 1)) return std::nullopt;
      image_[pv] = hv;
      placed[pv] = true;
      used |= Mask{1} << hv;
      order_.push_back(pv);
    }
    for (auto [a, ha] : pinned)
      for (auto [b, hb] : pinned)
        if (a < b && pat_.adjacent(a, b) && !host_.adjacent(ha, hb)) return std::nullopt;
    const std::size_t fixed = order_.size();
    // Greedy order: most already-placed neighbours, then highest degree.
    while (order_.size() < p) {
      Vertex best = 0;
      long best_key = -1;
      for (Vertex v = 0; v < p; ++v) {
        if (placed[v]) continue;
        long back = 0;
        for (auto w : order_) back += pat_.adjacent(v, w);
        const long key = back * 1024 + static_cast<long>(pat_.degree(v));
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    if (extend(fixed, used)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t pos, Mask used) {
    if (pos == order_.size()) return true;
    const Vertex pv = order_[pos];
    Mask cand = host_.all64() & ~used;
    for (std::size_t i = 0; i < pos; ++i)
      if (pat_.adjacent(pv, order_[i])) cand &= host_.row64(image_[order_[i]]);
    const std::size_t need = pat_.degree(pv);
    for (; cand; cand &= cand - 1) {
      const auto hv = static_cast<Vertex>(std::countr_zero(cand));
      if (host_deg_[hv] < need) continue;
      image_[pv] = hv;
      if (extend(pos + 1, used | (Mask{1} << hv))) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<std::size_t> host_deg_;
  std::vector<Vertex> image_;
  std::vector<Vertex> order_;
};

using Partition = std::vector<std::vector<Vertex>>;

// Equitable refinement: split cells by neighbour counts into each cell until
// stable. Cells are split in signature order, so the result depends only on
// the graph structure and the incoming cell order.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  std::vector<std::size_t> cell_of(g.order());
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (auto v : cells[c]) cell_of[v] = c;
    Partition next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::size_t>, std::vector<Vertex>> groups;
      for (auto v : cell) {
        std::vector<std::size_t> sig(cells.size(), 0);
        for (Vertex w = 0; w < g.order(); ++w)
          if (g.adjacent(v, w)) ++sig[cell_of[w]];
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    cells = std::move(next);
  }
}

std::string leaf_code(const Graph& g, const Partition& cells) {
  const std::size_t n = g.order();
  std::string code;
  code.reserve(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      code.push_back(g.adjacent(cells[i][0], cells[j][0]) ? '1' : '0');
  return code;
}

void search(const Graph& g, Partition cells, std::string& best, std::vector<Vertex>& best_order) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::string code = leaf_code(g, cells);
    if (best_order.empty() || code < best) {
      best = std::move(code);
      best_order.clear();
      for (const auto& c : cells) best_order.push_back(c[0]);
    }
    return;
  }
  const std::size_t at = static_cast<std::size_t>(target - cells.begin());
  for (auto v : cells[at]) {
    Partition child;
    child.reserve(cells.size() + 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != at) {
        child.push_back(cells[c]);
        continue;
      }
      child.push_back({v});
      std::vector<Vertex> rest;
      for (auto w : cells[c])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
    }
    search(g, std::move(child), best, best_order);
  }
}

}  // namespace

std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern) {
  Embedder e(host, pattern);
  return e.run({});
}

std::optional<std::vector<Vertex>> find_subgraph_through(const Graph& host, const Graph& pattern,
                                                         Vertex a, Vertex b) {
  if (!host.adjacent(a, b)) return std::nullopt;
  Embedder e(host, pattern);
  for (const auto& pe : pattern.edges()) {
    if (auto m = e.run({{pe.u, a}, {pe.v, b}})) return m;
    if (auto m = e.run({{pe.u, b}, {pe.v, a}})) return m;
  }
  return std::nullopt;
}

Graph canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return Graph(n);
  Partition cells(1);
  for (Vertex v = 0; v < n; ++v) cells[0].push_back(v);
  std::string best;
  std::vector<Vertex> order;
  search(g, std::move(cells), best, order);
  Graph out(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (g.adjacent(order[i], order[j])) out.add_edge(i, j);
  return out;
}

std::string canonical_code(const Graph& g) { return to_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

}  // namespace rf
