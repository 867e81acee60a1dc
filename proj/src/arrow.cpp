#include "ramsey_forge/arrow.hpp"

#include "ramsey_forge/cliques.hpp"
#include "ramsey_forge/subgraph.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace rf {

namespace {

constexpr int kUndecided = -1;
constexpr int kRed = 0;
constexpr int kBlue = 1;

bool has_clique(const std::array<Mask, 64>& rows, Mask within, std::size_t need) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(std::popcount(within)) < need) return false;
  while (within) {
    const int v = std::countr_zero(within);
    within &= within - 1;
    if (has_clique(rows, within & rows[v], need - 1)) return true;
    if (static_cast<std::size_t>(std::popcount(within)) < need) return false;
  }
  return false;
}

// Tests whether colouring an edge would complete a forbidden clique.
class CliqueChecker {
 public:
  CliqueChecker(std::size_t t1, std::size_t t2) : need_{t1 - 2, t2 - 2} {
    rows_[0].fill(0);
    rows_[1].fill(0);
  }
  bool can(Vertex u, Vertex v, int c) const {
    const auto& r = rows_[c];
    return !has_clique(r, r[u] & r[v], need_[c]);
  }
  void set(Vertex u, Vertex v, int c) {
    rows_[c][u] |= Mask{1} << v;
    rows_[c][v] |= Mask{1} << u;
  }
  void unset(Vertex u, Vertex v, int c) {
    rows_[c][u] &= ~(Mask{1} << v);
    rows_[c][v] &= ~(Mask{1} << u);
  }

 private:
  std::array<std::array<Mask, 64>, 2> rows_;
  std::array<std::size_t, 2> need_;
};

class SubgraphChecker {
 public:
  SubgraphChecker(std::size_t n, const Graph& h1, const Graph& h2)
      : graphs_{Graph(n), Graph(n)}, targets_{&h1, &h2} {}
  bool can(Vertex u, Vertex v, int c) const {
    auto& g = graphs_[c];
    g.add_edge(u, v);
    const bool hit = find_subgraph_through(g, *targets_[c], u, v).has_value();
    g.remove_edge(u, v);
    return !hit;
  }
  void set(Vertex u, Vertex v, int c) { graphs_[c].add_edge(u, v); }
  void unset(Vertex u, Vertex v, int c) { graphs_[c].remove_edge(u, v); }

 private:
  mutable std::array<Graph, 2> graphs_;
  std::array<const Graph*, 2> targets_;
};

struct BranchResult {
  bool found = false;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  std::vector<Edge> red;
};

template <class Checker>
class Search {
 public:
  Search(const std::vector<Edge>& edges, Checker checker, std::uint64_t budget)
      : edges_(edges), checker_(std::move(checker)), color_(edges.size(), kUndecided),
        budget_(budget) {}

  BranchResult run(const std::vector<std::pair<std::size_t, int>>& prefix) {
    BranchResult res;
    for (auto [e, c] : prefix) {
      if (!checker_.can(edges_[e].u, edges_[e].v, c)) return res;
      assign(e, c);
    }
    res.found = dfs();
    res.exhausted = exhausted_;
    res.nodes = nodes_;
    if (res.found)
      for (std::size_t e = 0; e < edges_.size(); ++e)
        if (color_[e] == kRed) res.red.push_back(edges_[e]);
    return res;
  }

 private:
  void assign(std::size_t e, int c) {
    color_[e] = c;
    checker_.set(edges_[e].u, edges_[e].v, c);
    trail_.push_back(e);
  }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto e = trail_.back();
      trail_.pop_back();
      checker_.unset(edges_[e].u, edges_[e].v, color_[e]);
      color_[e] = kUndecided;
    }
  }
  // Forced moves until fixpoint; false on an edge with no legal colour.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (color_[e] != kUndecided) continue;
        const bool red = checker_.can(edges_[e].u, edges_[e].v, kRed);
        const bool blue = checker_.can(edges_[e].u, edges_[e].v, kBlue);
        if (!red && !blue) return false;
        if (red != blue) {
          assign(e, red ? kRed : kBlue);
          changed = true;
        }
      }
    }
    return true;
  }
  bool dfs() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    const auto it = std::find(color_.begin(), color_.end(), kUndecided);
    if (it == color_.end()) return true;
    const auto e = static_cast<std::size_t>(it - color_.begin());
    for (int c : {kRed, kBlue}) {
      if (!checker_.can(edges_[e].u, edges_[e].v, c)) continue;
      const std::size_t inner = trail_.size();
      assign(e, c);
      if (dfs()) return true;
      undo(inner);
      if (exhausted_) break;
    }
    undo(mark);
    return false;
  }

  const std::vector<Edge>& edges_;
  Checker checker_;
  std::vector<int> color_;
  std::vector<std::size_t> trail_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::uint64_t count_cliques_within(const Graph& g, Mask within, std::size_t need,
                                   std::uint64_t cap) {
  if (need == 0) return 1;
  std::uint64_t total = 0;
  while (within && total < cap) {
    const int v = std::countr_zero(within);
    within &= within - 1;
    total += count_cliques_within(g, within & g.row64(static_cast<Vertex>(v)), need - 1, cap);
  }
  return total;
}

// Edges by number of containing K_s (s = max target), descending; ties in
// colex order so cliques close early.
std::vector<Edge> search_order(const Graph& g, std::size_t s) {
  auto edges = g.edges();
  std::vector<std::pair<std::uint64_t, Edge>> keyed;
  for (const auto& e : edges) {
    const Mask common = g.row64(e.u) & g.row64(e.v);
    keyed.push_back({s >= 2 ? count_cliques_within(g, common, s - 2, 1u << 20) : 0, e});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    const auto ka = std::pair{std::max(a.second.u, a.second.v), std::min(a.second.u, a.second.v)};
    const auto kb = std::pair{std::max(b.second.u, b.second.v), std::min(b.second.u, b.second.v)};
    return ka < kb;
  });
  edges.clear();
  for (auto& [k, e] : keyed) edges.push_back(e);
  return edges;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

using Prefix = std::vector<std::pair<std::size_t, int>>;

// Top-level branches. On K_n vertex 0's red neighbours can be taken to be a
// prefix of the others (any colouring is relabelled into that form).
std::vector<Prefix> top_branches(const Graph& g, const std::vector<Edge>& edges, bool symmetric) {
  std::vector<Prefix> out;
  if (symmetric && g.order() >= 2) {
    std::vector<std::size_t> at(g.order(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].u == 0) at[edges[e].v] = e;
      if (edges[e].v == 0) at[edges[e].u] = e;
    }
    for (std::size_t d = 0; d < g.order(); ++d) {
      Prefix p;
      for (Vertex j = 1; j < g.order(); ++j) p.push_back({at[j], j <= d ? kRed : kBlue});
      out.push_back(std::move(p));
    }
    return out;
  }
  const std::size_t k = std::min<std::size_t>(4, edges.size());
  for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
    Prefix p;
    for (std::size_t i = 0; i < k; ++i) p.push_back({i, static_cast<int>(bits >> i & 1)});
    out.push_back(std::move(p));
  }
  return out;
}

ArrowVerdict combine(const std::vector<BranchResult>& results, std::uint64_t budget) {
  ArrowVerdict v;
  bool any_exhausted = false;
  for (const auto& r : results) {
    v.nodes += r.nodes;
    any_exhausted = any_exhausted || r.exhausted;
    if (r.found && !v.witness) v.witness = r.red;
  }
  if (v.witness) {
    v.arrows = false;
    return v;
  }
  if (any_exhausted || v.nodes > budget) {
    v.budget_exhausted = true;
    return v;
  }
  v.arrows = true;
  return v;
}

std::pair<Graph, Graph> split_colors(const Graph& g, const std::vector<Edge>& red) {
  Graph r(g.order()), b = g;
  for (const auto& e : red) {
    if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("red edge not in graph");
    r.add_edge(e.u, e.v);
    b.remove_edge(e.u, e.v);
  }
  return {std::move(r), std::move(b)};
}

void verify_clique_witness(const Graph& g, const ArrowVerdict& v, std::size_t t1,
                           std::size_t t2) {
  if (!v.witness) return;
  auto [r, b] = split_colors(g, *v.witness);
  if (find_clique(r, t1) || find_clique(b, t2))
    throw std::logic_error("arrow search produced an invalid witness");
}

// Target of size <= 1 is present in every colouring once g has that many vertices.
std::optional<ArrowVerdict> trivial_clique_case(const Graph& g, std::size_t t1, std::size_t t2) {
  auto present = [&](std::size_t t) { return t == 0 || (t == 1 && g.order() >= 1); };
  if (present(t1) || present(t2)) return ArrowVerdict{true, false, std::nullopt, 0};
  if (t1 <= 1 || t2 <= 1) {
    // Remaining case: empty graph with a size-1 target; nothing can be coloured.
    return ArrowVerdict{false, false, std::vector<Edge>{}, 0};
  }
  return std::nullopt;
}

ArrowVerdict clique_search(const Graph& g, std::size_t t1, std::size_t t2, std::uint64_t budget,
                           bool parallel) {
  g.require_exact("arrows_clique");
  if (auto v = trivial_clique_case(g, t1, t2)) return *v;
  const auto edges = search_order(g, std::max(t1, t2));
  const auto branches = top_branches(g, edges, is_complete(g));
  std::vector<BranchResult> results(branches.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < branches.size(); ++i) {
      Search<CliqueChecker> s(edges, CliqueChecker(t1, t2), budget);
      results[i] = s.run(branches[i]);
    }
  } else {
    for (std::size_t i = 0; i < branches.size(); ++i) {
      Search<CliqueChecker> s(edges, CliqueChecker(t1, t2), budget);
      results[i] = s.run(branches[i]);
      if (results[i].found) break;
    }
  }
  auto v = combine(results, budget);
  verify_clique_witness(g, v, t1, t2);
  return v;
}

}  // namespace

ArrowVerdict arrows_clique(const Graph& g, std::size_t t1, std::size_t t2, std::uint64_t budget) {
  return clique_search(g, t1, t2, budget, true);
}

ArrowVerdict arrows_clique_serial(const Graph& g, std::size_t t1, std::size_t t2,
                                  std::uint64_t budget) {
  return clique_search(g, t1, t2, budget, false);
}

bool coloring_avoids(const Graph& g, const std::vector<Edge>& red, const Graph& h1,
                     const Graph& h2) {
  auto [r, b] = split_colors(g, red);
  return !find_subgraph(r, h1) && !find_subgraph(b, h2);
}

ArrowVerdict arrows_general(const Graph& g, const Graph& h1, const Graph& h2,
                            std::uint64_t budget) {
  g.require_exact("arrows_general");
  // An edgeless target is present in either colour as soon as it fits.
  for (const Graph* h : {&h1, &h2})
    if (h->edge_count() == 0 && h->order() <= g.order())
      return ArrowVerdict{true, false, std::nullopt, 0};
  const auto edges = search_order(g, std::max(h1.order(), h2.order()));
  const auto branches = top_branches(g, edges, false);
  std::vector<BranchResult> results(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) {
    Search<SubgraphChecker> s(edges, SubgraphChecker(g.order(), h1, h2), budget);
    results[i] = s.run(branches[i]);
    if (results[i].found) break;
  }
  auto v = combine(results, budget);
  if (v.witness && !coloring_avoids(g, *v.witness, h1, h2))
    throw std::logic_error("arrow search produced an invalid witness");
  return v;
}

BigInt chvatal_upper_bound(std::size_t, std::size_t, std::size_t s, std::size_t known_r) {
  if (s > known_r) return 0;
  return binomial(static_cast<std::uint64_t>(known_r), static_cast<std::uint64_t>(s));
}

}  // namespace rf
