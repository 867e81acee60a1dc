#include "ramsey_forge/cliques.hpp"

#include <omp.h>

#include <array>
#include <bit>
#include <deque>
#include <limits>
#include <stdexcept>

namespace rf {

namespace {

using Pascal = std::array<std::array<std::uint64_t, 65>, 65>;

const Pascal& pascal() {
  static const Pascal table = [] {
    Pascal c{};
    for (std::size_t n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
  }();
  return table;
}

struct Branch {
  Mask candidates;
  unsigned held;
  unsigned pivots;
};

// Clique-tree enumeration: every clique is a set of held vertices plus any
// subset of the pivots collected on the path to a leaf, and each clique is
// produced at exactly one leaf.
class PivotCounter {
 public:
  PivotCounter(const Graph& g, std::vector<std::uint64_t>& counts) : g_(g), counts_(counts) {}

  void run(Mask p, unsigned held, unsigned pivots) {
    if (!p) {
      const auto& c = pascal();
      for (unsigned j = 0; j <= pivots; ++j) counts_[held + j] += c[pivots][j];
      return;
    }
    const Vertex u = choose_pivot(p);
    Mask others = p & ~g_.row64(u) & ~(Mask{1} << u);
    run(p & g_.row64(u), held, pivots + 1);
    p &= ~(Mask{1} << u);
    while (others) {
      const auto v = static_cast<Vertex>(std::countr_zero(others));
      others &= others - 1;
      run(p & g_.row64(v), held + 1, pivots);
      p &= ~(Mask{1} << v);
    }
  }

  // Children of one node, in the same order run() would visit them.
  std::vector<Branch> expand(const Branch& b) const {
    std::vector<Branch> out;
    Mask p = b.candidates;
    const Vertex u = choose_pivot(p);
    Mask others = p & ~g_.row64(u) & ~(Mask{1} << u);
    out.push_back({p & g_.row64(u), b.held, b.pivots + 1});
    p &= ~(Mask{1} << u);
    while (others) {
      const auto v = static_cast<Vertex>(std::countr_zero(others));
      others &= others - 1;
      out.push_back({p & g_.row64(v), b.held + 1, b.pivots});
      p &= ~(Mask{1} << v);
    }
    return out;
  }

 private:
  Vertex choose_pivot(Mask p) const {
    Vertex best = static_cast<Vertex>(std::countr_zero(p));
    int best_deg = -1;
    for (Mask rest = p; rest; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      const int d = std::popcount(g_.row64(v) & p);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    return best;
  }

  const Graph& g_;
  std::vector<std::uint64_t>& counts_;
};

IndependenceProfile to_profile(const std::vector<std::uint64_t>& raw) {
  IndependenceProfile p;
  p.counts.reserve(raw.size());
  for (auto c : raw) p.counts.emplace_back(c);
  return p;
}

void check_profile_limit(const Graph& g, std::size_t limit) {
  if (g.order() > limit)
    throw std::invalid_argument("graph with " + std::to_string(g.order()) +
                                " vertices is too large for exact profile (limit " +
                                std::to_string(limit) + ")");
}

bool clique_search(const Graph& g, Mask p, std::size_t need, std::vector<Vertex>& cur) {
  if (need == 0) return true;
  while (static_cast<std::size_t>(std::popcount(p)) >= need) {
    const auto v = static_cast<Vertex>(std::countr_zero(p));
    p &= p - 1;
    cur.push_back(v);
    if (clique_search(g, p & g.row64(v), need - 1, cur)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::vector<std::uint64_t> clique_profile_serial(const Graph& g) {
  g.require_exact("clique_profile");
  std::vector<std::uint64_t> counts(g.order() + 1, 0);
  PivotCounter counter(g, counts);
  counter.run(g.all64(), 0, 0);
  return counts;
}

std::vector<std::uint64_t> clique_profile(const Graph& g) {
  g.require_exact("clique_profile");
  const std::size_t n = g.order();
  std::vector<std::uint64_t> counts(n + 1, 0);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<std::uint64_t> scratch(n + 1, 0);
  PivotCounter splitter(g, scratch);

  // Expand the top of the tree breadth-first into independent subtrees.
  std::deque<Branch> frontier{{g.all64(), 0, 0}};
  std::vector<Branch> tasks;
  const std::size_t want = 8 * static_cast<std::size_t>(omp_get_max_threads());
  while (!frontier.empty() && frontier.size() + tasks.size() < want) {
    Branch b = frontier.front();
    frontier.pop_front();
    if (!b.candidates) {
      tasks.push_back(b);
      continue;
    }
    for (auto& child : splitter.expand(b)) frontier.push_back(child);
  }
  tasks.insert(tasks.end(), frontier.begin(), frontier.end());

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(n + 1, 0);
    PivotCounter counter(g, local);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < tasks.size(); ++i)
      counter.run(tasks[i].candidates, tasks[i].held, tasks[i].pivots);
#pragma omp critical
    for (std::size_t k = 0; k <= n; ++k) counts[k] += local[k];
  }
  return counts;
}

BigInt count_cliques(const Graph& g, std::size_t k) {
  if (k > g.order()) return 0;
  if (k == 0) return 1;
  if (k == 1) return BigInt(g.order());
  if (k == 2) return BigInt(g.edge_count());
  return BigInt(clique_profile(g)[k]);
}

BigInt IndependenceProfile::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

std::size_t IndependenceProfile::independence_number() const {
  std::size_t alpha = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != 0) alpha = i;
  return alpha;
}

IndependenceProfile independence_profile(const Graph& g, std::size_t limit) {
  check_profile_limit(g, limit);
  return to_profile(clique_profile(g.complement()));
}

IndependenceProfile independence_profile_serial(const Graph& g, std::size_t limit) {
  check_profile_limit(g, limit);
  return to_profile(clique_profile_serial(g.complement()));
}

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k, Mask within) {
  g.require_exact("find_clique");
  std::vector<Vertex> cur;
  if (clique_search(g, within & g.all64(), k, cur)) return cur;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k) {
  return find_clique(g, k, g.all64());
}

CliqueFreeness is_clique_free(const Graph& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("is_clique_free requires k >= 2");
  CliqueFreeness out;
  if (auto w = find_clique(g, k)) {
    out.free = false;
    out.witness = std::move(*w);
  }
  return out;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      const auto row = g.row(u);
      for (std::size_t w = 0; w < row.size(); ++w) {
        for (auto bits = row[w]; bits; bits &= bits - 1) {
          const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
          if (dist[v] == kUnseen) {
            dist[v] = dist[u] + 1;
            parent[v] = u;
            queue.push_back(v);
          } else if (parent[u] != v) {
            best = std::min(best, dist[u] + dist[v] + 1);
          }
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

namespace {

bool connected_mask(const Graph& g, Mask s) {
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.row64(static_cast<Vertex>(std::countr_zero(f)));
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

}  // namespace

Rational two_density(const Graph& g, std::size_t limit) {
  if (g.order() < 3) throw std::domain_error("2-density undefined: fewer than 3 vertices");
  if (g.order() > limit)
    throw std::invalid_argument("two_density: graph exceeds exact limit of " +
                                std::to_string(limit) + " vertices");
  const std::size_t n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  // Best ratio as (edges - 1, vertices - 2); den == 0 marks "none yet".
  long best_num = 0;
  long best_den = 0;
#pragma omp parallel
  {
    long num = 0;
    long den = 0;
#pragma omp for schedule(static)
    for (std::uint64_t s = 0; s < total; ++s) {
      const int v = std::popcount(s);
      if (v < 3) continue;
      long e2 = 0;
      for (Mask r = s; r; r &= r - 1)
        e2 += std::popcount(g.row64(static_cast<Vertex>(std::countr_zero(r))) & s);
      const long e = e2 / 2;
      if (e < v - 1) continue;  // cannot be connected
      const long cn = e - 1;
      const long cd = v - 2;
      if (den != 0 && cn * den <= num * cd) continue;
      if (!connected_mask(g, s)) continue;
      num = cn;
      den = cd;
    }
#pragma omp critical
    if (den != 0 && (best_den == 0 || num * best_den > best_num * den)) {
      best_num = num;
      best_den = den;
    }
  }
  if (best_den == 0) throw std::domain_error("2-density undefined: no connected subgraph on 3 vertices");
  return Rational(best_num, best_den);
}

}  // namespace rf
