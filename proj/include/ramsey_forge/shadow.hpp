#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/graph.hpp"

#include <cstddef>
#include <vector>

namespace rf {

/// t-uniform family of subsets of a ground set of size <= 64, members stored
/// as sorted, distinct bit masks.
class UniformFamily {
 public:
  UniformFamily(std::size_t ground, std::size_t t, std::vector<Mask> members);

  // Every t-subset of the ground set.
  static UniformFamily complete_level(std::size_t ground, std::size_t t);

  std::size_t ground() const { return ground_; }
  std::size_t uniformity() const { return t_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const;

 private:
  std::size_t ground_;
  std::size_t t_;
  std::vector<Mask> members_;
};

// All s-subsets of members, deduplicated. Throws if s == 0 or s > t.
UniformFamily exact_shadow(const UniformFamily& fam, std::size_t s);
UniformFamily exact_shadow_serial(const UniformFamily& fam, std::size_t s);

struct ShadowBound {
  double x = 0;          // real root of C(x, t) = count, x >= t
  double value = 0;      // C(x, s); may be +inf when beyond double range
  double log_value = 0;  // natural log of value; -inf when count == 0
};

// Lovasz form of Kruskal-Katona: if the family has C(x, t) members then the
// s-shadow has at least C(x, s). The root x >= t is found to relative
// tolerance 1e-12; count == 0 gives 0. Throws if s == 0 or s > t.
ShadowBound lovasz_shadow_bound(const BigInt& count, std::size_t t, std::size_t s);

struct CliqueShadowReport {
  BigInt kt_count;
  BigInt ks_count;
  ShadowBound bound;
  bool holds = false;
};

CliqueShadowReport clique_shadow_check(const Graph& g, std::size_t t, std::size_t s);

}  // namespace rf
