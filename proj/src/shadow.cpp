#include "ramsey_forge/shadow.hpp"

#include "ramsey_forge/cliques.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rf {

namespace {

void check_levels(std::size_t t, std::size_t s) {
  if (s == 0 || s > t)
    throw std::invalid_argument("shadow level s must satisfy 1 <= s <= t (s=" +
                                std::to_string(s) + ", t=" + std::to_string(t) + ")");
}

// Calls f on each s-subset of `set` (as a mask).
template <typename F>
void for_each_subset(Mask set, std::size_t s, F&& f) {
  const auto bits = mask_to_vertices(set);
  const std::size_t t = bits.size();
  if (s > t) return;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << bits[i];
    f(m);
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == t - s + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

long double log_big_ld(const BigInt& v) {
  const std::size_t top = msb(v);
  if (top < 60) return std::log(static_cast<long double>(v.convert_to<std::uint64_t>()));
  const std::size_t shift = top - 60;
  const BigInt head = v >> shift;
  return std::log(static_cast<long double>(head.convert_to<std::uint64_t>())) +
         static_cast<long double>(shift) * std::log(2.0L);
}

long double log_gen_binomial(long double x, std::size_t k) {
  long double acc = 0;
  for (std::size_t i = 0; i < k; ++i) acc += std::log(x - static_cast<long double>(i));
  return acc - std::lgamma(static_cast<long double>(k) + 1.0L);
}

long double gen_binomial(long double x, std::size_t k) {
  long double acc = 1;
  for (std::size_t i = 0; i < k; ++i)
    acc = acc * (x - static_cast<long double>(i)) / static_cast<long double>(i + 1);
  return acc;
}

}  // namespace

UniformFamily::UniformFamily(std::size_t ground, std::size_t t, std::vector<Mask> members)
    : ground_(ground), t_(t), members_(std::move(members)) {
  if (ground_ > 64) throw std::invalid_argument("uniform family ground set exceeds 64");
  const Mask allowed = ground_ == 64 ? ~Mask{0} : ((Mask{1} << ground_) - 1);
  for (auto m : members_) {
    if (static_cast<std::size_t>(std::popcount(m)) != t_)
      throw std::invalid_argument("family member of wrong size");
    if (m & ~allowed) throw std::invalid_argument("family member outside the ground set");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("duplicate family member");
}

UniformFamily UniformFamily::complete_level(std::size_t ground, std::size_t t) {
  std::vector<Mask> all;
  if (t <= ground) {
    const Mask full = ground == 64 ? ~Mask{0} : ((Mask{1} << ground) - 1);
    for_each_subset(full, t, [&](Mask m) { all.push_back(m); });
  }
  return UniformFamily(ground, t, std::move(all));
}

bool UniformFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

UniformFamily exact_shadow_serial(const UniformFamily& fam, std::size_t s) {
  check_levels(fam.uniformity(), s);
  std::vector<Mask> out;
  for (auto m : fam.members()) for_each_subset(m, s, [&](Mask sub) { out.push_back(sub); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return UniformFamily(fam.ground(), s, std::move(out));
}

UniformFamily exact_shadow(const UniformFamily& fam, std::size_t s) {
  check_levels(fam.uniformity(), s);
  const auto& members = fam.members();
  std::vector<std::vector<Mask>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < members.size(); ++i)
      for_each_subset(members[i], s, [&](Mask sub) { local.push_back(sub); });
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
  }
  std::vector<Mask> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return UniformFamily(fam.ground(), s, std::move(out));
}

ShadowBound lovasz_shadow_bound(const BigInt& count, std::size_t t, std::size_t s) {
  check_levels(t, s);
  ShadowBound out;
  if (count <= 0) {
    out.log_value = -std::numeric_limits<double>::infinity();
    return out;
  }
  const long double target = log_big_ld(count);
  long double lo = static_cast<long double>(t);
  long double x = lo;
  if (count > 1) {
    long double hi = lo + 1;
    while (log_gen_binomial(hi, t) < target) hi = lo + 2 * (hi - lo);
    // Bisect down to adjacent long doubles; far tighter than 1e-12 relative.
    for (int iter = 0; iter < 400; ++iter) {
      const long double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      if (log_gen_binomial(mid, t) < target) lo = mid;
      else hi = mid;
    }
    x = hi;
    // Snap to an integer root when count is exactly C(n, t).
    const long double nearest = std::nearbyint(x);
    if (std::fabs(x - nearest) < 1e-6L * x && nearest < 0x1p53L &&
        binomial(static_cast<std::uint64_t>(nearest), t) == count)
      x = nearest;
  }
  out.x = static_cast<double>(x);
  const long double log_value = log_gen_binomial(x, s);
  out.log_value = static_cast<double>(log_value);
  out.value = log_value < 11000 ? static_cast<double>(gen_binomial(x, s))
                                : std::numeric_limits<double>::infinity();
  return out;
}

CliqueShadowReport clique_shadow_check(const Graph& g, std::size_t t, std::size_t s) {
  check_levels(t, s);
  if (t > g.order()) throw std::invalid_argument("clique_shadow_check needs t <= n");
  CliqueShadowReport r;
  r.kt_count = count_cliques(g, t);
  r.ks_count = count_cliques(g, s);
  r.bound = lovasz_shadow_bound(r.kt_count, t, s);
  if (r.kt_count == 0) {
    r.holds = true;
  } else {
    const double need = std::ceil(r.bound.value - 1e-9);
    r.holds = BigInt(static_cast<long long>(need)) <= r.ks_count;
  }
  return r;
}

}  // namespace rf
