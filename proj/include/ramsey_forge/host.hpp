#pragma once

#include "ramsey_forge/bigint.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/interval.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rf {

// Built-in hosts: c5, petersen, kneser(n,k), mycielski(d), complete(n),
// empty(n), cycle(n), path(n). Also accepts K<n> and C<n> shorthands.
// mycielski(1) is K2 and each further level applies the Mycielski
// construction once, so mycielski(2) is C5 and mycielski(3) the Grotzsch graph.
Graph builtin_host(std::string_view spec);
Graph kneser_graph(std::size_t n, std::size_t k);
Graph mycielski_graph(std::size_t depth);
Graph petersen_graph();

enum class DensityStatus { exact_pass, sampled_pass, fail, vacuous };
std::string_view to_string(DensityStatus s);

struct HostCertificate {
  std::string host_label;
  std::size_t host_order = 0;
  std::size_t clique_bound = 0;
  std::size_t R = 0;
  Rational alpha;
  DensityStatus density = DensityStatus::fail;
  DensityVerdict density_detail;
  bool clique_free = false;
  std::vector<Vertex> clique_witness;
};

// Throws std::invalid_argument unless 0 < alpha <= 1 and R >= 1.
HostCertificate certify_host(const Graph& h, std::size_t clique_bound, std::size_t R,
                             const Rational& alpha, DensityMode mode);

enum class Tri { yes, no, unknown };
std::string_view to_string(Tri t);

/// Independent-set bound C(n,r) C(R,t-r) together with its hypotheses.
struct Prop4Report {
  std::optional<BigInt> exact;  // when small enough to expand
  Interval log_bound;           // natural log; -inf encoded by zero_bound
  bool zero_bound = false;      // t - r > R
  Tri decay_hypothesis = Tri::unknown;  // e^{-alpha r} n <= R
  Interval decay_lhs_log;               // log(e^{-alpha r} n) = log n - alpha r
  Interval decay_rhs_log;               // log R
  std::optional<DensityStatus> density;  // when a host graph is supplied
  std::vector<std::string> notes;
};

Prop4Report prop4_bound(const BigInt& n, const BigInt& r, const BigInt& R,
                        const Rational& alpha, const BigInt& t,
                        const Graph* host = nullptr,
                        DensityMode mode = DensityMode::exact());

enum class Variant { r3t, r4t };
enum class LogBase { natural, base2 };
std::string_view to_string(Variant v);
std::string_view to_string(LogBase b);
Variant variant_from_name(std::string_view name);
LogBase log_base_from_name(std::string_view name);

// log of a positive big integer in the configured base.
Interval log_in_base(const BigInt& v, LogBase base);

struct MVParams {
  Variant variant = Variant::r4t;
  LogBase log_base = LogBase::natural;
  unsigned q_exponent = 40;  // q = 2^q_exponent
  BigInt q;
  BigInt n;
  BigInt R;
  BigInt r;  // ceiling of 2^10 q log q (r4t) or 2C q log q (r3t)
  Rational alpha;
  BigInt t;
  Rational C{1};  // r3t only
  std::vector<std::string> notes;

  // Throws std::logic_error naming the first violated invariant.
  void validate() const;
};

inline constexpr unsigned kMinQExponent = 40;

// [lower, upper] of the admissible t-interval for q = 2^k.
struct TInterval {
  Interval lower;
  Interval upper;
};
TInterval t_interval(Variant v, unsigned k, const Rational& C, LogBase base);

// Smallest q = 2^k >= 2^40 whose t-interval contains t. Throws
// std::domain_error ("t below construction range") when t is below every
// interval.
MVParams mv_params(Variant v, const BigInt& t, const Rational& C = Rational{1},
                   LogBase base = LogBase::natural);

// Parameters at q = 2^k with t the least integer in that q's interval.
// Permits k < 40 so that sub-threshold regimes can be inspected; such
// parameters carry a note and fail validate().
MVParams mv_params_at(Variant v, unsigned k, const Rational& C = Rational{1},
                      LogBase base = LogBase::natural);

}  // namespace rf
