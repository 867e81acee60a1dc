#include "ramsey_forge/host.hpp"

#include "ramsey_forge/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace rf {

namespace {

std::vector<std::size_t> parse_args(std::string_view spec, std::string_view name,
                                    std::size_t count) {
  const std::string_view inner = spec.substr(name.size());
  if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
    throw std::invalid_argument("expected " + std::string(name) + "(...) in '" +
                                std::string(spec) + "'");
  std::vector<std::size_t> out;
  std::string_view body = inner.substr(1, inner.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view piece = body.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc{} || p != piece.data() + piece.size())
      throw std::invalid_argument("bad argument '" + std::string(piece) + "' in '" +
                                  std::string(spec) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (out.size() != count)
    throw std::invalid_argument(std::string(name) + " takes " + std::to_string(count) +
                                " argument(s)");
  return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

std::optional<std::size_t> shorthand(std::string_view spec, char letter) {
  if (spec.size() < 2 || spec[0] != letter) return std::nullopt;
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), v);
  if (ec != std::errc{} || p != spec.data() + spec.size()) return std::nullopt;
  return v;
}

// Decides a predicate evaluated in interval arithmetic, raising the working
// precision until the enclosures separate.
Tri decide(const std::function<Tri()>& eval) {
  for (mpfr_prec_t p = kDefaultPrecision; p <= (1 << 16); p *= 2) {
    PrecisionScope scope(p);
    if (Tri t = eval(); t != Tri::unknown) return t;
  }
  return Tri::unknown;
}

BigInt pow2(unsigned k) { return BigInt(1) << k; }

Interval log_q(unsigned k, LogBase base) {
  return base == LogBase::base2 ? Interval(static_cast<long>(k))
                                : Interval(static_cast<long>(k)) * Interval::ln2();
}

Interval t_coefficient(Variant v, const Rational& C) {
  return v == Variant::r4t ? Interval(pow2(33)) : Interval(Rational(pow2(8)) * C);
}

BigInt ceil_rational(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (q * den < num) q += 1;
  return q;
}

// r = ceil(2^10 q log q) for r4t, ceil(2 C q log q) for r3t.
BigInt compute_r(Variant v, unsigned k, const Rational& C, LogBase base) {
  for (mpfr_prec_t p = kDefaultPrecision; p <= (1 << 16); p *= 2) {
    PrecisionScope scope(p);
    const Interval coeff = v == Variant::r4t ? Interval(pow2(10)) : Interval(Rational(2) * C);
    BigInt out;
    if (ceil_certain(coeff * Interval(pow2(k)) * log_q(k, base), out)) return out;
  }
  throw std::runtime_error("could not determine r at any precision");
}

Tri t_membership(Variant v, unsigned k, const Rational& C, LogBase base, const BigInt& t) {
  return decide([&] {
    const auto iv = t_interval(v, k, C, base);
    const Interval tt(t);
    if (certainly_le(iv.lower, tt) && certainly_le(tt, iv.upper)) return Tri::yes;
    if (certainly_lt(tt, iv.lower) || certainly_lt(iv.upper, tt)) return Tri::no;
    return Tri::unknown;
  });
}

void fill_derived(MVParams& p) {
  const BigInt& q = p.q;
  if (p.variant == Variant::r4t) {
    p.n = q * q * (q * q - q + 1);
    p.R = pow2(24) * q * q;
    p.alpha = Rational(BigInt(1), pow2(8) * q);
  } else {
    p.n = q * q * q + q * q + q + 1;
    p.R = ceil_rational(Rational(pow2(5)) * p.C * Rational(q * q));
    p.alpha = Rational(1) / (p.C * Rational(q));
  }
  p.r = compute_r(p.variant, p.q_exponent, p.C, p.log_base);
}

}  // namespace

Graph kneser_graph(std::size_t n, std::size_t k) {
  if (n < 2 * k) throw std::invalid_argument("kneser(n,k) needs n >= 2k");
  if (n > 64) throw std::invalid_argument("kneser(n,k) supports n <= 64");
  std::vector<Mask> sets;
  const BigInt count = binomial(n, k);
  if (count > (1 << 16)) throw std::invalid_argument("kneser graph too large");
  // Masks in increasing numeric order, i.e. colex order.
  if (k == 0) {
    sets.push_back(0);
  } else {
    Mask m = (Mask{1} << k) - 1;
    const Mask limit = n == 64 ? ~Mask{0} : (Mask{1} << n);
    while (true) {
      sets.push_back(m);
      const Mask c = m & (~m + 1);
      const Mask r = m + c;
      if (r == 0 || (n < 64 && r >= limit)) break;
      m = (((r ^ m) >> 2) / c) | r;
      if (n < 64 && m >= limit) break;
    }
  }
  Graph g(sets.size(), "kneser(" + std::to_string(n) + "," + std::to_string(k) + ")");
  for (Vertex i = 0; i < sets.size(); ++i)
    for (Vertex j = i + 1; j < sets.size(); ++j)
      if (!(sets[i] & sets[j])) g.add_edge(i, j);
  return g;
}

Graph mycielski_graph(std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("mycielski depth starts at 1 (K2)");
  Graph g = complete_graph(2);
  for (std::size_t level = 1; level < depth; ++level) {
    const std::size_t n = g.order();
    if (2 * n + 1 > 4096) throw std::invalid_argument("mycielski graph too large");
    Graph next(2 * n + 1);
    for (const auto& e : g.edges()) {
      next.add_edge(e.u, e.v);
      next.add_edge(e.u, static_cast<Vertex>(n + e.v));
      next.add_edge(static_cast<Vertex>(n + e.u), e.v);
    }
    for (Vertex i = 0; i < n; ++i) next.add_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(2 * n));
    g = std::move(next);
  }
  g.set_label("mycielski(" + std::to_string(depth) + ")");
  return g;
}

Graph petersen_graph() {
  Graph g(10, "petersen");
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return g;
}

Graph builtin_host(std::string_view spec) {
  if (spec == "c5") return cycle_graph(5);
  if (spec == "petersen") return petersen_graph();
  if (starts_with(spec, "kneser")) {
    auto a = parse_args(spec, "kneser", 2);
    return kneser_graph(a[0], a[1]);
  }
  if (starts_with(spec, "mycielski")) return mycielski_graph(parse_args(spec, "mycielski", 1)[0]);
  if (starts_with(spec, "complete")) return complete_graph(parse_args(spec, "complete", 1)[0]);
  if (starts_with(spec, "empty")) return empty_graph(parse_args(spec, "empty", 1)[0]);
  if (starts_with(spec, "cycle")) return cycle_graph(parse_args(spec, "cycle", 1)[0]);
  if (starts_with(spec, "path")) return path_graph(parse_args(spec, "path", 1)[0]);
  if (auto n = shorthand(spec, 'K')) return complete_graph(*n);
  if (auto n = shorthand(spec, 'C')) return cycle_graph(*n);
  throw std::invalid_argument("unknown host '" + std::string(spec) + "'");
}

std::string_view to_string(DensityStatus s) {
  switch (s) {
    case DensityStatus::exact_pass: return "exact-pass";
    case DensityStatus::sampled_pass: return "sampled-pass";
    case DensityStatus::fail: return "fail";
    case DensityStatus::vacuous: return "vacuous";
  }
  return "?";
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "holds";
    case Tri::no: return "fails";
    case Tri::unknown: return "undecided";
  }
  return "?";
}

HostCertificate certify_host(const Graph& h, std::size_t clique_bound, std::size_t R,
                             const Rational& alpha, DensityMode mode) {
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
  if (R < 1) throw std::invalid_argument("R must be at least 1");
  HostCertificate c;
  c.host_label = h.label();
  c.host_order = h.order();
  c.clique_bound = clique_bound;
  c.R = R;
  c.alpha = alpha;
  const auto freeness = is_clique_free(h, clique_bound);
  c.clique_free = freeness.free;
  c.clique_witness = freeness.witness;
  c.density_detail = local_density_check(h, R, alpha, mode);
  if (c.density_detail.vacuous) c.density = DensityStatus::vacuous;
  else if (!c.density_detail.pass) c.density = DensityStatus::fail;
  else c.density = mode.kind == DensityMode::Kind::exact ? DensityStatus::exact_pass
                                                         : DensityStatus::sampled_pass;
  return c;
}

Prop4Report prop4_bound(const BigInt& n, const BigInt& r, const BigInt& R, const Rational& alpha,
                        const BigInt& t, const Graph* host, DensityMode mode) {
  if (r < 1) throw std::invalid_argument("prop4 needs r >= 1");
  if (t < r) throw std::invalid_argument("prop4 needs t >= r");
  if (R > n) throw std::invalid_argument("prop4 needs R <= n");
  if (r > n) throw std::invalid_argument("prop4 needs r <= n");
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0, 1]");
  Prop4Report rep;
  const BigInt gap = t - r;
  if (gap > R) {
    rep.zero_bound = true;
    rep.exact = BigInt(0);
    rep.notes.push_back("t - r exceeds R: C(R, t - r) = 0, bound is 0");
  } else {
    if (msb(n) < 256 && r <= 4096 && gap <= 4096)
      rep.exact = binomial(n, r.convert_to<std::uint64_t>()) *
                  binomial(R, gap.convert_to<std::uint64_t>());
    rep.log_bound = log_binomial(n, r) + log_binomial(R, gap);
  }
  rep.decay_hypothesis = decide([&] {
    rep.decay_lhs_log = log_big(n) - Interval(alpha) * Interval(r);
    rep.decay_rhs_log = log_big(R);
    if (certainly_le(rep.decay_lhs_log, rep.decay_rhs_log)) return Tri::yes;
    if (certainly_lt(rep.decay_rhs_log, rep.decay_lhs_log)) return Tri::no;
    return Tri::unknown;
  });
  if (host) {
    if (BigInt(host->order()) != n)
      throw std::invalid_argument("host order does not match n");
    const auto v = local_density_check(*host, R.convert_to<std::size_t>(), alpha, mode);
    rep.density = v.vacuous ? DensityStatus::vacuous
                  : !v.pass ? DensityStatus::fail
                  : mode.kind == DensityMode::Kind::exact ? DensityStatus::exact_pass
                                                          : DensityStatus::sampled_pass;
  }
  return rep;
}

std::string_view to_string(Variant v) { return v == Variant::r4t ? "r4t" : "r3t"; }
std::string_view to_string(LogBase b) { return b == LogBase::natural ? "natural" : "base-2"; }

Variant variant_from_name(std::string_view name) {
  if (name == "r4t") return Variant::r4t;
  if (name == "r3t") return Variant::r3t;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

LogBase log_base_from_name(std::string_view name) {
  if (name == "natural" || name == "e" || name == "ln") return LogBase::natural;
  if (name == "base-2" || name == "2" || name == "base2") return LogBase::base2;
  throw std::invalid_argument("unknown log base '" + std::string(name) + "'");
}

Interval log_in_base(const BigInt& v, LogBase base) {
  const Interval l = log_big(v);
  return base == LogBase::natural ? l : l / Interval::ln2();
}

TInterval t_interval(Variant v, unsigned k, const Rational& C, LogBase base) {
  const Interval coeff = t_coefficient(v, C);
  const Interval q(pow2(k));
  const Interval lq = log_q(k, base);
  const Interval lq2 = log_q(k + 1, base);
  return {coeff * q * lq * lq, coeff * (Interval(2L) * q) * lq2 * lq2};
}

void MVParams::validate() const {
  auto fail = [](const std::string& what) { throw std::logic_error("MVParams invariant: " + what); };
  if (q != pow2(q_exponent)) fail("q = 2^k");
  if (q_exponent < kMinQExponent) fail("q >= 2^40");
  if (C <= 0) fail("C > 0");
  MVParams expect = *this;
  fill_derived(expect);
  if (n != expect.n) fail("n");
  if (R != expect.R) fail("R");
  if (r != expect.r) fail("r = ceil(coefficient q log q)");
  if (alpha != expect.alpha) fail("alpha");
  if (t_membership(variant, q_exponent, C, log_base, t) != Tri::yes)
    fail("t lies in the interval of q");
}

MVParams mv_params(Variant v, const BigInt& t, const Rational& C, LogBase base) {
  if (C <= 0) throw std::invalid_argument("C must be positive");
  if (t < 1) throw std::domain_error("t below construction range");
  const auto below = decide([&] {
    const auto iv = t_interval(v, kMinQExponent, C, base);
    const Interval tt(t);
    if (certainly_lt(tt, iv.lower)) return Tri::yes;
    if (certainly_le(iv.lower, tt)) return Tri::no;
    return Tri::unknown;
  });
  if (below != Tri::no)
    throw std::domain_error("t below construction range (needs q >= 2^40)");
  const std::size_t kmax = msb(t) + 2;
  for (unsigned k = kMinQExponent; k <= kmax; ++k) {
    const Tri in = t_membership(v, k, C, base, t);
    if (in == Tri::unknown) throw std::runtime_error("t-interval membership undecidable");
    if (in == Tri::no) continue;
    MVParams p;
    p.variant = v;
    p.log_base = base;
    p.q_exponent = k;
    p.q = pow2(k);
    p.t = t;
    p.C = C;
    fill_derived(p);
    p.notes.push_back("r rounded up to an integer");
    p.validate();
    return p;
  }
  throw std::logic_error("no q interval contains t");
}

MVParams mv_params_at(Variant v, unsigned k, const Rational& C, LogBase base) {
  if (C <= 0) throw std::invalid_argument("C must be positive");
  if (k == 0) throw std::invalid_argument("q exponent must be positive");
  MVParams p;
  p.variant = v;
  p.log_base = base;
  p.q_exponent = k;
  p.q = pow2(k);
  p.C = C;
  bool found = false;
  for (mpfr_prec_t prec = kDefaultPrecision; prec <= (1 << 16) && !found; prec *= 2) {
    PrecisionScope scope(prec);
    found = ceil_certain(t_interval(v, k, C, base).lower, p.t);
  }
  if (!found) throw std::runtime_error("could not determine the interval floor");
  fill_derived(p);
  p.notes.push_back("r rounded up to an integer");
  if (k < kMinQExponent) p.notes.push_back("q below 2^40: outside the construction regime");
  else p.validate();
  return p;
}

}  // namespace rf
