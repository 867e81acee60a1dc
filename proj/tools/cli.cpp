#include "cli.hpp"

#include "ramsey_forge/arrow.hpp"
#include "ramsey_forge/bounds.hpp"
#include "ramsey_forge/cliques.hpp"
#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph_io.hpp"
#include "ramsey_forge/host.hpp"
#include "ramsey_forge/lf.hpp"
#include "ramsey_forge/rng.hpp"
#include "ramsey_forge/shadow.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rf::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 0;
  int threads = 0;
  std::string log_base = "natural";
  std::string C = "1";
};

// Outcome of a subcommand: the result object and the exit code it implies.
struct Outcome {
  json result;
  int code = kExitOk;
};

json interval_json(const Interval& x) {
  return {{"lo", x.lo_double()}, {"hi", x.hi_double()}};
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

json big_list(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json steps_json(const std::vector<ChainStep>& steps) {
  json a = json::array();
  for (const auto& s : steps)
    a.push_back({{"description", s.description},
                 {"lhs_log", interval_json(s.lhs_log)},
                 {"rhs_log", interval_json(s.rhs_log)},
                 {"margin_log", interval_json(s.margin_log())},
                 {"pass", s.pass}});
  return a;
}

json params_json(const MVParams& p) {
  json notes = p.notes;
  return {{"variant", std::string(to_string(p.variant))},
          {"log_base", std::string(to_string(p.log_base))},
          {"q_exponent", p.q_exponent},
          {"q", to_string(p.q)},
          {"n", to_string(p.n)},
          {"R", to_string(p.R)},
          {"r", to_string(p.r)},
          {"alpha", to_string(p.alpha)},
          {"t", to_string(p.t)},
          {"C", to_string(p.C)},
          {"notes", notes}};
}

// A path to a graph6/DIMACS file, or a built-in name. "K6.g6" falls back to
// the built-in "K6" when no such file exists.
Graph load_graph_arg(const std::string& spec) {
  namespace fs = std::filesystem;
  if (fs::exists(spec)) return load_graph_file(spec);
  try {
    return builtin_host(spec);
  } catch (const std::invalid_argument&) {
    const fs::path p(spec);
    if (p.has_extension()) return builtin_host(p.stem().string());
    throw;
  }
}

unsigned parse_q_exponent(const std::string& text) {
  if (text.rfind("2^", 0) == 0) return static_cast<unsigned>(std::stoul(text.substr(2)));
  const BigInt q(text);
  if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be a power of two");
  return static_cast<unsigned>(boost::multiprecision::msb(q));
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    if (j.empty()) rows.emplace_back(prefix, "[]");
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_cell(k) << "," << csv_cell(v) << "\n";
  } else {
    for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
  }
}

// ---- subcommands ----

Outcome run_count(const std::string& graph, std::size_t k, bool complement) {
  Graph g = load_graph_arg(graph);
  if (complement) g = g.complement();
  return {{{"graph", graph},
           {"order", g.order()},
           {"edges", g.edge_count()},
           {"k", k},
           {"complement", complement},
           {"count", to_string(count_cliques(g, k))}}};
}

Outcome run_profile(const std::string& graph) {
  const Graph g = load_graph_arg(graph);
  const auto ind = independence_profile(g);
  json cliques = json::array();
  for (auto c : clique_profile(g)) cliques.push_back(std::to_string(c));
  const auto gi = girth(g);
  return {{{"graph", graph},
           {"order", g.order()},
           {"edges", g.edge_count()},
           {"independence_profile", big_list(ind.counts)},
           {"independent_sets_total", to_string(ind.total())},
           {"independence_number", ind.independence_number()},
           {"clique_profile", cliques},
           {"girth", gi ? json(*gi) : json(nullptr)}}};
}

json shadow_bound_json(const ShadowBound& b) {
  return {{"x", b.x},
          {"bound", std::isfinite(b.value) ? json(b.value) : json(nullptr)},
          {"log_bound", std::isfinite(b.log_value) ? json(b.log_value) : json(nullptr)}};
}

Outcome run_shadow(const std::optional<std::string>& count, const std::optional<std::string>& graph,
                   const std::optional<std::string>& family, std::size_t ground, std::size_t t,
                   std::size_t s) {
  if (graph) {
    const Graph g = load_graph_arg(*graph);
    const auto rep = clique_shadow_check(g, t, s);
    json r = shadow_bound_json(rep.bound);
    r["mode"] = "cliques";
    r["graph"] = *graph;
    r["t"] = t;
    r["s"] = s;
    r["kt_count"] = to_string(rep.kt_count);
    r["ks_count"] = to_string(rep.ks_count);
    r["holds"] = rep.holds;
    return {r, rep.holds ? kExitOk : kExitFalse};
  }
  if (family) {
    std::vector<Mask> members;
    for (const auto& set : json::parse(*family)) {
      Mask m = 0;
      for (const auto& v : set) {
        const auto i = v.get<std::size_t>();
        if (i >= 64) throw std::invalid_argument("family vertex out of range");
        m |= Mask{1} << i;
      }
      members.push_back(m);
    }
    const UniformFamily fam(ground, t, members);
    const auto sh = exact_shadow(fam, s);
    json shadow = json::array();
    for (auto m : sh.members()) shadow.push_back(mask_to_vertices(m));
    json r = shadow_bound_json(lovasz_shadow_bound(BigInt(fam.size()), t, s));
    r["mode"] = "family";
    r["t"] = t;
    r["s"] = s;
    r["family_size"] = fam.size();
    r["shadow_size"] = sh.size();
    r["shadow"] = shadow;
    const bool holds = !r["bound"].is_null() &&
                       static_cast<double>(sh.size()) >= r["bound"].get<double>() - 1e-9;
    r["holds"] = holds;
    return {r, holds ? kExitOk : kExitFalse};
  }
  if (!count) throw std::invalid_argument("shadow needs --count, --graph or --family");
  json r = shadow_bound_json(lovasz_shadow_bound(BigInt(*count), t, s));
  r["mode"] = "count";
  r["count"] = *count;
  r["t"] = t;
  r["s"] = s;
  return {r};
}

DensityMode density_mode(const std::string& kind, std::uint64_t trials, std::uint64_t seed) {
  if (kind == "exact") return DensityMode::exact();
  if (kind == "sampled") return DensityMode::sampled(trials, seed);
  throw std::invalid_argument("density mode must be exact or sampled");
}

json density_json(const DensityVerdict& d) {
  return {{"pass", d.pass},
          {"vacuous", d.vacuous},
          {"conclusive", d.conclusive},
          {"subsets_checked", d.subsets_checked},
          {"witness", d.witness},
          {"witness_edges", d.witness_edges},
          {"witness_margin", to_string(d.witness_margin)}};
}

Outcome run_certify(const std::string& host, std::size_t clique_bound, std::size_t R,
                    const std::string& alpha, const DensityMode& mode) {
  const Graph h = load_graph_arg(host);
  const auto c = certify_host(h, clique_bound, R, parse_rational(alpha), mode);
  const bool ok = c.clique_free && c.density != DensityStatus::fail;
  return {{{"host", c.host_label.empty() ? host : c.host_label},
           {"order", c.host_order},
           {"clique_bound", c.clique_bound},
           {"R", c.R},
           {"alpha", to_string(c.alpha)},
           {"clique_free", c.clique_free},
           {"clique_witness", c.clique_witness},
           {"density", std::string(to_string(c.density))},
           {"density_detail", density_json(c.density_detail)},
           {"certified", ok}},
          ok ? kExitOk : kExitFalse};
}

Outcome run_prop4(const std::string& n, const std::string& r, const std::string& R,
                  const std::string& alpha, const std::string& t,
                  const std::optional<std::string>& host, const DensityMode& mode) {
  std::optional<Graph> h;
  if (host) h = load_graph_arg(*host);
  const auto rep = prop4_bound(BigInt(n), BigInt(r), BigInt(R), parse_rational(alpha), BigInt(t),
                               h ? &*h : nullptr, mode);
  json notes = rep.notes;
  json out = {{"n", n},
              {"r", r},
              {"R", R},
              {"alpha", alpha},
              {"t", t},
              {"exact", rep.exact ? json(to_string(*rep.exact)) : json(nullptr)},
              {"zero_bound", rep.zero_bound},
              {"log_bound", rep.zero_bound ? json(nullptr) : interval_json(rep.log_bound)},
              {"decay_hypothesis", std::string(to_string(rep.decay_hypothesis))},
              {"decay_lhs_log", interval_json(rep.decay_lhs_log)},
              {"decay_rhs_log", interval_json(rep.decay_rhs_log)},
              {"density", rep.density ? json(std::string(to_string(*rep.density))) : json(nullptr)},
              {"notes", notes}};
  return {out};
}

MVParams params_from(const std::string& variant, const std::optional<std::string>& t,
                     const std::optional<std::string>& q, const Rational& C, LogBase base) {
  const Variant v = variant_from_name(variant);
  if (t) return mv_params(v, BigInt(*t), C, base);
  if (q) return mv_params_at(v, parse_q_exponent(*q), C, base);
  throw std::invalid_argument("need --t or --q");
}

Outcome run_mvparams(const MVParams& p) {
  const auto ti = t_interval(p.variant, p.q_exponent, p.C, p.log_base);
  json r = params_json(p);
  r["t_interval"] = {{"lower", interval_json(ti.lower)}, {"upper", interval_json(ti.upper)}};
  return {r};
}

Outcome run_rho_exact(const std::string& host, std::size_t t, const std::optional<std::string>& graph,
                      std::uint64_t trials, std::uint64_t seed) {
  const Graph h = load_graph_arg(host);
  const Rational rho = rho_exact(h, t);
  json r = {{"mode", "exact"}, {"host", host}, {"t", t}, {"exact", to_string(rho)},
            {"approx", to_double(rho)}};
  if (graph) {
    const Graph g = load_graph_arg(*graph);
    const auto mc = monte_carlo_blue_rate(g, h, t, trials, seed);
    r["monte_carlo"] = {{"graph", *graph},      {"trials", mc.trials},
                        {"hits", mc.hits},      {"estimate", mc.estimate},
                        {"std_error", mc.std_error}, {"clique", mc.clique}};
  }
  return {r};
}

Outcome run_rho_analytic(const MVParams& p) {
  const auto rep = rho_analytic_bound(p);
  return {{{"mode", "analytic-bound"},
           {"params", params_json(p)},
           {"split", to_string(rep.split)},
           {"log_first_sum", interval_json(rep.log_first_sum)},
           {"log_second_sum", interval_json(rep.log_second_sum)},
           {"log_two_sum", interval_json(rep.log_two_sum)},
           {"log_first_simplified", interval_json(rep.log_first_simplified)},
           {"log_second_simplified", interval_json(rep.log_second_simplified)},
           {"log_simplified", interval_json(rep.log_simplified)},
           {"steps", steps_json(rep.steps)},
           {"overall", all_pass(rep.steps)}},
          all_pass(rep.steps) ? kExitOk : kExitFalse};
}

json sample_json(const ColoringSample& s) {
  return {{"seed", s.seed}, {"stream", s.stream}, {"map", s.pi}, {"red_edges", edges_json(s.red.edges())}};
}

Outcome run_sample(const std::string& graph, const std::string& host, std::uint64_t seed,
                   std::uint64_t stream, std::size_t t1, std::size_t t2) {
  const Graph g = load_graph_arg(graph);
  const Graph h = load_graph_arg(host);
  const auto s = sample_coloring(g, h, seed, stream);
  json r = sample_json(s);
  r["graph"] = graph;
  r["host"] = host;
  if (t1 && t2) {
    const auto scan = mono_clique_scan(s, t1, t2);
    r["scan"] = {{"t1", t1},
                 {"t2", t2},
                 {"red_witness", scan.red_witness ? json(*scan.red_witness) : json(nullptr)},
                 {"blue_witness", scan.blue_witness ? json(*scan.blue_witness) : json(nullptr)},
                 {"clean", scan.clean()}};
  }
  return {r};
}

Outcome run_search(const std::string& graph, const std::string& host, std::size_t t1, std::size_t t2,
                   std::uint64_t attempts, std::uint64_t seed) {
  const Graph g = load_graph_arg(graph);
  const Graph h = load_graph_arg(host);
  const auto res = find_good_coloring(g, h, t1, t2, attempts, seed);
  return {{{"graph", graph},
           {"host", host},
           {"t1", t1},
           {"t2", t2},
           {"found", res.found()},
           {"attempts", res.attempts},
           {"blue_hits", res.blue_hits},
           {"red_hits", res.red_hits},
           {"blue_hit_rate", res.blue_hit_rate()},
           {"sample", res.sample ? sample_json(*res.sample) : json(nullptr)}},
          res.found() ? kExitOk : kExitFalse};
}

Outcome run_arrow(const std::string& graph, std::size_t t1, std::size_t t2,
                  const std::optional<std::string>& h1, const std::optional<std::string>& h2,
                  std::uint64_t budget) {
  const Graph g = load_graph_arg(graph);
  ArrowVerdict v;
  json r = {{"graph", graph}, {"order", g.order()}, {"budget", budget}};
  if (h1 || h2) {
    if (!h1 || !h2) throw std::invalid_argument("--h1 and --h2 go together");
    v = arrows_general(g, load_graph_arg(*h1), load_graph_arg(*h2), budget);
    r["h1"] = *h1;
    r["h2"] = *h2;
  } else {
    v = arrows_clique(g, t1, t2, budget);
    r["t1"] = t1;
    r["t2"] = t2;
  }
  r["arrows"] = v.arrows;
  r["budget_exhausted"] = v.budget_exhausted;
  r["nodes"] = v.nodes;
  r["witness_red_edges"] = v.witness ? edges_json(*v.witness) : json(nullptr);
  if (v.budget_exhausted) return {r, kExitError};
  return {r, v.arrows ? kExitOk : kExitFalse};
}

Outcome run_lf(const std::optional<std::string>& f, bool fano, const std::optional<std::string>& m,
               const std::optional<std::string>& n, const std::optional<std::string>& a,
               const std::optional<std::string>& b, LogBase base) {
  json r;
  int code = kExitOk;
  if (f) {
    const Graph fg = load_graph_arg(*f);
    const auto decs = enumerate_decompositions(fg);
    const auto family = build_L(fg);
    json members = json::array();
    for (const auto& g : family) members.push_back(to_graph6(g));
    json parts = json::array();
    for (const auto& d : decs) parts.push_back(d.parts);
    r["f"] = *f;
    r["decomposition_count"] = decs.size();
    r["decompositions"] = parts;
    r["family"] = members;
    if (fano) {
      const auto ff = is_family_free(fano_incidence(), family);
      r["fano_free"] = ff.free;
      r["fano_member"] = ff.member ? json(*ff.member) : json(nullptr);
      r["fano_embedding"] = ff.embedding;
      if (!ff.free) code = kExitFalse;
    }
  }
  if (m || n || a || b) {
    if (!(m && n && a && b)) throw std::invalid_argument("fkt bounds need --m, --n, --a and --b");
    const auto fk = fkt_bounds(BigInt(*m), BigInt(*n), BigInt(*a), BigInt(*b), base);
    r["fkt"] = {{"log_n", interval_json(fk.log_n)},
                {"t0", interval_json(fk.t0)},
                {"t", interval_json(fk.t)},
                {"g", interval_json(fk.g)},
                {"hypothesis_lhs", interval_json(fk.hypothesis_lhs)},
                {"hypothesis_ok", fk.hypothesis_ok},
                {"subset_threshold", interval_json(fk.subset_threshold)},
                {"density_coefficient", to_string(fk.density_coefficient)}};
  }
  if (r.is_null()) throw std::invalid_argument("lf needs --f or --m/--n/--a/--b");
  return {r, code};
}

Outcome run_bounds(const std::string& variant, const std::optional<std::string>& t,
                   const std::optional<std::string>& q, const Rational& C, LogBase base,
                   std::size_t grid, const std::optional<std::string>& cycle_t,
                   const std::optional<std::string>& s, std::optional<double> cross_lo,
                   std::optional<double> cross_hi) {
  if (cycle_t) {
    const auto cb = cycle_complete_bounds(BigInt(*cycle_t), s ? std::optional<BigInt>(BigInt(*s))
                                                              : std::nullopt, base);
    json r = {{"mode", "cycle-complete"},
              {"t", *cycle_t},
              {"c5_log", interval_json(cb.c5_log)},
              {"c7_log", interval_json(cb.c7_log)},
              {"r4t_leading_log", interval_json(r4t_upper_leading_log(BigInt(*cycle_t), base))},
              {"r4t_leading_label", "leading-order, cited"}};
    if (s) {
      r["s"] = *s;
      r["c5_binomial_log"] = interval_json(*cb.c5_binomial_log);
      r["c7_binomial_log"] = interval_json(*cb.c7_binomial_log);
    }
    return {r};
  }
  if (cross_lo || cross_hi) {
    if (!(cross_lo && cross_hi)) throw std::invalid_argument("need --cross-lo and --cross-hi");
    return {{{"mode", "crossovers"},
             {"lo", *cross_lo},
             {"hi", *cross_hi},
             {"crossovers", cycle_complete_crossovers(*cross_lo, *cross_hi, base)}}};
  }
  const MVParams p = params_from(variant, t, q, C, base);
  const auto rep = verify_chain(p, TPrimeGrid{grid});
  const auto fb = final_bound(p);
  return {{{"mode", "chain"},
           {"chain_id", rep.chain_id},
           {"params", params_json(p)},
           {"steps", steps_json(rep.steps)},
           {"overall", rep.overall},
           {"final_bound",
            {{"log_inv_rho", interval_json(fb.log_inv_rho)},
             {"log_x", interval_json(fb.comparison_x)},
             {"log_binomial_x", fb.log_binomial_x ? interval_json(*fb.log_binomial_x) : json(nullptr)},
             {"binomial_below", fb.binomial_below}}}},
          rep.overall ? kExitOk : kExitFalse};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ramsey-forge: clique-Ramsey lower-bound toolkit", "ramsey-forge"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; command-line flags win");
  Globals gl;
  app.add_option("--format", gl.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", gl.seed, "RNG seed");
  app.add_option("--threads", gl.threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--log-base", gl.log_base, "natural | base-2")
      ->check(CLI::IsMember({"natural", "base-2", "base2", "e", "2"}));
  app.add_option("--C", gl.C, "host constant C (rational, r3t only)");

  std::function<Outcome()> action;
  auto base = [&] { return log_base_from_name(gl.log_base == "e" ? "natural" : gl.log_base == "2" ? "base2" : gl.log_base); };
  auto C = [&] { return parse_rational(gl.C); };

  // count
  std::string graph, host;
  std::size_t k = 0, t1 = 0, t2 = 0, tt = 0, s_small = 0, ground = 0, clique_bound = 3, R = 0;
  bool complement = false, fano = false;
  std::uint64_t budget = kDefaultArrowBudget, attempts = 10000, trials = 100000, stream = 0;
  std::size_t grid = 16;
  std::string density = "exact", alpha, variant = "r4t";
  std::optional<std::string> o_graph, o_count, o_family, o_host, o_t, o_q, o_h1, o_h2, o_f, o_m,
      o_n, o_a, o_b, o_s, o_cycle_t, o_variant, n_s, r_s, R_s, t_s;
  std::optional<double> cross_lo, cross_hi;

  auto* count = app.add_subcommand("count", "count k-cliques");
  count->add_option("--graph", graph, "graph file or built-in name")->required();
  count->add_option("--k", k)->required();
  count->add_flag("--complement", complement, "count independent sets instead");
  count->callback([&] { action = [&] { return run_count(graph, k, complement); }; });

  auto* profile = app.add_subcommand("profile", "independence and clique profiles");
  profile->add_option("--graph", graph)->required();
  profile->callback([&] { action = [&] { return run_profile(graph); }; });

  auto* shadow = app.add_subcommand("shadow", "shadow sizes and the Lovasz bound");
  shadow->add_option("--count", o_count, "family size");
  shadow->add_option("--graph", o_graph, "compare K_s count against K_t count of a graph");
  shadow->add_option("--family", o_family, "JSON list of sets, e.g. [[0,1,2],[0,1,3]]");
  shadow->add_option("--ground", ground, "ground set size for --family");
  shadow->add_option("--t", tt)->required();
  shadow->add_option("--s", s_small)->required();
  shadow->callback([&] {
    action = [&] { return run_shadow(o_count, o_graph, o_family, ground, tt, s_small); };
  });

  auto* certify = app.add_subcommand("certify", "certify a host graph");
  certify->add_option("--host", host)->required();
  certify->add_option("--clique-bound", clique_bound, "host must be K_k-free");
  certify->add_option("--R", R)->required();
  certify->add_option("--alpha", alpha)->required();
  certify->add_option("--density", density)->check(CLI::IsMember({"exact", "sampled"}));
  certify->add_option("--trials", trials);
  certify->callback([&] {
    action = [&] {
      return run_certify(host, clique_bound, R, alpha, density_mode(density, trials, gl.seed));
    };
  });

  auto* prop4 = app.add_subcommand("prop4", "independent-set counting bound");
  prop4->add_option("--n", n_s)->required();
  prop4->add_option("--r", r_s)->required();
  prop4->add_option("--R", R_s)->required();
  prop4->add_option("--alpha", alpha)->required();
  prop4->add_option("--t", t_s)->required();
  prop4->add_option("--host", o_host, "check the hypotheses on this graph");
  prop4->add_option("--density", density)->check(CLI::IsMember({"exact", "sampled"}));
  prop4->add_option("--trials", trials);
  prop4->callback([&] {
    action = [&] {
      return run_prop4(*n_s, *r_s, *R_s, alpha, *t_s, o_host, density_mode(density, trials, gl.seed));
    };
  });

  auto* mvparams = app.add_subcommand("mvparams", "construction parameters for t or q");
  mvparams->add_option("--variant", variant)->check(CLI::IsMember({"r4t", "r3t"}));
  mvparams->add_option("--t", o_t);
  mvparams->add_option("--q", o_q, "power of two, e.g. 2^40");
  mvparams->callback([&] {
    action = [&] { return run_mvparams(params_from(variant, o_t, o_q, C(), base())); };
  });

  auto* rho = app.add_subcommand("rho", "independent-image probability");
  rho->add_option("--host", o_host);
  rho->add_option("--t", tt);
  rho->add_option("--graph", o_graph, "also estimate by Monte Carlo on this graph");
  rho->add_option("--trials", trials);
  rho->add_option("--variant", o_variant, "evaluate the analytic bound for r4t or r3t instead")
      ->check(CLI::IsMember({"r4t", "r3t"}));
  rho->add_option("--q", o_q);
  rho->add_option("--t-big", o_t, "t for the analytic bound");
  rho->callback([&] {
    action = [&] {
      if (o_variant) return run_rho_analytic(params_from(*o_variant, o_t, o_q, C(), base()));
      if (!o_host) throw std::invalid_argument("rho needs --host or --variant");
      return run_rho_exact(*o_host, tt, o_graph, trials, gl.seed);
    };
  });

  auto* sample = app.add_subcommand("sample", "one random-map coloring");
  sample->add_option("--graph", graph)->required();
  sample->add_option("--host", host)->required();
  sample->add_option("--stream", stream);
  sample->add_option("--t1", t1);
  sample->add_option("--t2", t2);
  sample->callback([&] {
    action = [&] { return run_sample(graph, host, gl.seed, stream, t1, t2); };
  });

  auto* search = app.add_subcommand("search", "search for a coloring with no red K_t1, blue K_t2");
  search->add_option("--graph", graph)->required();
  search->add_option("--host", host)->required();
  search->add_option("--t1", t1)->required();
  search->add_option("--t2", t2)->required();
  search->add_option("--attempts", attempts);
  search->callback([&] {
    action = [&] { return run_search(graph, host, t1, t2, attempts, gl.seed); };
  });

  auto* arrow = app.add_subcommand("arrow", "decide whether a graph arrows (t1, t2)");
  arrow->add_option("--graph", graph)->required();
  arrow->add_option("--t1", t1);
  arrow->add_option("--t2", t2);
  arrow->add_option("--h1", o_h1, "general target for red");
  arrow->add_option("--h2", o_h2, "general target for blue");
  arrow->add_option("--budget", budget, "search node budget");
  arrow->callback([&] {
    action = [&] {
      if (!o_h1 && (t1 == 0 || t2 == 0)) throw std::invalid_argument("need --t1 and --t2");
      return run_arrow(graph, t1, t2, o_h1, o_h2, budget);
    };
  });

  auto* lf = app.add_subcommand("lf", "decompositions, the family L(F), and FKT bounds");
  lf->add_option("--f", o_f, "the graph F");
  lf->add_flag("--fano", fano, "check the Fano incidence graph is L(F)-free");
  lf->add_option("--m", o_m);
  lf->add_option("--n", o_n);
  lf->add_option("--a", o_a);
  lf->add_option("--b", o_b);
  lf->callback([&] { action = [&] { return run_lf(o_f, fano, o_m, o_n, o_a, o_b, base()); }; });

  auto* bounds = app.add_subcommand("bounds", "verify the inequality chains and cycle bounds");
  bounds->add_option("--variant", variant)->check(CLI::IsMember({"r4t", "r3t"}));
  bounds->add_option("--q", o_q, "power of two, e.g. 2^40");
  bounds->add_option("--t", o_t);
  bounds->add_option("--grid", grid, "interior t' grid points");
  bounds->add_option("--cycle-t", o_cycle_t, "evaluate the C5/C7 bounds at t");
  bounds->add_option("--s", o_s);
  bounds->add_option("--cross-lo", cross_lo);
  bounds->add_option("--cross-hi", cross_hi);
  bounds->callback([&] {
    action = [&] {
      return run_bounds(variant, o_t, o_q, C(), base(), grid, o_cycle_t, o_s, cross_lo, cross_hi);
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  try {
    if (gl.threads > 0) omp_set_num_threads(gl.threads);
    const std::string command = app.get_subcommands().front()->get_name();
    Outcome o = action();
    json report = {{"tool", "ramsey-forge"},
                   {"version", kVersion},
                   {"command", command},
                   {"config",
                    {{"log_base", std::string(to_string(base()))},
                     {"C", to_string(C())},
                     {"seed", gl.seed},
                     {"rng", kRngAlgorithm}}},
                   {"result", o.result}};
    emit(report, gl.format, out);
    if (o.code == kExitError) err << "error: search budget exhausted; no claim\n";
    return o.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace rf::cli
