#include "ramsey_forge/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace rf {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::uint64_t kGraph6MaxOrder = 68719476735ull;

bool is_g6_byte(char c) { return c >= 63 && c <= 126; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

void encode_order(std::uint64_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

Graph parse_graph6(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  std::size_t end = bytes.size();
  while (end > pos && is_space(bytes[end - 1])) --end;
  if (pos >= end) throw ParseError(pos, "empty graph6 input");
  if (bytes[pos] == ':' || bytes[pos] == ';')
    throw ParseError(pos, "sparse6 input is not supported");
  if (bytes[pos] == '&') throw ParseError(pos, "digraph6 input is not supported");

  auto take = [&](std::size_t at) -> std::uint64_t {
    if (at >= end) throw ParseError(at, "truncated graph6 order field");
    if (!is_g6_byte(bytes[at]))
      throw ParseError(at, "byte outside graph6 range 63..126");
    return static_cast<std::uint64_t>(bytes[at] - 63);
  };

  std::uint64_t n = 0;
  if (bytes[pos] != 126) {
    n = take(pos);
    pos += 1;
  } else if (pos + 1 < end && bytes[pos + 1] == 126) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | take(pos + 2 + i);
    if (n <= 258047) throw ParseError(pos, "non-canonical 8-byte graph6 order");
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | take(pos + 1 + i);
    if (n <= 62) throw ParseError(pos, "non-canonical 4-byte graph6 order");
    pos += 4;
  }
  if (n > kGraph6MaxOrder) throw ParseError(pos, "graph6 order too large");

  const std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (end - pos != need) {
    throw ParseError(end - pos < need ? end : pos + need,
                     "expected " + std::to_string(need) + " edge bytes, found " +
                         std::to_string(end - pos));
  }
  Graph g(static_cast<std::size_t>(n));
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      if (!is_g6_byte(bytes[at])) throw ParseError(at, "byte outside graph6 range 63..126");
      const int value = bytes[at] - 63;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t at = pos; at < end; ++at)
    if (!is_g6_byte(bytes[at])) throw ParseError(at, "byte outside graph6 range 63..126");
  if (bit % 6) {
    const int value = bytes[end - 1] - 63;
    if (value & ((1 << (6 - bit % 6)) - 1)) throw ParseError(end - 1, "nonzero graph6 padding");
  }
  return g;
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_line(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back({line.substr(i, j - i), base + i});
    i = j;
  }
  return out;
}

std::uint64_t parse_count(const Token& tok) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc{} || p != tok.text.data() + tok.text.size())
    throw ParseError(tok.offset, "expected a non-negative integer, got '" +
                                     std::string(tok.text) + "'");
  return v;
}

Graph parse_dimacs(std::string_view bytes) {
  std::optional<Graph> g;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string_view::npos) eol = bytes.size();
    auto toks = split_line(bytes.substr(pos, eol - pos), pos);
    if (!toks.empty() && toks[0].text != "c") {
      if (toks[0].text == "p") {
        if (g) throw ParseError(toks[0].offset, "duplicate problem line");
        if (toks.size() != 4 || (toks[1].text != "edge" && toks[1].text != "col"))
          throw ParseError(toks[0].offset, "malformed header, expected 'p edge <n> <m>'");
        const auto n = parse_count(toks[2]);
        parse_count(toks[3]);
        if (n > (1u << 20)) throw ParseError(toks[2].offset, "vertex count too large");
        g.emplace(static_cast<std::size_t>(n));
      } else if (toks[0].text == "e") {
        if (!g) throw ParseError(toks[0].offset, "edge line before problem line");
        if (toks.size() != 3) throw ParseError(toks[0].offset, "malformed edge line");
        const auto u = parse_count(toks[1]);
        const auto v = parse_count(toks[2]);
        if (u < 1 || u > g->order()) throw ParseError(toks[1].offset, "vertex index out of range");
        if (v < 1 || v > g->order()) throw ParseError(toks[2].offset, "vertex index out of range");
        if (u == v) throw ParseError(toks[1].offset, "self-loop");
        g->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      } else {
        throw ParseError(toks[0].offset, "unknown line type '" + std::string(toks[0].text) + "'");
      }
    }
    pos = eol + 1;
  }
  if (!g) throw ParseError(bytes.size(), "missing problem line");
  return std::move(*g);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  encode_order(g.order(), out);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) { return parse_graph6(text); }

Graph load_graph(std::string_view bytes, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(bytes) : parse_dimacs(bytes);
}

Graph load_graph(std::istream& in, GraphFormat format) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_graph(data, format);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  Graph g = load_graph(in, format_from_path(path));
  g.set_label(path);
  return g;
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::graph6) return to_graph6(g) + "\n";
  std::ostringstream os;
  os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

GraphFormat format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "dimacs" || name == "dimacs-edge") return GraphFormat::dimacs;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view s) {
    return path.size() >= s.size() && path.substr(path.size() - s.size()) == s;
  };
  if (ends_with(".dimacs") || ends_with(".col") || ends_with(".clq") || ends_with(".dim"))
    return GraphFormat::dimacs;
  return GraphFormat::graph6;
}

}  // namespace rf
