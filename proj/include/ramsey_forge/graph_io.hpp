#pragma once

#include "ramsey_forge/graph.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rf {

enum class GraphFormat { graph6, dimacs };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Graph load_graph(std::string_view bytes, GraphFormat format);
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path);

std::string emit_graph(const Graph& g, GraphFormat format);

// graph6 body without header or trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

GraphFormat format_from_name(std::string_view name);
// Guesses from the extension: .g6 / .graph6 vs .dimacs / .col / .clq.
GraphFormat format_from_path(std::string_view path);

}  // namespace rf
