#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "noisy/embedding.hpp"
#include "noisy/graph.hpp"

namespace noisy {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Contents of a graph text file.
///
///     n m
///     edge_id u v            (m lines)
///     EMBEDDING              (optional)
///     v: e.end e.end ...     (one line per vertex, clockwise)
///     REALIZED               (optional)
///     id id ...              (one line)
struct GraphFile {
  MoldGraph graph;
  std::optional<PlanarEmbedding> embedding;
  std::optional<std::set<EdgeId>> realized;
};

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const GraphFile& file);
std::string to_text(const GraphFile& file);

}  // namespace noisy
