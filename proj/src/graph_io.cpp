#include "noisy/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace noisy {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::uint32_t parse_id(std::string_view token, std::size_t line) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw FormatError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

EdgeEnd parse_edge_end(const std::string& token, std::size_t line) {
  auto dot = token.find('.');
  if (dot == std::string::npos) throw FormatError(line, "edge-end must look like id.end");
  EdgeEnd end{parse_id(std::string_view(token).substr(0, dot), line), 0};
  std::uint32_t marker = parse_id(std::string_view(token).substr(dot + 1), line);
  if (marker > 1) throw FormatError(line, "edge-end marker must be 0 or 1");
  end.end = static_cast<std::uint8_t>(marker);
  return end;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw FormatError(1, "missing 'n m' header");
  auto header = split(line);
  if (header.size() != 2) throw FormatError(reader.number(), "header must be 'n m'");
  const std::size_t n = parse_id(header[0], reader.number());
  const std::size_t m = parse_id(header[1], reader.number());

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(line)) throw FormatError(reader.number() + 1, "missing edge line");
    auto tok = split(line);
    if (tok.size() != 3) throw FormatError(reader.number(), "edge line must be 'id u v'");
    Edge e{parse_id(tok[0], reader.number()), parse_id(tok[1], reader.number()),
           parse_id(tok[2], reader.number())};
    if (e.u >= n || e.v >= n) throw FormatError(reader.number(), "endpoint out of range");
    edges.push_back(e);
  }

  GraphFile file;
  try {
    file.graph = MoldGraph(n, edges);
  } catch (const GraphError& err) {
    throw FormatError(reader.number(), err.what());
  }

  bool have_line = reader.next(line);
  if (have_line && line == "EMBEDDING") {
    PlanarEmbedding emb;
    for (std::size_t i = 0; i < n; ++i) {
      if (!reader.next(line)) throw FormatError(reader.number() + 1, "missing rotation line");
      auto colon = line.find(':');
      if (colon == std::string::npos) throw FormatError(reader.number(), "rotation must be 'v: ...'");
      VertexId v = parse_id(line.substr(0, colon), reader.number());
      if (emb.rotation.contains(v)) throw FormatError(reader.number(), "duplicate rotation line");
      auto& ends = emb.rotation[v];
      for (const auto& tok : split(line.substr(colon + 1)))
        ends.push_back(parse_edge_end(tok, reader.number()));
    }
    try {
      validate_rotation(file.graph, emb);
    } catch (const GraphError& err) {
      throw FormatError(reader.number(), err.what());
    }
    file.embedding = std::move(emb);
    have_line = reader.next(line);
  }
  if (have_line && line == "REALIZED") {
    std::set<EdgeId> realized;
    if (reader.next(line)) {
      for (const auto& tok : split(line)) {
        EdgeId e = parse_id(tok, reader.number());
        if (!file.graph.has_edge(e)) throw FormatError(reader.number(), "unknown realized edge");
        realized.insert(e);
      }
    }
    file.realized = std::move(realized);
    have_line = reader.next(line);
  }
  while (have_line) {
    if (!split(line).empty()) throw FormatError(reader.number(), "unexpected content: " + line);
    have_line = reader.next(line);
  }
  return file;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const GraphFile& file) {
  const MoldGraph& g = file.graph;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.id << ' ' << e.u << ' ' << e.v << '\n';
  if (file.embedding) {
    out << "EMBEDDING\n";
    for (VertexId v : g.vertices()) {
      out << v << ':';
      auto it = file.embedding->rotation.find(v);
      if (it != file.embedding->rotation.end())
        for (const EdgeEnd& end : it->second) out << ' ' << end.edge << '.' << int(end.end);
      out << '\n';
    }
  }
  if (file.realized) {
    out << "REALIZED\n";
    bool first = true;
    for (EdgeId e : *file.realized) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

std::string to_text(const GraphFile& file) {
  std::ostringstream ss;
  write_graph(ss, file);
  return ss.str();
}

}  // namespace noisy
