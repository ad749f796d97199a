#include "gwp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "gwp/errors.hpp"

namespace gwp {

namespace detail {

struct GraphData {
  std::vector<std::string> vertex_names;
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeId>> out;
  std::unordered_map<std::string, VertexId> vertex_index;
  std::unordered_map<std::string, EdgeId> edge_index;
};

}  // namespace detail

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  auto data = std::make_shared<detail::GraphData>();
  for (auto& name : vertices) {
    auto id = static_cast<VertexId>(data->vertex_names.size());
    if (!data->vertex_index.emplace(name, id).second) {
      throw PreconditionError("duplicate vertex identifier '" + name + "'");
    }
    data->vertex_names.push_back(std::move(name));
  }
  data->out.resize(data->vertex_names.size());
  for (auto& spec : edges) {
    if (data->vertex_index.contains(spec.name)) {
      throw PreconditionError("edge identifier '" + spec.name + "' clashes with a vertex");
    }
    auto id = static_cast<EdgeId>(data->edges.size());
    if (!data->edge_index.emplace(spec.name, id).second) {
      throw PreconditionError("duplicate edge identifier '" + spec.name + "'");
    }
    auto lookup = [&](const std::string& v) {
      auto it = data->vertex_index.find(v);
      if (it == data->vertex_index.end()) {
        throw PreconditionError("edge '" + spec.name + "' references undeclared vertex '" + v + "'");
      }
      return it->second;
    };
    Edge e{std::move(spec.name), lookup(spec.initial), lookup(spec.final)};
    data->out[e.initial].push_back(id);
    data->edges.push_back(std::move(e));
  }
  data_ = std::move(data);
}

std::size_t Graph::vertex_count() const { return data_->vertex_names.size(); }
std::size_t Graph::edge_count() const { return data_->edges.size(); }
const std::string& Graph::vertex_name(VertexId v) const { return data_->vertex_names.at(v); }
const Edge& Graph::edge(EdgeId e) const { return data_->edges.at(e); }
std::span<const Edge> Graph::edges() const { return data_->edges; }
std::span<const EdgeId> Graph::out_edges(VertexId v) const { return data_->out.at(v); }

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = data_->vertex_index.find(std::string(name));
  if (it == data_->vertex_index.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = data_->edge_index.find(std::string(name));
  if (it == data_->edge_index.end()) return std::nullopt;
  return it->second;
}

// --- PathWord ---------------------------------------------------------------

PathWord PathWord::vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  return PathWord(g, {}, v, v);
}

PathWord PathWord::edge(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return PathWord(g, {e}, ed.initial, ed.final);
}

PathWord PathWord::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw PreconditionError("a path needs at least one edge; use a vertex word");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= g.edge_count()) throw PreconditionError("edge index out of range");
    if (i > 0 && g.edge(edges[i - 1]).final != g.edge(edges[i]).initial) {
      throw PreconditionError("edges " + g.edge(edges[i - 1]).name + " and " +
                              g.edge(edges[i]).name + " are not admissible");
    }
  }
  VertexId initial = g.edge(edges.front()).initial;
  VertexId final = g.edge(edges.back()).final;
  return PathWord(g, std::move(edges), initial, final);
}

bool PathWord::has_prefix(const PathWord& prefix) const {
  if (prefix.initial_ != initial_ || prefix.length() > length()) return false;
  return std::equal(prefix.edges_.begin(), prefix.edges_.end(), edges_.begin());
}

PathWord PathWord::strip_prefix(const PathWord& prefix) const {
  if (!has_prefix(prefix)) throw PreconditionError("strip_prefix: not a prefix");
  std::vector<EdgeId> rest(edges_.begin() + static_cast<std::ptrdiff_t>(prefix.length()), edges_.end());
  return PathWord(graph_, std::move(rest), prefix.final_, final_);
}

PathWord PathWord::take(std::size_t n) const {
  if (n > length()) throw PreconditionError("take: beyond word length");
  if (n == 0) return PathWord(graph_, {}, initial_, initial_);
  std::vector<EdgeId> head(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(n));
  VertexId final = graph_.edge(head.back()).final;
  return PathWord(graph_, std::move(head), initial_, final);
}

std::strong_ordering operator<=>(const PathWord& a, const PathWord& b) {
  if (a.is_vertex() != b.is_vertex()) {
    return a.is_vertex() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_vertex()) return a.initial_ <=> b.initial_;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                                b.edges_.begin(), b.edges_.end());
}

void require_same_graph(const PathWord& a, const PathWord& b) {
  if (!(a.graph() == b.graph())) throw PreconditionError("words belong to different graphs");
}

std::optional<PathWord> concat(const PathWord& a, const PathWord& b) {
  require_same_graph(a, b);
  if (a.final() != b.initial()) return std::nullopt;
  if (a.is_vertex()) return b;
  if (b.is_vertex()) return a;
  std::vector<EdgeId> edges(a.edges().begin(), a.edges().end());
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return PathWord::from_edges(a.graph(), std::move(edges));
}

std::vector<PathWord> enumerate_paths(const Graph& g, std::size_t max_len) {
  std::vector<PathWord> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(PathWord::vertex(g, v));
  // Extending every path of length k by each admissible edge in declaration
  // order, with the previous level already sorted, yields level k+1 sorted.
  std::vector<std::vector<EdgeId>> level;
  for (EdgeId e = 0; e < g.edge_count(); ++e) level.push_back({e});
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<std::vector<EdgeId>> next;
    for (const auto& word : level) {
      out.push_back(PathWord::from_edges(g, word));
      if (len == max_len) continue;
      for (EdgeId e : g.out_edges(g.edge(word.back()).final)) {
        auto extended = word;
        extended.push_back(e);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }
  return out;
}

PrimitiveRoot primitive_root(const PathWord& w) {
  if (!w.is_loop()) throw PreconditionError("primitive_root requires a loop of length >= 1");
  auto edges = w.edges();
  const std::size_t n = edges.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = edges[i] == edges[i - period];
    if (periodic) return {w.take(period), n / period};
  }
  return {w, 1};  // unreachable: period n always matches
}

bool is_basic_loop(const PathWord& w) { return w.is_loop() && primitive_root(w).power == 1; }

bool diagram_distinct(const PathWord& a, const PathWord& b) {
  require_same_graph(a, b);
  if (a.is_vertex() || b.is_vertex()) {
    throw PreconditionError("diagram_distinct is defined on finite paths, not vertex words");
  }
  if (a == b) return false;
  if (a.is_loop() && b.is_loop()) return !(primitive_root(a).root == primitive_root(b).root);
  return true;
}

EdgeClassification classify_edges(const Graph& g) {
  EdgeClassification out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    (ed.initial == ed.final ? out.loop_edges : out.non_loop_edges).push_back(e);
  }
  return out;
}

// --- text format ------------------------------------------------------------

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;
};

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  Located identifier(const char* what) {
    skip_ws();
    if (pos_ >= line_.size() || !ident_start(line_[pos_])) fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (pos_ < line_.size() && ident_char(line_[pos_])) ++pos_;
    return {std::string(line_.substr(start, pos_ - start)), line_no_, start + 1};
  }

  void expect(std::string_view token) {
    skip_ws();
    if (line_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, pos_ + 1);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Located> vertices;
  struct EdgeDecl {
    Located name, initial, final;
  };
  std::vector<EdgeDecl> edges;
  bool seen_vertices = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner scan(line, line_no);
    if (scan.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    Located keyword = scan.identifier("'vertices:' or 'edge'");
    if (keyword.text == "vertices") {
      if (seen_vertices) {
        throw ParseError("duplicate 'vertices:' declaration", keyword.line, keyword.column);
      }
      seen_vertices = true;
      scan.expect(":");
      while (!scan.at_end()) vertices.push_back(scan.identifier("vertex identifier"));
    } else if (keyword.text == "edge") {
      EdgeDecl decl;
      decl.name = scan.identifier("edge identifier");
      scan.expect(":");
      decl.initial = scan.identifier("initial vertex");
      scan.expect("->");
      decl.final = scan.identifier("final vertex");
      if (!scan.at_end()) scan.fail("unexpected trailing input");
      edges.push_back(std::move(decl));
    } else {
      throw ParseError("unknown declaration '" + keyword.text + "'", keyword.line, keyword.column);
    }
    if (end == text.size()) break;
  }

  std::map<std::string, bool> declared;  // name -> is vertex
  for (const auto& v : vertices) {
    if (!declared.emplace(v.text, true).second) {
      throw ParseError("duplicate identifier '" + v.text + "'", v.line, v.column);
    }
  }
  for (const auto& e : edges) {
    if (!declared.emplace(e.name.text, false).second) {
      throw ParseError("duplicate identifier '" + e.name.text + "'", e.name.line, e.name.column);
    }
  }
  for (const auto& e : edges) {
    for (const Located* end_point : {&e.initial, &e.final}) {
      auto it = declared.find(end_point->text);
      if (it == declared.end() || !it->second) {
        throw ParseError("edge '" + e.name.text + "' references undeclared vertex '" +
                             end_point->text + "'",
                         end_point->line, end_point->column);
      }
    }
  }

  std::vector<std::string> vertex_names;
  for (auto& v : vertices) vertex_names.push_back(std::move(v.text));
  std::vector<EdgeSpec> specs;
  for (auto& e : edges) {
    specs.push_back({std::move(e.name.text), std::move(e.initial.text), std::move(e.final.text)});
  }
  return Graph(std::move(vertex_names), std::move(specs));
}

std::string format_path(const PathWord& w) {
  const Graph& g = w.graph();
  if (w.is_vertex()) return "@" + g.vertex_name(w.initial());
  std::string out;
  for (EdgeId e : w.edges()) {
    if (!out.empty()) out += '.';
    out += g.edge(e).name;
  }
  return out;
}

PathWord parse_path(const Graph& g, std::string_view text) {
  if (!text.empty() && text.front() == '@') {
    auto v = g.find_vertex(text.substr(1));
    if (!v) throw PreconditionError("unknown vertex '" + std::string(text.substr(1)) + "'");
    return PathWord::vertex(g, *v);
  }
  std::vector<EdgeId> edges;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view name = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    auto e = g.find_edge(name);
    if (!e) {
      // A bare vertex name is accepted as the vertex word.
      if (dot == std::string_view::npos && start == 0) {
        if (auto v = g.find_vertex(name)) return PathWord::vertex(g, *v);
      }
      throw PreconditionError("unknown edge '" + std::string(name) + "'");
    }
    edges.push_back(*e);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return PathWord::from_edges(g, std::move(edges));
}

}  // namespace gwp
