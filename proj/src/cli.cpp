#include "gwp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwp/analyzers.hpp"
#include "gwp/errors.hpp"
#include "gwp/expr.hpp"

namespace gwp::cli {

namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

struct Options {
  std::string graph_path;
  std::string backend = "fock";
  std::string audit_backends = "both";
  std::optional<std::size_t> depth;
  std::size_t max_order = 6;
  std::vector<std::string> elements;
  std::vector<std::string> family_a;
  std::vector<std::string> family_b;
  std::string word;
  std::size_t max_len = 3;
  std::size_t loop_bound = 3;
  std::string format = "text";
  std::string output;
};

struct Output {
  std::string text;
  json data;
};

std::string plural(std::size_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// Fock depth: the explicit --depth, or the required depth when absent.
Backend resolve_backend(const Options& o, std::size_t required) {
  if (o.backend == "axiomatic") return Backend::axiomatic();
  std::size_t depth = o.depth.value_or(required);
  if (depth < required) throw DepthError(required, depth);
  return Backend::fock(depth);
}

Backend provisional_backend(const Options& o) {
  return o.backend == "axiomatic" ? Backend::axiomatic()
                                  : Backend::fock(std::numeric_limits<std::size_t>::max());
}

std::vector<ParsedElement> parse_elements(const Graph& g, const Options& o,
                                          const std::vector<std::string>& texts) {
  std::vector<ParsedElement> out;
  for (const auto& t : texts) out.push_back(parse_element(g, provisional_backend(o), t));
  return out;
}

std::size_t max_degree(const std::vector<ParsedElement>& xs) {
  std::size_t d = 0;
  for (const auto& x : xs) d = std::max(d, x.element.max_degree());
  return d;
}

void retag(std::vector<ParsedElement>& xs, const Backend& b) {
  for (auto& x : xs) x.element = x.element.with_backend(b);
}

json backend_json(const Backend& b) {
  json j = {{"backend", b.name()}};
  if (b.is_fock()) j["depth"] = b.depth;
  return j;
}

// --- commands -------------------------------------------------------------------

Output cmd_validate(const Options& o) {
  Graph g = load_graph(o.graph_path);
  auto cls = classify_edges(g);
  auto names = [&](const std::vector<EdgeId>& ids) {
    std::vector<std::string> out;
    for (EdgeId e : ids) out.push_back(g.edge(e).name);
    return out;
  };
  std::string summary = plural(g.vertex_count(), "vertex", "vertices") + ", " +
                        plural(g.edge_count(), "edge", "edges");
  Output r;
  auto loops = names(cls.loop_edges);
  auto others = names(cls.non_loop_edges);
  r.text = summary + "\nloop edges: " + (loops.empty() ? "(none)" : join(loops, " ")) +
           "\nnon-loop edges: " + (others.empty() ? "(none)" : join(others, " ")) + "\n";
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(v));
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.name},
                     {"initial", g.vertex_name(e.initial)},
                     {"final", g.vertex_name(e.final)},
                     {"loop", e.initial == e.final}});
  }
  r.data = {{"summary", summary}, {"vertices", vertices}, {"edges", edges},
            {"loop_edges", loops}, {"non_loop_edges", others}};
  return r;
}

Output cmd_paths(const Options& o) {
  Graph g = load_graph(o.graph_path);
  std::vector<std::vector<std::string>> rows;
  json list = json::array();
  for (const PathWord& w : enumerate_paths(g, o.max_len)) {
    std::string kind = w.is_vertex() ? "vertex" : !w.is_loop() ? "path" : is_basic_loop(w) ? "basic loop" : "loop";
    rows.push_back({format_path(w), g.vertex_name(w.initial()), g.vertex_name(w.final()),
                    std::to_string(w.length()), kind});
    list.push_back({{"path", format_path(w)},
                    {"initial", g.vertex_name(w.initial())},
                    {"final", g.vertex_name(w.final())},
                    {"length", w.length()},
                    {"kind", kind}});
  }
  Output r;
  r.text = format_table({"path", "initial", "final", "length", "kind"}, rows) +
           plural(list.size(), "path", "paths") + " of length <= " + std::to_string(o.max_len) + "\n";
  r.data = {{"max_len", o.max_len}, {"paths", list}};
  return r;
}

Output cmd_decompose(const Options& o) {
  DecompositionReport report = decompose(load_graph(o.graph_path), o.loop_bound);
  return {to_text(report), to_json(report)};
}

// Moments and cumulants share their shape: one element gives the orders
// 1..max_order of its powers, several elements give the single mixed value.
Output cmd_series(const Options& o, bool cumulants) {
  Graph g = load_graph(o.graph_path);
  auto xs = parse_elements(g, o, o.elements);
  const bool single = xs.size() == 1;
  if (single && o.max_order > kDefaultArityBound) {
    throw BoundError("order " + std::to_string(o.max_order) + " exceeds the arity bound " +
                     std::to_string(kDefaultArityBound));
  }
  std::size_t required = single ? o.max_order * max_degree(xs) : 0;
  if (!single) {
    for (const auto& x : xs) required += x.element.max_degree();
  }
  Backend b = resolve_backend(o, required);
  retag(xs, b);

  CumulantEngine engine(kDefaultArityBound);
  std::vector<std::vector<std::string>> rows;
  json list = json::array();
  auto emit = [&](std::vector<AlgebraElement> args, std::string label) {
    DiagonalElement value = cumulants ? engine.cumulant(args) : engine.moment(args);
    rows.push_back({label, value.to_string()});
    list.push_back({{"order", args.size()}, {"expression", label}, {"value", to_json(value)}});
  };
  if (single) {
    for (std::size_t n = 1; n <= o.max_order; ++n) {
      std::vector<std::string> labels(n, o.elements[0]);
      std::string label = cumulants ? "k_" + std::to_string(n) + "(" + join(labels, ", ") + ")"
                                    : "E((" + o.elements[0] + ")^" + std::to_string(n) + ")";
      emit(std::vector<AlgebraElement>(n, xs[0].element), label);
    }
  } else {
    std::vector<AlgebraElement> args;
    for (const auto& x : xs) args.push_back(x.element);
    std::vector<std::string> wrapped;
    for (const auto& t : o.elements) wrapped.push_back("(" + t + ")");
    emit(args, cumulants ? "k_" + std::to_string(xs.size()) + "(" + join(o.elements, ", ") + ")"
                         : "E(" + join(wrapped, " ") + ")");
  }
  Output r;
  r.text = "backend: " + b.name() + (b.is_fock() ? " (depth " + std::to_string(b.depth) + ")" : "") + "\n" +
           format_table({cumulants ? "cumulant" : "moment", "value"}, rows);
  r.data = backend_json(b);
  r.data["elements"] = o.elements;
  r.data[cumulants ? "cumulants" : "moments"] = list;
  return r;
}

Output cmd_semicircular(const Options& o) {
  Graph g = load_graph(o.graph_path);
  auto xs = parse_elements(g, o, o.elements);
  if (xs.size() != 1) throw PreconditionError("check-semicircular takes exactly one --element");
  Backend b = resolve_backend(o, std::max<std::size_t>(o.max_order, 2) * max_degree(xs));
  SemicircularReport report = check_semicircular(xs[0].element, o.max_order, b);
  return {to_text(report), to_json(report)};
}

Output cmd_rdiagonal(const Options& o) {
  Graph g = load_graph(o.graph_path);
  PathWord w = parse_path(g, o.word);
  Backend b = resolve_backend(o, o.max_order * w.length());
  RDiagonalReport report = check_r_diagonal(w, o.max_order, b);
  return {to_text(report), to_json(report)};
}

Output cmd_freeness(const Options& o) {
  Graph g = load_graph(o.graph_path);
  auto a = parse_elements(g, o, o.family_a);
  auto bb = parse_elements(g, o, o.family_b);
  Backend b = resolve_backend(o, o.max_order * std::max(max_degree(a), max_degree(bb)));
  retag(a, b);
  retag(bb, b);
  auto members = [](const std::vector<ParsedElement>& xs, const std::vector<std::string>& texts) {
    std::vector<FreenessMember> out;
    for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({texts[i], xs[i].element, xs[i].word});
    return out;
  };
  FreenessReport report = check_freeness(members(a, o.family_a), members(bb, o.family_b), o.max_order, b);
  return {to_text(report), to_json(report)};
}

Output cmd_audit(const Options& o) {
  Graph g = load_graph(o.graph_path);
  const std::size_t required = audit_required_depth(g, o.max_order);
  std::vector<Backend> backends;
  Options fock = o;
  fock.backend = "fock";
  if (o.audit_backends != "fock") backends.push_back(Backend::axiomatic());
  if (o.audit_backends != "axiomatic") backends.push_back(resolve_backend(fock, required));
  AuditReport report = claims_audit(g, backends, o.max_order);
  return {to_text(report), to_json(report)};
}

// --- driver ---------------------------------------------------------------------

json error_json(const Error& e) {
  json j = {{"kind", e.kind()}, {"message", e.what()}};
  if (auto* p = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = p->line();
    j["column"] = p->column();
  }
  if (auto* d = dynamic_cast<const DepthError*>(&e)) {
    j["required_depth"] = d->required();
    j["depth"] = d->available();
  }
  return {{"error", j}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator-valued free probability on graph W*-algebras", "gwp"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "graph description file")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", o.output, "write the report to this file");
  };
  auto add_backend = [&](CLI::App* sub) {
    sub->add_option("--backend", o.backend, "axiomatic or fock")->check(CLI::IsMember({"axiomatic", "fock"}));
    sub->add_option("--depth", o.depth, "fock truncation depth (default: the required depth)");
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--max-order,--order", o.max_order, "highest order computed")->check(CLI::Range(1, 64));
  };

  auto* validate = app.add_subcommand("validate", "parse a graph file and summarize it");
  add_graph(validate);

  auto* paths = app.add_subcommand("paths", "enumerate the free semigroupoid up to a length");
  add_graph(paths);
  paths->add_option("--max-len", o.max_len, "longest path listed");

  auto* decomp = app.add_subcommand("decompose", "edge-level free product decomposition");
  add_graph(decomp);
  decomp->add_option("--loop-bound", o.loop_bound, "longest basic loop listed");

  auto* moments = app.add_subcommand("moments", "moments E(a^n) or a mixed moment");
  auto* cumulants = app.add_subcommand("cumulants", "cumulants k_n(a, ..., a) or a mixed cumulant");
  for (auto* sub : {moments, cumulants}) {
    add_graph(sub);
    add_backend(sub);
    add_order(sub);
    sub->add_option("--element", o.elements, "element expression (repeatable)")->required();
  }

  auto* semicircular = app.add_subcommand("check-semicircular", "scan k_n(a, ..., a) for n != 2");
  add_graph(semicircular);
  add_backend(semicircular);
  add_order(semicircular);
  semicircular->add_option("--element", o.elements, "self-adjoint element expression")->required();

  auto* rdiagonal = app.add_subcommand("check-rdiagonal", "scan cumulants over {L_w, L_w*}");
  add_graph(rdiagonal);
  add_backend(rdiagonal);
  add_order(rdiagonal);
  rdiagonal->add_option("--word", o.word, "finite path w")->required();

  auto* freeness = app.add_subcommand("check-freeness", "mixed cumulants between two families");
  add_graph(freeness);
  add_backend(freeness);
  add_order(freeness);
  freeness->add_option("--family-a", o.family_a, "member of the first family (repeatable)")->required();
  freeness->add_option("--family-b", o.family_b, "member of the second family (repeatable)")->required();

  auto* audit = app.add_subcommand("audit", "compare stated constants with both backends");
  add_graph(audit);
  add_order(audit);
  audit->add_option("--backend", o.audit_backends, "axiomatic, fock or both")
      ->check(CLI::IsMember({"axiomatic", "fock", "both"}));
  audit->add_option("--depth", o.depth, "fock truncation depth (default: the required depth)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool as_json = o.format == "json";
  try {
    Output result;
    if (validate->parsed()) result = cmd_validate(o);
    else if (paths->parsed()) result = cmd_paths(o);
    else if (decomp->parsed()) result = cmd_decompose(o);
    else if (moments->parsed()) result = cmd_series(o, false);
    else if (cumulants->parsed()) result = cmd_series(o, true);
    else if (semicircular->parsed()) result = cmd_semicircular(o);
    else if (rdiagonal->parsed()) result = cmd_rdiagonal(o);
    else if (freeness->parsed()) result = cmd_freeness(o);
    else result = cmd_audit(o);

    std::string text = as_json ? result.data.dump(2) + "\n" : result.text;
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw IoError("cannot write '" + o.output + "'");
      file << text;
    }
    return 0;
  } catch (const Error& e) {
    if (as_json) {
      out << error_json(e).dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
}

}  // namespace gwp::cli
