#include "gwp/analyzers.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gwp/errors.hpp"

namespace gwp {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render(const std::optional<Monomial>& m) {
  if (!m) return "0";
  if (m->is_vertex()) return "L_" + m->creation().graph().vertex_name(m->creation().initial());
  return m->to_string();
}

std::string vertex_label(const Graph& g, VertexId v) { return "L_" + g.vertex_name(v); }

void check_order(std::size_t max_order) {
  if (max_order == 0) throw PreconditionError("max_order must be at least 1");
  if (max_order > kDefaultArityBound) {
    throw BoundError("order " + std::to_string(max_order) + " exceeds the arity bound " +
                     std::to_string(kDefaultArityBound));
  }
}

std::size_t utf8_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

nlohmann::json order_values_json(const std::vector<OrderValue>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& ov : values) out.push_back({{"order", ov.order}, {"value", to_json(ov.value)}});
  return out;
}

}  // namespace

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = utf8_width(header[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
      widths[c] = std::max(widths[c], utf8_width(row[c]));
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < widths.size(); ++c) {
      std::string cell = c < cells.size() ? cells[c] : "";
      out += cell;
      if (c + 1 < widths.size()) out += std::string(widths[c] - utf8_width(cell) + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(header);
  std::vector<std::string> rule;
  for (std::size_t w : widths) rule.emplace_back(w, '-');
  out += line(rule);
  for (const auto& row : rows) out += line(row);
  return out;
}

// --- systems ------------------------------------------------------------------

std::vector<AlgebraElement> build_semicircular_system(const Graph& g, std::span<const PathWord> loops,
                                                      const Backend& b) {
  for (const auto& l : loops) {
    if (!(l.graph() == g)) throw PreconditionError("loop from a different graph");
    if (!l.is_loop()) throw PreconditionError(format_path(l) + " is not a loop");
  }
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = i + 1; j < loops.size(); ++j) {
      if (!diagram_distinct(loops[i], loops[j])) {
        throw PreconditionError("loops " + format_path(loops[i]) + " and " + format_path(loops[j]) +
                                " are not diagram-distinct");
      }
    }
  }
  std::vector<AlgebraElement> out;
  for (const auto& l : loops) out.push_back(AlgebraElement::self_adjoint_pair(b, l));
  return out;
}

std::set<VertexId> loop_base_vertices(std::span<const PathWord> loops) {
  std::set<VertexId> out;
  for (const auto& l : loops) out.insert(l.initial());
  return out;
}

RDiagonalSystem build_r_diagonal_system(const Graph& g, std::span<const PathWord> paths,
                                        const Backend& b) {
  RDiagonalSystem system;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const PathWord& w = paths[i];
    if (!(w.graph() == g)) throw PreconditionError("path from a different graph");
    if (w.is_vertex() || w.is_loop()) {
      throw PreconditionError(format_path(w) + " is not a non-loop finite path");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (paths[j] == w) throw PreconditionError("path " + format_path(w) + " listed twice");
    }
    system.elements.push_back({"L[" + format_path(w) + "]", AlgebraElement::creation(b, w)});
    system.elements.push_back({"L*[" + format_path(w) + "]", AlgebraElement::annihilation(b, w)});
    system.diagonal_support.insert(w.initial());
    system.diagonal_support.insert(w.final());
  }
  return system;
}

bool totally_disjoint(std::span<const PathWord> first, std::span<const PathWord> second) {
  std::set<EdgeId> edges;
  for (const auto& w : first) edges.insert(w.edges().begin(), w.edges().end());
  for (const auto& w : second) {
    for (EdgeId e : w.edges()) {
      if (edges.contains(e)) return false;
    }
    for (const auto& u : first) {
      if (!diagram_distinct(u, w)) return false;
    }
  }
  return true;
}

// --- semicircularity ----------------------------------------------------------

SemicircularReport check_semicircular(const AlgebraElement& a, std::size_t max_order,
                                      const Backend& b) {
  check_order(max_order);
  AlgebraElement x = a.with_backend(b);
  if (!(adjoint(x) == x)) throw PreconditionError("element is not self-adjoint");

  CumulantEngine engine(kDefaultArityBound);
  SemicircularReport report{x.to_string(), b.name(), DiagonalElement(x.graph()), max_order, {}, {}, true};
  for (std::size_t n = 1; n <= std::max<std::size_t>(max_order, 2); ++n) {
    std::vector<AlgebraElement> args(n, x);
    DiagonalElement k = engine.cumulant(args);
    if (n == 2) report.k2 = k;
    if (n > max_order) break;
    if (n != 2 && !k.is_zero()) report.offenders.push_back({n, k});
    report.cumulants.push_back({n, std::move(k)});
  }
  report.verdict = report.offenders.empty();
  return report;
}

// --- R-diagonality ------------------------------------------------------------

bool is_alternating(const std::vector<bool>& starred) {
  if (starred.empty() || starred.size() % 2 != 0) return false;
  for (std::size_t i = 1; i < starred.size(); ++i) {
    if (starred[i] == starred[i - 1]) return false;
  }
  return true;
}

RDiagonalReport check_r_diagonal(const PathWord& w, std::size_t max_order, const Backend& b) {
  if (w.is_vertex()) throw PreconditionError("R-diagonality is checked on finite paths, not vertices");
  check_order(max_order);
  if (max_order % 2 != 0) throw PreconditionError("max_order must be even");

  const std::vector<AlgebraElement> generators{AlgebraElement::creation(b, w),
                                               AlgebraElement::annihilation(b, w)};
  const std::string names[2] = {"L[" + format_path(w) + "]", "L*[" + format_path(w) + "]"};
  CumulantEngine engine(kDefaultArityBound);
  RDiagonalReport report{format_path(w), b.name(), max_order, {}, true};
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<bool> starred(n);
      std::vector<AlgebraElement> args;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        starred[i] = (mask >> (n - 1 - i)) & 1U;
        args.push_back(generators[starred[i]]);
        labels.push_back(names[starred[i]]);
      }
      DiagonalElement k = engine.cumulant(args);
      if (k.is_zero()) continue;
      bool alternating = is_alternating(starred);
      report.verdict = report.verdict && alternating;
      report.nonzero.push_back({"k_" + std::to_string(n) + "(" + join(labels, ", ") + ")",
                                std::move(starred), std::move(k), alternating});
    }
  }
  return report;
}

// --- freeness -----------------------------------------------------------------

FreenessMember creation_member(const Backend& b, const PathWord& w) {
  return {"L[" + format_path(w) + "]", AlgebraElement::creation(b, w), w};
}

FreenessMember annihilation_member(const Backend& b, const PathWord& w) {
  return {"L*[" + format_path(w) + "]", AlgebraElement::annihilation(b, w), w};
}

FreenessMember pair_member(const Backend& b, const PathWord& w) {
  return {"a:" + format_path(w), AlgebraElement::self_adjoint_pair(b, w), w};
}

FreenessReport check_freeness(std::span<const FreenessMember> family_a,
                              std::span<const FreenessMember> family_b, std::size_t max_order,
                              const Backend& b) {
  check_order(max_order);
  if (family_a.empty() || family_b.empty()) throw PreconditionError("both families must be nonempty");

  FreenessReport report;
  report.backend = b.name();
  std::vector<LabeledElement> a, bb;
  for (const auto& m : family_a) {
    a.push_back({m.label, m.element.with_backend(b)});
    report.family_a.push_back(m.label);
  }
  for (const auto& m : family_b) {
    bb.push_back({m.label, m.element.with_backend(b)});
    report.family_b.push_back(m.label);
  }
  CumulantEngine engine(kDefaultArityBound);
  report.scan = mixed_cumulant_scan(a, bb, max_order, engine);
  report.free_to_order = report.scan.vanishing();

  bool known = true;
  bool distinct = true;
  for (const auto& x : family_a) {
    for (const auto& y : family_b) {
      if (!x.word || !y.word || x.word->is_vertex() || y.word->is_vertex()) {
        known = false;
        continue;
      }
      distinct = distinct && diagram_distinct(*x.word, *y.word);
    }
  }
  if (known) report.predicted_free = distinct;
  report.agreement = !known ? "n/a" : (distinct == report.free_to_order ? "agree" : "disagree");
  return report;
}

// --- decomposition ------------------------------------------------------------

DecompositionReport decompose(const Graph& g, std::size_t loop_length_bound) {
  if (loop_length_bound < 1) throw PreconditionError("loop_length_bound must be at least 1");
  DecompositionReport report;
  report.loop_length_bound = loop_length_bound;
  for (VertexId v = 0; v < g.vertex_count(); ++v) report.diagonal.vertices.push_back(g.vertex_name(v));
  report.diagonal.label = "Δ_" + std::to_string(g.vertex_count());

  std::vector<std::size_t> loops_at(g.vertex_count(), 0);
  for (EdgeId e : classify_edges(g).loop_edges) ++loops_at[g.edge(e).initial];
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (loops_at[v] == 0) continue;
    report.hints.push_back({g.vertex_name(v), loops_at[v], "L(F_" + std::to_string(loops_at[v]) + ")"});
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    EdgeBlock block;
    block.edge = edge.name;
    if (edge.initial == edge.final) {
      block.kind = "loop";
      block.diagonal_support = {g.vertex_name(edge.initial)};
      block.diagonal_label = "ℂ";
      block.structure = "(W*({L_" + edge.name + "}), tr) ⊗ (D_G, 1)";
      block.hint = "L(F_" + std::to_string(loops_at[edge.initial]) + ")";
    } else {
      block.kind = "nonloop";
      block.diagonal_support = {g.vertex_name(edge.initial), g.vertex_name(edge.final)};
      block.diagonal_label = "Δ_2";
      block.structure = "(W*({L_" + edge.name + "}, D_" + edge.name + "), E_" + edge.name + ") ⊗ (D_G, 1)";
    }
    report.edge_blocks.push_back(std::move(block));
  }

  std::set<std::string> block_edges;
  for (const auto& block : report.edge_blocks) block_edges.insert(block.edge);
  std::size_t proper_powers = 0;
  std::size_t long_nonloops = 0;
  bool rotations = false;
  for (const PathWord& w : enumerate_paths(g, loop_length_bound)) {
    if (w.is_vertex()) continue;
    if (!w.is_loop()) {
      if (w.length() >= 2) ++long_nonloops;
      continue;
    }
    if (!is_basic_loop(w)) {
      ++proper_powers;
      continue;
    }
    BasicLoopEntry entry{format_path(w), {}, true};
    for (EdgeId e : w.edges()) {
      entry.factorization.push_back(g.edge(e).name);
      entry.generated_by_edge_blocks = entry.generated_by_edge_blocks && block_edges.contains(g.edge(e).name);
    }
    rotations = rotations || w.length() >= 2;
    report.basic_loops.push_back(std::move(entry));
  }

  report.notes.push_back(std::to_string(proper_powers) + " loops of length <= " +
                         std::to_string(loop_length_bound) +
                         " are proper powers of basic loops and add no block");
  report.notes.push_back(std::to_string(long_nonloops) + " non-loop paths of length 2.." +
                         std::to_string(loop_length_bound) +
                         " are products of edge generators and add no block");
  if (rotations) {
    report.notes.push_back("rotations of one cycle are listed as distinct basic loops");
  }
  if (!report.hints.empty()) {
    report.notes.push_back("free group factor labels are annotations, not verified isomorphisms");
  }
  if (report.hints.size() >= 2) {
    std::vector<std::string> labels;
    std::size_t total = 0;
    for (const auto& h : report.hints) {
      labels.push_back(h.label);
      total += h.loop_edges;
    }
    report.notes.push_back(join(labels, " *_{D_G} ") + " ≠ L(F_" + std::to_string(total) +
                           ") (remark, not checked)");
  }
  return report;
}

// --- audit --------------------------------------------------------------------

std::size_t audit_required_depth(const Graph& g, std::size_t max_order) {
  (void)g;
  // Every audited word is built from single edges; the longest is the order-n
  // cumulant word (n >= 4 for the fourth moment).
  return std::max<std::size_t>(max_order, 4);
}

namespace {

std::string verdict_of(const std::vector<AuditValue>& values) {
  bool all = std::all_of(values.begin(), values.end(), [](const auto& v) { return v.matches; });
  bool none = std::none_of(values.begin(), values.end(), [](const auto& v) { return v.matches; });
  if (all) return "match";
  if (none) return "mismatch";
  return "backend-dependent";
}

std::string render_witness(const ConfluenceWitness& w) {
  const std::string x = format_symbol(w.word[0]), y = format_symbol(w.word[1]), z = format_symbol(w.word[2]);
  return "(" + x + " " + y + ") " + z + " = " + render(w.left_fold) + ", " + x + " (" + y + " " + z +
         ") = " + render(w.right_fold);
}

}  // namespace

AuditReport claims_audit(const Graph& g, std::span<const Backend> backends, std::size_t max_order) {
  if (backends.empty()) throw PreconditionError("audit needs at least one backend");
  check_order(max_order);
  const std::size_t needed = audit_required_depth(g, max_order);
  for (const auto& b : backends) {
    if (b.is_fock() && b.depth < needed) throw DepthError(needed, b.depth);
  }

  AuditReport report{max_order, {}, {}};
  auto finish = [&](AuditRow row) {
    row.verdict = verdict_of(row.computed);
    report.rows.push_back(std::move(row));
  };

  if (g.edge_count() == 0) {
    report.skipped = {"R1", "R2", "R3", "R4", "R5", "R6"};
  } else {
    const PathWord w = PathWord::edge(g, 0);
    const std::string w_name = format_path(w);

    AuditRow r1{"R1", "L_w L_w* = L_{initial(w)} for w = " + w_name, vertex_label(g, w.initial()),
                "reduce_word([L[" + w_name + "], L*[" + w_name + "]])", {}, ""};
    for (const auto& b : backends) {
      std::vector<GeneratorSymbol> word{GeneratorSymbol::creation(w), GeneratorSymbol::annihilation(w)};
      auto m = reduce_word(b, word);
      bool is_initial_projection = m && m->is_vertex() && m->creation().initial() == w.initial();
      std::string value = render(m);
      if (b.is_fock() && m && !m->is_vertex()) {
        if (fock_action_monomial(g, b, word) != m) {
          throw std::logic_error("fock basis action disagrees with the symbolic product");
        }
        if (multiply(b, *m, *m) == m) value += " (idempotent, not a vertex projection)";
      }
      r1.computed.push_back({b.name(), value, is_initial_projection});
    }
    finish(std::move(r1));

    std::vector<AlgebraElement> samples;
    AuditRow r4{"R4", "E(a* a) = 0 implies a = 0", "no counterexample", "faithfulness_probe", {}, ""};
    for (const auto& b : backends) {
      samples.clear();
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        PathWord path = PathWord::edge(g, e);
        samples.push_back(AlgebraElement::creation(b, path));
        samples.push_back(AlgebraElement::annihilation(b, path));
        samples.push_back(AlgebraElement::self_adjoint_pair(b, path));
      }
      FaithfulnessReport probe = faithfulness_probe(g, b, samples);
      auto bad = probe.counterexamples();
      std::string value = bad.empty() ? "no counterexample among " + std::to_string(samples.size()) + " samples"
                                      : "counterexamples: " + join(bad, "; ");
      r4.computed.push_back({b.name(), value, bad.empty()});
    }

    auto loops = classify_edges(g).loop_edges;
    if (loops.empty()) {
      finish(std::move(r4));
      report.skipped = {"R2", "R3", "R5", "R6"};
    } else {
      const PathWord l = PathWord::edge(g, loops.front());
      const VertexId v = l.initial();
      const std::string l_name = format_path(l);
      const std::string a_name = "a_" + l_name;

      AuditRow r2{"R2", "k_2(" + a_name + ", " + a_name + ") = 2 L_v",
                  DiagonalElement::vertex(g, v, 2).to_string(), "moment_to_cumulant", {}, ""};
      AuditRow r3{"R3", "E(" + a_name + "^4) = c_2 (2 L_v)^2",
                  DiagonalElement::vertex(g, v, 8).to_string(), "expectation", {}, ""};
      AuditRow r5{"R5", a_name + " is D_G-semicircular (k_n = 0 for n != 2)",
                  "semicircular", "check_semicircular", {}, ""};
      AuditRow r6{"R6", "k_2(" + a_name + "/sqrt2, " + a_name + "/sqrt2) = 1 L_v",
                  vertex_label(g, v), "moment_to_cumulant", {}, ""};
      for (const auto& b : backends) {
        CumulantEngine engine(kDefaultArityBound);
        AlgebraElement a = AlgebraElement::self_adjoint_pair(b, l);

        std::vector<AlgebraElement> pair(2, a);
        DiagonalElement k2 = engine.cumulant(pair);
        r2.computed.push_back({b.name(), k2.to_string(), k2 == DiagonalElement::vertex(g, v, 2)});

        std::vector<AlgebraElement> four(4, a);
        DiagonalElement m4 = engine.moment(four);
        r3.computed.push_back({b.name(), m4.to_string(), m4 == DiagonalElement::vertex(g, v, 8)});

        SemicircularReport sc = check_semicircular(a, max_order, b);
        std::string value = (sc.verdict ? "semicircular to order " : "not semicircular to order ") +
                            std::to_string(max_order);
        if (!sc.verdict) {
          std::vector<std::string> parts;
          for (const auto& o : sc.offenders) parts.push_back("k_" + std::to_string(o.order) + " = " + o.value.to_string());
          value += ": " + join(parts, ", ");
        }
        r5.computed.push_back({b.name(), value, sc.verdict});

        // The 1/sqrt(2) scaling enters a bilinear k_2 as the squared modulus 1/2.
        std::vector<AlgebraElement> scaled{a, a * Scalar(Rational(1, 2))};
        DiagonalElement k2_scaled = engine.cumulant(scaled);
        r6.computed.push_back({b.name(), k2_scaled.to_string(), k2_scaled == DiagonalElement::vertex(g, v)});
      }
      finish(std::move(r2));
      finish(std::move(r3));
      finish(std::move(r4));
      finish(std::move(r5));
      finish(std::move(r6));
    }
  }

  AuditRow r7{"R7", "the defining relations give an associative product", "associative",
              "find_associativity_witness", {}, ""};
  for (const auto& b : backends) {
    auto witness = find_associativity_witness(g, b, 1);
    r7.computed.push_back({b.name(), witness ? "non-associative: " + render_witness(*witness)
                                             : "associative on generator triples",
                           !witness});
  }
  finish(std::move(r7));
  return report;
}

// --- serialization ------------------------------------------------------------

nlohmann::json to_json(const SemicircularReport& r) {
  return {{"element", r.element},
          {"backend", r.backend},
          {"k2", to_json(r.k2)},
          {"max_checked_order", r.max_checked_order},
          {"cumulants", order_values_json(r.cumulants)},
          {"offenders", order_values_json(r.offenders)},
          {"verdict", r.verdict}};
}

nlohmann::json to_json(const RDiagonalReport& r) {
  nlohmann::json nonzero = nlohmann::json::array();
  for (const auto& e : r.nonzero) {
    nonzero.push_back({{"pattern", e.pattern}, {"value", to_json(e.value)}, {"alternating", e.alternating}});
  }
  return {{"word", r.word},
          {"backend", r.backend},
          {"max_checked_order", r.max_checked_order},
          {"nonzero", std::move(nonzero)},
          {"verdict", r.verdict}};
}

nlohmann::json to_json(const MixedScanReport& r) {
  nlohmann::json nonzero = nlohmann::json::array();
  for (const auto& e : r.nonzero) nonzero.push_back({{"tuple", e.tuple}, {"value", to_json(e.value)}});
  return {{"max_order", r.max_order}, {"tuples_checked", r.tuples_checked}, {"nonzero", std::move(nonzero)}};
}

nlohmann::json to_json(const FreenessReport& r) {
  nlohmann::json predicted = r.predicted_free ? nlohmann::json(*r.predicted_free) : nlohmann::json(nullptr);
  return {{"backend", r.backend},
          {"family_a", r.family_a},
          {"family_b", r.family_b},
          {"scan", to_json(r.scan)},
          {"free_to_order", r.free_to_order},
          {"predicted_free", std::move(predicted)},
          {"agreement", r.agreement}};
}

nlohmann::json to_json(const DecompositionReport& r) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : r.edge_blocks) {
    blocks.push_back({{"edge", b.edge},
                      {"kind", b.kind},
                      {"diagonal_support", b.diagonal_support},
                      {"diagonal_label", b.diagonal_label},
                      {"structure", b.structure},
                      {"hint", b.hint ? nlohmann::json(*b.hint) : nlohmann::json(nullptr)}});
  }
  nlohmann::json loops = nlohmann::json::array();
  for (const auto& l : r.basic_loops) {
    loops.push_back({{"loop", l.loop},
                     {"factorization", l.factorization},
                     {"generated_by_edge_blocks", l.generated_by_edge_blocks}});
  }
  nlohmann::json hints = nlohmann::json::array();
  for (const auto& h : r.hints) {
    hints.push_back({{"vertex", h.vertex}, {"loop_edges", h.loop_edges}, {"label", h.label}});
  }
  return {{"diagonal", {{"vertices", r.diagonal.vertices}, {"label", r.diagonal.label}}},
          {"edge_blocks", std::move(blocks)},
          {"block_count", r.block_count()},
          {"loop_length_bound", r.loop_length_bound},
          {"basic_loops", std::move(loops)},
          {"hints", std::move(hints)},
          {"notes", r.notes}};
}

nlohmann::json to_json(const AuditReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json computed = nlohmann::json::array();
    for (const auto& v : row.computed) {
      computed.push_back({{"backend", v.backend}, {"value", v.value}, {"matches", v.matches}});
    }
    rows.push_back({{"id", row.id},
                    {"claim", row.claim},
                    {"reference_value", row.reference_value},
                    {"operation", row.operation},
                    {"computed", std::move(computed)},
                    {"verdict", row.verdict}});
  }
  return {{"max_order", r.max_order}, {"rows", std::move(rows)}, {"skipped", r.skipped}};
}

std::string to_text(const SemicircularReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.cumulants) rows.push_back({std::to_string(c.order), c.value.to_string()});
  std::string out = "element: " + r.element + "\nbackend: " + r.backend + "\n";
  out += format_table({"n", "k_n"}, rows);
  out += "k_2: " + r.k2.to_string() + "\n";
  out += "verdict: " + std::string(r.verdict ? "semicircular" : "not semicircular") + " to order " +
         std::to_string(r.max_checked_order) + "\n";
  return out;
}

std::string to_text(const RDiagonalReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : r.nonzero) rows.push_back({e.pattern, e.value.to_string(), e.alternating ? "yes" : "no"});
  std::string out = "word: " + r.word + "\nbackend: " + r.backend + "\n";
  out += format_table({"cumulant", "value", "alternating"}, rows);
  out += "verdict: " + std::string(r.verdict ? "R-diagonal" : "not R-diagonal") + " to order " +
         std::to_string(r.max_checked_order) + "\n";
  return out;
}

std::string to_text(const FreenessReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : r.scan.nonzero) rows.push_back({"k_" + std::to_string(e.tuple.size()) + "(" + join(e.tuple, ", ") + ")", e.value.to_string()});
  std::string out = "backend: " + r.backend + "\nfamily A: " + join(r.family_a, ", ") +
                    "\nfamily B: " + join(r.family_b, ", ") + "\n";
  out += "mixed tuples checked: " + std::to_string(r.scan.tuples_checked) + " (orders 2.." +
         std::to_string(r.scan.max_order) + ")\n";
  out += format_table({"nonzero mixed cumulant", "value"}, rows);
  std::string predicted = !r.predicted_free ? "unknown" : (*r.predicted_free ? "free" : "not free");
  out += "computed: " + std::string(r.free_to_order ? "free" : "not free") + " to order " +
         std::to_string(r.scan.max_order) + "\n";
  out += "predicted by diagram-distinctness: " + predicted + "\nagreement: " + r.agreement + "\n";
  return out;
}

std::string to_text(const DecompositionReport& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"diagonal", "-", join(r.diagonal.vertices, " "), r.diagonal.label, "(D_G, E)", "-"});
  for (const auto& b : r.edge_blocks) {
    rows.push_back({b.edge, b.kind, join(b.diagonal_support, " "), b.diagonal_label, b.structure, b.hint.value_or("-")});
  }
  std::string out = format_table({"block", "kind", "support", "diagonal", "structure", "hint"}, rows);
  out += "blocks: " + std::to_string(r.block_count()) + "\n";
  out += "basic loops up to length " + std::to_string(r.loop_length_bound) + ":\n";
  if (r.basic_loops.empty()) out += "  (none)\n";
  for (const auto& l : r.basic_loops) {
    out += "  " + l.loop + " = " + join(l.factorization, " * ") +
           (l.generated_by_edge_blocks ? "  [generated by edge blocks]" : "  [NOT generated]") + "\n";
  }
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

std::string to_text(const AuditReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.rows) {
    bool first = true;
    for (const auto& v : row.computed) {
      rows.push_back({first ? row.id : "", first ? row.claim : "", first ? row.reference_value : "", v.backend,
                      v.value, first ? row.verdict : ""});
      first = false;
    }
  }
  std::string out = format_table({"id", "claim", "stated", "backend", "computed", "verdict"}, rows);
  if (!r.skipped.empty()) out += "skipped: " + join(r.skipped, ", ") + "\n";
  return out;
}

}  // namespace gwp
