#include "gwp/algebra.hpp"

#include "gwp/errors.hpp"

namespace gwp {

namespace {

void require_same(const Graph& a, const Graph& b) {
  if (!(a == b)) throw PreconditionError("elements belong to different graphs");
}

void require_same(const Backend& a, const Backend& b) {
  if (!(a == b)) {
    throw PreconditionError("backend mismatch: " + a.name() + " vs " + b.name());
  }
}

std::string coefficient_prefix(const Scalar& c) {
  if (c == Scalar(1)) return "";
  if (c.is_real()) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

nlohmann::json scalar_json(const Scalar& c) {
  return {{"re", rational_to_string(c.re())}, {"im", rational_to_string(c.im())}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
  try {
    return Scalar(parse_rational(j.at("re").get<std::string>()),
                  parse_rational(j.at("im").get<std::string>()));
  } catch (const std::exception& e) {
    throw PreconditionError(std::string("malformed scalar: ") + e.what());
  }
}

}  // namespace

// --- DiagonalElement ----------------------------------------------------------

DiagonalElement DiagonalElement::unit(const Graph& g) {
  DiagonalElement d(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.coeffs_.emplace(v, 1);
  return d;
}

DiagonalElement DiagonalElement::vertex(const Graph& g, VertexId v, Scalar c) {
  DiagonalElement d(g);
  d.set(v, std::move(c));
  return d;
}

Scalar DiagonalElement::coefficient(VertexId v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void DiagonalElement::set(VertexId v, Scalar c) {
  if (v >= graph_.vertex_count()) throw PreconditionError("unknown vertex index");
  if (c.is_zero()) {
    coeffs_.erase(v);
  } else {
    coeffs_[v] = std::move(c);
  }
}

DiagonalElement& DiagonalElement::operator+=(const DiagonalElement& other) {
  require_same(graph_, other.graph_);
  for (const auto& [v, c] : other.coeffs_) set(v, coefficient(v) + c);
  return *this;
}

DiagonalElement& DiagonalElement::operator-=(const DiagonalElement& other) {
  require_same(graph_, other.graph_);
  for (const auto& [v, c] : other.coeffs_) set(v, coefficient(v) - c);
  return *this;
}

DiagonalElement& DiagonalElement::operator*=(const DiagonalElement& other) {
  require_same(graph_, other.graph_);
  std::map<VertexId, Scalar> out;
  for (const auto& [v, c] : coeffs_) {
    auto it = other.coeffs_.find(v);
    if (it != other.coeffs_.end()) out.emplace(v, c * it->second);
  }
  coeffs_ = std::move(out);
  return *this;
}

DiagonalElement& DiagonalElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [v, x] : coeffs_) x *= c;
  return *this;
}

std::string DiagonalElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [v, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(c) + "L_" + graph_.vertex_name(v);
  }
  return out;
}

// --- AlgebraElement -----------------------------------------------------------

AlgebraElement AlgebraElement::monomial(const Backend& b, const Monomial& m, Scalar c) {
  AlgebraElement a(m.creation().graph(), b);
  a.add_term(m, c);
  return a;
}

AlgebraElement AlgebraElement::generator(const Backend& b, const GeneratorSymbol& s, Scalar c) {
  return monomial(b, Monomial::of(s), std::move(c));
}

AlgebraElement AlgebraElement::vertex(const Graph& g, const Backend& b, VertexId v, Scalar c) {
  return monomial(b, Monomial::vertex(g, v), std::move(c));
}

AlgebraElement AlgebraElement::creation(const Backend& b, const PathWord& w) {
  return generator(b, GeneratorSymbol::creation(w));
}

AlgebraElement AlgebraElement::annihilation(const Backend& b, const PathWord& w) {
  return generator(b, GeneratorSymbol::annihilation(w));
}

AlgebraElement AlgebraElement::self_adjoint_pair(const Backend& b, const PathWord& w) {
  return creation(b, w) + annihilation(b, w);
}

AlgebraElement AlgebraElement::from_diagonal(const Backend& b, const DiagonalElement& d) {
  AlgebraElement a(d.graph(), b);
  for (const auto& [v, c] : d.coefficients()) a.add_term(Monomial::vertex(d.graph(), v), c);
  return a;
}

std::size_t AlgebraElement::max_degree() const {
  std::size_t out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.degree());
  return out;
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
  require_same(graph_, m.creation().graph());
  if (c.is_zero()) return;
  Monomial key = backend_.kind == BackendKind::axiomatic ? axiomatic_normal_form(m) : m;
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::with_backend(const Backend& b) const {
  AlgebraElement out(graph_, b);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same(graph_, other.graph_);
  require_same(backend_, other.backend_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same(graph_, other.graph_);
  require_same(backend_, other.backend_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.graph_, b.graph_);
  require_same(a.backend_, b.backend_);
  AlgebraElement out(a.graph_, a.backend_);
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) {
      if (a.backend_.is_fock() && x.degree() + y.degree() > a.backend_.depth) {
        throw DepthError(x.degree() + y.degree(), a.backend_.depth);
      }
      if (auto m = multiply(a.backend_, x, y)) out.add_term(*m, cx * cy);
    }
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(c) + m.to_string();
  }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement out(a.graph(), a.backend());
  for (const auto& [m, c] : a.terms()) out.add_term(m.adjoint(), c.conj());
  return out;
}

AlgebraElement right_multiply(const AlgebraElement& a, const DiagonalElement& d) {
  return a * AlgebraElement::from_diagonal(a.backend(), d);
}

AlgebraElement left_multiply(const DiagonalElement& d, const AlgebraElement& a) {
  return AlgebraElement::from_diagonal(a.backend(), d) * a;
}

AlgebraElement product(std::span<const AlgebraElement> factors) {
  if (factors.empty()) throw PreconditionError("product of an empty sequence");
  AlgebraElement acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (acc.is_zero()) break;
    acc = acc * factors[i];
  }
  return acc;
}

DiagonalElement expectation(const AlgebraElement& a) {
  DiagonalElement d(a.graph());
  for (const auto& [m, c] : a.terms()) {
    if (m.is_vertex()) d.set(m.creation().initial(), c);
  }
  return d;
}

DiagonalElement fock_vertex_compression(const AlgebraElement& a) {
  if (!a.backend().is_fock()) throw PreconditionError("vertex compression needs the fock backend");
  const Graph& g = a.graph();
  DiagonalElement d(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const PathWord xi = PathWord::vertex(g, v);
    Scalar total;
    for (const auto& [m, c] : a.terms()) {
      auto image = fock_apply(a.backend(), GeneratorSymbol::annihilation(m.annihilation()), xi);
      if (image) image = fock_apply(a.backend(), GeneratorSymbol::creation(m.creation()), *image);
      if (image && *image == xi) total += c;
    }
    d.set(v, total);
  }
  return d;
}

Support support(const AlgebraElement& a) {
  Support s;
  for (const auto& [m, c] : a.terms()) {
    if (m.is_vertex()) {
      s.vertices.insert(m.creation().initial());
      continue;
    }
    if (!m.creation().is_vertex()) s.paths.insert(m.creation());
    if (!m.annihilation().is_vertex()) s.paths.insert(m.annihilation());
  }
  return s;
}

DiagonalElement restrict_diagonal(const DiagonalElement& d, const std::set<VertexId>& vertices) {
  for (VertexId v : vertices) {
    if (v >= d.graph().vertex_count()) throw PreconditionError("unknown vertex in restriction");
  }
  DiagonalElement out(d.graph());
  for (const auto& [v, c] : d.coefficients()) {
    if (vertices.contains(v)) out.set(v, c);
  }
  return out;
}

std::vector<std::string> FaithfulnessReport::counterexamples() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.counterexample()) out.push_back(e.element);
  }
  return out;
}

FaithfulnessReport faithfulness_probe(const Graph& g, const Backend& b,
                                      std::span<const AlgebraElement> samples) {
  FaithfulnessReport report{b, {}};
  for (const auto& sample : samples) {
    require_same(g, sample.graph());
    AlgebraElement a = sample.with_backend(b);
    DiagonalElement e = expectation(adjoint(a) * a);
    bool e_zero = e.is_zero();
    report.entries.push_back({a.to_string(), std::move(e), e_zero, a.is_zero()});
  }
  return report;
}

// --- JSON ---------------------------------------------------------------------

nlohmann::json to_json(const AlgebraElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : a.terms()) {
    nlohmann::json t = {{"p", format_path(m.creation())}, {"q", format_path(m.annihilation())}};
    t.update(scalar_json(c));
    terms.push_back(std::move(t));
  }
  nlohmann::json j = {{"backend", a.backend().name()}};
  if (a.backend().is_fock()) j["depth"] = a.backend().depth;
  j["terms"] = std::move(terms);
  return j;
}

AlgebraElement element_from_json(const Graph& g, const nlohmann::json& j) {
  Backend b;
  try {
    auto name = j.at("backend").get<std::string>();
    if (name == "axiomatic") {
      b = Backend::axiomatic();
    } else if (name == "fock") {
      b = Backend::fock(j.at("depth").get<std::size_t>());
    } else {
      throw PreconditionError("unknown backend '" + name + "'");
    }
    AlgebraElement a(g, b);
    for (const auto& t : j.at("terms")) {
      Monomial m(parse_path(g, t.at("p").get<std::string>()),
                 parse_path(g, t.at("q").get<std::string>()));
      a.add_term(m, scalar_from_json(t));
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed element json: ") + e.what());
  }
}

nlohmann::json to_json(const DiagonalElement& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [v, c] : d.coefficients()) {
    nlohmann::json entry = {{"vertex", d.graph().vertex_name(v)}};
    entry.update(scalar_json(c));
    out.push_back(std::move(entry));
  }
  return out;
}

DiagonalElement diagonal_from_json(const Graph& g, const nlohmann::json& j) {
  DiagonalElement d(g);
  try {
    for (const auto& entry : j) {
      auto name = entry.at("vertex").get<std::string>();
      auto v = g.find_vertex(name);
      if (!v) throw PreconditionError("unknown vertex '" + name + "'");
      d.set(*v, scalar_from_json(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed diagonal json: ") + e.what());
  }
  return d;
}

nlohmann::json to_json(const FaithfulnessReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"element", e.element},
                       {"expectation_of_square", to_json(e.expectation_of_square)},
                       {"expectation_zero", e.expectation_zero},
                       {"element_zero", e.element_zero},
                       {"counterexample", e.counterexample()}});
  }
  return {{"backend", r.backend.name()},
          {"entries", std::move(entries)},
          {"counterexamples", r.counterexamples()}};
}

}  // namespace gwp
