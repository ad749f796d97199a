#pragma once

// Finite linear combinations of monomials L_p L_q* with exact complex-rational
// coefficients, the diagonal subalgebra D_G, and the conditional expectation
// E onto it.

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwp/graph.hpp"
#include "gwp/representation.hpp"
#include "gwp/scalar.hpp"

namespace gwp {

/// An element of D_G: sum of c_v L_v. Multiplication is pointwise because the
/// vertex projections are mutually orthogonal.
class DiagonalElement {
 public:
  explicit DiagonalElement(Graph g) : graph_(std::move(g)) {}

  static DiagonalElement unit(const Graph& g);
  static DiagonalElement vertex(const Graph& g, VertexId v, Scalar c = 1);

  const Graph& graph() const noexcept { return graph_; }
  const std::map<VertexId, Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(VertexId v) const;
  void set(VertexId v, Scalar c);

  bool is_zero() const noexcept { return coeffs_.empty(); }

  DiagonalElement& operator+=(const DiagonalElement& other);
  DiagonalElement& operator-=(const DiagonalElement& other);
  DiagonalElement& operator*=(const DiagonalElement& other);
  DiagonalElement& operator*=(const Scalar& c);

  friend DiagonalElement operator+(DiagonalElement a, const DiagonalElement& b) { return a += b; }
  friend DiagonalElement operator-(DiagonalElement a, const DiagonalElement& b) { return a -= b; }
  friend DiagonalElement operator*(DiagonalElement a, const DiagonalElement& b) { return a *= b; }
  friend DiagonalElement operator*(DiagonalElement a, const Scalar& c) { return a *= c; }
  friend DiagonalElement operator*(const Scalar& c, DiagonalElement a) { return a *= c; }

  friend bool operator==(const DiagonalElement& a, const DiagonalElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "2*L_v1 + 1/2*L_v2"; "0" for the zero element.
  std::string to_string() const;

 private:
  Graph graph_;
  std::map<VertexId, Scalar> coeffs_;
};

/// Finite sum of monomials, reduced under one backend.
class AlgebraElement {
 public:
  AlgebraElement(Graph g, Backend b) : graph_(std::move(g)), backend_(b) {}

  static AlgebraElement monomial(const Backend& b, const Monomial& m, Scalar c = 1);
  static AlgebraElement generator(const Backend& b, const GeneratorSymbol& s, Scalar c = 1);
  static AlgebraElement vertex(const Graph& g, const Backend& b, VertexId v, Scalar c = 1);
  static AlgebraElement creation(const Backend& b, const PathWord& w);
  static AlgebraElement annihilation(const Backend& b, const PathWord& w);
  /// a_w = L_w + L_w*.
  static AlgebraElement self_adjoint_pair(const Backend& b, const PathWord& w);
  static AlgebraElement from_diagonal(const Backend& b, const DiagonalElement& d);

  const Graph& graph() const noexcept { return graph_; }
  const Backend& backend() const noexcept { return backend_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest Monomial::degree among the terms (0 for the zero element).
  std::size_t max_degree() const;

  /// Adds c * m after normalising m for the backend.
  void add_term(const Monomial& m, const Scalar& c);

  /// Same terms re-reduced under another backend.
  AlgebraElement with_backend(const Backend& b) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Scalar& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
  /// Bilinear product through the backend. Fock: DepthError when a term pair
  /// needs more than the backend depth.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.backend_ == b.backend_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ < b.terms_;
  }

  std::string to_string() const;

 private:
  Graph graph_;
  Backend backend_;
  std::map<Monomial, Scalar> terms_;
};

AlgebraElement adjoint(const AlgebraElement& a);

/// a * d and d * a for a diagonal d.
AlgebraElement right_multiply(const AlgebraElement& a, const DiagonalElement& d);
AlgebraElement left_multiply(const DiagonalElement& d, const AlgebraElement& a);

/// Left-to-right product of a nonempty sequence.
AlgebraElement product(std::span<const AlgebraElement> factors);

/// E(a): the coefficients of the vertex monomials L_v.
DiagonalElement expectation(const AlgebraElement& a);

/// Fock-only cross-check of E: v -> <a xi_v, xi_v> computed by applying every
/// term to the vertex basis vectors.
DiagonalElement fock_vertex_compression(const AlgebraElement& a);

struct Support {
  std::set<VertexId> vertices;
  std::set<PathWord> paths;
};

Support support(const AlgebraElement& a);

/// Compression onto the sub-diagonal spanned by the given vertices.
DiagonalElement restrict_diagonal(const DiagonalElement& d, const std::set<VertexId>& vertices);

struct FaithfulnessEntry {
  std::string element;
  DiagonalElement expectation_of_square;  // E(a* a)
  bool expectation_zero;
  bool element_zero;
  bool counterexample() const { return expectation_zero && !element_zero; }
};

struct FaithfulnessReport {
  Backend backend;
  std::vector<FaithfulnessEntry> entries;
  std::vector<std::string> counterexamples() const;
};

FaithfulnessReport faithfulness_probe(const Graph& g, const Backend& b,
                                      std::span<const AlgebraElement> samples);

nlohmann::json to_json(const AlgebraElement& a);
/// Throws PreconditionError on schema violations or unknown identifiers.
AlgebraElement element_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json to_json(const DiagonalElement& d);
DiagonalElement diagonal_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json to_json(const FaithfulnessReport& r);

}  // namespace gwp
