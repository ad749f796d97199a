#pragma once

// Two semantics for words in the generators L_w, L_w*:
//
//  * axiomatic: the rewrite system of the defining relations
//      L_w = L_{v1} L_w L_{v2},  L_w L_w* = L_{v1},  L_w* L_w = L_{v2},
//      L_v^2 = L_v = L_v*,       L_w L_w* L_w = L_w,
//    with normal form L_p L_q* after cancelling a common final segment;
//  * fock: creation/annihilation operators on l^2 of the free semigroupoid,
//    truncated at a basis-word length (the depth).
//
// Both reduce a word to zero or to a single monomial L_p L_q*.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwp/graph.hpp"

namespace gwp {

enum class BackendKind { axiomatic, fock };

struct Backend {
  BackendKind kind = BackendKind::axiomatic;
  std::size_t depth = 0;  // fock only

  static Backend axiomatic() { return {BackendKind::axiomatic, 0}; }
  static Backend fock(std::size_t depth) { return {BackendKind::fock, depth}; }

  bool is_fock() const noexcept { return kind == BackendKind::fock; }
  std::string name() const { return is_fock() ? "fock" : "axiomatic"; }

  friend bool operator==(const Backend&, const Backend&) = default;
};

struct GeneratorSymbol {
  PathWord word;
  bool starred = false;

  static GeneratorSymbol creation(PathWord w) { return {std::move(w), false}; }
  static GeneratorSymbol annihilation(PathWord w) { return {std::move(w), true}; }
};

/// L_p L_q* with final(p) == final(q).
class Monomial {
 public:
  /// Throws PreconditionError when final(p) != final(q).
  Monomial(PathWord creation, PathWord annihilation);

  static Monomial vertex(const Graph& g, VertexId v);
  static Monomial of(const GeneratorSymbol& s);

  const PathWord& creation() const noexcept { return p_; }
  const PathWord& annihilation() const noexcept { return q_; }

  /// L_v for some vertex v.
  bool is_vertex() const { return p_.is_vertex() && q_.is_vertex(); }
  /// Sum of the two word lengths: the Fock depth needed to represent it.
  std::size_t degree() const { return p_.length() + q_.length(); }

  Monomial adjoint() const { return Monomial(q_, p_); }

  /// "L[p]L*[q]" using format_path for both words.
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  PathWord p_;
  PathWord q_;
};

/// Cancels the longest common final segment: L_{p'c} L_{q'c}* -> L_{p'} L_{q'}*.
Monomial axiomatic_normal_form(const Monomial& m);

/// Product of two monomials under the backend's rules. The fock product is
/// exact (no truncation); callers enforce the depth contract.
std::optional<Monomial> multiply(const Backend& b, const Monomial& x, const Monomial& y);

/// Minimal depth for exact evaluation on every vertex vector: the sum of the
/// symbol word lengths.
std::size_t required_depth(std::span<const GeneratorSymbol> word);

/// One generator applied to a basis vector xi_u of the truncated Fock space.
/// nullopt is the zero vector. Throws DepthError when |u| > depth.
std::optional<PathWord> fock_apply(const Backend& b, const GeneratorSymbol& s,
                                   const PathWord& basis);

/// Reduces a nonempty word to zero (nullopt) or one monomial. Under fock,
/// throws DepthError when b.depth < required_depth(word).
std::optional<Monomial> reduce_word(const Backend& b, std::span<const GeneratorSymbol> word);

/// Fock-only: identifies the monomial inducing the word's action by applying
/// it to every basis vector up to the depth (the partial injection q t -> p t).
/// Independent of the symbolic product in `multiply`; used to cross-check it.
std::optional<Monomial> fock_action_monomial(const Graph& g, const Backend& b,
                                             std::span<const GeneratorSymbol> word);

/// A three-letter word whose two bracketings reduce differently.
struct ConfluenceWitness {
  std::vector<GeneratorSymbol> word;
  std::optional<Monomial> left_fold;
  std::optional<Monomial> right_fold;
};

/// Searches three-letter words over generators of length <= max_len for a
/// pair (xy)z != x(yz) under the backend's product.
std::optional<ConfluenceWitness> find_associativity_witness(const Graph& g, const Backend& b,
                                                           std::size_t max_len = 1);

std::string format_symbol(const GeneratorSymbol& s);

}  // namespace gwp
