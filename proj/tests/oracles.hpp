#pragma once

// Independent reference implementations used by the tests. None of them
// calls into the representation, algebra or cumulant code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gwp/algebra.hpp"
#include "gwp/graph.hpp"
#include "gwp/scalar.hpp"

namespace oracle {

using gwp::EdgeId;
using gwp::Graph;
using gwp::Scalar;
using gwp::VertexId;

// A basis vector of l^2(F+(G)): a start vertex and an edge string.
struct Basis {
  VertexId start;
  std::vector<EdgeId> edges;
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

// One generator: L_v (edges empty), L_w or L_w*.
struct Letter {
  VertexId start;
  std::vector<EdgeId> edges;
  bool star = false;
};

struct Term {
  Scalar coefficient;
  Letter letter;
};

// A linear combination of generators.
using Element = std::vector<Term>;
using Vector = std::map<Basis, Scalar>;

inline VertexId end_of(const Graph& g, VertexId start, const std::vector<EdgeId>& edges) {
  return edges.empty() ? start : g.edge(edges.back()).final;
}

// Untruncated Fock action of one generator on one basis vector.
inline std::optional<Basis> apply(const Graph& g, const Letter& x, const Basis& u) {
  if (x.edges.empty()) {
    if (u.start != x.start) return std::nullopt;
    return u;
  }
  if (!x.star) {
    if (end_of(g, x.start, x.edges) != u.start) return std::nullopt;
    Basis out{x.start, x.edges};
    out.edges.insert(out.edges.end(), u.edges.begin(), u.edges.end());
    return out;
  }
  if (u.start != x.start || u.edges.size() < x.edges.size() ||
      !std::equal(x.edges.begin(), x.edges.end(), u.edges.begin())) {
    return std::nullopt;
  }
  Basis out{end_of(g, x.start, x.edges), {}};
  out.edges.assign(u.edges.begin() + static_cast<std::ptrdiff_t>(x.edges.size()), u.edges.end());
  return out;
}

inline Vector apply(const Graph& g, const Element& a, const Vector& v) {
  Vector out;
  for (const auto& [basis, c] : v) {
    for (const auto& t : a) {
      if (auto image = apply(g, t.letter, basis)) {
        Scalar& slot = out[*image];
        slot = slot + t.coefficient * c;
        if (slot.is_zero()) out.erase(*image);
      }
    }
  }
  return out;
}

// v -> <a_1 ... a_n xi_v, xi_v>: the Fock-side moment, no truncation.
inline gwp::DiagonalElement fock_moment(const Graph& g, const std::vector<Element>& factors) {
  gwp::DiagonalElement out(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Vector x{{Basis{v, {}}, Scalar(1)}};
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = apply(g, *it, x);
    auto hit = x.find(Basis{v, {}});
    if (hit != x.end()) out.set(v, hit->second);
  }
  return out;
}

// One-loop graph under the defining relations: L_l is a unitary U with
// U U* = U* U = 1, so E((U + U*)^n) counts sign words of length n summing
// to zero.
inline long long one_loop_axiomatic_moment(unsigned n) {
  long long count = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    int sum = 0;
    for (unsigned i = 0; i < n; ++i) sum += (mask >> i) & 1U ? 1 : -1;
    if (sum == 0) ++count;
  }
  return count;
}

// All set partitions of {1..n} as block lists (restricted growth strings).
inline std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> blocks(used);
      for (std::size_t k = 0; k < n; ++k) blocks[label[k]].push_back(k + 1);
      out.push_back(std::move(blocks));
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      label[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

// Crossing test on the label sequence: positions a < b < c < d with
// label[a] == label[c] != label[b] == label[d].
inline bool crossing(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n) {
  std::vector<std::size_t> label(n + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t x : blocks[b]) label[x] = b;
  }
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      for (std::size_t c = b + 1; c <= n; ++c)
        for (std::size_t d = c + 1; d <= n; ++d)
          if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return true;
  return false;
}

// Catalan numbers by the convolution recurrence.
inline std::vector<unsigned long long> catalan_table(std::size_t k_max) {
  std::vector<unsigned long long> c(k_max + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c;
}

// --- random inputs ----------------------------------------------------------------

inline Graph random_graph(std::mt19937& rng, std::size_t max_vertices = 4, std::size_t max_edges = 5) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> ne(1, max_edges);
  std::size_t m = ne(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i + 1));
  std::vector<gwp::EdgeSpec> edges;
  for (std::size_t j = 0; j < m; ++j) {
    edges.push_back({"e" + std::to_string(j + 1), vertices[pick(rng)], vertices[pick(rng)]});
  }
  return Graph(vertices, edges);
}

// A random generator symbol with a small rational coefficient, built both as
// a library element and as an oracle element.
struct Generator {
  gwp::AlgebraElement element;
  Element reference;
};

inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), im(0, 3);
  Scalar s(gwp::Rational(num(rng), den(rng)));
  if (im(rng) == 0) s = s + Scalar(gwp::Rational(num(rng), den(rng))) * Scalar::i();
  if (s.is_zero()) s = Scalar(1);
  return s;
}

inline Generator random_generator(std::mt19937& rng, const Graph& g, const gwp::Backend& b,
                                  std::size_t terms = 2) {
  Generator out{gwp::AlgebraElement(g, b), {}};
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> pv(0, g.vertex_count() - 1), pe(0, g.edge_count() - 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Scalar c = random_scalar(rng);
    int k = g.edge_count() == 0 ? 0 : kind(rng);
    if (k == 0) {
      auto v = static_cast<VertexId>(pv(rng));
      out.element += gwp::AlgebraElement::vertex(g, b, v, c);
      out.reference.push_back({c, {v, {}, false}});
    } else {
      auto e = static_cast<EdgeId>(pe(rng));
      gwp::PathWord w = gwp::PathWord::edge(g, e);
      bool star = k == 2;
      out.element += gwp::AlgebraElement::generator(b, {w, star}, c);
      out.reference.push_back({c, {g.edge(e).initial, {e}, star}});
    }
  }
  return out;
}

}  // namespace oracle
