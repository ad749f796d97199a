#include "gwp/representation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gwp/errors.hpp"

namespace gwp {

Monomial::Monomial(PathWord creation, PathWord annihilation)
    : p_(std::move(creation)), q_(std::move(annihilation)) {
  require_same_graph(p_, q_);
  if (p_.final() != q_.final()) {
    throw PreconditionError("monomial " + format_path(p_) + " / " + format_path(q_) +
                            " is not composable: final vertices differ");
  }
}

Monomial Monomial::vertex(const Graph& g, VertexId v) {
  auto w = PathWord::vertex(g, v);
  return Monomial(w, w);
}

Monomial Monomial::of(const GeneratorSymbol& s) {
  auto end = PathWord::vertex(s.word.graph(), s.word.final());
  if (s.word.is_vertex()) return Monomial(s.word, s.word);
  return s.starred ? Monomial(end, s.word) : Monomial(s.word, end);
}

std::string Monomial::to_string() const {
  return "L[" + format_path(p_) + "]L*[" + format_path(q_) + "]";
}

std::string format_symbol(const GeneratorSymbol& s) {
  return (s.starred ? "L*[" : "L[") + format_path(s.word) + "]";
}

Monomial axiomatic_normal_form(const Monomial& m) {
  auto p = m.creation().edges();
  auto q = m.annihilation().edges();
  std::size_t common = 0;
  while (common < p.size() && common < q.size() &&
         p[p.size() - 1 - common] == q[q.size() - 1 - common]) {
    ++common;
  }
  if (common == 0) return m;
  return Monomial(m.creation().take(p.size() - common), m.annihilation().take(q.size() - common));
}

std::optional<Monomial> multiply(const Backend& b, const Monomial& x, const Monomial& y) {
  const PathWord& left_annihilation = x.annihilation();
  const PathWord& right_creation = y.creation();
  require_same_graph(left_annihilation, right_creation);

  std::optional<Monomial> product;
  // Middle factor L_q* L_p: strip whichever word is a prefix of the other.
  if (right_creation.has_prefix(left_annihilation)) {
    PathWord rest = right_creation.strip_prefix(left_annihilation);
    product.emplace(*concat(x.creation(), rest), y.annihilation());
  } else if (left_annihilation.has_prefix(right_creation)) {
    PathWord rest = left_annihilation.strip_prefix(right_creation);
    product.emplace(x.creation(), *concat(y.annihilation(), rest));
  } else {
    return std::nullopt;
  }
  if (b.kind == BackendKind::axiomatic) return axiomatic_normal_form(*product);
  return product;
}

std::size_t required_depth(std::span<const GeneratorSymbol> word) {
  std::size_t total = 0;
  for (const auto& s : word) total += s.word.length();
  return total;
}

std::optional<PathWord> fock_apply(const Backend& b, const GeneratorSymbol& s,
                                   const PathWord& basis) {
  if (!b.is_fock()) throw PreconditionError("fock_apply needs the fock backend");
  if (basis.length() > b.depth) throw DepthError(basis.length(), b.depth);
  require_same_graph(s.word, basis);
  if (s.starred && !s.word.is_vertex()) {
    if (!basis.has_prefix(s.word)) return std::nullopt;
    return basis.strip_prefix(s.word);
  }
  auto image = concat(s.word, basis);
  if (!image || image->length() > b.depth) return std::nullopt;
  return image;
}

std::optional<Monomial> reduce_word(const Backend& b, std::span<const GeneratorSymbol> word) {
  if (word.empty()) throw PreconditionError("reduce_word needs a nonempty word");
  if (b.is_fock()) {
    std::size_t needed = required_depth(word);
    if (needed > b.depth) throw DepthError(needed, b.depth);
  }
  std::optional<Monomial> acc = Monomial::of(word.front());
  if (b.kind == BackendKind::axiomatic) acc = axiomatic_normal_form(*acc);
  for (std::size_t i = 1; i < word.size() && acc; ++i) {
    acc = multiply(b, *acc, Monomial::of(word[i]));
  }
  return acc;
}

std::optional<Monomial> fock_action_monomial(const Graph& g, const Backend& b,
                                             std::span<const GeneratorSymbol> word) {
  if (!b.is_fock()) throw PreconditionError("fock_action_monomial needs the fock backend");
  if (word.empty()) throw PreconditionError("fock_action_monomial needs a nonempty word");
  std::size_t needed = required_depth(word);
  if (needed > b.depth) throw DepthError(needed, b.depth);

  std::map<PathWord, PathWord> action;
  for (const PathWord& u : enumerate_paths(g, b.depth)) {
    std::optional<PathWord> v = u;
    for (auto it = word.rbegin(); it != word.rend() && v; ++it) v = fock_apply(b, *it, *v);
    if (v) action.emplace(u, *v);
  }
  if (action.empty()) return std::nullopt;

  // The domain of L_p L_q* is {q t}; its shortest element is q itself.
  auto shortest = std::min_element(action.begin(), action.end(), [](const auto& x, const auto& y) {
    return x.first.length() < y.first.length();
  });
  Monomial m(shortest->second, shortest->first);
  for (const auto& [u, image] : action) {
    if (!u.has_prefix(m.annihilation()) ||
        !(image == *concat(m.creation(), u.strip_prefix(m.annihilation())))) {
      throw std::logic_error("fock action is not induced by a single monomial");
    }
  }
  return m;
}

std::optional<ConfluenceWitness> find_associativity_witness(const Graph& g, const Backend& b,
                                                           std::size_t max_len) {
  std::vector<GeneratorSymbol> symbols;
  for (const PathWord& w : enumerate_paths(g, max_len)) {
    symbols.push_back(GeneratorSymbol::creation(w));
    if (!w.is_vertex()) symbols.push_back(GeneratorSymbol::annihilation(w));
  }
  auto normal = [&](const GeneratorSymbol& s) {
    Monomial m = Monomial::of(s);
    return b.kind == BackendKind::axiomatic ? axiomatic_normal_form(m) : m;
  };
  auto times = [&](const std::optional<Monomial>& x, const std::optional<Monomial>& y) {
    return x && y ? multiply(b, *x, *y) : std::nullopt;
  };
  for (const auto& s1 : symbols) {
    auto m1 = normal(s1);
    for (const auto& s2 : symbols) {
      auto m2 = normal(s2);
      auto m12 = multiply(b, m1, m2);
      for (const auto& s3 : symbols) {
        auto m3 = normal(s3);
        auto left = times(m12, m3);
        auto right = times(m1, multiply(b, m2, m3));
        if (left != right) return ConfluenceWitness{{s1, s2, s3}, left, right};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gwp
