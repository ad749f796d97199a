#pragma once

// Non-crossing partitions and the D_G-valued moment/cumulant transforms.
//
// For pi in NC(n) the nested evaluation k_pi[a_1, ..., a_n] processes the
// outer blocks from left to right and multiplies their values in D_G. Inside
// a block (b_1 < ... < b_m) the slot for b_t is a_{b_t} right-multiplied by
// the value of the sub-partition living in the gap (b_t, b_{t+1}).

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwp/algebra.hpp"
#include "gwp/errors.hpp"

namespace gwp {

/// Largest n for which NC(n) is enumerated (|NC(10)| = 16796).
inline constexpr std::size_t kMaxNcOrder = 10;
/// Default arity bound for cumulants of algebra elements.
inline constexpr std::size_t kDefaultArityBound = 8;

class NCPartition {
 public:
  /// Blocks over {1..n}; throws PreconditionError unless they form a
  /// non-crossing partition. Blocks are sorted into canonical order.
  NCPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  bool is_single_block() const noexcept { return blocks_.size() == 1; }

  /// "{1,4}{2,3}"
  std::string to_string() const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// True when no a < b < c < d has a, c in one block and b, d in another.
bool is_noncrossing(const std::vector<std::vector<std::size_t>>& blocks);

/// NC(n) in restricted-growth-string order. Cached per n; safe to call from
/// several threads. Throws BoundError for n > kMaxNcOrder and
/// PreconditionError for n == 0.
const std::vector<NCPartition>& enumerate_nc(std::size_t n);

/// c_k = binom(2k, k) / (k + 1).
unsigned long long catalan_number(unsigned k);

template <class Arg>
using CumulantSource = std::function<DiagonalElement(std::span<const Arg>)>;

namespace detail {

// Position -> index of its block.
std::vector<std::size_t> block_index(const NCPartition& pi);

template <class Arg>
class NestedEvaluator {
 public:
  NestedEvaluator(const NCPartition& pi, std::span<const Arg> args, const CumulantSource<Arg>& source)
      : pi_(pi), args_(args), source_(source), owner_(block_index(pi)) {}

  // Value of the blocks covering [lo, hi) (0-based); nullopt means the unit.
  std::optional<DiagonalElement> interval(std::size_t lo, std::size_t hi) const {
    std::optional<DiagonalElement> result;
    std::size_t i = lo;
    while (i < hi) {
      const auto& block = pi_.blocks()[owner_[i]];
      std::vector<Arg> slots;
      slots.reserve(block.size());
      for (std::size_t t = 0; t < block.size(); ++t) {
        std::size_t pos = block[t] - 1;
        Arg slot = args_[pos];
        if (t + 1 < block.size()) {
          if (auto inner = interval(pos + 1, block[t + 1] - 1)) slot = right_multiply(slot, *inner);
        }
        slots.push_back(std::move(slot));
      }
      DiagonalElement value = source_(std::span<const Arg>(slots));
      if (result) {
        *result *= value;
      } else {
        result = std::move(value);
      }
      if (result->is_zero()) return result;
      i = block.back();
    }
    return result;
  }

 private:
  const NCPartition& pi_;
  std::span<const Arg> args_;
  const CumulantSource<Arg>& source_;
  std::vector<std::size_t> owner_;
};

}  // namespace detail

/// k_pi[args] for an arbitrary multiplicative source. Arg must provide
/// right_multiply(const Arg&, const DiagonalElement&) -> Arg.
template <class Arg>
DiagonalElement nested_evaluate(const NCPartition& pi, std::span<const Arg> args,
                                const CumulantSource<Arg>& source) {
  if (args.size() != pi.size()) {
    throw PreconditionError("arity mismatch: partition of " + std::to_string(pi.size()) +
                            " points, " + std::to_string(args.size()) + " arguments");
  }
  return *detail::NestedEvaluator<Arg>(pi, args, source).interval(0, pi.size());
}

/// Sum of k_pi over NC(n): the moment determined by the cumulant source.
template <class Arg>
DiagonalElement cumulant_to_moment(std::span<const Arg> args, const CumulantSource<Arg>& source) {
  const auto& partitions = enumerate_nc(args.size());
  std::optional<DiagonalElement> total;
  for (const auto& pi : partitions) {
    DiagonalElement value = nested_evaluate(pi, args, source);
    if (total) {
      *total += value;
    } else {
      total = std::move(value);
    }
  }
  return *total;
}

/// A formal argument: a named symbol times a diagonal weight on the right.
/// Lets cumulant_to_moment run against abstract cumulant sequences.
struct TaggedArgument {
  std::string tag;
  DiagonalElement weight;
};

TaggedArgument right_multiply(const TaggedArgument& a, const DiagonalElement& d);

/// Source whose only nonzero cumulant is k_2(x d, y d') = gamma (d d')(v) L_v.
CumulantSource<TaggedArgument> order_two_source(const Graph& g, VertexId v, Scalar gamma);

/// D_G-valued moments and cumulants of algebra elements, memoized per
/// argument tuple. Not thread-safe; use one engine per thread.
class CumulantEngine {
 public:
  explicit CumulantEngine(std::size_t max_arity = kDefaultArityBound);

  std::size_t max_arity() const noexcept { return max_arity_; }

  /// E(a_1 ... a_n).
  DiagonalElement moment(std::span<const AlgebraElement> args);

  /// k_n by the subtraction recursion k_n = E(a_1...a_n) - sum_{pi != 1_n} k_pi.
  DiagonalElement cumulant(std::span<const AlgebraElement> args);

 private:
  void check_arity(std::size_t n) const;
  std::vector<std::size_t> key(std::span<const AlgebraElement> args);

  std::size_t max_arity_;
  // Caches are keyed by interned element ids.
  std::map<AlgebraElement, std::size_t> ids_;
  std::map<std::vector<std::size_t>, DiagonalElement> moments_;
  std::map<std::vector<std::size_t>, DiagonalElement> cumulants_;
};

DiagonalElement moment_to_cumulant(std::span<const AlgebraElement> args,
                                   std::size_t max_arity = kDefaultArityBound);

struct LabeledElement {
  std::string label;
  AlgebraElement element;
};

/// Appends "label*" entries for adjoints not already present.
std::vector<LabeledElement> close_under_adjoint(std::span<const LabeledElement> family);

struct MixedCumulant {
  std::vector<std::string> tuple;  // labels, prefixed "A:" or "B:"
  DiagonalElement value;
};

struct MixedScanReport {
  std::size_t max_order = 0;
  std::size_t tuples_checked = 0;
  std::vector<MixedCumulant> nonzero;
  bool vanishing() const noexcept { return nonzero.empty(); }
};

/// Every k_n (2 <= n <= max_order) whose arguments come from both families,
/// after closing each family under adjoints.
MixedScanReport mixed_cumulant_scan(std::span<const LabeledElement> family_a,
                                    std::span<const LabeledElement> family_b,
                                    std::size_t max_order, CumulantEngine& engine);

}  // namespace gwp
