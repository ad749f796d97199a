#include "gwp/cumulants.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace gwp {

NCPartition::NCPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ == 0) throw PreconditionError("partition of an empty set");
  std::vector<bool> seen(n_ + 1, false);
  for (auto& block : blocks_) {
    if (block.empty()) throw PreconditionError("empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t x : block) {
      if (x < 1 || x > n_ || seen[x]) throw PreconditionError("blocks do not partition {1..n}");
      seen[x] = true;
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), true) != static_cast<std::ptrdiff_t>(n_)) {
    throw PreconditionError("blocks do not cover {1..n}");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (!is_noncrossing(blocks_)) throw PreconditionError("partition " + to_string() + " is crossing");
}

std::string NCPartition::to_string() const {
  std::string out;
  for (const auto& block : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

bool is_noncrossing(const std::vector<std::vector<std::size_t>>& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      for (std::size_t a : blocks[x]) {
        for (std::size_t b : blocks[y]) {
          if (b <= a) continue;
          for (std::size_t c : blocks[x]) {
            if (c <= b) continue;
            for (std::size_t d : blocks[y]) {
              if (d > c) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

namespace {

// Restricted growth strings, pruned as soon as a crossing appears: placing
// position k into a block whose current last element is p crosses exactly
// when some position strictly between p and k belongs to a block that started
// before p.
void grow(std::size_t n, std::vector<std::size_t>& rgs, std::vector<std::size_t>& first,
          std::vector<std::size_t>& last, std::vector<NCPartition>& out) {
  const std::size_t k = rgs.size();
  if (k == n) {
    std::vector<std::vector<std::size_t>> blocks(first.size());
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    out.emplace_back(n, std::move(blocks));
    return;
  }
  for (std::size_t b = 0; b <= first.size(); ++b) {
    if (b < first.size()) {
      const std::size_t p = last[b];
      bool crossing = false;
      for (std::size_t j = p + 1; j < k && !crossing; ++j) crossing = first[rgs[j]] < p;
      if (crossing) continue;
      rgs.push_back(b);
      last[b] = k;
      grow(n, rgs, first, last, out);
      last[b] = p;
      rgs.pop_back();
    } else {
      rgs.push_back(b);
      first.push_back(k);
      last.push_back(k);
      grow(n, rgs, first, last, out);
      last.pop_back();
      first.pop_back();
      rgs.pop_back();
    }
  }
}

std::array<std::once_flag, kMaxNcOrder + 1> nc_once;
std::array<std::vector<NCPartition>, kMaxNcOrder + 1> nc_cache;

}  // namespace

const std::vector<NCPartition>& enumerate_nc(std::size_t n) {
  if (n == 0) throw PreconditionError("NC(0) is not enumerated");
  if (n > kMaxNcOrder) {
    throw BoundError("NC(" + std::to_string(n) + ") exceeds the bound " + std::to_string(kMaxNcOrder));
  }
  std::call_once(nc_once[n], [n] {
    std::vector<std::size_t> rgs, first, last;
    grow(n, rgs, first, last, nc_cache[n]);
  });
  return nc_cache[n];
}

unsigned long long catalan_number(unsigned k) {
  // binom(2k, k) / (k + 1), built incrementally to stay exact.
  unsigned long long c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace detail {

std::vector<std::size_t> block_index(const NCPartition& pi) {
  std::vector<std::size_t> owner(pi.size());
  for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
    for (std::size_t x : pi.blocks()[b]) owner[x - 1] = b;
  }
  return owner;
}

}  // namespace detail

TaggedArgument right_multiply(const TaggedArgument& a, const DiagonalElement& d) {
  return {a.tag, a.weight * d};
}

CumulantSource<TaggedArgument> order_two_source(const Graph& g, VertexId v, Scalar gamma) {
  return [g, v, gamma](std::span<const TaggedArgument> args) {
    DiagonalElement out(g);
    if (args.size() != 2) return out;
    Scalar weight = (args[0].weight * args[1].weight).coefficient(v);
    out.set(v, gamma * weight);
    return out;
  };
}

// --- CumulantEngine -------------------------------------------------------------

CumulantEngine::CumulantEngine(std::size_t max_arity) : max_arity_(max_arity) {
  if (max_arity_ > kMaxNcOrder) {
    throw BoundError("arity bound " + std::to_string(max_arity_) + " exceeds " +
                     std::to_string(kMaxNcOrder));
  }
}

void CumulantEngine::check_arity(std::size_t n) const {
  if (n == 0) throw PreconditionError("cumulants need at least one argument");
  if (n > max_arity_) {
    throw BoundError("arity " + std::to_string(n) + " exceeds the bound " + std::to_string(max_arity_));
  }
}

std::vector<std::size_t> CumulantEngine::key(std::span<const AlgebraElement> args) {
  std::vector<std::size_t> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(ids_.try_emplace(a, ids_.size()).first->second);
  return out;
}

DiagonalElement CumulantEngine::moment(std::span<const AlgebraElement> args) {
  check_arity(args.size());
  auto k = key(args);
  if (auto it = moments_.find(k); it != moments_.end()) return it->second;
  DiagonalElement value = expectation(product(args));
  moments_.emplace(std::move(k), value);
  return value;
}

DiagonalElement CumulantEngine::cumulant(std::span<const AlgebraElement> args) {
  check_arity(args.size());
  const Graph& g = args.front().graph();
  if (std::any_of(args.begin(), args.end(), [](const auto& a) { return a.is_zero(); })) {
    return DiagonalElement(g);
  }
  auto k = key(args);
  if (auto it = cumulants_.find(k); it != cumulants_.end()) return it->second;

  DiagonalElement value = moment(args);
  if (args.size() > 1) {
    CumulantSource<AlgebraElement> self = [this](std::span<const AlgebraElement> sub) {
      return cumulant(sub);
    };
    for (const auto& pi : enumerate_nc(args.size())) {
      if (pi.is_single_block()) continue;
      value -= nested_evaluate(pi, args, self);
    }
  }
  cumulants_.emplace(std::move(k), value);
  return value;
}

DiagonalElement moment_to_cumulant(std::span<const AlgebraElement> args, std::size_t max_arity) {
  CumulantEngine engine(max_arity);
  return engine.cumulant(args);
}

std::vector<LabeledElement> close_under_adjoint(std::span<const LabeledElement> family) {
  std::vector<LabeledElement> out(family.begin(), family.end());
  for (const auto& member : family) {
    AlgebraElement star = adjoint(member.element);
    bool present = std::any_of(out.begin(), out.end(),
                               [&](const LabeledElement& x) { return x.element == star; });
    if (!present) out.push_back({member.label + "*", std::move(star)});
  }
  return out;
}

MixedScanReport mixed_cumulant_scan(std::span<const LabeledElement> family_a,
                                    std::span<const LabeledElement> family_b,
                                    std::size_t max_order, CumulantEngine& engine) {
  if (max_order > engine.max_arity()) {
    throw BoundError("scan order " + std::to_string(max_order) + " exceeds the bound " +
                     std::to_string(engine.max_arity()));
  }
  MixedScanReport report;
  report.max_order = max_order;
  if (family_a.empty() || family_b.empty()) return report;

  struct Member {
    std::string label;
    const AlgebraElement* element;
    bool from_a;
  };
  auto closed_a = close_under_adjoint(family_a);
  auto closed_b = close_under_adjoint(family_b);
  std::vector<Member> members;
  for (const auto& x : closed_a) members.push_back({"A:" + x.label, &x.element, true});
  for (const auto& x : closed_b) members.push_back({"B:" + x.label, &x.element, false});

  const std::size_t m = members.size();
  for (std::size_t n = 2; n <= max_order; ++n) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      bool has_a = false, has_b = false;
      for (std::size_t i : idx) (members[i].from_a ? has_a : has_b) = true;
      if (has_a && has_b) {
        std::vector<AlgebraElement> args;
        args.reserve(n);
        for (std::size_t i : idx) args.push_back(*members[i].element);
        ++report.tuples_checked;
        DiagonalElement k = engine.cumulant(args);
        if (!k.is_zero()) {
          std::vector<std::string> labels;
          for (std::size_t i : idx) labels.push_back(members[i].label);
          report.nonzero.push_back({std::move(labels), std::move(k)});
        }
      }
      // Odometer over {0..m-1}^n, last slot fastest.
      std::size_t pos = n;
      while (pos > 0 && ++idx[pos - 1] == m) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return report;
}

}  // namespace gwp
