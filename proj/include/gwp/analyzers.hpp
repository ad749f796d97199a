#pragma once

// Structural checks over (W*(G), E): semicircularity, R-diagonality,
// freeness against diagram-distinctness, the edge-level free product
// decomposition, and an audit table comparing stated constants with what
// each backend computes.
//
// Every verdict is certified only up to the scanned order; reports carry
// max_checked_order for that reason.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwp/algebra.hpp"
#include "gwp/cumulants.hpp"
#include "gwp/graph.hpp"
#include "gwp/representation.hpp"

namespace gwp {

// --- systems ------------------------------------------------------------------

/// a_j = L_{l_j} + L_{l_j}* for mutually diagram-distinct loops.
std::vector<AlgebraElement> build_semicircular_system(const Graph& g, std::span<const PathWord> loops,
                                                      const Backend& b);

/// Base vertices of the loops: the support of D_N.
std::set<VertexId> loop_base_vertices(std::span<const PathWord> loops);

struct RDiagonalSystem {
  std::vector<LabeledElement> elements;  // L_w, L_w* per path
  std::set<VertexId> diagonal_support;   // D_R: endpoints of the paths
};

/// Pairwise distinct non-loop paths.
RDiagonalSystem build_r_diagonal_system(const Graph& g, std::span<const PathWord> paths,
                                        const Backend& b);

/// Stand-in for total disjointness of two families of non-loop paths: no
/// shared edge, and every cross pair diagram-distinct.
bool totally_disjoint(std::span<const PathWord> first, std::span<const PathWord> second);

// --- semicircularity ----------------------------------------------------------

struct OrderValue {
  std::size_t order;
  DiagonalElement value;
};

struct SemicircularReport {
  std::string element;
  std::string backend;
  DiagonalElement k2;
  std::size_t max_checked_order;
  std::vector<OrderValue> cumulants;  // k_1 .. k_max
  std::vector<OrderValue> offenders;  // nonzero k_n with n != 2
  bool verdict;
};

SemicircularReport check_semicircular(const AlgebraElement& a, std::size_t max_order,
                                      const Backend& b);

// --- R-diagonality ------------------------------------------------------------

struct RDiagonalEntry {
  std::string pattern;  // "k_2(L*[e], L[e])"
  std::vector<bool> starred;
  DiagonalElement value;
  bool alternating;
};

struct RDiagonalReport {
  std::string word;
  std::string backend;
  std::size_t max_checked_order;
  std::vector<RDiagonalEntry> nonzero;
  bool verdict;
};

/// n even and the starred flags alternate.
bool is_alternating(const std::vector<bool>& starred);

RDiagonalReport check_r_diagonal(const PathWord& w, std::size_t max_order, const Backend& b);

// --- freeness -----------------------------------------------------------------

struct FreenessMember {
  std::string label;
  AlgebraElement element;
  std::optional<PathWord> word;  // generating path, when known
};

struct FreenessReport {
  std::string backend;
  std::vector<std::string> family_a;
  std::vector<std::string> family_b;
  MixedScanReport scan;
  bool free_to_order;
  std::optional<bool> predicted_free;  // all cross pairs diagram-distinct
  std::string agreement;               // "agree", "disagree" or "n/a"
};

FreenessReport check_freeness(std::span<const FreenessMember> family_a,
                              std::span<const FreenessMember> family_b, std::size_t max_order,
                              const Backend& b);

/// Member helpers: L_w, L_w* and a_w with their generating path.
FreenessMember creation_member(const Backend& b, const PathWord& w);
FreenessMember annihilation_member(const Backend& b, const PathWord& w);
FreenessMember pair_member(const Backend& b, const PathWord& w);

// --- decomposition ------------------------------------------------------------

struct DiagonalBlock {
  std::vector<std::string> vertices;
  std::string label;  // "Δ_N"
};

struct EdgeBlock {
  std::string edge;
  std::string kind;                           // "loop" or "nonloop"
  std::vector<std::string> diagonal_support;  // vertices of D_w
  std::string diagonal_label;                 // "ℂ" or "Δ_2"
  std::string structure;
  std::optional<std::string> hint;  // "L(F_k)" on loop edges
};

struct BasicLoopEntry {
  std::string loop;
  std::vector<std::string> factorization;  // edge ids in travel order
  bool generated_by_edge_blocks;
};

struct FreeGroupHint {
  std::string vertex;
  std::size_t loop_edges;
  std::string label;
};

struct DecompositionReport {
  DiagonalBlock diagonal;
  std::vector<EdgeBlock> edge_blocks;
  std::size_t loop_length_bound;
  std::vector<BasicLoopEntry> basic_loops;
  std::vector<FreeGroupHint> hints;
  std::vector<std::string> notes;
  std::size_t block_count() const { return edge_blocks.size() + 1; }
};

DecompositionReport decompose(const Graph& g, std::size_t loop_length_bound);

// --- audit --------------------------------------------------------------------

struct AuditValue {
  std::string backend;
  std::string value;
  bool matches;
};

struct AuditRow {
  std::string id;
  std::string claim;
  std::string reference_value;
  std::string operation;  // the library call that reproduces the computed values
  std::vector<AuditValue> computed;
  std::string verdict;  // "match", "mismatch" or "backend-dependent"
};

struct AuditReport {
  std::size_t max_order;
  std::vector<AuditRow> rows;
  std::vector<std::string> skipped;
};

/// Fock depth the audit needs at the given order.
std::size_t audit_required_depth(const Graph& g, std::size_t max_order);

/// Rows R1..R7; loop rows are skipped (and listed) when g has no loop edge.
AuditReport claims_audit(const Graph& g, std::span<const Backend> backends, std::size_t max_order = 6);

// --- serialization ------------------------------------------------------------

nlohmann::json to_json(const SemicircularReport& r);
nlohmann::json to_json(const RDiagonalReport& r);
nlohmann::json to_json(const FreenessReport& r);
nlohmann::json to_json(const DecompositionReport& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const MixedScanReport& r);

std::string to_text(const SemicircularReport& r);
std::string to_text(const RDiagonalReport& r);
std::string to_text(const FreenessReport& r);
std::string to_text(const DecompositionReport& r);
std::string to_text(const AuditReport& r);

/// Aligned plain-text table; widths count UTF-8 code points.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace gwp
