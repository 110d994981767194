#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dyck/error.hpp"
#include "dyck/matrix.hpp"

namespace dyck {

/// An Eulerian digraph given as an ordered list of directed cycles over
/// vertices 0..vertex_count-1. Each cycle lists pairwise-distinct
/// vertices; the edge from the first to the second listed vertex is the
/// cycle's distinguished first edge (a singleton cycle is a loop). The
/// edge multiset is derived from the cycles; parallel edges and repeated
/// loops are allowed. Every vertex automatically has in-degree equal to
/// out-degree.
class EulerianDigraph {
 public:
  /// Throws std::invalid_argument on an empty cycle, an out-of-range
  /// vertex, or a repeated vertex within one cycle.
  EulerianDigraph(std::size_t vertex_count,
                  std::vector<std::vector<std::size_t>> cycles);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::vector<std::size_t>>& cycles() const noexcept {
    return cycles_;
  }

  /// Edges in label order: cycle by cycle, each cycle's edges in listed
  /// order, closing back to its first vertex.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool operator==(const EulerianDigraph&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<std::size_t>> cycles_;
};

/// The digraph of a Dyck matrix: vertex j per column, cycle i per row,
/// listing the 1-columns of row i in increasing order.
EulerianDigraph matrix_to_digraph(const DyckMatrix& m);

/// The inverse: renumbers vertices by first appearance (cycle order,
/// then listed order within each cycle), stacks the cycle supports into
/// a grid and validates it.
///
/// Throws MatrixError(not_in_family) when the digraph has no
/// Dyck-matrix form: an isolated vertex, a cycle whose listed order
/// disagrees with the renumbering, or a grid that fails validation.
DyckMatrix digraph_to_matrix(const EulerianDigraph& g);

struct FamilyViolation {
  enum class Kind {
    containment,    // E1: one cycle's vertex set inside another's
    shared_prefix,  // E2: shared vertices not the first of both cycles
  };
  Kind kind;
  std::size_t cycle_a = 0;  // 0-based cycle indices
  std::size_t cycle_b = 0;
  std::string detail;
};

struct FamilyReport {
  std::vector<FamilyViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

/// Checks the digraph-family conditions:
///  (E1) no cycle's vertex set is contained in another's (equal sets
///       count as containment), over all cycle pairs;
///  (E2) consecutive cycles share exactly their first listed vertices:
///       the shared set must be the first |shared| vertices of both
///       cycles, in matching order.
/// Returns every violation found; an empty report means the digraph
/// passes.
FamilyReport verify_family(const EulerianDigraph& g);

/// Cycle sizes in cycle order; as a multiset this is the s-labelling.
std::vector<std::size_t> cycle_lengths(const EulerianDigraph& g);

/// (in-degree, out-degree) per vertex, from the derived edge multiset.
std::vector<std::pair<std::size_t, std::size_t>> vertex_degrees(
    const EulerianDigraph& g);

bool degree_balanced(const EulerianDigraph& g);

/// Deterministic DOT rendering: vertices v1..vk in order, then one edge
/// statement per cycle edge labelled e<cycle><position> (1-based), all
/// in label order. Equal digraphs render byte-identically.
std::string to_dot(const EulerianDigraph& g);

}  // namespace dyck
