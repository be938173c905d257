#pragma once

#include <span>
#include <vector>

#include "lin3/hypergraph.hpp"
#include "lin3/patterns.hpp"

namespace lin3 {

using PointSet = std::vector<int>;

/// Rank-3 paving matroid on [n], given by its long lines (hyperplanes with at
/// least three points). Two-point lines are implicit.
///
/// Every stored line has at most n - 1 points, so for n >= 4 some point lies
/// off the first line and, together with two points of that line, forms a
/// triple not contained in any line (a second line through those two points
/// would share two points with the first). That triple is a basis, so the
/// rank really is 3. With n == 3 no line is admissible and the matroid is U(3,3).
class PavingLines {
 public:
  PavingLines() = default;

  /// Throws InvalidLines when a line is too short or too long, two lines
  /// share two points, or n < 3; OutOfRange for labels outside [n].
  static PavingLines make(int n, std::vector<PointSet> lines);

  int n() const noexcept { return n_; }
  std::span<const PointSet> lines() const noexcept { return lines_; }
  bool all_lines_short() const noexcept;  // every line has exactly 3 points

  bool operator==(const PavingLines&) const = default;

 private:
  int n_ = 3;
  std::vector<PointSet> lines_;
};

/// Nonspanning circuits: every 3-subset of some line. Sorted.
std::vector<Triple> dependent_triples(const PavingLines& p);

/// Rank-3 sparse paving matroid of a linear system (GroundTooSmall if n < 4).
PavingLines sparse_from_hypergraph(const TripleSystem& h);
/// Inverse of sparse_from_hypergraph; InvalidLines if some line is long.
TripleSystem hypergraph_from_sparse(const PavingLines& p);

/// Some 6-subset (in general |Q|-subset) of P restricts exactly onto Q.
bool has_restriction(const PavingLines& p, const PavingLines& q);

/// No W3 and no M(K4) restriction.
bool is_x_free(const PavingLines& p);

/// Dependent triples of A are dependent in B. GroundMismatch on differing n.
bool weak_map_leq(const PavingLines& a, const PavingLines& b);

/// General rank-3 matroid: loops, parallel classes ordered by their minimum
/// element, and the simple paving matroid on the classes.
class Rank3Matroid {
 public:
  static Rank3Matroid make(int n, PointSet loops, std::vector<PointSet> classes,
                           PavingLines structure);

  int n() const noexcept { return n_; }
  std::span<const int> loops() const noexcept { return loops_; }
  std::span<const PointSet> classes() const noexcept { return classes_; }
  const PavingLines& structure() const noexcept { return structure_; }

  /// Long lines of the simplification lifted back to [n]: the union of the
  /// classes on each line.
  std::vector<PointSet> lifted_lines() const;

  bool operator==(const Rank3Matroid&) const = default;

 private:
  int n_ = 0;
  PointSet loops_;
  std::vector<PointSet> classes_;
  PavingLines structure_;
};

/// A rank-3 matroid has a W3- or M(K4)-minor iff its simplification has one
/// of them as a restriction. Both targets are simple of rank 3, so any minor
/// isomorphic to them keeps the full rank: contracting a non-loop drops the
/// rank to 2, contracting loops is deletion, and deleting parallel copies or
/// loops does not change which simple restrictions exist.
bool has_minor_w3_mk4(const Rank3Matroid& m);

/// General-rank sparse paving matroid as a stable set of the Johnson graph
/// J(n, r): distinct circuit-hyperplanes meet in at most r - 2 elements.
struct SparsePaving {
  int n = 0;
  int r = 0;
  std::vector<PointSet> ch;  // sorted members, sorted lexicographically

  bool operator==(const SparsePaving&) const = default;
};

/// OutOfRange on bad rank or labels; ExchangeViolation when two members
/// differ by a single exchange (|A & B| = r - 1).
SparsePaving validate_sparse(int n, int r, std::vector<PointSet> ch);

}  // namespace lin3
