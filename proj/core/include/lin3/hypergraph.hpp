#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lin3 {

/// A 3-element vertex set, stored ascending. Vertices are labeled 1..n.
struct Triple {
  std::array<int, 3> v{};

  /// Sorts the three labels; throws NotATriple on a repeated label.
  static Triple make(int a, int b, int c);

  bool contains(int x) const noexcept { return v[0] == x || v[1] == x || v[2] == x; }
  int shared(const Triple& other) const noexcept;
  std::string str() const;

  auto operator<=>(const Triple&) const = default;
};

/// Linear 3-uniform hypergraph on [n]: every two edges meet in at most one
/// vertex. Edges are kept sorted lexicographically, so two systems with the
/// same labeled edge set compare equal and serialize identically.
class TripleSystem {
 public:
  TripleSystem() = default;
  explicit TripleSystem(int n);

  /// Validates range and linearity. On failure the error message names the
  /// offending edge(s).
  static TripleSystem make(int n, std::vector<Triple> edges);

  int n() const noexcept { return n_; }
  std::span<const Triple> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  bool has_edge(const Triple& t) const;
  std::vector<int> degrees() const;  // index 0 unused

  bool operator==(const TripleSystem&) const = default;

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
};

/// Builds a system from raw label triples. Reports OutOfRange, NotATriple or
/// NotLinear with the offending input.
TripleSystem make_system(int n, std::span<const std::array<int, 3>> triples);

/// Simple graph on [n]; edges stored as ascending pairs in sorted order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}

  static Graph make(int n, std::vector<std::pair<int, int>> edges);

  int n() const noexcept { return n_; }
  std::span<const std::pair<int, int>> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// 2-shadow: u ~ v iff some edge contains both. Has exactly 3|E| edges.
Graph shadow(const TripleSystem& h);

/// Edges of h inside `subset`, relabeled 1..|subset| by ascending label.
TripleSystem induced(const TripleSystem& h, std::span<const int> subset);

/// True iff every edge of g lies in exactly one triangle.
bool unique_triangle_property(const Graph& g);

}  // namespace lin3
