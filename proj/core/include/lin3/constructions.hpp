#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lin3/hypergraph.hpp"
#include "lin3/matroid3.hpp"
#include "lin3/patterns.hpp"

namespace lin3 {

/// Linear 3-cycle {1,2,3},{3,4,5},{5,6,1}: the whirl W3.
Pattern whirl3();
/// Triangles of K4 with edges labeled ab=1, ac=2, ad=3, bc=4, bd=5, cd=6.
Pattern mk4();
/// The 3-fan (sail) {1,2,3},{1,4,5},{1,6,7},{3,5,7}.
Pattern fan();
/// The Fano plane {1,2,3},{1,4,5},{1,6,7},{2,4,6},{2,5,7},{3,4,7},{3,5,6}.
Pattern fano();

/// Registry lookup for "w3", "mk4", "fan", "fano".
std::optional<Pattern> pattern_by_name(std::string_view name);
std::vector<std::string_view> pattern_names();

/// Sum-class construction: r-subsets of [n] whose element sum is k mod n.
SparsePaving graham_sloane(int n, int r, int k);

/// Vector in GF(2)^r; coordinate 1 is the most significant bit, so integer
/// order of `bits` is lexicographic order of the coordinate tuple.
struct GF2Vector {
  int r = 0;
  std::uint64_t bits = 0;

  int coord(int i) const noexcept { return static_cast<int>((bits >> (r - i)) & 1U); }
  /// (x1, x2) as a number in 0..3; vertex groups of B_r.
  int group() const noexcept { return static_cast<int>(bits >> (r - 2)); }

  auto operator<=>(const GF2Vector&) const = default;
};

/// Vertices of B_r, i.e. vectors with (x1, x2) != (0, 0), in lexicographic
/// order. Label i + 1 names element i.
std::vector<GF2Vector> bose_burton_points(int r);

/// B_r: triples of distinct qualifying vectors summing to zero. 3 * 2^(r-2)
/// vertices and 4^(r-2) edges. Supports 2 <= r <= 20.
TripleSystem bose_burton(int r);

}  // namespace lin3
