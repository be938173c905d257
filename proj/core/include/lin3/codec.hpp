#pragma once

#include <span>
#include <vector>

#include "lin3/hypergraph.hpp"
#include "lin3/matroid3.hpp"

namespace lin3 {

/// Width-3 windows over one line in ground order. Consecutive entries share
/// two points, all others at most one.
using TripleChain = std::vector<Triple>;

/// `line` must be strictly increasing with at least 3 points (LineTooShort,
/// OutOfRange otherwise).
TripleChain consecutive_triples(std::span<const int> line);

/// Even- and odd-indexed chain entries over all long lines. Each half is the
/// circuit-hyperplane family of a rank-3 sparse paving matroid on [n].
struct CodecPair {
  TripleSystem even;
  TripleSystem odd;

  bool operator==(const CodecPair&) const = default;
};

CodecPair encode(const PavingLines& p);

/// Inverse of encode. Triples sharing two points are merged transitively and
/// each merged class becomes one line. Input outside the image of encode is
/// rejected with NotDecodable; ground size disagreement with GroundMismatch.
PavingLines decode(const CodecPair& pair);

}  // namespace lin3
