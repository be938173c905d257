#pragma once

// Test-only brute-force oracles. Nothing here calls the pattern matcher or
// the search engine, so the suites can cross-check those against it.

#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "lin3/hypergraph.hpp"
#include "lin3/matroid3.hpp"

namespace lin3::oracle {

/// Every subset of min(6, n) vertices spans at most two edges.
bool six_sets_span_at_most_two(const TripleSystem& h);

/// All linear systems on [n] by filtering every subset of the C(n,3)
/// triples. n <= 6.
std::vector<TripleSystem> all_linear_systems_by_subsets(int n);

/// All rank-3 paving matroids on [n] by filtering every family of
/// candidate lines. n <= 5.
std::vector<PavingLines> all_paving_by_subsets(int n);

/// Restriction isomorphism by trying every |Q|-subset and every bijection.
bool restriction_by_permutations(const PavingLines& p, const PavingLines& q);

/// No restriction isomorphic to W3 or M(K4), by permutations.
bool x_free_by_permutations(const PavingLines& p);

/// Number of triangles of g containing edge {u, v}.
int triangles_through(const Graph& g, int u, int v);

/// Canonical rank-3 matroid form (loops, sorted classes, lifted lines).
using Rank3Canonical = std::tuple<PointSet, std::vector<PointSet>, std::vector<PointSet>>;

/// Generates every (loops, unordered partition, paving structure) triple on
/// [n] and collects canonical forms. Only the all/x-free predicate matters.
std::set<Rank3Canonical> rank3_by_dedup(int n, bool x_free_only);

/// Every set partition of `items` (ascending), blocks ordered by minimum.
std::vector<std::vector<PointSet>> set_partitions(const PointSet& items);

/// Random linear system: random triples in random order, kept when linear.
TripleSystem random_linear_system(int n, std::mt19937_64& rng, int attempts);

/// Random paving matroid: random subsets of size 3..n-1, kept when they
/// meet every existing line in at most one point.
PavingLines random_paving(int n, std::mt19937_64& rng, int attempts);

/// Relabels a system by a permutation of [n] (perm[v-1] is the image of v).
TripleSystem relabel(const TripleSystem& h, const std::vector<int>& perm);

/// Isomorphism by trying every permutation (n <= 8).
bool isomorphic_by_permutations(const TripleSystem& a, const TripleSystem& b);

}  // namespace lin3::oracle
