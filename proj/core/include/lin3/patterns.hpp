#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lin3/hypergraph.hpp"

namespace lin3 {

inline constexpr int kMaxPatternVertices = 7;

struct Pattern {
  std::string name;
  TripleSystem system;
};

enum class MatchMode { Subgraph, Induced };

std::string_view to_string(MatchMode mode);

/// Pattern vertex i (1-based) maps to host vertex phi[i - 1].
using Embedding = std::vector<int>;

/// Adjacency index over an arbitrary collection of distinct triples on [n].
/// Linearity is not required: the matroid layer runs the matcher on the
/// dependent triples of paving matroids, where long lines produce triples
/// sharing two points.
class HostIndex {
 public:
  HostIndex(int n, std::span<const Triple> triples);
  explicit HostIndex(const TripleSystem& h) : HostIndex(h.n(), h.edges()) {}

  int n() const noexcept { return n_; }
  int degree(int u) const noexcept { return static_cast<int>(adj_[u].size() / 2); }
  bool has_triple(int a, int b, int c) const;

  /// All w with {u, v, w} a host triple, ascending.
  std::vector<int> thirds(int u, int v) const;

 private:
  int n_;
  // adj_[u] holds (v, w) and (w, v) for each triple {u, v, w}, sorted.
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// First embedding in the matcher's deterministic search order, if any.
/// Throws PatternTooLarge when the pattern exceeds kMaxPatternVertices.
std::optional<Embedding> find_embedding(const HostIndex& host, const Pattern& p, MatchMode mode);
std::optional<Embedding> find_embedding(const TripleSystem& h, const Pattern& p, MatchMode mode);

/// Visits embeddings in search order until `visit` returns false.
void for_each_embedding(const HostIndex& host, const Pattern& p, MatchMode mode,
                        const std::function<bool(const Embedding&)>& visit);

bool contains_pattern(const HostIndex& host, const Pattern& p, MatchMode mode);
bool contains_pattern(const TripleSystem& h, const Pattern& p, MatchMode mode);

/// Replays a witness: injective, in range, edges preserved, and for Induced
/// no extra host triple inside the image.
bool verify_embedding(const HostIndex& host, const Pattern& p, MatchMode mode, const Embedding& phi);

bool is_free(const TripleSystem& h, std::span<const Pattern> patterns, MatchMode mode);
bool is_free(const HostIndex& host, std::span<const Pattern> patterns, MatchMode mode);

/// Ruzsa-Szemeredi property, decided as "no linear 3-cycle as a subgraph".
bool is_rs(const TripleSystem& h);

}  // namespace lin3
