#include "lin3/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <unordered_map>

#include "lin3/error.hpp"

namespace lin3 {

namespace {

// Maps each covered vertex pair to the index of the edge covering it. Dense
// table for moderate n, hash map beyond that.
class PairOwner {
 public:
  explicit PairOwner(int n) : n_(n) {
    if (n_ <= kDenseLimit) dense_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), -1);
  }

  // Returns the previous owner, or -1 after recording `edge`.
  int claim(int u, int v, int edge) {
    if (!dense_.empty()) {
      int& slot = dense_[static_cast<std::size_t>(u) * (n_ + 1) + v];
      if (slot >= 0) return slot;
      slot = edge;
      return -1;
    }
    const auto key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    auto [it, inserted] = sparse_.try_emplace(key, edge);
    return inserted ? -1 : it->second;
  }

 private:
  static constexpr int kDenseLimit = 1024;
  int n_;
  std::vector<int> dense_;
  std::unordered_map<std::uint64_t, int> sparse_;
};

void check_range(int n, const Triple& t) {
  for (int x : t.v) {
    if (x < 1 || x > n) {
      throw Error(Errc::OutOfRange,
                  "edge " + t.str() + " has vertex " + std::to_string(x) +
                      " outside [1," + std::to_string(n) + "]");
    }
  }
}

}  // namespace

Triple Triple::make(int a, int b, int c) {
  if (a == b || b == c || a == c) {
    throw Error(Errc::NotATriple, "{" + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + "} repeats a vertex");
  }
  Triple t{{a, b, c}};
  std::sort(t.v.begin(), t.v.end());
  return t;
}

int Triple::shared(const Triple& o) const noexcept {
  int k = 0;
  for (int x : v) k += o.contains(x) ? 1 : 0;
  return k;
}

std::string Triple::str() const {
  return "{" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "}";
}

TripleSystem::TripleSystem(int n) : n_(n) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative ground size");
}

TripleSystem TripleSystem::make(int n, std::vector<Triple> edges) {
  TripleSystem h(n);
  for (const auto& t : edges) check_range(n, t);
  std::sort(edges.begin(), edges.end());

  PairOwner owner(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& t = edges[i];
    const std::pair<int, int> pairs[3] = {{t.v[0], t.v[1]}, {t.v[0], t.v[2]}, {t.v[1], t.v[2]}};
    for (auto [u, w] : pairs) {
      const int prev = owner.claim(u, w, static_cast<int>(i));
      if (prev >= 0) {
        throw Error(Errc::NotLinear, "edges " + edges[prev].str() + " and " + t.str() +
                                         " share the pair {" + std::to_string(u) + "," +
                                         std::to_string(w) + "}");
      }
    }
  }
  h.edges_ = std::move(edges);
  return h;
}

bool TripleSystem::has_edge(const Triple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

std::vector<int> TripleSystem::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& t : edges_)
    for (int x : t.v) ++deg[x];
  return deg;
}

TripleSystem make_system(int n, std::span<const std::array<int, 3>> triples) {
  std::vector<Triple> edges;
  edges.reserve(triples.size());
  for (const auto& raw : triples) {
    for (int x : raw) {
      if (x < 1 || x > n) {
        throw Error(Errc::OutOfRange, "triple {" + std::to_string(raw[0]) + "," +
                                          std::to_string(raw[1]) + "," + std::to_string(raw[2]) +
                                          "} has vertex outside [1," + std::to_string(n) + "]");
      }
    }
    edges.push_back(Triple::make(raw[0], raw[1], raw[2]));
  }
  return TripleSystem::make(n, std::move(edges));
}

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(Errc::OutOfRange, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) {
      throw Error(Errc::OutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} outside [1," + std::to_string(n) + "]");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(Errc::OutOfRange, "repeated graph edge");
  Graph g(n);
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

Graph shadow(const TripleSystem& h) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(3 * h.size());
  for (const auto& t : h.edges()) {
    pairs.emplace_back(t.v[0], t.v[1]);
    pairs.emplace_back(t.v[0], t.v[2]);
    pairs.emplace_back(t.v[1], t.v[2]);
  }
  // Linearity makes the pairs distinct, so Graph::make never sees a repeat.
  return Graph::make(h.n(), std::move(pairs));
}

TripleSystem induced(const TripleSystem& h, std::span<const int> subset) {
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int x : s) {
    if (x < 1 || x > h.n()) {
      throw Error(Errc::OutOfRange,
                  "vertex " + std::to_string(x) + " outside [1," + std::to_string(h.n()) + "]");
    }
  }
  std::vector<int> label(static_cast<std::size_t>(h.n()) + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) label[s[i]] = static_cast<int>(i) + 1;

  std::vector<Triple> kept;
  for (const auto& t : h.edges()) {
    if (label[t.v[0]] && label[t.v[1]] && label[t.v[2]])
      kept.push_back(Triple::make(label[t.v[0]], label[t.v[1]], label[t.v[2]]));
  }
  return TripleSystem::make(static_cast<int>(s.size()), std::move(kept));
}

bool unique_triangle_property(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()) + 1);
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<int> common;
  for (auto [u, v] : g.edges()) {
    common.clear();
    std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                          std::back_inserter(common));
    if (common.size() != 1) return false;
  }
  return true;
}

}  // namespace lin3
