#include "lin3/patterns.hpp"

#include <algorithm>
#include <array>

#include "lin3/constructions.hpp"
#include "lin3/error.hpp"

namespace lin3 {

std::string_view to_string(MatchMode mode) {
  return mode == MatchMode::Subgraph ? "subgraph" : "induced";
}

HostIndex::HostIndex(int n, std::span<const Triple> triples)
    : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  for (const auto& t : triples) {
    for (int x : t.v) {
      if (x < 1 || x > n) throw Error(Errc::OutOfRange, "host triple " + t.str() + " outside [1,n]");
    }
    const auto [a, b, c] = t.v;
    adj_[a].emplace_back(b, c);
    adj_[a].emplace_back(c, b);
    adj_[b].emplace_back(a, c);
    adj_[b].emplace_back(c, a);
    adj_[c].emplace_back(a, b);
    adj_[c].emplace_back(b, a);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

bool HostIndex::has_triple(int a, int b, int c) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), std::pair{b, c});
}

std::vector<int> HostIndex::thirds(int u, int v) const {
  std::vector<int> out;
  auto lo = std::lower_bound(adj_[u].begin(), adj_[u].end(), std::pair{v, 0});
  for (; lo != adj_[u].end() && lo->first == v; ++lo) out.push_back(lo->second);
  return out;
}

namespace {

// Assignment order and per-step checks for one pattern.
struct Plan {
  int size = 0;
  std::array<int, kMaxPatternVertices> order{};   // step -> pattern vertex
  std::array<int, kMaxPatternVertices> degree{};  // step -> pattern degree
  // step -> pairs of earlier steps that close a pattern edge with this step
  std::array<std::vector<std::pair<int, int>>, kMaxPatternVertices> closing;
  // step -> pairs of earlier steps that must NOT close a host triple (induced)
  std::array<std::vector<std::pair<int, int>>, kMaxPatternVertices> open;
};

void check_size(const Pattern& p) {
  const int k = p.system.n();
  if (k > kMaxPatternVertices) {
    throw Error(Errc::PatternTooLarge, "pattern '" + p.name + "' has " + std::to_string(k) +
                                           " vertices; the matcher supports at most " +
                                           std::to_string(kMaxPatternVertices));
  }
}

Plan make_plan(const Pattern& p) {
  check_size(p);
  const int k = p.system.n();
  const auto deg = p.system.degrees();
  const Graph sh = shadow(p.system);

  Plan plan;
  plan.size = k;
  std::array<bool, kMaxPatternVertices + 1> placed{};
  std::array<int, kMaxPatternVertices + 1> step_of{};

  for (int step = 0; step < k; ++step) {
    int best = -1;
    std::array<int, 3> best_key{};
    for (int v = 1; v <= k; ++v) {
      if (placed[v]) continue;
      int closes = 0;
      for (const auto& t : p.system.edges()) {
        if (!t.contains(v)) continue;
        int others = 0;
        for (int x : t.v) others += (x != v && placed[x]) ? 1 : 0;
        closes += others == 2 ? 1 : 0;
      }
      int linked = 0;
      for (int u = 1; u <= k; ++u) linked += (placed[u] && sh.has_edge(u, v)) ? 1 : 0;
      const std::array<int, 3> key{closes, linked, deg[v]};
      if (best < 0 || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = true;
    step_of[best] = step;
    plan.order[step] = best;
    plan.degree[step] = deg[best];
    for (int i = 0; i < step; ++i) {
      for (int j = i + 1; j < step; ++j) {
        const Triple t = Triple::make(plan.order[i], plan.order[j], best);
        if (p.system.has_edge(t))
          plan.closing[step].emplace_back(i, j);
        else
          plan.open[step].emplace_back(i, j);
      }
    }
  }
  return plan;
}

class Matcher {
 public:
  Matcher(const HostIndex& host, const Plan& plan, MatchMode mode,
          const std::function<bool(const Embedding&)>& visit)
      : host_(host), plan_(plan), mode_(mode), visit_(visit),
        used_(static_cast<std::size_t>(host.n()) + 1, false) {}

  void run() {
    if (plan_.size > host_.n()) return;
    extend(0);
  }

 private:
  // Returns false once the visitor asks to stop.
  bool extend(int step) {
    if (step == plan_.size) {
      Embedding phi(static_cast<std::size_t>(plan_.size));
      for (int i = 0; i < plan_.size; ++i) phi[plan_.order[i] - 1] = image_[i];
      return visit_(phi);
    }
    const auto& closing = plan_.closing[step];
    if (!closing.empty()) {
      const auto [i, j] = closing.front();
      for (int h : host_.thirds(image_[i], image_[j]))
        if (!try_vertex(step, h)) return false;
    } else {
      for (int h = 1; h <= host_.n(); ++h)
        if (!try_vertex(step, h)) return false;
    }
    return true;
  }

  bool try_vertex(int step, int h) {
    if (used_[h] || host_.degree(h) < plan_.degree[step]) return true;
    for (auto [i, j] : plan_.closing[step])
      if (!host_.has_triple(image_[i], image_[j], h)) return true;
    if (mode_ == MatchMode::Induced) {
      for (auto [i, j] : plan_.open[step])
        if (host_.has_triple(image_[i], image_[j], h)) return true;
    }
    used_[h] = true;
    image_[step] = h;
    const bool keep_going = extend(step + 1);
    used_[h] = false;
    return keep_going;
  }

  const HostIndex& host_;
  const Plan& plan_;
  MatchMode mode_;
  const std::function<bool(const Embedding&)>& visit_;
  std::vector<bool> used_;
  std::array<int, kMaxPatternVertices> image_{};
};

}  // namespace

void for_each_embedding(const HostIndex& host, const Pattern& p, MatchMode mode,
                        const std::function<bool(const Embedding&)>& visit) {
  const Plan plan = make_plan(p);
  Matcher(host, plan, mode, visit).run();
}

std::optional<Embedding> find_embedding(const HostIndex& host, const Pattern& p, MatchMode mode) {
  std::optional<Embedding> found;
  for_each_embedding(host, p, mode, [&](const Embedding& phi) {
    found = phi;
    return false;
  });
  return found;
}

std::optional<Embedding> find_embedding(const TripleSystem& h, const Pattern& p, MatchMode mode) {
  return find_embedding(HostIndex(h), p, mode);
}

bool contains_pattern(const HostIndex& host, const Pattern& p, MatchMode mode) {
  return find_embedding(host, p, mode).has_value();
}

bool contains_pattern(const TripleSystem& h, const Pattern& p, MatchMode mode) {
  return contains_pattern(HostIndex(h), p, mode);
}

bool verify_embedding(const HostIndex& host, const Pattern& p, MatchMode mode, const Embedding& phi) {
  const int k = p.system.n();
  if (static_cast<int>(phi.size()) != k) return false;
  std::vector<int> sorted(phi);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int h : phi)
    if (h < 1 || h > host.n()) return false;

  for (const auto& t : p.system.edges())
    if (!host.has_triple(phi[t.v[0] - 1], phi[t.v[1] - 1], phi[t.v[2] - 1])) return false;

  if (mode == MatchMode::Induced) {
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b)
        for (int c = b + 1; c <= k; ++c) {
          if (host.has_triple(phi[a - 1], phi[b - 1], phi[c - 1]) &&
              !p.system.has_edge(Triple::make(a, b, c)))
            return false;
        }
  }
  return true;
}

bool is_free(const HostIndex& host, std::span<const Pattern> patterns, MatchMode mode) {
  for (const auto& p : patterns) check_size(p);
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains_pattern(host, p, mode); });
}

bool is_free(const TripleSystem& h, std::span<const Pattern> patterns, MatchMode mode) {
  return is_free(HostIndex(h), patterns, mode);
}

bool is_rs(const TripleSystem& h) {
  static const Pattern cycle = whirl3();
  return !contains_pattern(h, cycle, MatchMode::Subgraph);
}

}  // namespace lin3
