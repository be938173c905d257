#include "lin3/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <unordered_map>

#include "lin3/constructions.hpp"
#include "lin3/error.hpp"

namespace lin3 {

Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Count stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  // row[j] = S(i, j), built row by row.
  std::vector<Count> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

std::string SystemPredicate::name() const {
  auto list = [&] {
    std::string s;
    for (std::size_t i = 0; i < patterns.size(); ++i) s += (i ? "," : "") + patterns[i].name;
    return s;
  };
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Rs: return "rs";
    case Kind::SubgraphFree: return "subgraph-free(" + list() + ")";
    case Kind::InducedFree: return "induced-free(" + list() + ")";
  }
  return "?";
}

bool SystemPredicate::holds(const TripleSystem& h) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::Rs: return is_rs(h);
    case Kind::SubgraphFree: return is_free(h, patterns, MatchMode::Subgraph);
    case Kind::InducedFree: return is_free(h, patterns, MatchMode::Induced);
  }
  return false;
}

std::string to_string(PavingPredicate p) { return p == PavingPredicate::All ? "all" : "x-free"; }

namespace {

using Mask = std::uint32_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

void check_search_size(int n) {
  if (n < 0 || n > kMaxSearchVertices) {
    throw Error(Errc::OutOfRange, "search supports 0 <= n <= " + std::to_string(kMaxSearchVertices) +
                                      ", got " + std::to_string(n));
  }
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back(Triple{{a, b, c}});
  return out;
}

struct Status {
  bool accept;
  bool descend;
};

// Depth-first walk over linear systems in lexicographic edge order. A node is
// a partial system; its children extend it by one later, compatible triple,
// so each labeled system is reached exactly once and in lexicographic order
// of its sorted edge list.
class LinearEngine {
 public:
  LinearEngine(int n, const SystemPredicate& pred, BudgetGuard& guard)
      : n_(n), pred_(pred), local_(guard), candidates_(all_triples(n)) {
    check_search_size(n);
  }

  void load(std::span<const Triple> edges) {
    cover_.fill(0);
    edges_.clear();
    for (const auto& t : edges) push(t);
  }

  int candidate_count() const { return static_cast<int>(candidates_.size()); }
  const Triple& candidate(int i) const { return candidates_[i]; }
  std::span<const Triple> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }

  TripleSystem system() const { return TripleSystem::make(n_, edges_); }

  bool compatible(const Triple& t) const {
    const auto [a, b, c] = t.v;
    return !(cover_[a] & (bit(b) | bit(c))) && !(cover_[b] & bit(c));
  }

  // Adding t to an RS system creates a linear 3-cycle iff two vertices x, y
  // of t have a common neighbour z outside t. The edges {x,z,.} and {y,z,.}
  // then meet t only in x and y respectively, by linearity.
  bool closes_cycle(const Triple& t) const {
    const Mask inside = bit(t.v[0]) | bit(t.v[1]) | bit(t.v[2]);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (cover_[t.v[i]] & cover_[t.v[j]] & ~inside) return true;
    return false;
  }

  bool admits(const Triple& t) const {
    return compatible(t) && !(pred_.kind == SystemPredicate::Kind::Rs && closes_cycle(t));
  }

  void push(const Triple& t) {
    const auto [a, b, c] = t.v;
    cover_[a] |= bit(b) | bit(c);
    cover_[b] |= bit(a) | bit(c);
    cover_[c] |= bit(a) | bit(b);
    edges_.push_back(t);
  }

  void pop() {
    const auto [a, b, c] = edges_.back().v;
    cover_[a] &= ~(bit(b) | bit(c));
    cover_[b] &= ~(bit(a) | bit(c));
    cover_[c] &= ~(bit(a) | bit(b));
    edges_.pop_back();
  }

  // `next` is the first candidate children may still use.
  Status evaluate(int next) const {
    using Kind = SystemPredicate::Kind;
    switch (pred_.kind) {
      case Kind::All:
      case Kind::Rs:
        return {true, true};
      case Kind::SubgraphFree: {
        // Containment is monotone under adding edges: prune the subtree.
        const HostIndex host(n_, edges_);
        const bool free = is_free(host, pred_.patterns, MatchMode::Subgraph);
        return {free, free};
      }
      case Kind::InducedFree:
        return evaluate_induced(next);
    }
    return {false, false};
  }

  void tick() { local_.tick(); }
  void flush() { local_.flush(); }

 private:
  // An induced copy on vertex set S disappears only if a later edge lands
  // inside S. When no remaining candidate inside S is still compatible the
  // copy is permanent and the whole subtree can be skipped.
  Status evaluate_induced(int next) const {
    const HostIndex host(n_, edges_);
    bool found = false;
    bool permanent = false;
    for (const auto& p : pred_.patterns) {
      for_each_embedding(host, p, MatchMode::Induced, [&](const Embedding& phi) {
        found = true;
        Mask image = 0;
        for (int v : phi) image |= bit(v);
        permanent = !rescuable(image, next);
        return !permanent;
      });
      if (permanent) return {false, false};
    }
    return {!found, true};
  }

  bool rescuable(Mask image, int next) const {
    for (int i = next; i < candidate_count(); ++i) {
      const auto& t = candidates_[i];
      const Mask m = bit(t.v[0]) | bit(t.v[1]) | bit(t.v[2]);
      if ((m & image) == m && compatible(t)) return true;
    }
    return false;
  }

  int n_;
  const SystemPredicate& pred_;
  BudgetGuard::Local local_;
  std::vector<Triple> candidates_;
  std::array<Mask, kMaxSearchVertices + 1> cover_{};
  std::vector<Triple> edges_;
};

// Preorder walk of the subtree rooted at the engine's current system. Nodes
// at depth `stop_depth` are handed to `emit` instead of being expanded.
template <class Visit, class Emit>
void walk(LinearEngine& e, int next, int depth, int stop_depth, Visit& visit, Emit& emit) {
  if (depth == stop_depth) {
    emit(next);
    return;
  }
  e.tick();
  const Status s = e.evaluate(next);
  if (s.accept) visit();
  if (!s.descend) return;
  for (int i = next; i < e.candidate_count(); ++i) {
    const Triple& t = e.candidate(i);
    if (!e.admits(t)) continue;
    e.push(t);
    walk(e, i + 1, depth + 1, stop_depth, visit, emit);
    e.pop();
  }
}

}  // namespace

namespace detail {

std::vector<LinearTask> split_linear(int n, const SystemPredicate& pred, const SearchBudget& budget,
                                     BudgetGuard& guard,
                                     const std::function<void(const TripleSystem&)>& head) {
  LinearEngine e(n, pred, guard);
  std::vector<LinearTask> tasks;
  auto visit = [&] { head(e.system()); };
  auto emit = [&](int next) {
    tasks.push_back(LinearTask{n, std::vector<Triple>(e.edges().begin(), e.edges().end()), next});
  };
  walk(e, 0, 0, budget.split_depth, visit, emit);
  e.flush();
  return tasks;
}

void walk_linear(const LinearTask& task, const SystemPredicate& pred, BudgetGuard& guard,
                 const std::function<void(const TripleSystem&)>& visit) {
  LinearEngine e(task.n, pred, guard);
  e.load(task.edges);
  auto on_node = [&] { visit(e.system()); };
  auto never = [](int) {};
  walk(e, task.next, 0, -1, on_node, never);
  e.flush();
}

}  // namespace detail

Count count_linear_systems(int n, const SystemPredicate& pred, const SearchBudget& budget) {
  check_search_size(n);
  BudgetGuard guard(budget);
  std::uint64_t head_count = 0;
  std::vector<detail::LinearTask> tasks;
  {
    LinearEngine e(n, pred, guard);
    auto visit = [&] { ++head_count; };
    auto emit = [&](int next) {
      tasks.push_back(
          detail::LinearTask{n, std::vector<Triple>(e.edges().begin(), e.edges().end()), next});
    };
    walk(e, 0, 0, budget.split_depth, visit, emit);
    e.flush();
  }
  std::vector<std::uint64_t> parts(tasks.size(), 0);
  run_parallel(
      tasks.size(), budget.workers,
      [&](std::size_t i) {
        LinearEngine e(n, pred, guard);
        e.load(tasks[i].edges);
        std::uint64_t local = 0;
        auto visit = [&] { ++local; };
        auto never = [](int) {};
        walk(e, tasks[i].next, 0, -1, visit, never);
        e.flush();
        parts[i] = local;
      },
      [&] { guard.cancel(); });
  Count total = head_count;
  for (auto p : parts) total += p;
  return total;
}

// ---------------------------------------------------------------------------
// Extremal search

namespace {

struct Best {
  int size = -1;
  std::vector<Triple> edges;

  // Candidates arrive in lexicographic order, so only a strictly larger
  // system replaces the incumbent.
  void offer(std::span<const Triple> e) {
    if (static_cast<int>(e.size()) > size) {
      size = static_cast<int>(e.size());
      edges.assign(e.begin(), e.end());
    }
  }
};

// Edges that can still be added below a node: no more than the compatible
// remaining candidates, and no more than a third of the total free degree,
// where each vertex can gain floor(f/2) edges from its f free partners.
int extension_bound(const LinearEngine& e, int next, int n) {
  std::array<Mask, kMaxSearchVertices + 1> avail{};
  int remaining = 0;
  for (int i = next; i < e.candidate_count(); ++i) {
    const Triple& t = e.candidate(i);
    if (!e.compatible(t)) continue;
    ++remaining;
    const auto [a, b, c] = t.v;
    avail[a] |= bit(b) | bit(c);
    avail[b] |= bit(a) | bit(c);
    avail[c] |= bit(a) | bit(b);
  }
  int degree_sum = 0;
  for (int v = 1; v <= n; ++v) degree_sum += std::popcount(avail[v]) / 2;
  return std::min(remaining, degree_sum / 3);
}

class Maximizer {
 public:
  Maximizer(LinearEngine& e, int n, std::atomic<int>& global) : e_(e), n_(n), global_(global) {}

  void run(int next) { search(next); }
  Best& best() { return best_; }

 private:
  void search(int next) {
    e_.tick();
    const Status s = e_.evaluate(next);
    if (s.accept && e_.size() > best_.size) {
      best_.offer(e_.edges());
      int g = global_.load(std::memory_order_relaxed);
      while (best_.size > g && !global_.compare_exchange_weak(g, best_.size)) {
      }
    }
    if (!s.descend) return;
    const int reach = e_.size() + extension_bound(e_, next, n_);
    // Ties with the local incumbent cannot win (it is lexicographically
    // earlier); ties with other tasks still might, so only prune below them.
    if (reach <= best_.size || reach < global_.load(std::memory_order_relaxed)) return;
    for (int i = next; i < e_.candidate_count(); ++i) {
      const Triple& t = e_.candidate(i);
      if (!e_.admits(t)) continue;
      e_.push(t);
      search(i + 1);
      e_.pop();
    }
  }

  LinearEngine& e_;
  int n_;
  std::atomic<int>& global_;
  Best best_;
};

ExtremalResult maximize(int n, const SystemPredicate& pred, const SearchBudget& budget) {
  check_search_size(n);
  BudgetGuard guard(budget);
  std::atomic<int> global{-1};

  // Head: the empty system, then the single edge {1,2,3}. Every predicate
  // here is invariant under relabeling, so any nonempty optimum can be
  // relabeled to contain {1,2,3}; that triple is the smallest candidate, so
  // the lexicographically least optimum contains it as well.
  Best head;
  std::vector<detail::LinearTask> tasks;
  {
    LinearEngine e(n, pred, guard);
    e.tick();
    const Status root = e.evaluate(0);
    if (root.accept) head.offer(e.edges());
    if (root.descend && e.candidate_count() > 0 && e.admits(e.candidate(0))) {
      e.push(e.candidate(0));
      const int stop = std::max(2, budget.split_depth);
      auto visit = [&] { head.offer(e.edges()); };
      auto emit = [&](int next) {
        tasks.push_back(
            detail::LinearTask{n, std::vector<Triple>(e.edges().begin(), e.edges().end()), next});
      };
      walk(e, 1, 1, stop, visit, emit);
    }
    e.flush();
  }
  global = head.size;

  std::vector<Best> parts(tasks.size());
  run_parallel(
      tasks.size(), budget.workers,
      [&](std::size_t i) {
        LinearEngine e(n, pred, guard);
        e.load(tasks[i].edges);
        Maximizer m(e, n, global);
        m.run(tasks[i].next);
        e.flush();
        parts[i] = std::move(m.best());
      },
      [&] { guard.cancel(); });

  Best overall = head;
  for (const auto& p : parts)
    if (p.size > overall.size) overall = p;
  return ExtremalResult{overall.size, TripleSystem::make(n, overall.edges)};
}

}  // namespace

ExtremalResult rs_max(int n, const SearchBudget& budget) {
  return maximize(n, SystemPredicate::rs(), budget);
}

ExtremalResult extremal_max(int n, std::span<const Pattern> patterns, MatchMode mode,
                            const SearchBudget& budget) {
  const auto pred = SystemPredicate::free({patterns.begin(), patterns.end()}, mode);
  auto result = maximize(n, pred, budget);
  if (!is_free(result.witness, patterns, mode))
    throw Error(Errc::InternalLinearityFailure, "extremal witness failed re-verification");
  return result;
}

Count count_f(int n, const SearchBudget& budget) {
  return count_linear_systems(n, SystemPredicate::induced_free({whirl3(), fano()}), budget);
}

// ---------------------------------------------------------------------------
// Paving matroids

namespace {

void check_paving_size(int n) {
  if (n < 3 || n > kMaxPavingVertices) {
    throw Error(Errc::OutOfRange, "paving enumeration supports 3 <= n <= " +
                                      std::to_string(kMaxPavingVertices) + ", got " +
                                      std::to_string(n));
  }
}

struct CandidateLine {
  PointSet points;
  Mask mask;
};

std::vector<CandidateLine> all_lines(int n) {
  std::vector<CandidateLine> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    const int size = std::popcount(m);
    if (size < 3 || size > n - 1) continue;
    CandidateLine line{{}, 0};
    for (int v = 1; v <= n; ++v)
      if (m & (Mask{1} << (v - 1))) line.points.push_back(v);
    line.mask = m << 1;  // vertex v at bit v
    out.push_back(std::move(line));
  }
  std::sort(out.begin(), out.end(),
            [](const CandidateLine& a, const CandidateLine& b) { return a.points < b.points; });
  return out;
}

class PavingEngine {
 public:
  PavingEngine(int n, BudgetGuard& guard) : n_(n), local_(guard), candidates_(all_lines(n)) {}

  void load(std::span<const PointSet> lines) {
    for (const auto& l : lines) {
      auto it = std::find_if(candidates_.begin(), candidates_.end(),
                             [&](const CandidateLine& c) { return c.points == l; });
      push(*it);
    }
  }

  int candidate_count() const { return static_cast<int>(candidates_.size()); }
  const CandidateLine& candidate(int i) const { return candidates_[i]; }
  std::span<const PointSet> lines() const { return lines_; }

  bool compatible(const CandidateLine& l) const {
    for (int v : l.points)
      if (cover_[v] & l.mask) return false;
    return true;
  }

  void push(const CandidateLine& l) {
    for (int v : l.points) cover_[v] |= l.mask & ~bit(v);
    lines_.push_back(l.points);
  }

  void pop(const CandidateLine& l) {
    for (int v : l.points) cover_[v] &= ~(l.mask & ~bit(v));
    lines_.pop_back();
  }

  PavingLines matroid() const { return PavingLines::make(n_, lines_); }

  void tick() { local_.tick(); }
  void flush() { local_.flush(); }

 private:
  int n_;
  BudgetGuard::Local local_;
  std::vector<CandidateLine> candidates_;
  std::array<Mask, kMaxPavingVertices + 1> cover_{};
  std::vector<PointSet> lines_;
};

template <class Visit, class Emit>
void walk_lines(PavingEngine& e, int next, int depth, int stop_depth, Visit& visit, Emit& emit) {
  if (depth == stop_depth) {
    emit(next);
    return;
  }
  e.tick();
  visit();
  for (int i = next; i < e.candidate_count(); ++i) {
    const auto& l = e.candidate(i);
    if (!e.compatible(l)) continue;
    e.push(l);
    walk_lines(e, i + 1, depth + 1, stop_depth, visit, emit);
    e.pop(l);
  }
}

}  // namespace

namespace detail {

std::vector<PavingTask> split_paving(int n, const SearchBudget& budget, BudgetGuard& guard,
                                     const std::function<void(const PavingLines&)>& head) {
  check_paving_size(n);
  PavingEngine e(n, guard);
  std::vector<PavingTask> tasks;
  auto visit = [&] { head(e.matroid()); };
  auto emit = [&](int next) {
    tasks.push_back(PavingTask{n, std::vector<PointSet>(e.lines().begin(), e.lines().end()), next});
  };
  walk_lines(e, 0, 0, budget.split_depth, visit, emit);
  e.flush();
  return tasks;
}

void walk_paving(const PavingTask& task, BudgetGuard& guard,
                 const std::function<void(const PavingLines&)>& visit) {
  PavingEngine e(task.n, guard);
  e.load(task.lines);
  auto on_node = [&] { visit(e.matroid()); };
  auto never = [](int) {};
  walk_lines(e, task.next, 0, -1, on_node, never);
  e.flush();
}

}  // namespace detail

namespace {

struct Tally {
  std::uint64_t value = 0;
  Tally& operator+=(const Tally& o) {
    value += o.value;
    return *this;
  }
};

}  // namespace

Count count_paving(int n, PavingPredicate pred, const SearchBudget& budget) {
  const auto tally = fold_paving<Tally>(n, budget, [&](Tally& t, const PavingLines& p) {
    if (pred == PavingPredicate::All || is_x_free(p)) ++t.value;
  });
  return tally.value;
}

Count count_rank3(int n, PavingPredicate pred, const SearchBudget& budget) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative ground size");
  // Loops X0 (j of them), then the remaining n - j elements split into
  // k >= 3 parallel classes, ordered by minimum element, carrying a simple
  // (hence paving) rank-3 matroid on [k].
  std::vector<Count> paving(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 3; k <= n; ++k) paving[k] = count_paving(k, pred, budget);

  Count total = 0;
  for (int j = 0; j <= n; ++j) {
    Count inner = 0;
    for (int k = 3; k <= n - j; ++k) inner += stirling2(n - j, k) * paving[k];
    total += binomial(n, j) * inner;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Sparse paving matroids as stable sets of J(n, r)

namespace {

struct Mask128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i % 64); }
  bool test(int i) const { return ((i < 64 ? lo : hi) >> (i % 64)) & 1U; }
  bool none() const { return lo == 0 && hi == 0; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  Mask128 operator&(const Mask128& o) const { return {lo & o.lo, hi & o.hi}; }
  Mask128 operator~() const { return {~lo, ~hi}; }
  bool operator==(const Mask128&) const = default;
};

struct Mask128Hash {
  std::size_t operator()(const Mask128& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.lo * 0x9E3779B97F4A7C15ULL ^ m.hi);
  }
};

class StableSetCounter {
 public:
  StableSetCounter(std::vector<Mask128> adjacency, BudgetGuard& guard)
      : adj_(std::move(adjacency)), local_(guard) {}

  std::uint64_t count(const Mask128& avail) {
    if (avail.none()) return 1;
    if (auto it = memo_.find(avail); it != memo_.end()) return it->second;
    local_.tick();

    int pick = -1;
    int pick_degree = -1;
    for (int v = 0; v < static_cast<int>(adj_.size()); ++v) {
      if (!avail.test(v)) continue;
      const int d = (adj_[v] & avail).count();
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    std::uint64_t result = 0;
    if (pick_degree == 0) {
      // Isolated vertices are chosen freely.
      if (avail.count() >= 64) throw Error(Errc::OutOfRange, "stable-set count overflows 64 bits");
      result = std::uint64_t{1} << avail.count();
    } else {
      Mask128 without = avail;
      (pick < 64 ? without.lo : without.hi) &= ~(std::uint64_t{1} << (pick % 64));
      const std::uint64_t skip = count(without);
      const std::uint64_t take = count(without & ~adj_[pick]);
      if (__builtin_add_overflow(skip, take, &result))
        throw Error(Errc::OutOfRange, "stable-set count overflows 64 bits");
    }
    memo_.emplace(avail, result);
    return result;
  }

  void flush() { local_.flush(); }

 private:
  std::vector<Mask128> adj_;
  BudgetGuard::Local local_;
  std::unordered_map<Mask128, std::uint64_t, Mask128Hash> memo_;
};

}  // namespace

Count count_sparse_paving(int n, int r, const SearchBudget& budget) {
  if (n < 0 || r < 0 || r > n) {
    throw Error(Errc::OutOfRange, "need 0 <= r <= n, got n=" + std::to_string(n) +
                                      ", r=" + std::to_string(r));
  }
  if (r == 0 || r == n) return 1;
  if (binomial(n, r) > kMaxJohnsonVertices) {
    throw Error(Errc::OutOfRange, "J(" + std::to_string(n) + "," + std::to_string(r) +
                                      ") has more than " + std::to_string(kMaxJohnsonVertices) +
                                      " vertices");
  }
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
    if (std::popcount(m) == r) subsets.push_back(m);

  std::vector<Mask128> adj(subsets.size());
  Mask128 all;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    all.set(static_cast<int>(i));
    for (std::size_t j = 0; j < subsets.size(); ++j)
      if (std::popcount(subsets[i] & subsets[j]) == r - 1) adj[i].set(static_cast<int>(j));
  }
  BudgetGuard guard(budget);
  StableSetCounter counter(std::move(adj), guard);
  const std::uint64_t value = counter.count(all);
  counter.flush();
  return value;
}

}  // namespace lin3
