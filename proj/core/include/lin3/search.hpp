#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lin3/hypergraph.hpp"
#include "lin3/matroid3.hpp"
#include "lin3/parallel.hpp"
#include "lin3/patterns.hpp"

namespace lin3 {

using Count = boost::multiprecision::cpp_int;

/// The enumeration engine keeps one 32-bit pair mask per vertex.
inline constexpr int kMaxSearchVertices = 31;
/// Paving enumeration lists every subset of size 3..n-1 as a candidate line.
inline constexpr int kMaxPavingVertices = 10;
/// Stable-set counting indexes Johnson-graph vertices with 128-bit masks.
inline constexpr int kMaxJohnsonVertices = 128;

Count binomial(int n, int k);
Count stirling2(int n, int k);

/// Which labeled linear systems a search keeps.
struct SystemPredicate {
  enum class Kind { All, Rs, SubgraphFree, InducedFree };

  Kind kind = Kind::All;
  std::vector<Pattern> patterns;

  static SystemPredicate all() { return {}; }
  static SystemPredicate rs() { return {Kind::Rs, {}}; }
  static SystemPredicate subgraph_free(std::vector<Pattern> ps) {
    return {Kind::SubgraphFree, std::move(ps)};
  }
  static SystemPredicate induced_free(std::vector<Pattern> ps) {
    return {Kind::InducedFree, std::move(ps)};
  }
  static SystemPredicate free(std::vector<Pattern> ps, MatchMode mode) {
    return mode == MatchMode::Subgraph ? subgraph_free(std::move(ps)) : induced_free(std::move(ps));
  }

  /// "all", "rs", "subgraph-free(fan)", "induced-free(w3,fano)".
  std::string name() const;
  bool holds(const TripleSystem& h) const;
};

/// Which rank-3 paving matroids a search keeps.
enum class PavingPredicate { All, XFree };

std::string to_string(PavingPredicate p);

namespace detail {

/// One subtree of the linear-system search tree: a partial system plus the
/// index of the first candidate triple still open.
struct LinearTask {
  int n = 0;
  std::vector<Triple> edges;
  int next = 0;
};

struct PavingTask {
  int n = 0;
  std::vector<PointSet> lines;
  int next = 0;
};

/// Splits the search tree at budget.split_depth. Systems above the split
/// depth are passed to `head` in preorder; the returned tasks cover the rest.
std::vector<LinearTask> split_linear(int n, const SystemPredicate& pred, const SearchBudget& budget,
                                     BudgetGuard& guard,
                                     const std::function<void(const TripleSystem&)>& head);
void walk_linear(const LinearTask& task, const SystemPredicate& pred, BudgetGuard& guard,
                 const std::function<void(const TripleSystem&)>& visit);

std::vector<PavingTask> split_paving(int n, const SearchBudget& budget, BudgetGuard& guard,
                                     const std::function<void(const PavingLines&)>& head);
void walk_paving(const PavingTask& task, BudgetGuard& guard,
                 const std::function<void(const PavingLines&)>& visit);

}  // namespace detail

/// Exact count of labeled linear 3-uniform systems on [n] satisfying `pred`.
/// Throws BudgetExceeded instead of returning a partial count.
Count count_linear_systems(int n, const SystemPredicate& pred, const SearchBudget& budget = {});

/// Every labeled linear system on [n] satisfying `pred`, folded into `Acc`
/// (default-constructible, merged with +=). Systems are visited in parallel
/// subtrees; partial accumulators are merged in task order, so the result is
/// independent of the worker count whenever `step` only inspects its system.
template <class Acc, class Step>
Acc fold_linear_systems(int n, const SystemPredicate& pred, const SearchBudget& budget, Step step);

/// Same for all labeled rank-3 paving matroids on [n] (3 <= n <= kMaxPavingVertices).
template <class Acc, class Step>
Acc fold_paving(int n, const SearchBudget& budget, Step step);

/// p(n, 3) or p_X(n, 3).
Count count_paving(int n, PavingPredicate pred, const SearchBudget& budget = {});

/// m(n, 3) or m_X(n, 3) by composing loops, parallel classes (Stirling
/// numbers) and simple paving structures on the classes.
Count count_rank3(int n, PavingPredicate pred, const SearchBudget& budget = {});

/// s(n, r): stable sets of the Johnson graph J(n, r), the empty family
/// included. Ranks 0 and n admit only the free / all-loop matroid and count 1.
Count count_sparse_paving(int n, int r, const SearchBudget& budget = {});

/// f(n): linear systems without an induced W3 or Fano plane.
Count count_f(int n, const SearchBudget& budget = {});

struct ExtremalResult {
  int edges = 0;
  TripleSystem witness;  // lexicographically least optimum
};

/// rs(n) with a witness.
ExtremalResult rs_max(int n, const SearchBudget& budget = {});

/// Maximum edge count of a linear system on [n] avoiding every pattern in
/// the given mode. The witness is re-verified with the matcher.
ExtremalResult extremal_max(int n, std::span<const Pattern> patterns, MatchMode mode,
                            const SearchBudget& budget = {});

template <class Acc, class Step>
Acc fold_linear_systems(int n, const SystemPredicate& pred, const SearchBudget& budget, Step step) {
  BudgetGuard guard(budget);
  Acc head_acc{};
  const auto tasks = detail::split_linear(n, pred, budget, guard,
                                          [&](const TripleSystem& h) { step(head_acc, h); });
  std::vector<Acc> parts(tasks.size());
  run_parallel(
      tasks.size(), budget.workers,
      [&](std::size_t i) {
        detail::walk_linear(tasks[i], pred, guard, [&](const TripleSystem& h) { step(parts[i], h); });
      },
      [&] { guard.cancel(); });
  for (auto& p : parts) head_acc += p;
  return head_acc;
}

template <class Acc, class Step>
Acc fold_paving(int n, const SearchBudget& budget, Step step) {
  BudgetGuard guard(budget);
  Acc head_acc{};
  const auto tasks =
      detail::split_paving(n, budget, guard, [&](const PavingLines& p) { step(head_acc, p); });
  std::vector<Acc> parts(tasks.size());
  run_parallel(
      tasks.size(), budget.workers,
      [&](std::size_t i) {
        detail::walk_paving(tasks[i], guard, [&](const PavingLines& p) { step(parts[i], p); });
      },
      [&] { guard.cancel(); });
  for (auto& p : parts) head_acc += p;
  return head_acc;
}

}  // namespace lin3
