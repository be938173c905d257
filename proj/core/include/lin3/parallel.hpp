#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace lin3 {

/// Limits for one search call. Workers default to LIN3_WORKERS (or 1).
struct SearchBudget {
  std::chrono::duration<double> time_limit{std::numeric_limits<double>::infinity()};
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  int workers = default_workers();
  int split_depth = 2;

  static int default_workers();
  /// OutOfRange unless limits and workers are positive.
  void validate() const;
};

/// Race-safe node and time accounting shared by all workers of one search.
/// Throws BudgetExceeded from tick()/flush() once a limit is crossed or
/// another worker has failed.
class BudgetGuard {
 public:
  explicit BudgetGuard(const SearchBudget& budget);

  // Per-walker batching keeps the shared counter off the hot path.
  class Local {
   public:
    explicit Local(BudgetGuard& guard) : guard_(guard) {}
    ~Local() noexcept;
    Local(const Local&) = delete;
    Local& operator=(const Local&) = delete;

    void tick() {
      if (++pending_ == kBatch) flush();
    }
    void flush();

   private:
    static constexpr std::uint64_t kBatch = 512;
    BudgetGuard& guard_;
    std::uint64_t pending_ = 0;
  };

  void add(std::uint64_t nodes);
  void cancel() noexcept { cancelled_.store(true, std::memory_order_relaxed); }
  std::uint64_t nodes() const noexcept { return nodes_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t node_limit_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> cancelled_{false};
};

/// Runs fn(0..tasks-1) on up to `workers` threads. If tasks throw, the
/// exception of the lowest failing task index is rethrown after all threads
/// have joined; `on_failure` runs as soon as any task fails.
void run_parallel(std::size_t tasks, int workers, const std::function<void(std::size_t)>& fn,
                  const std::function<void()>& on_failure = {});

}  // namespace lin3
