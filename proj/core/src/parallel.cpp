#include "lin3/parallel.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "lin3/error.hpp"

namespace lin3 {

int SearchBudget::default_workers() {
  if (const char* env = std::getenv("LIN3_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 1024) return static_cast<int>(value);
  }
  return 1;
}

void SearchBudget::validate() const {
  if (!(time_limit.count() > 0)) throw Error(Errc::OutOfRange, "time limit must be positive");
  if (node_limit == 0) throw Error(Errc::OutOfRange, "node limit must be positive");
  if (workers < 1) throw Error(Errc::OutOfRange, "worker count must be positive");
  if (split_depth < 0) throw Error(Errc::OutOfRange, "split depth must be non-negative");
}

BudgetGuard::BudgetGuard(const SearchBudget& budget)
    : node_limit_(budget.node_limit), has_deadline_(std::isfinite(budget.time_limit.count())) {
  budget.validate();
  if (has_deadline_) {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget.time_limit);
  }
}

void BudgetGuard::add(std::uint64_t nodes) {
  const auto total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
  if (total > node_limit_)
    throw Error(Errc::BudgetExceeded, "node limit of " + std::to_string(node_limit_) + " exceeded");
  if (cancelled_.load(std::memory_order_relaxed))
    throw Error(Errc::BudgetExceeded, "search cancelled");
  if (has_deadline_ && std::chrono::steady_clock::now() > deadline_)
    throw Error(Errc::BudgetExceeded, "time limit exceeded");
}

BudgetGuard::Local::~Local() noexcept {
  // Leftover nodes still count toward the total; limits are checked by the
  // explicit flush() callers make at the end of a walk.
  guard_.nodes_.fetch_add(pending_, std::memory_order_relaxed);
}

void BudgetGuard::Local::flush() {
  const auto pending = pending_;
  pending_ = 0;
  guard_.add(pending);
}

void run_parallel(std::size_t tasks, int workers, const std::function<void(std::size_t)>& fn,
                  const std::function<void()>& on_failure) {
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks) return;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
        if (!failed.exchange(true) && on_failure) on_failure();
      }
    }
  };

  const auto count = static_cast<std::size_t>(std::max(1, workers));
  if (count == 1 || tasks <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(std::min(count, tasks));
    for (std::size_t t = 0; t < std::min(count, tasks); ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lin3
