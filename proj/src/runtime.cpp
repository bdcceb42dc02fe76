#include "topdeg/runtime.hpp"

#include <atomic>

namespace topdeg {

namespace {

using Clock = std::chrono::steady_clock;

// 0 = unset.  A single global slot: deadlines do not nest (the CLI installs
// exactly one), and the last writer wins if they ever do.
std::atomic<Clock::rep> g_deadline{0};

} // namespace

ScopedDeadline::ScopedDeadline(std::chrono::seconds budget) {
  g_deadline.store((Clock::now() + budget).time_since_epoch().count(),
                   std::memory_order_relaxed);
}

ScopedDeadline::~ScopedDeadline() {
  g_deadline.store(0, std::memory_order_relaxed);
}

void check_deadline() {
  const auto d = g_deadline.load(std::memory_order_relaxed);
  if (d == 0) return;
  if (Clock::now().time_since_epoch().count() > d)
    fail(ErrorKind::TimeBudget, "time budget exceeded");
}

} // namespace topdeg
