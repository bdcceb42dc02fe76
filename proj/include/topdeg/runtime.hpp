#pragma once

#include <chrono>

#include "topdeg/errors.hpp"

namespace topdeg {

// Soft global deadline for long-running kernels (Groebner loop, determinant
// expansion, numeric search).  Checked between units of work outside any
// parallel region; zero cost when unset.  Used by the CLI's --time-budget.
class ScopedDeadline {
public:
  explicit ScopedDeadline(std::chrono::seconds budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;
};

// Throws Error(TimeBudget) if a deadline is set and passed.
void check_deadline();

} // namespace topdeg
