#pragma once

namespace topdeg {

// Execution policy for the data-parallel kernels (multiplication-table fill,
// Bezoutian determinant expansion, numeric multi-start).  Every kernel has a
// plain serial implementation that the parallel one is tested against; both
// produce bit-identical results because output slots are disjoint and all
// arithmetic is exact (or merged in a fixed order on the numeric side).
enum class ExecPolicy { serial, parallel };

} // namespace topdeg
