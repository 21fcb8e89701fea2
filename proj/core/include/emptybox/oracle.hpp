#pragma once

#include <cstddef>

#include "emptybox/geometry.hpp"

namespace emptybox {

// Guard against instances whose candidate grid is too large to enumerate.
// The grid has at most (n+2)^(2d) boxes; the estimate compared against
// max_candidates is the actual product of per-axis (lo, hi) pair counts.
struct OracleBudget {
  double max_candidates = 1e8;
};

// True maximum-volume empty open box, by enumerating every box whose faces
// are supported by a point coordinate or the cube boundary. Ties are broken
// by lexicographic (lo, hi). Throws std::runtime_error when the candidate
// grid exceeds the budget.
AxisBox max_empty_box_exact(const PointSet& s, const OracleBudget& budget = {});

// Widest open slab (l, h) x (0,1)^(d-1) between consecutive distinct first
// coordinates, with 0 and 1 as sentinels; earliest slab wins ties. Its
// volume is at least 1/(n+1).
AxisBox slicing_bound_box(const PointSet& s);

}  // namespace emptybox
