#include "emptybox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace emptybox {

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct GridSearch {
  const PointSet& s;
  std::size_t d;
  std::vector<std::vector<double>> los, his;

  double best_vol = -1.0;
  std::vector<double> best_lo, best_hi;
  std::vector<double> cur_lo, cur_hi;
  std::vector<std::vector<std::size_t>> survivors;  // one scratch list per depth

  explicit GridSearch(const PointSet& ps) : s(ps), d(ps.dim()) {
    los.resize(d);
    his.resize(d);
    for (std::size_t axis = 0; axis < d; ++axis) {
      std::vector<double> coords(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) coords[i] = s.coord(i, axis);
      coords = sorted_unique(std::move(coords));
      los[axis] = coords;
      his[axis] = coords;
      if (los[axis].empty() || los[axis].front() != 0.0)
        los[axis].insert(los[axis].begin(), 0.0);
      if (his[axis].empty() || his[axis].back() != 1.0) his[axis].push_back(1.0);
    }
    cur_lo.resize(d);
    cur_hi.resize(d);
    survivors.resize(d + 1);
    survivors[0].resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) survivors[0][i] = i;
  }

  double candidate_count() const {
    double total = 1.0;
    for (std::size_t axis = 0; axis < d; ++axis) {
      double pairs = 0.0;
      std::size_t h = 0;
      for (double lo : los[axis]) {
        while (h < his[axis].size() && his[axis][h] <= lo) ++h;
        pairs += static_cast<double>(his[axis].size() - h);
      }
      total *= pairs;
    }
    return total;
  }

  void consider(double vol) {
    if (vol > best_vol ||
        (vol == best_vol &&
         (cur_lo < best_lo || (cur_lo == best_lo && cur_hi < best_hi)))) {
      best_vol = vol;
      best_lo = cur_lo;
      best_hi = cur_hi;
    }
  }

  void seed(const AxisBox& box) {
    cur_lo = box.lo();
    cur_hi = box.hi();
    consider(box.volume());
  }

  void search(std::size_t axis, double partial) {
    const auto& from = survivors[axis];
    for (double lo : los[axis]) {
      for (double hi : his[axis]) {
        if (hi <= lo) continue;
        const double vol = partial * (hi - lo);
        if (vol < best_vol) continue;  // widths <= 1: subtree cannot tie
        auto& kept = survivors[axis + 1];
        kept.clear();
        for (std::size_t p : from) {
          const double c = s.coord(p, axis);
          if (lo < c && c < hi) kept.push_back(p);
        }
        cur_lo[axis] = lo;
        cur_hi[axis] = hi;
        if (axis + 1 == d) {
          if (kept.empty()) consider(vol);
        } else {
          search(axis + 1, vol);
        }
      }
    }
  }
};

}  // namespace

AxisBox max_empty_box_exact(const PointSet& s, const OracleBudget& budget) {
  GridSearch g(s);
  const double count = g.candidate_count();
  if (!(count <= budget.max_candidates))
    throw std::runtime_error(
        "max_empty_box_exact: candidate grid has about " +
        std::to_string(count) + " boxes, over the budget of " +
        std::to_string(budget.max_candidates) +
        " (raise the budget to force the search)");
  g.seed(slicing_bound_box(s));
  g.search(0, 1.0);
  return AxisBox(std::move(g.best_lo), std::move(g.best_hi));
}

AxisBox slicing_bound_box(const PointSet& s) {
  std::vector<double> xs;
  xs.reserve(s.size() + 2);
  xs.push_back(0.0);
  for (std::size_t i = 0; i < s.size(); ++i) xs.push_back(s.coord(i, 0));
  xs.push_back(1.0);
  xs = sorted_unique(std::move(xs));

  std::size_t widest = 0;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i)
    if (xs[i + 1] - xs[i] > xs[widest + 1] - xs[widest]) widest = i;

  std::vector<double> lo(s.dim(), 0.0), hi(s.dim(), 1.0);
  lo[0] = xs[widest];
  hi[0] = xs[widest + 1];
  return AxisBox(std::move(lo), std::move(hi));
}

}  // namespace emptybox
