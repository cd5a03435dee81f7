#pragma once

#include <cstddef>
#include <vector>

#include "lst/fit_report.hpp"

namespace lst {

// Keeps the `capacity` lowest-Q coefficient vectors offered to it. Ties keep
// the earlier offer, so the contents depend only on the offer sequence.
class FinalistPool {
 public:
  struct Entry {
    double q;
    std::size_t order;
    Coefficients beta;
  };

  explicit FinalistPool(std::size_t capacity) : capacity_(capacity) {}

  void offer(double q, const Coefficients& beta);
  // Ascending in q.
  std::vector<Entry> sorted() const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::size_t capacity_;
  std::size_t offered_ = 0;
  std::vector<Entry> entries_;  // max-heap on (q, order)
};

// From each finalist, iterates beta <- LS(I(beta)) until the kept set repeats
// (at most max_steps solves). The lowest-Q end point that converged replaces
// report.beta when its Q does not exceed report.q, so the incumbent can only
// improve. Returns the number of least-squares solves spent.
std::size_t refine_to_fixed_point(const Dataset& data, double alpha, const FinalistPool& pool,
                                  FitReport& report, std::size_t max_steps = 100);

}  // namespace lst
