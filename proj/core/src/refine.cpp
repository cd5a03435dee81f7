#include "lst/refine.hpp"

#include <algorithm>
#include <limits>

#include "lst/error.hpp"
#include "lst/least_squares.hpp"
#include "lst/trimming.hpp"

namespace lst {
namespace {

bool worse(const FinalistPool::Entry& a, const FinalistPool::Entry& b) {
  return a.q < b.q || (a.q == b.q && a.order < b.order);
}

}  // namespace

void FinalistPool::offer(double q, const Coefficients& beta) {
  const std::size_t order = offered_++;
  if (capacity_ == 0) return;
  if (entries_.size() < capacity_) {
    entries_.push_back({q, order, beta});
    std::push_heap(entries_.begin(), entries_.end(), worse);
    return;
  }
  // The heap front is the current worst entry.
  if (!(q < entries_.front().q)) return;
  std::pop_heap(entries_.begin(), entries_.end(), worse);
  entries_.back() = {q, order, beta};
  std::push_heap(entries_.begin(), entries_.end(), worse);
}

std::vector<FinalistPool::Entry> FinalistPool::sorted() const {
  std::vector<Entry> out = entries_;
  std::sort(out.begin(), out.end(), worse);
  return out;
}

std::size_t refine_to_fixed_point(const Dataset& data, double alpha, const FinalistPool& pool,
                                  FitReport& report, std::size_t max_steps) {
  std::size_t solves = 0;
  double best_q = std::numeric_limits<double>::infinity();
  Coefficients best_beta;
  std::vector<Index> best_kept;

  for (const FinalistPool::Entry& start : pool.sorted()) {
    TrimState state = trim_state(data, start.beta, alpha);
    for (std::size_t step = 0; step < max_steps; ++step) {
      Coefficients next;
      try {
        next = ls_fit(data, std::span<const Index>(state.kept));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kRankDeficient) throw;
        break;
      }
      ++solves;
      TrimState next_state = trim_state(data, next, alpha);
      const bool converged = next_state.kept == state.kept;
      state = std::move(next_state);
      if (converged) {
        const double q = kept_sum_of_squares(state);
        if (q < best_q) {
          best_q = q;
          best_beta = std::move(next);
          best_kept = state.kept;
        }
        break;
      }
    }
  }

  if (best_beta.size() > 0 && best_q <= report.q) {
    report.q = best_q;
    report.beta = std::move(best_beta);
    report.kept = std::move(best_kept);
  }
  return solves;
}

}  // namespace lst
