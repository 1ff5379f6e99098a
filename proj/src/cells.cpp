#include "monodeg/cells.hpp"

#include "monodeg/error.hpp"
#include "monodeg/recur.hpp"

namespace monodeg {

const char* to_string(TraceStatus status) noexcept {
  switch (status) {
    case TraceStatus::Stabilized: return "STABILIZED";
    case TraceStatus::Periodic: return "PERIODIC";
    case TraceStatus::Unresolved: return "UNRESOLVED";
  }
  return "UNRESOLVED";
}

TraceVerdict detect_stabilization(const std::vector<FunctionalIndex>& reps) {
  const std::size_t n = reps.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "trace needs at least two entries");
  TraceVerdict out;

  std::size_t start = n - 1;
  while (start > 0 && reps[start - 1] == reps[n - 1]) --start;
  if (n - start >= (n + 1) / 2) {
    out.status = TraceStatus::Stabilized;
    out.cell = reps[n - 1];
    out.from_index = start + 1;
    return out;
  }

  if (auto per = eventually_periodic(reps, n, n / 4); per && per->period >= 2) {
    out.status = TraceStatus::Periodic;
    out.period = per->period;
    out.from_index = per->preperiod + 1;
  }
  return out;
}

CellTrace cell_trace(const IntMatrix& a, std::size_t window) {
  require_full_rank(a);
  if (window < 2) throw Error(ErrorCode::InvalidArgument, "cell trace window must be at least 2");
  CellTrace trace;
  trace.cells.reserve(window);
  std::vector<FunctionalIndex> reps;
  IntMatrix power = a;
  for (std::size_t n = 1; n <= window; ++n) {
    if (n > 1) power = mat_mul(power, a);
    trace.cells.push_back(canonical_cell(power));
    reps.push_back(trace.cells.back().index);
    if (n > 1 && reps[n - 1] != reps[n - 2]) trace.switch_indices.push_back(n);
  }
  trace.verdict = detect_stabilization(reps);
  return trace;
}

}  // namespace monodeg
