#pragma once

// Which cell S_C holds A^n as n grows. Observations are confined to a finite
// window: STABILIZED and PERIODIC describe what was seen up to N, not a proof
// about the whole orbit.

#include <cstddef>
#include <optional>
#include <vector>

#include "monodeg/degree.hpp"

namespace monodeg {

enum class TraceStatus { Stabilized, Periodic, Unresolved };

const char* to_string(TraceStatus status) noexcept;

struct TraceVerdict {
  TraceStatus status = TraceStatus::Unresolved;
  std::optional<FunctionalIndex> cell;  // set when Stabilized
  std::size_t period = 0;               // set when Periodic
  std::size_t from_index = 0;           // 1-based start of the constant/periodic tail
};

struct CellTrace {
  std::vector<CanonicalCell> cells;         // cells[n-1] describes A^n
  std::vector<std::size_t> switch_indices;  // n >= 2 where cells[n-1] != cells[n-2]
  TraceVerdict verdict;

  std::size_t window() const noexcept { return cells.size(); }
};

/// Tail rules on a window of length N:
///  - Stabilized when the final ceil(N/2) representatives agree;
///  - Periodic(p) when a period 2 <= p <= floor(N/4) covers the final
///    ceil(N/2) entries (hence at least two full periods);
///  - Unresolved otherwise.
/// Throws Error{InvalidArgument} for fewer than two entries.
TraceVerdict detect_stabilization(const std::vector<FunctionalIndex>& representatives);

/// Throws Error{RankDeficient} or Error{InvalidArgument} (window < 2).
CellTrace cell_trace(const IntMatrix& a, std::size_t window);

}  // namespace monodeg
