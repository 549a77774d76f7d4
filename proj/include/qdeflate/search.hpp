#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdeflate/deflate.hpp"
#include "qdeflate/stabilizer.hpp"
#include "qdeflate/symplectic.hpp"

namespace qdeflate {

/// Which ambient set an MSet was carved out of.
enum class MSetSource { dual_minus_stab, stab };

/// M_{t,A} = { (a,u|b,v) in A : w_s(u|v) <= d - t }, where (a|b) is the part
/// supported on the deflated positions and (u|v) is the rest.  For d - t < 0
/// the set is empty; for d - t = 0 it keeps exactly the elements whose suffix
/// is zero.
struct MSet {
  MSetSource source = MSetSource::stab;
  std::size_t t = 0;
  std::vector<SympVector> elements;
};

/// The two filter sets used by the distance-improvement criterion.
struct MSetPair {
  MSet dual_minus_stab;
  MSet stab;
};

/// Enumerates the symplectic dual of `code`, splits it by membership in the
/// stabilizer, and keeps the elements whose suffix weight (outside
/// `positions`) is at most d - t.  Every retained dual-minus-stabilizer
/// element must have total symplectic weight exactly `d`; a violation means
/// `d` is not the code's true minimum distance and raises std::logic_error.
/// Throws std::runtime_error if the dual has more than `budget` elements.
MSetPair build_m_sets(const StabilizerCode& code,
                      const std::vector<std::size_t>& positions,
                      std::uint32_t d, std::uint64_t budget = kDefaultBudget);

/// Sufficient criterion for the deflated distance to reach d - t + 1: true
/// iff no projected prefix of M_{t,dual\stab} lands in the prefix code's
/// symplectic dual, and no projected prefix of M_{t,stab} lands in that dual
/// outside the prefix code itself.
bool improvement_criterion(const StabilizerCode& code, const PrefixCode& prefix,
                           const std::vector<std::size_t>& positions,
                           const MSetPair& m_sets);

/// criterion_filter deflates only candidates that pass the improvement
/// criterion; exhaustive deflates every candidate.
enum class SearchMode { criterion_filter, exhaustive };

/// Counters accumulated over one search_deflations call.  Distance
/// computations count deflated-code distance scans only (the input code's
/// distance is computed once, outside these counters).
struct SearchStats {
  std::uint64_t candidates_examined = 0;
  std::uint64_t criterion_passes = 0;
  std::uint64_t distance_computations = 0;
  std::uint64_t budget_failures = 0;
};

/// One evaluated candidate: the prefix code together with its deflation
/// report (criterion verdict filled in, measured distance when affordable).
struct SearchEntry {
  PrefixCode prefix;
  DeflationReport report;
};

/// Ranked search output.  Entries are sorted by measured deflated distance
/// descending; ties keep the canonical prefix enumeration order.  `complete`
/// is false when some candidate's distance scan exceeded the budget (the
/// entry is still present, with no measured distance).
struct SearchResult {
  std::vector<SearchEntry> entries;
  SearchStats stats;
  bool complete = true;
  std::uint32_t input_d = 0;
  bool input_pure = false;
};

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  /// Skip the input-code distance/purity scans when already known.
  std::optional<std::uint32_t> known_d;
  std::optional<bool> known_pure;
};

/// Evaluates every [[t,kp]] prefix code over the field of `code` against the
/// deflation at `positions` (|positions| = t).  The result is deterministic
/// and independent of `options.jobs`.
SearchResult search_deflations(const StabilizerCode& code,
                               const std::vector<std::size_t>& positions,
                               std::size_t kp, SearchMode mode,
                               const SearchOptions& options = {});

}  // namespace qdeflate
