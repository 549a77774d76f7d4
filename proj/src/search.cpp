#include "qdeflate/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qdeflate/counting.hpp"

namespace qdeflate {

namespace {

void check_positions(const StabilizerCode& code,
                     const std::vector<std::size_t>& positions) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= code.n())
      throw std::invalid_argument("position index out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw std::invalid_argument("positions must be strictly ascending");
  }
}

}  // namespace

MSetPair build_m_sets(const StabilizerCode& code,
                      const std::vector<std::size_t>& positions,
                      std::uint32_t d, std::uint64_t budget) {
  check_positions(code, positions);
  const std::size_t t = positions.size();
  const long long suffix_limit =
      static_cast<long long>(d) - static_cast<long long>(t);

  MSetPair sets;
  sets.dual_minus_stab.source = MSetSource::dual_minus_stab;
  sets.dual_minus_stab.t = t;
  sets.stab.source = MSetSource::stab;
  sets.stab.t = t;
  if (suffix_limit < 0) return sets;

  const SympSubspace dual = symp_dual(code.space());
  for_each_element(dual, budget, [&](const std::vector<Fp>& coords) {
    const SympVector v = unflatten(code.space().field, code.n(), coords);
    const SympVector suffix = project(v, positions);
    if (static_cast<long long>(symp_weight(suffix)) > suffix_limit)
      return true;
    if (contains(code.space().flat, coords)) {
      sets.stab.elements.push_back(v);
    } else {
      if (symp_weight(v) != d)
        throw std::logic_error(
            "build_m_sets: a retained dual element outside the stabilizer "
            "does not have weight exactly d; the supplied distance is not "
            "the true minimum distance");
      sets.dual_minus_stab.elements.push_back(v);
    }
    return true;
  });
  return sets;
}

bool improvement_criterion(const StabilizerCode& code, const PrefixCode& prefix,
                           const std::vector<std::size_t>& positions,
                           const MSetPair& m_sets) {
  check_positions(code, positions);
  if (prefix.n() != positions.size())
    throw std::invalid_argument(
        "improvement_criterion: prefix length must equal the number of "
        "deflated positions");
  if (!code.field().same_params(prefix.field()))
    throw std::invalid_argument(
        "improvement_criterion: code and prefix live over different fields");

  const SympSubspace prefix_dual = symp_dual(prefix.space());
  for (const SympVector& v : m_sets.dual_minus_stab.elements) {
    if (space_contains(prefix_dual, take_prefix(v, positions))) return false;
  }
  for (const SympVector& v : m_sets.stab.elements) {
    const SympVector pre = take_prefix(v, positions);
    if (space_contains(prefix_dual, pre) &&
        !space_contains(prefix.space(), pre))
      return false;
  }
  return true;
}

namespace {

struct CandidateSlot {
  std::optional<SearchEntry> entry;
  bool criterion = false;
  bool distance_computed = false;
  bool budget_failure = false;
  std::exception_ptr error;
};

}  // namespace

SearchResult search_deflations(const StabilizerCode& code,
                               const std::vector<std::size_t>& positions,
                               std::size_t kp, SearchMode mode,
                               const SearchOptions& options) {
  check_positions(code, positions);
  const std::size_t t = positions.size();

  const std::vector<StabilizerCode> candidates = collect_prefix_codes(
      code.field_ref(), t, static_cast<std::uint32_t>(kp), options.budget);

  const std::uint32_t d =
      options.known_d ? *options.known_d : min_distance(code, options.budget);
  const bool pure =
      options.known_pure ? *options.known_pure : is_pure(code, d, options.budget);
  const MSetPair m_sets = build_m_sets(code, positions, d, options.budget);

  std::vector<CandidateSlot> slots(candidates.size());

  auto evaluate = [&](std::size_t idx) {
    CandidateSlot& slot = slots[idx];
    try {
      const StabilizerCode& prefix = candidates[idx];
      slot.criterion = improvement_criterion(code, prefix, positions, m_sets);
      if (mode == SearchMode::criterion_filter && !slot.criterion) return;

      DeflateOptions dopts;
      dopts.budget = options.budget;
      dopts.measure_distance = false;
      dopts.known_d = d;
      dopts.known_pure = pure;
      DeflationReport report = deflate(code, prefix, positions, dopts);
      report.improvement_criterion_holds = slot.criterion;
      if (report.code && report.code->k() >= 1) {
        try {
          report.measured_d = min_distance(*report.code, options.budget);
          slot.distance_computed = true;
        } catch (const std::runtime_error&) {
          slot.budget_failure = true;
        }
      }
      slot.entry = SearchEntry{prefix, std::move(report)};
    } catch (...) {
      slot.error = std::current_exception();
    }
  };

  unsigned jobs = options.jobs == 0 ? 1 : options.jobs;
  if (candidates.size() < jobs) jobs = static_cast<unsigned>(candidates.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= slots.size()) break;
          evaluate(i);
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  for (const CandidateSlot& slot : slots)
    if (slot.error) std::rethrow_exception(slot.error);

  SearchResult result;
  result.input_d = d;
  result.input_pure = pure;
  result.stats.candidates_examined = candidates.size();
  for (CandidateSlot& slot : slots) {
    if (slot.criterion) ++result.stats.criterion_passes;
    if (slot.distance_computed) ++result.stats.distance_computations;
    if (slot.budget_failure) {
      ++result.stats.budget_failures;
      result.complete = false;
    }
    if (slot.entry) result.entries.push_back(std::move(*slot.entry));
  }
  std::stable_sort(result.entries.begin(), result.entries.end(),
                   [](const SearchEntry& x, const SearchEntry& y) {
                     const long long dx =
                         x.report.measured_d
                             ? static_cast<long long>(*x.report.measured_d)
                             : -1;
                     const long long dy =
                         y.report.measured_d
                             ? static_cast<long long>(*y.report.measured_d)
                             : -1;
                     return dx > dy;
                   });
  return result;
}

}  // namespace qdeflate
