#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdeflate/symplectic.hpp"

namespace qdeflate {

/// Default cap on enumeration size (number of subspace elements visited by
/// distance scans and related sweeps); overridable per call and via the CLI.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct CodeParameters {
  std::size_t n = 0;
  std::uint32_t k = 0;
  std::optional<std::uint32_t> d;
  std::uint32_t q = 0;
  std::optional<bool> pure;
};

std::string params_to_string(const CodeParameters& params);

/// A stabilizer code: an isotropic F_p-subspace S of F_q^{2n} whose F_p
/// dimension is a multiple of r, giving parameters [[n, k]]_q with
/// dim S = r(n-k).  Validation happens at construction.
class StabilizerCode {
public:
  /// Spans the generators, validates pairwise isotropy of the resulting basis
  /// (sufficient by bilinearity) and the dimension divisibility.
  static StabilizerCode from_generators(const FieldRef& field, std::size_t n,
                                        const std::vector<SympVector>& generators);
  static StabilizerCode from_space(SympSubspace space);

  const FieldRef& field_ref() const { return space_.field; }
  const Field& field() const { return *space_.field; }
  std::size_t n() const { return space_.n; }
  std::uint32_t k() const { return k_; }
  const SympSubspace& space() const { return space_; }

private:
  explicit StabilizerCode(SympSubspace space, std::uint32_t k)
      : space_(std::move(space)), k_(k) {}

  SympSubspace space_;
  std::uint32_t k_;
};

bool operator==(const StabilizerCode& a, const StabilizerCode& b);

/// Reports a violating generator pair, or nullopt when the space is isotropic.
std::optional<std::pair<std::size_t, std::size_t>> isotropy_violation(
    const SympSubspace& space);

struct DualScan {
  std::uint32_t min_weight_nonzero;   // over all nonzero dual elements
  std::uint32_t min_weight_outside;   // over dual elements not in S
};

/// One pass over all p^{r(n+k)} elements of the symplectic dual, in Gray-code
/// order (one basis-row addition per element).  Requires k >= 1 so the set
/// S_perp \ S is nonempty.
DualScan scan_dual(const StabilizerCode& code, std::uint64_t budget = kDefaultBudget);

/// Minimum symplectic weight over S_perp \ S (the code distance).  Throws on
/// k = 0 (the paper leaves d undefined there) and when the dual enumeration
/// exceeds the budget.
std::uint32_t min_distance(const StabilizerCode& code,
                           std::uint64_t budget = kDefaultBudget);

/// True iff no nonzero dual element has weight < d.
bool is_pure(const StabilizerCode& code, std::uint32_t d,
             std::uint64_t budget = kDefaultBudget);

/// The stabilizer basis followed by a canonical completion, r(n+k) flat rows
/// spanning exactly the symplectic dual.
FpMatrix extended_matrix(const StabilizerCode& code);

/// Same rows as symplectic vectors: stabilizer rows first, then completion.
std::vector<SympVector> extended_rows(const StabilizerCode& code);

/// Visits every element of a flat F_p subspace exactly once (Gray order,
/// starting from zero).  The callback receives the current flattened vector;
/// return false from it to stop early.  Throws when p^dim exceeds the budget.
void for_each_element(
    const SympSubspace& space, std::uint64_t budget,
    const std::function<bool(const std::vector<Fp>&)>& visit);

}  // namespace qdeflate
