#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdeflate/stabilizer.hpp"

namespace qdeflate {

/// The [[t,k']]_q code governing which prefixes survive deflation.
using PrefixCode = StabilizerCode;

struct TheoremPrediction {
  // Pure input and t < d: the deflated code is [[n-t, k+k']] with
  // d~ >= d - t.
  bool theorem1_applicable = false;
  // dual(Sp) contained in the prefix projection of S: parameters are
  // [[n-t, k+k']]; the d - t bound additionally needs prefix_weight_ok.
  bool theorem2_applicable = false;
  bool t_lt_d = false;
  // Every element of S with prefix in dual(Sp)\Sp has weight >= d.
  std::optional<bool> prefix_weight_ok;
  std::optional<std::uint32_t> d_input;
  std::optional<bool> pure_input;
  std::optional<std::uint32_t> predicted_k;
  std::optional<std::int32_t> predicted_d_lower_bound;
};

struct DeflationReport {
  CodeParameters input;
  std::size_t t = 0;
  std::uint32_t prefix_k = 0;
  std::vector<std::size_t> positions;  // 0-based, ascending

  /// The computed subspace pi_I(ker sigma within S); always present.
  SympSubspace raw_space;
  /// False when the raw dimension is not a multiple of r (no integer k; the
  /// paper does not address this case, so only raw_space is available).
  bool dimension_integral = true;
  std::optional<StabilizerCode> code;
  std::optional<std::uint32_t> measured_k;
  std::optional<std::uint32_t> measured_d;

  TheoremPrediction prediction;
  std::optional<bool> improvement_criterion_holds;
  double elapsed_seconds = 0.0;
};

struct DeflateOptions {
  std::uint64_t budget = kDefaultBudget;
  bool measure_distance = true;
  bool theorem_analysis = true;
  /// Distance/purity of the input, when already known, to skip recomputation.
  std::optional<std::uint32_t> known_d;
  std::optional<bool> known_pure;
};

/// Core of Eq.-(5) deflation at subspace level: restrict V to the vectors
/// whose prefix (positions I) lies in prefix_space — the kernel of the
/// sigma map against a basis of symp_dual(prefix_space) — then delete the
/// positions in I.  V need not be isotropic (the dual side of the
/// commutation check deflates S_perp).
SympSubspace deflate_space(const SympSubspace& v, const SympSubspace& prefix_space,
                           const std::vector<std::size_t>& I);

/// Deflation of a stabilizer code by a prefix code on positions I.  The
/// output space is verified isotropic (a logic error if not — that would
/// contradict the construction).  Output dimensions are measured, never
/// assumed from a theorem.
DeflationReport deflate(const StabilizerCode& s, const PrefixCode& sp,
                        const std::vector<std::size_t>& I,
                        const DeflateOptions& options = {});

/// Deflation with the zero prefix code (the [[t,t]]_q code): keeps only
/// vectors that are (0|0) on every position in I.
DeflationReport shorten(const StabilizerCode& s, const std::vector<std::size_t>& I,
                        const DeflateOptions& options = {});

/// Deflation with a rank-rt block-diagonal prefix span: local_spans[j] gives
/// r F_p-independent length-1 vectors for position I[j]; each is padded with
/// zeros at the other t-1 positions, and the span is a [[t,0]]_q prefix code.
DeflationReport puncture(const StabilizerCode& s, const std::vector<std::size_t>& I,
                         const std::vector<std::vector<SympVector>>& local_spans,
                         const DeflateOptions& options = {});

/// Applicability of the parameter theorems for (s, sp, I), without deflating.
TheoremPrediction theorem_bounds(const StabilizerCode& s, const PrefixCode& sp,
                                 const std::vector<std::size_t>& I,
                                 std::uint64_t budget = kDefaultBudget,
                                 std::optional<std::uint32_t> known_d = {},
                                 std::optional<bool> known_pure = {});

/// Checks dual(S deflated by Sp) == (dual S) deflated by (dual Sp), the
/// commutation of deflation with duality.  Requires t < d.
bool dual_commutation_check(const StabilizerCode& s, const PrefixCode& sp,
                            const std::vector<std::size_t>& I,
                            std::uint64_t budget = kDefaultBudget,
                            std::optional<std::uint32_t> known_d = {});

/// The chain dual(prefix-projection of S) <= Sp <= dual(Sp) <= projection,
/// reported inclusion by inclusion (all four hold under Theorem 2's
/// hypothesis; the second is isotropy of Sp and always holds).
struct InclusionDiagnostic {
  bool proj_dual_in_prefix = false;   // dual(pi(S)) in Sp
  bool prefix_in_prefix_dual = false; // Sp in dual(Sp)
  bool prefix_dual_in_proj = false;   // dual(Sp) in pi(S)
  bool proj_dual_in_proj = false;     // dual(pi(S)) in pi(S)
};

InclusionDiagnostic check_inclusions(const StabilizerCode& s, const PrefixCode& sp,
                                     const std::vector<std::size_t>& I);

}  // namespace qdeflate
