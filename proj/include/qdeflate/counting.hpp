#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qdeflate/stabilizer.hpp"

namespace qdeflate {

using BigInt = boost::multiprecision::cpp_int;

/// Number of [[n,k]]_q stabilizer codes, q = p^r:
/// prod_{i=0}^{r(n-k)-1} (p^{2rn-i} - p^i) / (p^{r(n-k)} - p^i).
/// Exact; every division is checked to be remainder-free.
BigInt count_stabilizers(std::uint32_t p, std::uint32_t r, std::uint32_t n,
                         std::uint32_t k);

/// Number of ways to carry out k' shortenings and t-k' puncturings:
/// binom(t,k') times the count of [[t-k', 0]]_q codes.
BigInt count_punc_short(std::uint32_t p, std::uint32_t r, std::uint32_t t,
                        std::uint32_t kp);

/// Renders with 3 significant digits, e.g. "4.89·10^17"; values below 1000
/// are printed exactly.
std::string to_scientific_3(const BigInt& value);

/// Streams every isotropic F_p-subspace of F_q^{2t} of dimension r(t-kp) —
/// i.e. every [[t,kp]]_q prefix code — exactly once, in a deterministic
/// canonical order (ascending pivot-column sets, then free entries).  The
/// subspaces are grown row by row in RREF shape with isotropy enforced
/// incrementally.  Throws when p^{2rt} exceeds the budget.
void enumerate_prefix_codes(const FieldRef& field, std::size_t t, std::uint32_t kp,
                            std::uint64_t budget,
                            const std::function<void(const StabilizerCode&)>& yield);

std::vector<StabilizerCode> collect_prefix_codes(const FieldRef& field,
                                                 std::size_t t, std::uint32_t kp,
                                                 std::uint64_t budget);

}  // namespace qdeflate
