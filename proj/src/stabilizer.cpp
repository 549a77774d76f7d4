#include "qdeflate/stabilizer.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace qdeflate {

namespace {

// p^exp, saturating above the uint64 range to "infinite" (never <= budget).
std::uint64_t pow_sat(std::uint64_t p, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > (~std::uint64_t{0}) / p) return ~std::uint64_t{0};
    out *= p;
  }
  return out;
}

void check_budget(std::uint64_t size, std::uint64_t budget, const char* what) {
  if (size > budget)
    throw std::runtime_error(std::string(what) + ": enumeration of " +
                             std::to_string(size) +
                             " elements exceeds the budget of " +
                             std::to_string(budget));
}

}  // namespace

std::string params_to_string(const CodeParameters& params) {
  std::string out = "[[" + std::to_string(params.n) + "," + std::to_string(params.k);
  if (params.d) out += "," + std::to_string(*params.d);
  out += "]]_" + std::to_string(params.q);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> isotropy_violation(
    const SympSubspace& space) {
  const std::vector<SympVector> basis = basis_vectors(space);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (symp_product(basis[i], basis[j]) != 0) return std::make_pair(i, j);
  return std::nullopt;
}

StabilizerCode StabilizerCode::from_generators(
    const FieldRef& field, std::size_t n,
    const std::vector<SympVector>& generators) {
  // Validate isotropy on the given generators so errors can name the
  // offending pair as supplied, not a row of the reduced basis.
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i; j < generators.size(); ++j)
      if (symp_product(generators[i], generators[j]) != 0)
        throw std::invalid_argument(
            "stabilizer: generators " + std::to_string(i + 1) + " and " +
            std::to_string(j + 1) + " have nonzero symplectic product");
  return from_space(span_of(field, n, generators));
}

StabilizerCode StabilizerCode::from_space(SympSubspace space) {
  if (auto bad = isotropy_violation(space))
    throw std::invalid_argument(
        "stabilizer: basis rows " + std::to_string(bad->first + 1) + " and " +
        std::to_string(bad->second + 1) + " have nonzero symplectic product");
  const std::size_t r = space.field->r();
  if (space.dim() % r != 0)
    throw std::invalid_argument(
        "stabilizer: F_p dimension " + std::to_string(space.dim()) +
        " is not a multiple of r = " + std::to_string(r) +
        "; no integer k exists");
  const std::uint32_t k =
      static_cast<std::uint32_t>(space.n - space.dim() / r);
  return StabilizerCode(std::move(space), k);
}

bool operator==(const StabilizerCode& a, const StabilizerCode& b) {
  return a.space() == b.space();
}

void for_each_element(
    const SympSubspace& space, std::uint64_t budget,
    const std::function<bool(const std::vector<Fp>&)>& visit) {
  const std::uint32_t p = space.field->p();
  const std::size_t m = space.dim();
  check_budget(pow_sat(p, m), budget, "subspace enumeration");
  std::vector<Fp> acc(space.flat.ambient_dim, 0);
  if (!visit(acc)) return;
  GrayCounter gray(p, m);
  while (auto step = gray.next()) {
    const std::vector<Fp> row = space.flat.basis.row(step->index);
    const Fp c = step->delta > 0 ? Fp{1} : static_cast<Fp>(p - 1);
    add_scaled(acc, row, c, p);
    if (!visit(acc)) return;
  }
}

namespace {

// Fast path: p = 2, r = 1, n <= 64.  Flat vectors become one a-word plus one
// b-word; row additions are XOR and weights are popcount(a | b).
DualScan scan_dual_packed(const StabilizerCode& code, const SympSubspace& dual) {
  const std::size_t n = code.n();
  const std::size_t m = dual.dim();
  const auto& stab = code.space().flat;

  auto pack = [n](const std::vector<Fp>& flat) {
    std::pair<std::uint64_t, std::uint64_t> w{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      if (flat[i]) w.first |= std::uint64_t{1} << i;
      if (flat[n + i]) w.second |= std::uint64_t{1} << i;
    }
    return w;
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) rows.push_back(pack(dual.flat.basis.row(i)));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> stab_rows;
  std::vector<std::size_t> stab_pivots = stab.pivots;
  for (std::size_t i = 0; i < stab.dim(); ++i)
    stab_rows.push_back(pack(stab.basis.row(i)));

  auto in_stab = [&](std::uint64_t a, std::uint64_t b) {
    for (std::size_t i = 0; i < stab_rows.size(); ++i) {
      const std::size_t c = stab_pivots[i];
      const bool bit = c < n ? (a >> c) & 1 : (b >> (c - n)) & 1;
      if (bit) {
        a ^= stab_rows[i].first;
        b ^= stab_rows[i].second;
      }
    }
    return a == 0 && b == 0;
  };

  DualScan scan{~0u, ~0u};
  std::uint64_t a = 0, b = 0;
  GrayCounter gray(2, m);
  while (auto step = gray.next()) {
    a ^= rows[step->index].first;
    b ^= rows[step->index].second;
    const std::uint32_t w = static_cast<std::uint32_t>(std::popcount(a | b));
    if (w < scan.min_weight_nonzero) scan.min_weight_nonzero = w;
    if (w < scan.min_weight_outside && !in_stab(a, b))
      scan.min_weight_outside = w;
    if (scan.min_weight_outside == 1 && scan.min_weight_nonzero == 1) break;
  }
  return scan;
}

DualScan scan_dual_generic(const StabilizerCode& code, const SympSubspace& dual) {
  const Field& f = code.field();
  const std::uint32_t p = f.p();
  const std::size_t r = f.r(), n = code.n();
  const std::size_t m = dual.dim();
  const auto& stab_flat = code.space().flat;

  // Per-position count of nonzero digits, kept incrementally: a Gray step
  // adds one basis row, touching only that row's support.
  std::vector<Fp> acc(2 * r * n, 0);
  std::vector<std::uint16_t> digit_count(n, 0);
  std::uint32_t weight = 0;
  auto position_of = [r, n](std::size_t col) {
    return col < r * n ? col / r : (col - r * n) / r;
  };

  struct SparseRow {
    std::vector<std::pair<std::size_t, Fp>> nz;
  };
  std::vector<SparseRow> rows(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < 2 * r * n; ++c)
      if (dual.flat.basis.at(i, c) != 0)
        rows[i].nz.push_back({c, dual.flat.basis.at(i, c)});

  DualScan scan{~0u, ~0u};
  GrayCounter gray(p, m);
  while (auto step = gray.next()) {
    const Fp c = step->delta > 0 ? Fp{1} : static_cast<Fp>(p - 1);
    for (const auto& [col, val] : rows[step->index].nz) {
      const Fp before = acc[col];
      acc[col] = static_cast<Fp>((before + std::uint64_t(c) * val) % p);
      if (before == 0 && acc[col] != 0) {
        if (digit_count[position_of(col)]++ == 0) ++weight;
      } else if (before != 0 && acc[col] == 0) {
        if (--digit_count[position_of(col)] == 0) --weight;
      }
    }
    if (weight < scan.min_weight_nonzero) scan.min_weight_nonzero = weight;
    if (weight < scan.min_weight_outside && !contains(stab_flat, acc))
      scan.min_weight_outside = weight;
    if (scan.min_weight_outside == 1 && scan.min_weight_nonzero == 1) break;
  }
  return scan;
}

}  // namespace

DualScan scan_dual(const StabilizerCode& code, std::uint64_t budget) {
  const Field& f = code.field();
  const SympSubspace dual = symp_dual(code.space());
  check_budget(pow_sat(f.p(), dual.dim()), budget, "min_distance");
  if (f.p() == 2 && f.r() == 1 && code.n() <= 64)
    return scan_dual_packed(code, dual);
  return scan_dual_generic(code, dual);
}

std::uint32_t min_distance(const StabilizerCode& code, std::uint64_t budget) {
  if (code.k() == 0)
    throw std::invalid_argument(
        "min_distance: k = 0, the dual minus the stabilizer is empty and the "
        "distance is undefined");
  const DualScan scan = scan_dual(code, budget);
  if (scan.min_weight_outside == ~0u)
    throw std::logic_error("min_distance: no dual element outside S found");
  return scan.min_weight_outside;
}

bool is_pure(const StabilizerCode& code, std::uint32_t d, std::uint64_t budget) {
  const DualScan scan = scan_dual(code, budget);
  return scan.min_weight_nonzero >= d;
}

FpMatrix extended_matrix(const StabilizerCode& code) {
  const SympSubspace dual = symp_dual(code.space());
  const auto& stab = code.space().flat;
  FpMatrix out(stab.p, 0, stab.ambient_dim);
  for (std::size_t i = 0; i < stab.dim(); ++i) out.append_row(stab.basis.row(i));
  for (const std::vector<Fp>& row : extend_basis(stab, dual.flat))
    out.append_row(row);
  return out;
}

std::vector<SympVector> extended_rows(const StabilizerCode& code) {
  const FpMatrix m = extended_matrix(code);
  std::vector<SympVector> rows;
  rows.reserve(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    rows.push_back(unflatten(code.field_ref(), code.n(), m.row(i)));
  return rows;
}

}  // namespace qdeflate
