#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdeflate/gf.hpp"

namespace qdeflate {

/// Dense row-major matrix over F_p, entries reduced mod p.
struct FpMatrix {
  std::uint32_t p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Fp> entries;

  FpMatrix() = default;
  FpMatrix(std::uint32_t p_, std::size_t rows_, std::size_t cols_)
      : p(p_), rows(rows_), cols(cols_), entries(rows_ * cols_, 0) {}

  Fp& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  Fp at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  std::vector<Fp> row(std::size_t i) const {
    return {entries.begin() + i * cols, entries.begin() + (i + 1) * cols};
  }
  void append_row(const std::vector<Fp>& v);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix from_rows(std::uint32_t p, std::size_t cols,
                            const std::vector<std::vector<Fp>>& rows);

  bool operator==(const FpMatrix&) const = default;
};

/// A subspace of F_p^n held by its unique RREF basis (no zero rows).  Two
/// subspaces are equal iff their fields compare equal bit for bit.
struct CanonicalSubspace {
  std::uint32_t p = 2;
  std::size_t ambient_dim = 0;
  FpMatrix basis;                    // RREF, rows = dim
  std::vector<std::size_t> pivots;   // pivot column per basis row

  std::size_t dim() const { return basis.rows; }

  bool operator==(const CanonicalSubspace&) const = default;
};

struct RrefResult {
  FpMatrix mat;                      // RREF with zero rows removed
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form; rank = mat.rows.
RrefResult rref(const FpMatrix& m);

CanonicalSubspace subspace_from_rows(const FpMatrix& m);
CanonicalSubspace zero_subspace(std::uint32_t p, std::size_t ambient_dim);
CanonicalSubspace full_subspace(std::uint32_t p, std::size_t ambient_dim);

/// Right null space {v : Mv = 0}; dimension = cols - rank.
CanonicalSubspace kernel(const FpMatrix& m);

/// One solution of Ax = b, or nullopt when inconsistent.  Consistency is the
/// pivot-in-augmented-column test on the RREF of [A|b].
std::optional<std::vector<Fp>> solve(const FpMatrix& a, const std::vector<Fp>& b);

bool contains(const CanonicalSubspace& u, const std::vector<Fp>& v);
bool contains(const CanonicalSubspace& u, const CanonicalSubspace& v);

/// Coordinates of v in u's RREF basis, or nullopt when v is outside u.
std::optional<std::vector<Fp>> coordinates(const CanonicalSubspace& u,
                                           const std::vector<Fp>& v);

CanonicalSubspace intersect(const CanonicalSubspace& u, const CanonicalSubspace& v);
CanonicalSubspace subspace_sum(const CanonicalSubspace& u, const CanonicalSubspace& v);

/// Rows of w's basis that extend u to u + w, reduced against u but otherwise
/// raw.  Deterministic; used to complete a stabilizer basis to its dual.
std::vector<std::vector<Fp>> extend_basis(const CanonicalSubspace& u,
                                          const CanonicalSubspace& w);

std::vector<Fp> mat_vec(const FpMatrix& m, const std::vector<Fp>& v);

/// dst += c * src over F_p.
void add_scaled(std::vector<Fp>& dst, const std::vector<Fp>& src, Fp c,
                std::uint32_t p);

/// Loopless reflected mixed-radix Gray counter (TAOCP 7.2.1.1, Algorithm H)
/// with all radices equal to p.  Each step changes exactly one digit by +-1,
/// so a running linear combination is maintained with one row addition per
/// visited element.  Starts at the all-zero word; next() reports which digit
/// moved and in which direction, or nullopt once all p^n words were visited.
class GrayCounter {
public:
  GrayCounter(std::uint32_t radix, std::size_t ndigits);

  struct Step {
    std::size_t index;  // which digit changed
    int delta;          // +1 or -1
  };
  std::optional<Step> next();

  const std::vector<Fp>& digits() const { return digits_; }

private:
  std::uint32_t radix_;
  std::vector<Fp> digits_;
  std::vector<int> offsets_;
  std::vector<std::size_t> focus_;
};

}  // namespace qdeflate
