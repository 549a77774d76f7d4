#include "qdeflate/fpla.hpp"

#include <stdexcept>

namespace qdeflate {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0 mod p: Fermat.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void check_same_space(const CanonicalSubspace& u, const CanonicalSubspace& v) {
  if (u.p != v.p || u.ambient_dim != v.ambient_dim)
    throw std::invalid_argument("subspace op: ambient dimension or modulus mismatch");
}

}  // namespace

void FpMatrix::append_row(const std::vector<Fp>& v) {
  if (v.size() != cols && !(rows == 0 && cols == 0))
    throw std::invalid_argument("append_row: column count mismatch");
  if (rows == 0 && cols == 0) cols = v.size();
  entries.insert(entries.end(), v.begin(), v.end());
  ++rows;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::size_t cols,
                             const std::vector<std::vector<Fp>>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("from_rows: column count mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RrefResult rref(const FpMatrix& m) {
  FpMatrix a = m;
  const std::uint32_t p = a.p;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < a.rows && a.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == a.rows) continue;
    if (pivot_row != row)
      for (std::size_t j = 0; j < a.cols; ++j)
        std::swap(a.at(row, j), a.at(pivot_row, j));
    const std::uint32_t scale = inv_mod(a.at(row, col), p);
    for (std::size_t j = col; j < a.cols; ++j)
      a.at(row, j) = static_cast<Fp>(std::uint64_t(a.at(row, j)) * scale % p);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row) continue;
      const std::uint32_t f = a.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) {
        std::uint64_t v = a.at(i, j) + std::uint64_t(p) * p -
                          std::uint64_t(f) * a.at(row, j) % p;
        a.at(i, j) = static_cast<Fp>(v % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  FpMatrix out(p, pivots.size(), a.cols);
  std::copy(a.entries.begin(),
            a.entries.begin() + pivots.size() * a.cols, out.entries.begin());
  return {out, pivots};
}

CanonicalSubspace subspace_from_rows(const FpMatrix& m) {
  RrefResult r = rref(m);
  return {m.p, m.cols, std::move(r.mat), std::move(r.pivots)};
}

CanonicalSubspace zero_subspace(std::uint32_t p, std::size_t ambient_dim) {
  return {p, ambient_dim, FpMatrix(p, 0, ambient_dim), {}};
}

CanonicalSubspace full_subspace(std::uint32_t p, std::size_t ambient_dim) {
  CanonicalSubspace s{p, ambient_dim, FpMatrix::identity(p, ambient_dim), {}};
  s.pivots.resize(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots[i] = i;
  return s;
}

CanonicalSubspace kernel(const FpMatrix& m) {
  const std::uint32_t p = m.p;
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  FpMatrix basis(p, 0, m.cols);
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Fp> v(m.cols, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      // pivot variable = -(coefficient of the free column in row i)
      const std::uint32_t c = r.mat.at(i, free_col);
      v[r.pivots[i]] = static_cast<Fp>((p - c) % p);
    }
    basis.append_row(v);
  }
  return subspace_from_rows(basis);
}

std::optional<std::vector<Fp>> solve(const FpMatrix& a, const std::vector<Fp>& b) {
  if (b.size() != a.rows)
    throw std::invalid_argument("solve: right-hand side length mismatch");
  FpMatrix aug(a.p, a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  RrefResult r = rref(aug);
  for (std::size_t c : r.pivots)
    if (c == a.cols) return std::nullopt;  // pivot in the augmented column
  std::vector<Fp> x(a.cols, 0);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.mat.at(i, a.cols);
  return x;
}

namespace {

// Reduces v against the RREF basis, optionally recording the multipliers.
bool reduce_against(const CanonicalSubspace& u, std::vector<Fp>& v,
                    std::vector<Fp>* coeffs) {
  const std::uint32_t p = u.p;
  if (coeffs) coeffs->assign(u.dim(), 0);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Fp c = v[u.pivots[i]];
    if (c == 0) continue;
    if (coeffs) (*coeffs)[i] = c;
    for (std::size_t j = 0; j < u.ambient_dim; ++j) {
      std::uint64_t t = v[j] + std::uint64_t(p) * p -
                        std::uint64_t(c) * u.basis.at(i, j) % p;
      v[j] = static_cast<Fp>(t % p);
    }
  }
  for (Fp x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool contains(const CanonicalSubspace& u, const std::vector<Fp>& v) {
  if (v.size() != u.ambient_dim)
    throw std::invalid_argument("contains: vector length mismatch");
  std::vector<Fp> w = v;
  return reduce_against(u, w, nullptr);
}

bool contains(const CanonicalSubspace& u, const CanonicalSubspace& v) {
  check_same_space(u, v);
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!contains(u, v.basis.row(i))) return false;
  return true;
}

std::optional<std::vector<Fp>> coordinates(const CanonicalSubspace& u,
                                           const std::vector<Fp>& v) {
  if (v.size() != u.ambient_dim)
    throw std::invalid_argument("coordinates: vector length mismatch");
  std::vector<Fp> w = v;
  std::vector<Fp> coeffs;
  if (!reduce_against(u, w, &coeffs)) return std::nullopt;
  return coeffs;
}

CanonicalSubspace intersect(const CanonicalSubspace& u, const CanonicalSubspace& v) {
  check_same_space(u, v);
  // w is in U iff Z_U w = 0, where the rows of Z_U span the Euclidean
  // annihilator of U; stack both constraint systems.
  CanonicalSubspace zu = kernel(u.basis);
  CanonicalSubspace zv = kernel(v.basis);
  FpMatrix stacked(u.p, zu.dim() + zv.dim(), u.ambient_dim);
  std::copy(zu.basis.entries.begin(), zu.basis.entries.end(), stacked.entries.begin());
  std::copy(zv.basis.entries.begin(), zv.basis.entries.end(),
            stacked.entries.begin() + zu.dim() * u.ambient_dim);
  return kernel(stacked);
}

CanonicalSubspace subspace_sum(const CanonicalSubspace& u, const CanonicalSubspace& v) {
  check_same_space(u, v);
  FpMatrix stacked(u.p, u.dim() + v.dim(), u.ambient_dim);
  std::copy(u.basis.entries.begin(), u.basis.entries.end(), stacked.entries.begin());
  std::copy(v.basis.entries.begin(), v.basis.entries.end(),
            stacked.entries.begin() + u.dim() * u.ambient_dim);
  return subspace_from_rows(stacked);
}

std::vector<std::vector<Fp>> extend_basis(const CanonicalSubspace& u,
                                          const CanonicalSubspace& w) {
  check_same_space(u, w);
  std::vector<std::vector<Fp>> added;
  FpMatrix work = u.basis;
  CanonicalSubspace current = u;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    std::vector<Fp> row = w.basis.row(i);
    if (!contains(current, row)) {
      added.push_back(row);
      work.append_row(row);
      current = subspace_from_rows(work);
    }
  }
  return added;
}

std::vector<Fp> mat_vec(const FpMatrix& m, const std::vector<Fp>& v) {
  if (v.size() != m.cols)
    throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Fp> out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j)
      acc += std::uint64_t(m.at(i, j)) * v[j];
    out[i] = static_cast<Fp>(acc % m.p);
  }
  return out;
}

void add_scaled(std::vector<Fp>& dst, const std::vector<Fp>& src, Fp c,
                std::uint32_t p) {
  if (dst.size() != src.size())
    throw std::invalid_argument("add_scaled: length mismatch");
  if (c == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j)
    dst[j] = static_cast<Fp>((dst[j] + std::uint64_t(c) * src[j]) % p);
}

GrayCounter::GrayCounter(std::uint32_t radix, std::size_t ndigits)
    : radix_(radix),
      digits_(ndigits, 0),
      offsets_(ndigits, 1),
      focus_(ndigits + 1) {
  for (std::size_t j = 0; j <= ndigits; ++j) focus_[j] = j;
}

std::optional<GrayCounter::Step> GrayCounter::next() {
  const std::size_t j = focus_[0];
  focus_[0] = 0;
  if (j == digits_.size()) return std::nullopt;
  const int delta = offsets_[j];
  digits_[j] = static_cast<Fp>(int(digits_[j]) + delta);
  if (digits_[j] == 0 || digits_[j] == radix_ - 1) {
    offsets_[j] = -offsets_[j];
    focus_[j] = focus_[j + 1];
    focus_[j + 1] = j + 1;
  }
  return Step{j, delta};
}

}  // namespace qdeflate
