#include "qdeflate/counting.hpp"

#include <stdexcept>

namespace qdeflate {

namespace {

BigInt big_pow(std::uint32_t base, std::uint64_t exp) {
  BigInt out = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

BigInt binom(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;  // exact: product of j consecutive integers divides by j!
  }
  return out;
}

}  // namespace

BigInt count_stabilizers(std::uint32_t p, std::uint32_t r, std::uint32_t n,
                         std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("count_stabilizers: p must be prime");
  if (r < 1) throw std::invalid_argument("count_stabilizers: r must be >= 1");
  if (k > n) throw std::invalid_argument("count_stabilizers: need 0 <= k <= n");
  const std::uint64_t m = std::uint64_t(r) * (n - k);
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    num *= big_pow(p, std::uint64_t(2) * r * n - i) - big_pow(p, i);
    den *= big_pow(p, m) - big_pow(p, i);
  }
  const BigInt quotient = num / den;
  if (quotient * den != num)
    throw std::logic_error("count_stabilizers: division is not exact");
  return quotient;
}

BigInt count_punc_short(std::uint32_t p, std::uint32_t r, std::uint32_t t,
                        std::uint32_t kp) {
  if (kp > t) throw std::invalid_argument("count_punc_short: need 0 <= k' <= t");
  return binom(t, kp) * count_stabilizers(p, r, t - kp, 0);
}

std::string to_scientific_3(const BigInt& value) {
  const std::string digits = value.str();
  if (value < 1000) return digits;
  const std::size_t exponent = digits.size() - 1;
  // Round the leading digits to 3 significant places (round half up).
  std::uint32_t lead = 0;
  for (std::size_t i = 0; i < 4 && i < digits.size(); ++i)
    lead = lead * 10 + (digits[i] - '0');
  while (lead >= 10000) lead /= 10;
  std::uint32_t rounded = (lead + 5) / 10;
  std::size_t exp = exponent;
  if (rounded >= 1000) {  // e.g. 9.996 -> 10.0
    rounded /= 10;
    ++exp;
  }
  std::string mantissa = std::to_string(rounded);
  return mantissa.substr(0, 1) + "." + mantissa.substr(1) + "·10^" +
         std::to_string(exp);
}

namespace {

// Grows isotropic subspaces in RREF shape.  Pivot columns are chosen as an
// ascending combination; each row has a 1 at its pivot, zeros at the other
// pivots and in the columns left of its pivot, and free entries elsewhere.
// Isotropy is checked as soon as a row is complete, pruning the subtree.
class PrefixEnumerator {
public:
  PrefixEnumerator(const FieldRef& field, std::size_t t, std::uint32_t kp,
                   const std::function<void(const StabilizerCode&)>& yield)
      : field_(field),
        t_(t),
        dim_(field->r() * (t - kp)),
        ambient_(2 * field->r() * t),
        p_(field->p()),
        yield_(yield) {}

  void run() {
    if (dim_ == 0) {
      yield_(StabilizerCode::from_space(zero_space(field_, t_)));
      return;
    }
    pivots_.clear();
    choose_pivot(0, 0);
  }

private:
  void choose_pivot(std::size_t row, std::size_t from_col) {
    if (pivots_.size() == dim_) {
      rows_.assign(dim_, std::vector<Fp>(ambient_, 0));
      gram_rows_.assign(dim_, {});
      fill_row(0);
      return;
    }
    // Room for the remaining pivots must exist to the right.
    for (std::size_t c = from_col; c + (dim_ - pivots_.size()) <= ambient_; ++c) {
      pivots_.push_back(c);
      choose_pivot(row + 1, c + 1);
      pivots_.pop_back();
    }
  }

  bool is_pivot(std::size_t col) const {
    for (std::size_t pc : pivots_)
      if (pc == col) return true;
    return false;
  }

  void fill_row(std::size_t row) {
    if (row == dim_) {
      emit();
      return;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = pivots_[row] + 1; c < ambient_; ++c)
      if (!is_pivot(c)) free_cols.push_back(c);

    rows_[row].assign(ambient_, 0);
    rows_[row][pivots_[row]] = 1;
    fill_free(row, free_cols, 0);
  }

  void fill_free(std::size_t row, const std::vector<std::size_t>& free_cols,
                 std::size_t idx) {
    if (idx == free_cols.size()) {
      if (row_isotropic(row)) fill_row(row + 1);
      return;
    }
    for (std::uint32_t v = 0; v < p_; ++v) {
      rows_[row][free_cols[idx]] = static_cast<Fp>(v);
      fill_free(row, free_cols, idx + 1);
    }
    rows_[row][free_cols[idx]] = 0;
  }

  // Checks <row, earlier rows>_s = 0 (self-products always vanish).
  bool row_isotropic(std::size_t row) {
    const SympVector v = unflatten(field_, t_, rows_[row]);
    gram_rows_[row] = symp_constraint_row(v);
    for (std::size_t j = 0; j < row; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < ambient_; ++c)
        acc += std::uint64_t(gram_rows_[row][c]) * rows_[j][c];
      if (acc % p_ != 0) return false;
    }
    return true;
  }

  void emit() {
    FpMatrix basis(p_, 0, ambient_);
    for (const auto& row : rows_) basis.append_row(row);
    CanonicalSubspace flat = subspace_from_rows(basis);
    yield_(StabilizerCode::from_space(space_from_flat(field_, t_, std::move(flat))));
  }

  FieldRef field_;
  std::size_t t_;
  std::size_t dim_;
  std::size_t ambient_;
  std::uint32_t p_;
  const std::function<void(const StabilizerCode&)>& yield_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Fp>> rows_;
  std::vector<std::vector<Fp>> gram_rows_;
};

}  // namespace

void enumerate_prefix_codes(const FieldRef& field, std::size_t t, std::uint32_t kp,
                            std::uint64_t budget,
                            const std::function<void(const StabilizerCode&)>& yield) {
  if (kp > t) throw std::invalid_argument("enumerate_prefix_codes: need 0 <= k' <= t");
  std::uint64_t ambient_size = 1;
  bool exceeded = false;
  for (std::size_t i = 0; i < 2 * field->r() * t; ++i) {
    if (ambient_size > budget / field->p()) {
      exceeded = true;
      break;
    }
    ambient_size *= field->p();
  }
  if (exceeded || ambient_size > budget)
    throw std::runtime_error(
        "enumerate_prefix_codes: p^{2rt} exceeds the enumeration budget");
  PrefixEnumerator(field, t, kp, yield).run();
}

std::vector<StabilizerCode> collect_prefix_codes(const FieldRef& field,
                                                 std::size_t t, std::uint32_t kp,
                                                 std::uint64_t budget) {
  std::vector<StabilizerCode> out;
  enumerate_prefix_codes(field, t, kp, budget,
                         [&](const StabilizerCode& code) { out.push_back(code); });
  return out;
}

}  // namespace qdeflate
