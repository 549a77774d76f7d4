#include "qdeflate/classical.hpp"

#include <stdexcept>
#include <utility>

namespace qdeflate {

namespace {

void check_positions_in_range(std::size_t n,
                              const std::vector<std::size_t>& positions) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= n)
      throw std::invalid_argument("position index out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw std::invalid_argument("positions must be strictly ascending");
  }
}

/// tr(sum_i u_i * z_i) as an element of F_p.
Fp trace_pair(const Field& field, const std::vector<FqElem>& u,
              const std::vector<FqElem>& z) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc = (acc + field.trace(field.mul(u[i], z[i]))) % field.p();
  return static_cast<Fp>(acc);
}

}  // namespace

LinearCode::LinearCode(FieldRef field, std::size_t n, CanonicalSubspace flat)
    : field_(std::move(field)), n_(n), flat_(std::move(flat)) {}

LinearCode LinearCode::from_generators(
    FieldRef field, std::size_t n,
    const std::vector<std::vector<FqElem>>& rows) {
  if (!field) throw std::invalid_argument("LinearCode: null field");
  const std::size_t r = field->r();
  std::vector<std::vector<Fp>> flat_rows;
  flat_rows.reserve(rows.size() * r);
  for (const auto& row : rows) {
    if (row.size() != n)
      throw std::invalid_argument("LinearCode: generator row length mismatch");
    for (FqElem e : row)
      if (e >= field->q())
        throw std::invalid_argument("LinearCode: entry out of field range");
    // x^s has packed value p^s for s < r, so the scalar multiples below span
    // the F_q-line through the row.
    FqElem scalar = 1;
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<FqElem> scaled(n);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = field->mul(row[i], scalar);
      flat_rows.push_back(flatten_word(*field, scaled));
      if (s + 1 < r) scalar = field->mul(scalar, field->p());
    }
  }
  CanonicalSubspace flat =
      subspace_from_rows(FpMatrix::from_rows(field->p(), r * n, flat_rows));
  return LinearCode(std::move(field), n, std::move(flat));
}

LinearCode LinearCode::from_flat(FieldRef field, std::size_t n,
                                 CanonicalSubspace flat) {
  if (!field) throw std::invalid_argument("LinearCode: null field");
  if (flat.ambient_dim != field->r() * n)
    throw std::invalid_argument("LinearCode: flat span has wrong ambient dimension");
  if (flat.p != field->p())
    throw std::invalid_argument("LinearCode: flat span has wrong characteristic");
  if (field->r() > 1) {
    for (std::size_t i = 0; i < flat.dim(); ++i) {
      std::vector<FqElem> word = unflatten_word(*field, flat.basis.row(i));
      for (FqElem& e : word) e = field->mul(e, field->p());
      if (!qdeflate::contains(flat, flatten_word(*field, word)))
        throw std::invalid_argument(
            "LinearCode: span is not closed under F_q scalar multiplication");
    }
  }
  return LinearCode(std::move(field), n, std::move(flat));
}

LinearCode LinearCode::zero(FieldRef field, std::size_t n) {
  return from_generators(std::move(field), n, {});
}

LinearCode LinearCode::full(FieldRef field, std::size_t n) {
  std::vector<std::vector<FqElem>> rows(n, std::vector<FqElem>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return from_generators(std::move(field), n, rows);
}

std::vector<std::vector<FqElem>> LinearCode::basis_codewords() const {
  std::vector<std::vector<FqElem>> out;
  out.reserve(flat_.dim());
  for (std::size_t i = 0; i < flat_.dim(); ++i)
    out.push_back(unflatten_word(*field_, flat_.basis.row(i)));
  return out;
}

std::vector<std::vector<FqElem>> LinearCode::fq_basis() const {
  std::vector<std::vector<FqElem>> out;
  CanonicalSubspace acc = zero_subspace(field_->p(), flat_.ambient_dim);
  for (std::size_t i = 0; i < flat_.dim() && acc.dim() < flat_.dim(); ++i) {
    const std::vector<Fp> row = flat_.basis.row(i);
    if (qdeflate::contains(acc, row)) continue;
    std::vector<FqElem> word = unflatten_word(*field_, row);
    out.push_back(word);
    std::vector<std::vector<Fp>> line;
    FqElem scalar = 1;
    for (std::size_t s = 0; s < field_->r(); ++s) {
      std::vector<FqElem> scaled(n_);
      for (std::size_t j = 0; j < n_; ++j)
        scaled[j] = field_->mul(word[j], scalar);
      line.push_back(flatten_word(*field_, scaled));
      if (s + 1 < field_->r()) scalar = field_->mul(scalar, field_->p());
    }
    acc = subspace_sum(acc, subspace_from_rows(FpMatrix::from_rows(
                                field_->p(), flat_.ambient_dim, line)));
  }
  return out;
}

bool LinearCode::contains(const std::vector<FqElem>& word) const {
  if (word.size() != n_)
    throw std::invalid_argument("LinearCode::contains: word length mismatch");
  return qdeflate::contains(flat_, flatten_word(*field_, word));
}

bool LinearCode::operator==(const LinearCode& other) const {
  return field_->same_params(*other.field_) && n_ == other.n_ &&
         flat_ == other.flat_;
}

std::vector<Fp> flatten_word(const Field& field,
                             const std::vector<FqElem>& word) {
  const std::size_t r = field.r();
  std::vector<Fp> flat(word.size() * r, 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::vector<Fp> digits = field.to_fp_coords(word[i]);
    for (std::size_t s = 0; s < r; ++s) flat[i * r + s] = digits[s];
  }
  return flat;
}

std::vector<FqElem> unflatten_word(const Field& field,
                                   const std::vector<Fp>& flat) {
  const std::size_t r = field.r();
  if (flat.size() % r != 0)
    throw std::invalid_argument("unflatten_word: length not a multiple of r");
  std::vector<FqElem> word(flat.size() / r);
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::vector<Fp> digits(flat.begin() + static_cast<std::ptrdiff_t>(i * r),
                           flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * r));
    word[i] = field.from_fp_coords(digits);
  }
  return word;
}

std::vector<FqElem> word_prefix(const std::vector<FqElem>& word,
                                const std::vector<std::size_t>& positions) {
  check_positions_in_range(word.size(), positions);
  std::vector<FqElem> out;
  out.reserve(positions.size());
  for (std::size_t pos : positions) out.push_back(word[pos]);
  return out;
}

std::vector<FqElem> word_project(const std::vector<FqElem>& word,
                                 const std::vector<std::size_t>& positions) {
  check_positions_in_range(word.size(), positions);
  std::vector<FqElem> out;
  out.reserve(word.size() - positions.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (next < positions.size() && positions[next] == i) {
      ++next;
      continue;
    }
    out.push_back(word[i]);
  }
  return out;
}

std::size_t hamming_weight(const std::vector<FqElem>& word) {
  std::size_t w = 0;
  for (FqElem e : word)
    if (e != 0) ++w;
  return w;
}

LinearCode euclidean_dual(const LinearCode& code) {
  const Field& field = code.field();
  const std::size_t r = field.r();
  const std::size_t n = code.n();
  FpMatrix constraints(field.p(), 0, r * n);
  for (const auto& z : code.basis_codewords()) {
    // tr(z_i * y_i) expanded over the digits y_{i,s} of y_i.
    std::vector<Fp> row(r * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Fp> zd = field.to_fp_coords(z[i]);
      for (std::size_t s = 0; s < r; ++s) {
        std::uint32_t acc = 0;
        for (std::size_t u = 0; u < r; ++u)
          acc = (acc + static_cast<std::uint32_t>(zd[u]) *
                           field.trace_gram(static_cast<std::uint32_t>(u),
                                            static_cast<std::uint32_t>(s))) %
                field.p();
        row[i * r + s] = static_cast<Fp>(acc);
      }
    }
    constraints.append_row(row);
  }
  return LinearCode::from_flat(code.field_ref(), n, kernel(constraints));
}

LinearCode deflate_classical(const LinearCode& code,
                             const LinearCode& prefix_code,
                             const std::vector<std::size_t>& positions) {
  if (!code.field().same_params(prefix_code.field()))
    throw std::invalid_argument(
        "deflate_classical: code and prefix live over different fields");
  if (prefix_code.n() != positions.size())
    throw std::invalid_argument(
        "deflate_classical: prefix length must equal the number of deflated "
        "positions");
  check_positions_in_range(code.n(), positions);
  if (positions.empty()) return code;

  const Field& field = code.field();
  const std::vector<std::vector<FqElem>> basis = code.basis_codewords();
  const std::vector<std::vector<FqElem>> dual_basis =
      euclidean_dual(prefix_code).basis_codewords();

  // Constraint j on the coefficient vector: the prefix of the combination
  // pairs to zero with the j-th dual-basis word.
  FpMatrix constraints(field.p(), 0, basis.size());
  for (const auto& z : dual_basis) {
    std::vector<Fp> row(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      row[i] = trace_pair(field, word_prefix(basis[i], positions), z);
    constraints.append_row(row);
  }
  const CanonicalSubspace coeff_kernel = kernel(constraints);

  const std::size_t out_ambient = field.r() * (code.n() - positions.size());
  std::vector<std::vector<Fp>> out_rows;
  out_rows.reserve(coeff_kernel.dim());
  for (std::size_t i = 0; i < coeff_kernel.dim(); ++i) {
    std::vector<FqElem> combo(code.n(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Fp c = coeff_kernel.basis.at(i, j);
      if (c == 0) continue;
      for (std::size_t pos = 0; pos < code.n(); ++pos)
        combo[pos] = field.add(
            combo[pos], field.mul(basis[j][pos], static_cast<FqElem>(c)));
    }
    out_rows.push_back(flatten_word(field, word_project(combo, positions)));
  }
  return LinearCode::from_flat(
      code.field_ref(), code.n() - positions.size(),
      subspace_from_rows(
          FpMatrix::from_rows(field.p(), out_ambient, out_rows)));
}

ClassicalDimension classical_dimension(
    const LinearCode& code, const LinearCode& prefix_code,
    const std::vector<std::size_t>& positions) {
  if (!code.field().same_params(prefix_code.field()))
    throw std::invalid_argument(
        "classical_dimension: code and prefix live over different fields");
  if (prefix_code.n() != positions.size())
    throw std::invalid_argument(
        "classical_dimension: prefix length must equal the number of deflated "
        "positions");
  check_positions_in_range(code.n(), positions);

  const Field& field = code.field();
  const std::size_t r = field.r();
  const std::size_t t = positions.size();

  std::vector<std::vector<Fp>> proj_rows;
  for (const auto& w : code.basis_codewords())
    proj_rows.push_back(flatten_word(field, word_prefix(w, positions)));
  const CanonicalSubspace proj =
      subspace_from_rows(FpMatrix::from_rows(field.p(), r * t, proj_rows));
  const CanonicalSubspace inter = intersect(proj, prefix_code.flat());

  ClassicalDimension result;
  result.projection_dim = proj.dim() / r;
  result.intersection_dim = inter.dim() / r;
  result.formula_dim =
      code.k() - (result.projection_dim - result.intersection_dim);
  result.information_set = result.projection_dim == t;
  if (result.information_set) {
    const std::size_t simplified = code.k() + prefix_code.k() - t;
    if (simplified != result.formula_dim)
      throw std::logic_error(
          "classical_dimension: information-set simplification disagrees with "
          "the exact formula");
    result.simplified_dim = simplified;
  }
  return result;
}

std::size_t min_distance_classical(const LinearCode& code,
                                   std::uint64_t budget) {
  if (code.k() == 0)
    throw std::invalid_argument(
        "min_distance_classical: the zero code has no nonzero codewords");
  const Field& field = code.field();
  const std::size_t p = field.p();
  const std::size_t r = field.r();
  const std::size_t dim = code.flat().dim();

  std::uint64_t total = 1;
  bool over = false;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > budget / p) {
      over = true;
      break;
    }
    total *= p;
  }
  if (over || total > budget)
    throw std::runtime_error(
        "min_distance_classical: q^k exceeds the enumeration budget");

  const FpMatrix& basis = code.flat().basis;
  std::vector<std::vector<std::pair<std::size_t, Fp>>> sparse(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < basis.cols; ++j)
      if (basis.at(i, j) != 0) sparse[i].emplace_back(j, basis.at(i, j));

  std::vector<Fp> digits(code.flat().ambient_dim, 0);
  std::vector<std::size_t> pos_nonzero(code.n(), 0);
  std::size_t weight = 0;
  std::size_t best = code.n() + 1;

  GrayCounter counter(static_cast<std::uint32_t>(p), dim);
  while (auto step = counter.next()) {
    for (const auto& [col, val] : sparse[static_cast<std::size_t>(step->index)]) {
      const Fp add = step->delta > 0 ? val : static_cast<Fp>(p - val);
      const Fp before = digits[col];
      const Fp after = static_cast<Fp>((before + add) % p);
      digits[col] = after;
      const std::size_t pos = col / r;
      if (before == 0 && after != 0) {
        if (pos_nonzero[pos]++ == 0) ++weight;
      } else if (before != 0 && after == 0) {
        if (--pos_nonzero[pos] == 0) --weight;
      }
    }
    if (weight > 0 && weight < best) {
      best = weight;
      if (best == 1) break;
    }
  }
  return best;
}

}  // namespace qdeflate
