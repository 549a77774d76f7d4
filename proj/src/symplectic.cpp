#include "qdeflate/symplectic.hpp"

#include <stdexcept>

namespace qdeflate {

namespace {

void check_field(const SympVector& v) {
  if (!v.field) throw std::invalid_argument("symp vector: missing field");
  if (v.a.size() != v.b.size())
    throw std::invalid_argument("symp vector: |a| != |b|");
}

void check_compatible(const SympVector& u, const SympVector& v) {
  check_field(u);
  check_field(v);
  if (u.n() != v.n() || !u.field->same_params(*v.field))
    throw std::invalid_argument("symp op: field or length mismatch");
}

void check_index_set(const std::vector<std::size_t>& I, std::size_t n) {
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (I[i] >= n) throw std::invalid_argument("index set: position out of range");
    if (i > 0 && I[i] <= I[i - 1])
      throw std::invalid_argument("index set: positions must be strictly ascending");
  }
}

}  // namespace

SympVector make_vector(FieldRef field, std::vector<FqElem> a,
                       std::vector<FqElem> b) {
  SympVector v{std::move(field), std::move(a), std::move(b)};
  check_field(v);
  for (FqElem x : v.a)
    if (x >= v.field->q()) throw std::invalid_argument("symp vector: entry out of range");
  for (FqElem x : v.b)
    if (x >= v.field->q()) throw std::invalid_argument("symp vector: entry out of range");
  return v;
}

SympVector zero_vector(FieldRef field, std::size_t n) {
  return SympVector{std::move(field), std::vector<FqElem>(n, 0),
                    std::vector<FqElem>(n, 0)};
}

bool operator==(const SympVector& u, const SympVector& v) {
  return u.field->same_params(*v.field) && u.a == v.a && u.b == v.b;
}

std::uint32_t symp_product(const SympVector& u, const SympVector& v) {
  check_compatible(u, v);
  const Field& f = *u.field;
  const std::uint32_t p = f.p();
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < u.n(); ++i) {
    acc = (acc + f.trace(f.mul(u.a[i], v.b[i]))) % p;
    acc = (acc + p - f.trace(f.mul(v.a[i], u.b[i]))) % p;
  }
  return acc;
}

std::size_t symp_weight(const SympVector& v) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.n(); ++i)
    if (v.a[i] != 0 || v.b[i] != 0) ++w;
  return w;
}

SympVector vec_add(const SympVector& u, const SympVector& v) {
  check_compatible(u, v);
  SympVector out = u;
  for (std::size_t i = 0; i < u.n(); ++i) {
    out.a[i] = u.field->add(u.a[i], v.a[i]);
    out.b[i] = u.field->add(u.b[i], v.b[i]);
  }
  return out;
}

SympVector vec_scale(const SympVector& u, Fp c) {
  check_field(u);
  SympVector out = u;
  const FqElem ce = c % u.field->p();  // prime-subfield scalar
  for (std::size_t i = 0; i < u.n(); ++i) {
    out.a[i] = u.field->mul(u.a[i], ce);
    out.b[i] = u.field->mul(u.b[i], ce);
  }
  return out;
}

SympVector project(const SympVector& v, const std::vector<std::size_t>& I) {
  check_field(v);
  check_index_set(I, v.n());
  SympVector out{v.field, {}, {}};
  std::size_t next = 0;
  for (std::size_t i = 0; i < v.n(); ++i) {
    if (next < I.size() && I[next] == i) {
      ++next;
      continue;
    }
    out.a.push_back(v.a[i]);
    out.b.push_back(v.b[i]);
  }
  return out;
}

SympVector take_prefix(const SympVector& v, const std::vector<std::size_t>& I) {
  check_field(v);
  check_index_set(I, v.n());
  SympVector out{v.field, {}, {}};
  for (std::size_t i : I) {
    out.a.push_back(v.a[i]);
    out.b.push_back(v.b[i]);
  }
  return out;
}

std::vector<Fp> flatten(const SympVector& v) {
  check_field(v);
  const Field& f = *v.field;
  const std::size_t n = v.n(), r = f.r();
  std::vector<Fp> flat(2 * r * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Fp> da = f.to_fp_coords(v.a[i]);
    std::vector<Fp> db = f.to_fp_coords(v.b[i]);
    for (std::size_t s = 0; s < r; ++s) {
      flat[i * r + s] = da[s];
      flat[r * n + i * r + s] = db[s];
    }
  }
  return flat;
}

SympVector unflatten(const FieldRef& field, std::size_t n,
                     const std::vector<Fp>& coords) {
  const std::size_t r = field->r();
  if (coords.size() != 2 * r * n)
    throw std::invalid_argument("unflatten: coordinate length mismatch");
  SympVector v = zero_vector(field, n);
  std::vector<Fp> digits(r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < r; ++s) digits[s] = coords[i * r + s];
    v.a[i] = field->from_fp_coords(digits);
    for (std::size_t s = 0; s < r; ++s) digits[s] = coords[r * n + i * r + s];
    v.b[i] = field->from_fp_coords(digits);
  }
  return v;
}

std::vector<Fp> sigma(const std::vector<SympVector>& A,
                      const std::vector<std::size_t>& I, const SympVector& v) {
  const std::size_t t = I.size();
  SympVector prefix = take_prefix(v, I);
  std::vector<Fp> out(A.size(), 0);
  for (std::size_t j = 0; j < A.size(); ++j) {
    if (A[j].n() != t) throw std::invalid_argument("sigma: |I| must match the length of A's vectors");
    out[j] = static_cast<Fp>(symp_product(prefix, A[j]));
  }
  return out;
}

SympSubspace span_of(FieldRef field, std::size_t n,
                     const std::vector<SympVector>& vectors) {
  const std::size_t ambient = 2 * field->r() * n;
  FpMatrix rows(field->p(), 0, ambient);
  for (const SympVector& v : vectors) {
    if (v.n() != n || !v.field->same_params(*field))
      throw std::invalid_argument("span_of: vector shape or field mismatch");
    rows.append_row(flatten(v));
  }
  return {std::move(field), n, subspace_from_rows(rows)};
}

SympSubspace space_from_flat(FieldRef field, std::size_t n,
                             CanonicalSubspace flat) {
  if (flat.ambient_dim != 2 * field->r() * n || flat.p != field->p())
    throw std::invalid_argument("space_from_flat: ambient mismatch");
  return {std::move(field), n, std::move(flat)};
}

SympSubspace zero_space(FieldRef field, std::size_t n) {
  const std::size_t ambient = 2 * field->r() * n;
  const std::uint32_t p = field->p();
  return {std::move(field), n, zero_subspace(p, ambient)};
}

SympSubspace full_space(FieldRef field, std::size_t n) {
  const std::size_t ambient = 2 * field->r() * n;
  const std::uint32_t p = field->p();
  return {std::move(field), n, full_subspace(p, ambient)};
}

bool operator==(const SympSubspace& u, const SympSubspace& v) {
  return u.n == v.n && u.field->same_params(*v.field) && u.flat == v.flat;
}

std::vector<SympVector> basis_vectors(const SympSubspace& s) {
  std::vector<SympVector> out;
  out.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    out.push_back(unflatten(s.field, s.n, s.flat.basis.row(i)));
  return out;
}

bool space_contains(const SympSubspace& s, const SympVector& v) {
  if (v.n() != s.n || !v.field->same_params(*s.field))
    throw std::invalid_argument("space_contains: shape or field mismatch");
  return contains(s.flat, flatten(v));
}

bool space_contains(const SympSubspace& s, const SympSubspace& t) {
  if (t.n != s.n || !t.field->same_params(*s.field))
    throw std::invalid_argument("space_contains: shape or field mismatch");
  return contains(s.flat, t.flat);
}

std::vector<Fp> symp_constraint_row(const SympVector& v) {
  // <w, v>_s = sum_i tr(w_a[i] v_b[i]) - tr(v_a[i] w_b[i]); on flattened
  // digits the coefficient of w's a-digit (i,s) is sum_t T[s][t] vb[i,t] and
  // of w's b-digit (i,s) is -sum_t T[s][t] va[i,t], with T the trace Gram.
  check_field(v);
  const Field& f = *v.field;
  const std::uint32_t p = f.p();
  const std::size_t n = v.n(), r = f.r();
  std::vector<Fp> row(2 * r * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Fp> da = f.to_fp_coords(v.a[i]);
    std::vector<Fp> db = f.to_fp_coords(v.b[i]);
    for (std::size_t s = 0; s < r; ++s) {
      std::uint64_t ca = 0, cb = 0;
      for (std::size_t t = 0; t < r; ++t) {
        ca += std::uint64_t(f.trace_gram(s, t)) * db[t];
        cb += std::uint64_t(f.trace_gram(s, t)) * da[t];
      }
      row[i * r + s] = static_cast<Fp>(ca % p);
      row[r * n + i * r + s] = static_cast<Fp>((p - cb % p) % p);
    }
  }
  return row;
}

SympSubspace symp_dual(const SympSubspace& v) {
  FpMatrix constraints(v.field->p(), 0, v.flat.ambient_dim);
  for (const SympVector& b : basis_vectors(v))
    constraints.append_row(symp_constraint_row(b));
  if (v.dim() == 0)
    return full_space(v.field, v.n);
  return {v.field, v.n, kernel(constraints)};
}

namespace {

SympSubspace map_space(const SympSubspace& s, const std::vector<std::size_t>& I,
                       bool keep) {
  check_index_set(I, s.n);
  const std::size_t out_n = keep ? I.size() : s.n - I.size();
  FpMatrix rows(s.field->p(), 0, 2 * s.field->r() * out_n);
  for (const SympVector& b : basis_vectors(s))
    rows.append_row(flatten(keep ? take_prefix(b, I) : project(b, I)));
  return {s.field, out_n, subspace_from_rows(rows)};
}

}  // namespace

SympSubspace project_space(const SympSubspace& s, const std::vector<std::size_t>& I) {
  return map_space(s, I, false);
}

SympSubspace prefix_space(const SympSubspace& s, const std::vector<std::size_t>& I) {
  return map_space(s, I, true);
}

}  // namespace qdeflate
