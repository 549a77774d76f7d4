#pragma once

#include <cstdint>
#include <vector>

#include "qdeflate/fpla.hpp"
#include "qdeflate/gf.hpp"

namespace qdeflate {

/// An element (a|b) of F_q^{2n}.  Index sets and positions are 0-based
/// throughout the library; 1-based indices exist only at the CLI and file
/// boundaries.
struct SympVector {
  FieldRef field;
  std::vector<FqElem> a;
  std::vector<FqElem> b;

  std::size_t n() const { return a.size(); }
};

SympVector make_vector(FieldRef field, std::vector<FqElem> a,
                       std::vector<FqElem> b);
SympVector zero_vector(FieldRef field, std::size_t n);

bool operator==(const SympVector& u, const SympVector& v);

/// Trace-symplectic product tr(<a,d> - <c,b>) of u=(a|b), v=(c|d), in [0,p).
std::uint32_t symp_product(const SympVector& u, const SympVector& v);

/// Number of positions where a or b is nonzero.
std::size_t symp_weight(const SympVector& v);

SympVector vec_add(const SympVector& u, const SympVector& v);
SympVector vec_scale(const SympVector& u, Fp c);

/// Deletes the positions in I (the paper's projection pi_I); kept positions
/// retain their relative order.  I must be sorted ascending, 0-based.
SympVector project(const SympVector& v, const std::vector<std::size_t>& I);

/// Extracts the positions in I in ascending order (the prefix pi_Ibar).
SympVector take_prefix(const SympVector& v, const std::vector<std::size_t>& I);

/// F_p-coordinates of v: all a-digits first, then all b-digits, r digits per
/// position, position-major.  Length 2rn.  Linear and bijective; symplectic
/// products agree with the Gram-form evaluation on these coordinates.
std::vector<Fp> flatten(const SympVector& v);
SympVector unflatten(const FieldRef& field, std::size_t n,
                     const std::vector<Fp>& coords);

/// The map of Eq.-(3) type: component j is the symplectic product of the
/// prefix of v (positions I) with A[j].  A lives in F_q^{2t}, |I| = t.
std::vector<Fp> sigma(const std::vector<SympVector>& A,
                      const std::vector<std::size_t>& I, const SympVector& v);

/// An F_p-linear subspace of F_q^{2n} in canonical (RREF-of-flattening) form.
struct SympSubspace {
  FieldRef field;
  std::size_t n = 0;
  CanonicalSubspace flat;  // ambient dimension 2rn

  std::size_t dim() const { return flat.dim(); }
};

SympSubspace span_of(FieldRef field, std::size_t n,
                     const std::vector<SympVector>& vectors);
SympSubspace space_from_flat(FieldRef field, std::size_t n,
                             CanonicalSubspace flat);
SympSubspace zero_space(FieldRef field, std::size_t n);
SympSubspace full_space(FieldRef field, std::size_t n);

bool operator==(const SympSubspace& u, const SympSubspace& v);

std::vector<SympVector> basis_vectors(const SympSubspace& s);
bool space_contains(const SympSubspace& s, const SympVector& v);
bool space_contains(const SympSubspace& s, const SympSubspace& t);

/// Row vector c with c . flatten(w) = symp_product(w, v) for all w; built
/// from the trace-Gram matrix.
std::vector<Fp> symp_constraint_row(const SympVector& v);

/// Symplectic dual {w : <w, v>_s = 0 for all v in V}, dimension 2rn - dim V.
SympSubspace symp_dual(const SympSubspace& v);

/// Projection of the whole subspace: delete positions in I from every vector.
SympSubspace project_space(const SympSubspace& s, const std::vector<std::size_t>& I);

/// Prefix of the subspace: extract positions in I (ascending) from every
/// vector; lives in F_q^{2t}.
SympSubspace prefix_space(const SympSubspace& s, const std::vector<std::size_t>& I);

}  // namespace qdeflate
