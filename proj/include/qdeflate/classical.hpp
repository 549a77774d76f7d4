#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdeflate/fpla.hpp"
#include "qdeflate/gf.hpp"
#include "qdeflate/stabilizer.hpp"

namespace qdeflate {

/// An F_q-linear code of length n, stored as the F_p-span of its codewords'
/// digit expansions (coordinate i contributes digits i*r .. i*r+r-1).  The
/// stored span is closed under multiplication by F_q scalars, so its F_p
/// dimension is r*k for the F_q dimension k.
class LinearCode {
 public:
  /// Spans the given codewords (packed F_q entries) together with their
  /// F_q-scalar multiples.  Dependent rows are allowed.
  static LinearCode from_generators(FieldRef field, std::size_t n,
                                    const std::vector<std::vector<FqElem>>& rows);

  /// Wraps an already-flattened span; throws std::invalid_argument if the
  /// span is not closed under multiplication by F_q scalars.
  static LinearCode from_flat(FieldRef field, std::size_t n,
                              CanonicalSubspace flat);

  static LinearCode zero(FieldRef field, std::size_t n);
  static LinearCode full(FieldRef field, std::size_t n);

  const FieldRef& field_ref() const { return field_; }
  const Field& field() const { return *field_; }
  std::size_t n() const { return n_; }
  /// Dimension over F_q.
  std::size_t k() const { return flat_.dim() / field_->r(); }
  const CanonicalSubspace& flat() const { return flat_; }

  /// The canonical F_p-basis rows as packed codewords (r*k of them).
  std::vector<std::vector<FqElem>> basis_codewords() const;
  /// A deterministic F_q-basis (k rows), greedily extracted from the
  /// canonical F_p-basis.
  std::vector<std::vector<FqElem>> fq_basis() const;

  bool contains(const std::vector<FqElem>& word) const;
  bool operator==(const LinearCode& other) const;

 private:
  LinearCode(FieldRef field, std::size_t n, CanonicalSubspace flat);

  FieldRef field_;
  std::size_t n_ = 0;
  CanonicalSubspace flat_;
};

std::vector<Fp> flatten_word(const Field& field,
                             const std::vector<FqElem>& word);
std::vector<FqElem> unflatten_word(const Field& field,
                                   const std::vector<Fp>& flat);

/// Keeps exactly the coordinates in `positions` (ascending 0-based).
std::vector<FqElem> word_prefix(const std::vector<FqElem>& word,
                                const std::vector<std::size_t>& positions);
/// Deletes the coordinates in `positions`.
std::vector<FqElem> word_project(const std::vector<FqElem>& word,
                                 const std::vector<std::size_t>& positions);

std::size_t hamming_weight(const std::vector<FqElem>& word);

/// Euclidean dual { y : sum_i x_i y_i = 0 for all x in C }.  For F_q-linear
/// C this equals the trace-form dual, which is how it is computed.
LinearCode euclidean_dual(const LinearCode& code);

/// Keeps the codewords whose prefix on `positions` lies in `prefix_code`,
/// then deletes those positions.
LinearCode deflate_classical(const LinearCode& code,
                             const LinearCode& prefix_code,
                             const std::vector<std::size_t>& positions);

/// Output of the exact dimension formula
///   dim = k - (dim proj - dim(proj ∩ C')),
/// where proj is the code's projection onto `positions`.  All dimensions are
/// over F_q.  When the positions form part of an information set the
/// simplification k + k' - t is asserted against the formula and reported.
struct ClassicalDimension {
  std::size_t formula_dim = 0;
  std::size_t projection_dim = 0;
  std::size_t intersection_dim = 0;
  bool information_set = false;
  std::optional<std::size_t> simplified_dim;
};

ClassicalDimension classical_dimension(const LinearCode& code,
                                       const LinearCode& prefix_code,
                                       const std::vector<std::size_t>& positions);

/// Minimum Hamming weight over the q^k - 1 nonzero codewords, by
/// enumeration.  Throws std::invalid_argument for k = 0 and
/// std::runtime_error when q^k exceeds the budget.
std::size_t min_distance_classical(const LinearCode& code,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace qdeflate
