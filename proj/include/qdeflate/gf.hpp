#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qdeflate {

/// Packed encoding of an element of F_q, q = p^r: the coefficient vector
/// (c_0, ..., c_{r-1}) over the polynomial basis {1, x, ..., x^{r-1}} stored
/// as the integer sum c_i p^i.  Always < q <= 2^16.
using FqElem = std::uint32_t;

/// Entry of a vector/matrix over the prime field F_p, reduced mod p.
using Fp = std::uint16_t;

bool is_prime(std::uint32_t m);

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// Arithmetic in F_q, q = p^r, with the absolute trace down to F_p.
///
/// Multiplication and inversion run on log/antilog tables built at
/// construction; trace values and the Gram matrix tr(x^s * x^t) of the trace
/// form are precomputed as well, since they appear in every symplectic
/// product.  Immutable after construction and safe to share across threads.
class Field {
public:
  /// Builds F_{p^r} with the default modulus: the lexicographically smallest
  /// monic irreducible polynomial of degree r over F_p (coefficient vector
  /// compared low-degree first).  For r = 1 the modulus is the placeholder x.
  static FieldRef make(std::uint32_t p, std::uint32_t r);

  /// Same, with an explicit monic degree-r modulus given as r+1 coefficients,
  /// coefficient of x^i at index i, leading coefficient 1.  Irreducibility is
  /// verified by trial division against all monic polynomials of degree
  /// <= r/2.
  static FieldRef make(std::uint32_t p, std::uint32_t r,
                       const std::vector<std::uint32_t>& modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem add(FqElem x, FqElem y) const;
  FqElem sub(FqElem x, FqElem y) const;
  FqElem neg(FqElem x) const;
  FqElem mul(FqElem x, FqElem y) const;
  /// Multiplicative inverse; throws std::invalid_argument on x = 0.
  FqElem inv(FqElem x) const;
  FqElem pow(FqElem x, std::uint64_t e) const;

  /// Absolute trace tr(x) = sum_{i<r} x^{p^i}, an element of the prime
  /// subfield returned as an integer in [0, p).
  std::uint32_t trace(FqElem x) const { return trace_table_[x]; }

  /// Coordinates of x over the polynomial basis (r digits base p).
  std::vector<Fp> to_fp_coords(FqElem x) const;
  FqElem from_fp_coords(const std::vector<Fp>& coords) const;

  /// Gram matrix of the trace form on the polynomial basis:
  /// trace_gram(s, t) = tr(x^s * x^t).  Symmetric.
  std::uint32_t trace_gram(std::uint32_t s, std::uint32_t t) const {
    return gram_[s * r_ + t];
  }

  /// True when the two fields have identical (p, r, modulus).
  bool same_params(const Field& other) const;

private:
  Field() = default;
  void build_tables();

  std::uint32_t p_ = 0, r_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;      // q entries; log_[0] unused
  std::vector<std::uint32_t> antilog_;  // q-1 entries: antilog_[i] = g^i
  std::vector<std::uint16_t> trace_table_;
  std::vector<std::uint16_t> gram_;  // r x r
};

}  // namespace qdeflate
