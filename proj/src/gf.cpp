#include "qdeflate/gf.hpp"

#include <stdexcept>
#include <string>

namespace qdeflate {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;

// Polynomials over F_p as coefficient vectors, low degree first, no trailing
// zeros (except the zero polynomial = empty vector).

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t v = f[shift + i] + std::uint64_t(p) * p -
                          std::uint64_t(lead) * g[i] % p;
        f[shift + i] = static_cast<std::uint32_t>(v % p);
      }
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = static_cast<std::uint32_t>(
          (h[i + j] + std::uint64_t(f[i]) * g[j]) % p);
  trim(h);
  return h;
}

Poly unpack(FqElem x, std::uint32_t p, std::uint32_t r) {
  Poly f(r, 0);
  for (std::uint32_t i = 0; i < r; ++i) {
    f[i] = x % p;
    x /= p;
  }
  trim(f);
  return f;
}

FqElem pack(const Poly& f, std::uint32_t p) {
  FqElem x = 0;
  for (std::size_t i = f.size(); i-- > 0;) x = x * p + f[i];
  return x;
}

// Table-free product used only while bootstrapping the log tables.
FqElem slow_mul(FqElem x, FqElem y, std::uint32_t p, std::uint32_t r,
                const Poly& modulus) {
  return pack(poly_mod(poly_mul(unpack(x, p, r), unpack(y, p, r), p), modulus,
                       p),
              p);
}

// A monic polynomial of degree r is irreducible iff it has no monic factor of
// degree in [1, r/2].
bool is_irreducible(const Poly& f, std::uint32_t p, std::uint32_t r) {
  if (r == 1) return true;
  for (std::uint32_t deg = 1; deg <= r / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g(deg + 1, 0);
      std::uint64_t v = low;
      for (std::uint32_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[deg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

FieldRef Field::make(std::uint32_t p, std::uint32_t r) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw std::invalid_argument("make_field: r must be >= 1");
  if (r == 1) return make(p, r, {0, 1});
  // Smallest monic irreducible of degree r, low coefficients ascending.
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("make_field: p^r exceeds the supported range 2^16");
  }
  for (std::uint64_t low = 0; low < q; ++low) {
    std::vector<std::uint32_t> mod(r + 1, 0);
    std::uint64_t v = low;
    for (std::uint32_t i = 0; i < r; ++i) {
      mod[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    mod[r] = 1;
    if (is_irreducible(mod, p, r)) return make(p, r, mod);
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

FieldRef Field::make(std::uint32_t p, std::uint32_t r,
                     const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw std::invalid_argument("make_field: r must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("make_field: p^r exceeds the supported range 2^16");
  }
  if (modulus.size() != r + 1)
    throw std::invalid_argument("make_field: modulus must have r+1 coefficients");
  if (modulus[r] != 1)
    throw std::invalid_argument("make_field: modulus must be monic");
  for (std::uint32_t c : modulus)
    if (c >= p) throw std::invalid_argument("make_field: modulus coefficient not reduced mod p");
  Poly f(modulus.begin(), modulus.end());
  if (!is_irreducible(f, p, r))
    throw std::invalid_argument("make_field: modulus is reducible over F_p");

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->r_ = r;
  field->q_ = static_cast<std::uint32_t>(q);
  field->modulus_ = modulus;
  field->build_tables();
  return field;
}

void Field::build_tables() {
  const Poly modulus(modulus_.begin(), modulus_.end());

  // Log/antilog tables from a generator of the multiplicative group.
  log_.assign(q_, 0);
  antilog_.assign(q_ - 1, 0);
  if (q_ == 2) {
    antilog_[0] = 1;
    log_[1] = 0;
  } else {
    std::uint32_t g = 2;
    for (;; ++g) {
      if (g >= q_) throw std::logic_error("field tables: no generator found");
      std::uint32_t x = 1;
      std::uint32_t order = 0;
      do {
        x = slow_mul(x, g, p_, r_, modulus);
        ++order;
      } while (x != 1);
      if (order == q_ - 1) break;
    }
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      antilog_[i] = x;
      log_[x] = i;
      x = slow_mul(x, g, p_, r_, modulus);
    }
  }

  // trace(x) = sum_{i<r} x^{p^i}, via the log tables built above.
  trace_table_.assign(q_, 0);
  for (std::uint32_t x = 0; x < q_; ++x) {
    FqElem acc = 0;  // packed sum; the result lies in the prime subfield
    FqElem term = x;
    for (std::uint32_t i = 0; i < r_; ++i) {
      acc = add(acc, term);
      term = pow(term, p_);
    }
    if (acc >= p_) throw std::logic_error("field tables: trace not in prime subfield");
    trace_table_[x] = static_cast<std::uint16_t>(acc);
  }

  // Gram matrix of the trace form on the polynomial basis; the basis element
  // x^s has packed encoding p^s.
  gram_.assign(std::size_t(r_) * r_, 0);
  for (std::uint32_t s = 0; s < r_; ++s)
    for (std::uint32_t t = 0; t < r_; ++t) {
      FqElem es = 1, et = 1;
      for (std::uint32_t i = 0; i < s; ++i) es = mul(es, p_);
      for (std::uint32_t i = 0; i < t; ++i) et = mul(et, p_);
      gram_[s * r_ + t] = static_cast<std::uint16_t>(trace_table_[mul(es, et)]);
    }
}

FqElem Field::add(FqElem x, FqElem y) const {
  if (r_ == 1) return (x + y) % p_;
  FqElem out = 0, mult = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += (x % p_ + y % p_) % p_ * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return out;
}

FqElem Field::sub(FqElem x, FqElem y) const { return add(x, neg(y)); }

FqElem Field::neg(FqElem x) const {
  if (r_ == 1) return (p_ - x) % p_;
  FqElem out = 0, mult = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += (p_ - x % p_) % p_ * mult;
    x /= p_;
    mult *= p_;
  }
  return out;
}

FqElem Field::mul(FqElem x, FqElem y) const {
  if (x == 0 || y == 0) return 0;
  std::uint32_t s = log_[x] + log_[y];
  if (s >= q_ - 1) s -= q_ - 1;
  return antilog_[s];
}

FqElem Field::inv(FqElem x) const {
  if (x == 0) throw std::invalid_argument("field inv: zero has no inverse");
  return antilog_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

FqElem Field::pow(FqElem x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  std::uint64_t le = std::uint64_t(log_[x]) * (e % (q_ - 1)) % (q_ - 1);
  return antilog_[le];
}

std::vector<Fp> Field::to_fp_coords(FqElem x) const {
  std::vector<Fp> coords(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    coords[i] = static_cast<Fp>(x % p_);
    x /= p_;
  }
  return coords;
}

FqElem Field::from_fp_coords(const std::vector<Fp>& coords) const {
  if (coords.size() != r_)
    throw std::invalid_argument("from_fp_coords: expected r coordinates");
  FqElem x = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_)
      throw std::invalid_argument("from_fp_coords: coordinate out of range");
    x = x * p_ + coords[i];
  }
  return x;
}

bool Field::same_params(const Field& other) const {
  return p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_;
}

}  // namespace qdeflate
