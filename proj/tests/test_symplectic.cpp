#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qdeflate/symplectic.hpp"

using namespace qdeflate;

namespace {

SympVector rand_vec(std::mt19937& rng, const FieldRef& f, std::size_t n) {
  std::uniform_int_distribution<FqElem> dist(0, f->q() - 1);
  std::vector<FqElem> a(n), b(n);
  for (auto& x : a) x = dist(rng);
  for (auto& x : b) x = dist(rng);
  return make_vector(f, std::move(a), std::move(b));
}

}  // namespace

TEST_CASE("symplectic product frozen values") {
  const FieldRef f2 = Field::make(2, 1);
  const SympVector x = make_vector(f2, {1}, {0});
  const SympVector z = make_vector(f2, {0}, {1});
  CHECK(symp_product(x, z) == 1);
  CHECK(symp_product(z, x) == 1);  // -1 = 1 over F_2
  CHECK(symp_product(x, x) == 0);

  const FieldRef f4 = Field::make(2, 2);
  // <(x|0), (0|1)> = tr(x) = 1 in F_4.
  CHECK(symp_product(make_vector(f4, {2}, {0}), make_vector(f4, {0}, {1})) == 1);
  // <(1|0), (0|1)> = tr(1) = 0 in F_4: distinct F_p-vectors can pair to zero.
  CHECK(symp_product(make_vector(f4, {1}, {0}), make_vector(f4, {0}, {1})) == 0);

  const FieldRef f5 = Field::make(5, 1);
  const SympVector u = make_vector(f5, {2, 1}, {0, 3});
  const SympVector v = make_vector(f5, {4, 0}, {1, 2});
  // <u,v> = (2*1 + 1*2) - (4*0 + 0*3) = 4.
  CHECK(symp_product(u, v) == 4);
  CHECK(symp_product(v, u) == 1);  // -4 mod 5
}

TEST_CASE("product is antisymmetric, alternating, and F_p-bilinear") {
  std::mt19937 rng(21);
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
    const FieldRef f = Field::make(p, r);
    for (int trial = 0; trial < 50; ++trial) {
      const SympVector u = rand_vec(rng, f, 4);
      const SympVector v = rand_vec(rng, f, 4);
      const SympVector w = rand_vec(rng, f, 4);
      CHECK(symp_product(u, u) == 0);
      CHECK((symp_product(u, v) + symp_product(v, u)) % p == 0);
      CHECK(symp_product(vec_add(u, w), v) ==
            (symp_product(u, v) + symp_product(w, v)) % p);
      const Fp c = static_cast<Fp>(trial % p);
      CHECK(symp_product(vec_scale(u, c), v) == (c * symp_product(u, v)) % p);
    }
  }
}

TEST_CASE("weight and the projection identity") {
  const FieldRef f2 = Field::make(2, 1);
  const SympVector v = make_vector(f2, {1, 0, 0, 1}, {1, 1, 0, 0});
  CHECK(symp_weight(v) == 3);  // positions 0, 1, 3
  CHECK(symp_weight(zero_vector(f2, 4)) == 0);

  std::mt19937 rng(22);
  const FieldRef f4 = Field::make(2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const SympVector u = rand_vec(rng, f4, 6);
    const std::vector<std::size_t> I = {1, 4};
    CHECK(symp_weight(take_prefix(u, I)) + symp_weight(project(u, I)) ==
          symp_weight(u));
  }
}

TEST_CASE("project and take_prefix") {
  const FieldRef f5 = Field::make(5, 1);
  const SympVector v = make_vector(f5, {1, 2, 3, 4}, {4, 3, 2, 1});
  const std::vector<std::size_t> I = {0, 2};
  const SympVector pro = project(v, I);
  CHECK(pro.a == std::vector<FqElem>{2, 4});
  CHECK(pro.b == std::vector<FqElem>{3, 1});
  const SympVector pre = take_prefix(v, I);
  CHECK(pre.a == std::vector<FqElem>{1, 3});
  CHECK(pre.b == std::vector<FqElem>{4, 2});

  CHECK(project(v, {}) == v);
  CHECK(take_prefix(v, {}).n() == 0);
  CHECK_THROWS_AS(project(v, {4}), std::invalid_argument);
  CHECK_THROWS_AS(project(v, {2, 1}), std::invalid_argument);
}

TEST_CASE("flatten layout and round trip") {
  const FieldRef f4 = Field::make(2, 2);
  // a-digits first, position-major, low F_p digit first; then b-digits.
  const SympVector v = make_vector(f4, {2, 1}, {3, 0});
  CHECK(flatten(v) == std::vector<Fp>{0, 1, 1, 0, 1, 1, 0, 0});
  CHECK(unflatten(f4, 2, flatten(v)) == v);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const SympVector u = rand_vec(rng, f4, 3);
    CHECK(unflatten(f4, 3, flatten(u)) == u);
    // Flattening is F_p-linear.
    const SympVector w = rand_vec(rng, f4, 3);
    std::vector<Fp> sum = flatten(u);
    add_scaled(sum, flatten(w), 1, 2);
    CHECK(sum == flatten(vec_add(u, w)));
  }
  CHECK_THROWS_AS(unflatten(f4, 2, std::vector<Fp>(7, 0)), std::invalid_argument);
}

TEST_CASE("constraint rows evaluate the product") {
  std::mt19937 rng(24);
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 2}, {2, 3}}) {
    const FieldRef f = Field::make(p, r);
    for (int trial = 0; trial < 30; ++trial) {
      const SympVector v = rand_vec(rng, f, 3);
      const SympVector w = rand_vec(rng, f, 3);
      const std::vector<Fp> row = symp_constraint_row(v);
      const std::vector<Fp> wf = flatten(w);
      REQUIRE(row.size() == wf.size());
      std::uint32_t dot = 0;
      for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * wf[i];
      CHECK(dot % p == symp_product(w, v));
    }
  }
}

TEST_CASE("symplectic dual") {
  const FieldRef f2 = Field::make(2, 1);
  const SympSubspace s = span_of(f2, 2, {make_vector(f2, {1, 1}, {1, 1})});
  const SympSubspace dual = symp_dual(s);
  CHECK(dual.dim() == 3);
  const SympSubspace expected =
      span_of(f2, 2,
              {make_vector(f2, {1, 1}, {1, 1}), make_vector(f2, {1, 0}, {1, 0}),
               make_vector(f2, {1, 1}, {0, 0})});
  CHECK(dual == expected);

  std::mt19937 rng(25);
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}}) {
    const FieldRef f = Field::make(p, r);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 3;
      const SympSubspace sp =
          span_of(f, n, {rand_vec(rng, f, n), rand_vec(rng, f, n)});
      const SympSubspace d = symp_dual(sp);
      CHECK(d.dim() == 2 * f->r() * n - sp.dim());
      CHECK(symp_dual(d) == sp);
      for (const SympVector& x : basis_vectors(sp))
        for (const SympVector& y : basis_vectors(d))
          CHECK(symp_product(x, y) == 0);
    }
  }

  CHECK(symp_dual(zero_space(f2, 2)) == full_space(f2, 2));
  CHECK(symp_dual(full_space(f2, 2)) == zero_space(f2, 2));
}

TEST_CASE("span, membership, and basis vectors") {
  const FieldRef f3 = Field::make(3, 1);
  const SympVector g1 = make_vector(f3, {1, 0}, {0, 2});
  const SympVector g2 = make_vector(f3, {0, 1}, {1, 0});
  const SympSubspace s = span_of(f3, 2, {g1, g2});
  CHECK(s.dim() == 2);
  CHECK(space_contains(s, g1));
  CHECK(space_contains(s, vec_add(g1, vec_scale(g2, 2))));
  CHECK(space_contains(s, zero_vector(f3, 2)));
  CHECK_FALSE(space_contains(s, make_vector(f3, {1, 0}, {0, 0})));

  // basis_vectors spans the same space.
  CHECK(span_of(f3, 2, basis_vectors(s)) == s);
  CHECK(basis_vectors(s).size() == s.dim());

  // Spans ignore duplicates and zero vectors.
  CHECK(span_of(f3, 2, {g1, g1, zero_vector(f3, 2)}).dim() == 1);
  CHECK(zero_space(f3, 2).dim() == 0);
  CHECK(full_space(f3, 2).dim() == 4);
  CHECK(space_contains(full_space(f3, 2), s));
  CHECK_FALSE(space_contains(s, full_space(f3, 2)));
}

TEST_CASE("space projections") {
  const FieldRef f2 = Field::make(2, 1);
  const SympVector g1 = make_vector(f2, {1, 1, 0}, {0, 0, 1});
  const SympVector g2 = make_vector(f2, {0, 1, 1}, {1, 0, 0});
  const SympSubspace s = span_of(f2, 3, {g1, g2});
  const std::vector<std::size_t> I = {0};

  const SympSubspace proj = project_space(s, I);
  CHECK(proj.n == 2);
  CHECK(proj == span_of(f2, 2,
                        {make_vector(f2, {1, 0}, {0, 1}),
                         make_vector(f2, {1, 1}, {0, 0})}));

  const SympSubspace pre = prefix_space(s, I);
  CHECK(pre.n == 1);
  CHECK(pre == span_of(f2, 1, {make_vector(f2, {1}, {0}),
                               make_vector(f2, {0}, {1})}));
}

TEST_CASE("sigma matches prefix products") {
  std::mt19937 rng(26);
  const FieldRef f3 = Field::make(3, 1);
  const std::vector<std::size_t> I = {0, 2};
  const std::vector<SympVector> A = {rand_vec(rng, f3, 2), rand_vec(rng, f3, 2),
                                     rand_vec(rng, f3, 2)};
  for (int trial = 0; trial < 30; ++trial) {
    const SympVector v = rand_vec(rng, f3, 4);
    const std::vector<Fp> img = sigma(A, I, v);
    REQUIRE(img.size() == A.size());
    for (std::size_t j = 0; j < A.size(); ++j)
      CHECK(img[j] == symp_product(take_prefix(v, I), A[j]));
  }
  CHECK_THROWS_AS(sigma(A, {0}, rand_vec(rng, f3, 4)), std::invalid_argument);
}

TEST_CASE("shape and field mismatches are rejected") {
  const FieldRef f2 = Field::make(2, 1);
  const FieldRef f3 = Field::make(3, 1);
  CHECK_THROWS_AS(make_vector(f2, {1, 0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(
      symp_product(make_vector(f2, {1}, {0}), make_vector(f3, {1}, {0})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      symp_product(make_vector(f2, {1}, {0}), make_vector(f2, {1, 0}, {0, 0})),
      std::invalid_argument);
  CHECK_THROWS_AS(make_vector(f2, {2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(
      span_of(f2, 2, {make_vector(f2, {1}, {0})}), std::invalid_argument);
}
