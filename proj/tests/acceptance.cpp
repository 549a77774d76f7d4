// Acceptance harness: runs the ten acceptance criteria, prints one PASS/FAIL
// line per criterion, and exits nonzero when any criterion fails.  Each
// criterion carries a pinned wall-clock limit (seconds; 0 = unlimited) and
// exact expected values; nothing here is tunable from the command line.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "qdeflate/classical.hpp"
#include "qdeflate/counting.hpp"
#include "qdeflate/deflate.hpp"
#include "qdeflate/gf.hpp"
#include "qdeflate/search.hpp"
#include "qdeflate/stab_io.hpp"
#include "qdeflate/stabilizer.hpp"
#include "qdeflate/symplectic.hpp"
#include "support/random_codes.hpp"

#ifndef QDEFLATE_DATA_DIR
#define QDEFLATE_DATA_DIR "data"
#endif

using namespace qdeflate;

namespace {

std::vector<FqElem> bits(const std::string& s) {
  std::vector<FqElem> out;
  for (char c : s) out.push_back(static_cast<FqElem>(c - '0'));
  return out;
}

SympVector row2(const FieldRef& f, const std::string& a, const std::string& b) {
  return make_vector(f, bits(a), bits(b));
}

StabilizerCode five_qubit() {
  const FieldRef f2 = Field::make(2, 1);
  return StabilizerCode::from_generators(
      f2, 5,
      {row2(f2, "10010", "01100"), row2(f2, "01001", "00110"),
       row2(f2, "10100", "00011"), row2(f2, "01010", "10001")});
}

// Independent distance oracle: plain odometer over all of F_q^{2n}, dual
// membership tested directly against the stabilizer basis.
std::uint32_t sweep_distance(const StabilizerCode& code) {
  const FieldRef& f = code.field_ref();
  const std::size_t n = code.n();
  const std::vector<SympVector> basis = basis_vectors(code.space());
  std::vector<FqElem> word(2 * n, 0);
  std::uint32_t best = ~0u;
  while (true) {
    std::size_t i = 0;
    while (i < word.size() && word[i] == f->q() - 1) word[i++] = 0;
    if (i == word.size()) break;
    ++word[i];
    const SympVector v = make_vector(
        f, std::vector<FqElem>(word.begin(), word.begin() + n),
        std::vector<FqElem>(word.begin() + n, word.end()));
    bool in_dual = true;
    for (const SympVector& g : basis)
      if (symp_product(v, g) != 0) {
        in_dual = false;
        break;
      }
    if (!in_dual || space_contains(code.space(), v)) continue;
    const std::uint32_t w = static_cast<std::uint32_t>(symp_weight(v));
    if (w < best) best = w;
  }
  return best;
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// ---------------------------------------------------------------------------
// Criterion 1: the bundled [[8,1,2]] example, deflated at positions {1,2}
// (1-based).  The six reference prefixes give [[6,2,1]]; span{(11|11)} gives
// [[6,2,2]].
Verdict criterion_1() {
  Verdict v;
  const ParsedStab parsed =
      parse_stab_file(std::string(QDEFLATE_DATA_DIR) + "/ex1.stab");
  const StabilizerCode& code = parsed.code;
  v.require(code.n() == 8 && code.k() == 1, "bundled code is not [[8,1]]_2");
  v.require(min_distance(code) == 2, "bundled code distance is not 2");

  const FieldRef f2 = code.field_ref();
  const std::vector<std::size_t> I = {0, 1};
  DeflateOptions opts;
  opts.known_d = 2;
  opts.known_pure = true;

  const std::vector<std::pair<std::string, std::string>> display = {
      {"00", "01"}, {"00", "10"}, {"01", "00"},
      {"01", "01"}, {"10", "00"}, {"10", "10"}};
  for (const auto& [a, b] : display) {
    const PrefixCode prefix =
        StabilizerCode::from_generators(f2, 2, {row2(f2, a, b)});
    const DeflationReport report = deflate(code, prefix, I, opts);
    v.require(report.measured_k == 2 && report.measured_d == 1,
              "prefix (" + a + "|" + b + ") did not give [[6,2,1]]");
  }
  const PrefixCode star =
      StabilizerCode::from_generators(f2, 2, {row2(f2, "11", "11")});
  const DeflationReport starred = deflate(code, star, I, opts);
  v.require(starred.measured_k == 2 && starred.measured_d == 2,
            "prefix (11|11) did not give [[6,2,2]]");
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 2: closed-form counts at t=2, k'=1 for p=2,3 and r=1,2,3.
Verdict criterion_2() {
  Verdict v;
  const BigInt ps2[3] = {6, 30, 270};
  const BigInt ps3[3] = {8, 80, 2240};
  const BigInt all2[3] = {15, 5355, 50868675};
  const BigInt all3[3] = {40, 298480, BigInt("494845859200")};
  for (std::uint32_t r = 1; r <= 3; ++r) {
    v.require(count_punc_short(2, r, 2, 1) == ps2[r - 1],
              "count_punc_short(2," + std::to_string(r) + ",2,1)");
    v.require(count_punc_short(3, r, 2, 1) == ps3[r - 1],
              "count_punc_short(3," + std::to_string(r) + ",2,1)");
    v.require(count_stabilizers(2, r, 2, 1) == all2[r - 1],
              "count_stabilizers(2," + std::to_string(r) + ",2,1)");
    v.require(count_stabilizers(3, r, 2, 1) == all3[r - 1],
              "count_stabilizers(3," + std::to_string(r) + ",2,1)");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 3: t=3, k'=1 counts, including the two rounded renderings.
Verdict criterion_3() {
  Verdict v;
  v.require(count_punc_short(2, 1, 3, 1) == 45, "count_punc_short(2,1,3,1)");
  v.require(count_punc_short(2, 2, 3, 1) == 6885, "count_punc_short(2,2,3,1)");
  v.require(count_punc_short(2, 3, 3, 1) == 14768325,
            "count_punc_short(2,3,3,1)");
  v.require(count_punc_short(3, 1, 3, 1) == 120, "count_punc_short(3,1,3,1)");
  v.require(count_punc_short(3, 2, 3, 1) == 275520,
            "count_punc_short(3,2,3,1)");
  v.require(count_punc_short(3, 3, 3, 1) == BigInt("49075622400"),
            "count_punc_short(3,3,3,1)");
  v.require(count_stabilizers(2, 1, 3, 1) == 315, "count_stabilizers(2,1,3,1)");
  v.require(count_stabilizers(2, 2, 3, 1) == 213648435,
            "count_stabilizers(2,2,3,1)");
  v.require(count_stabilizers(3, 1, 3, 1) == 3640,
            "count_stabilizers(3,1,3,1)");
  v.require(count_stabilizers(3, 2, 3, 1) == BigInt("4503097318720"),
            "count_stabilizers(3,2,3,1)");
  v.require(to_scientific_3(count_stabilizers(2, 3, 3, 1)) == "4.89·10^17",
            "rendering of count_stabilizers(2,3,3,1)");
  v.require(to_scientific_3(count_stabilizers(3, 3, 3, 1)) == "2.80·10^27",
            "rendering of count_stabilizers(3,3,3,1)");
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 4: enumeration cardinalities equal the closed form.
Verdict criterion_4() {
  Verdict v;
  const struct {
    std::uint32_t p, r, t, kp;
  } cases[] = {{2, 1, 2, 1}, {3, 1, 2, 1}, {2, 1, 3, 1}, {2, 1, 2, 0},
               {2, 1, 3, 2}};
  for (const auto& c : cases) {
    const FieldRef f = Field::make(c.p, c.r);
    std::uint64_t visits = 0;
    enumerate_prefix_codes(f, c.t, c.kp, kDefaultBudget,
                           [&](const StabilizerCode&) { ++visits; });
    v.require(BigInt(visits) == count_stabilizers(c.p, c.r, c.t, c.kp),
              "enumeration mismatch at (" + std::to_string(c.p) + "," +
                  std::to_string(c.r) + "," + std::to_string(c.t) + "," +
                  std::to_string(c.kp) + ")");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 5: duality commutes with deflation on 100 random pure codes
// (q = 2, n <= 8) with random prefixes and t < d.
Verdict criterion_5() {
  Verdict v;
  std::mt19937 rng(1005);
  const FieldRef f2 = Field::make(2, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const testing::PureCode pc = testing::random_pure_code(rng, f2, 4, 8, 3, 2);
    std::uniform_int_distribution<std::size_t> t_dist(1, pc.d - 1);
    const std::size_t t = t_dist(rng);
    const std::vector<std::size_t> I =
        testing::random_positions(rng, pc.code.n(), t);
    std::uniform_int_distribution<std::uint32_t> kp_dist(
        0, static_cast<std::uint32_t>(t));
    const std::vector<StabilizerCode> prefixes = collect_prefix_codes(
        f2, t, kp_dist(rng), kDefaultBudget);
    std::uniform_int_distribution<std::size_t> pick(0, prefixes.size() - 1);
    const PrefixCode& prefix = prefixes[pick(rng)];
    if (!dual_commutation_check(pc.code, prefix, I, kDefaultBudget, pc.d)) {
      v.require(false, "commutation failed at trial " + std::to_string(trial));
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 6: for pure inputs with t < d the output parameters are exactly
// [[n-t, k+k']] with measured distance >= d-t.  The [[5,1,3]] code is first
// re-verified by the independent sweep, then every prefix is applied at
// every position set for t = 1, 2; 50 random pure codes follow.
Verdict criterion_6() {
  Verdict v;
  const StabilizerCode five = five_qubit();
  v.require(sweep_distance(five) == 3, "[[5,1,3]] sweep distance is not 3");
  const FieldRef f2 = five.field_ref();

  DeflateOptions opts;
  opts.known_d = 3;
  opts.known_pure = true;
  opts.theorem_analysis = false;

  auto check_all = [&](const std::vector<std::size_t>& I) {
    const std::size_t t = I.size();
    for (std::uint32_t kp = 0; kp <= t; ++kp) {
      for (const StabilizerCode& prefix :
           collect_prefix_codes(f2, t, kp, kDefaultBudget)) {
        const DeflationReport report = deflate(five, prefix, I, opts);
        const bool k_ok = report.measured_k &&
                          *report.measured_k == five.k() + prefix.k();
        const bool d_ok =
            report.measured_d && *report.measured_d >= 3 - static_cast<int>(t);
        if (!(k_ok && d_ok)) {
          v.require(false, "five-qubit deflation violated the parameter law");
          return;
        }
      }
    }
  };
  for (std::size_t i = 0; i < 5 && v.pass; ++i) check_all({i});
  for (std::size_t i = 0; i < 5 && v.pass; ++i)
    for (std::size_t j = i + 1; j < 5 && v.pass; ++j) check_all({i, j});

  std::mt19937 rng(1006);
  for (int trial = 0; trial < 50 && v.pass; ++trial) {
    const testing::PureCode pc = testing::random_pure_code(rng, f2, 4, 8, 3, 2);
    std::uniform_int_distribution<std::size_t> t_dist(1, pc.d - 1);
    const std::size_t t = t_dist(rng);
    const std::vector<std::size_t> I =
        testing::random_positions(rng, pc.code.n(), t);
    DeflateOptions ropts;
    ropts.known_d = pc.d;
    ropts.known_pure = true;
    ropts.theorem_analysis = false;
    for (std::uint32_t kp = 0; kp <= t && v.pass; ++kp) {
      for (const StabilizerCode& prefix :
           collect_prefix_codes(f2, t, kp, kDefaultBudget)) {
        const DeflationReport report = deflate(pc.code, prefix, I, ropts);
        v.require(report.measured_k &&
                      *report.measured_k == pc.code.k() + prefix.k(),
                  "random pure deflation: wrong output k at trial " +
                      std::to_string(trial));
        v.require(report.measured_d &&
                      static_cast<long long>(*report.measured_d) >=
                          static_cast<long long>(pc.d) -
                              static_cast<long long>(t),
                  "random pure deflation: distance below d-t at trial " +
                      std::to_string(trial));
        if (!v.pass) break;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 7: shorten equals deflation by the zero prefix; puncture equals
// deflation by its padded block-diagonal span.  100 random codes.
Verdict criterion_7() {
  Verdict v;
  std::mt19937 rng(1007);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {
      {2, 1}, {3, 1}, {2, 2}};
  for (int trial = 0; trial < 100 && v.pass; ++trial) {
    const auto& [p, r] = fields[trial % fields.size()];
    const FieldRef f = Field::make(p, r);
    const std::size_t n = 4 + trial % 2;
    const std::uint32_t k = 1 + trial % 2;
    const StabilizerCode code = testing::random_code(rng, f, n, k);
    const std::size_t t = 1 + trial % 2;
    const std::vector<std::size_t> I = testing::random_positions(rng, n, t);

    DeflateOptions opts;
    opts.measure_distance = false;
    opts.theorem_analysis = false;

    const PrefixCode zero = StabilizerCode::from_space(zero_space(f, t));
    v.require(shorten(code, I, opts).raw_space ==
                  deflate(code, zero, I, opts).raw_space,
              "shorten mismatch at trial " + std::to_string(trial));

    // Local spans from one random nonzero local vector per position: its
    // multiples by x^s give r independent length-1 vectors.
    std::vector<std::vector<SympVector>> locals(t);
    std::vector<SympVector> padded;
    for (std::size_t j = 0; j < t; ++j) {
      SympVector base = zero_vector(f, 1);
      while (symp_weight(base) == 0) base = testing::random_vector(rng, f, 1);
      FqElem scalar = 1;
      for (std::uint32_t s = 0; s < r; ++s) {
        const SympVector lv = make_vector(
            f, {f->mul(scalar, base.a[0])}, {f->mul(scalar, base.b[0])});
        locals[j].push_back(lv);
        SympVector pv = zero_vector(f, t);
        pv.a[j] = lv.a[0];
        pv.b[j] = lv.b[0];
        padded.push_back(pv);
        scalar = f->mul(scalar, f->p());
      }
    }
    const PrefixCode block = StabilizerCode::from_generators(f, t, padded);
    v.require(puncture(code, I, locals, opts).raw_space ==
                  deflate(code, block, I, opts).raw_space,
              "puncture mismatch at trial " + std::to_string(trial));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 8: criterion-passing candidates measure d~ >= d-t+1, on the
// exhaustive [[8,1,2]] search and 20 random pure codes with t < d.
Verdict criterion_8() {
  Verdict v;
  const FieldRef f2 = Field::make(2, 1);
  const StabilizerCode example = StabilizerCode::from_generators(
      f2, 8,
      {row2(f2, "10000000", "00100000"), row2(f2, "01000000", "00010000"),
       row2(f2, "00100010", "10000100"), row2(f2, "00010001", "01101111"),
       row2(f2, "00001000", "00110110"), row2(f2, "00000111", "00000011"),
       row2(f2, "00000000", "00010101")});

  auto audit = [&](const StabilizerCode& code, const std::vector<std::size_t>& I,
                   std::size_t kp, const std::string& label) {
    const SearchResult result =
        search_deflations(code, I, kp, SearchMode::exhaustive);
    const long long floor_d = static_cast<long long>(result.input_d) -
                              static_cast<long long>(I.size()) + 1;
    for (const SearchEntry& entry : result.entries) {
      if (entry.report.improvement_criterion_holds != true) continue;
      const bool ok = entry.report.measured_d &&
                      static_cast<long long>(*entry.report.measured_d) >=
                          floor_d;
      if (!ok) {
        v.require(false, label + ": criterion passed but d~ < d-t+1");
        return;
      }
    }
  };

  audit(example, {0, 1}, 1, "[[8,1,2]] search");

  std::mt19937 rng(1008);
  for (int trial = 0; trial < 20 && v.pass; ++trial) {
    const testing::PureCode pc = testing::random_pure_code(rng, f2, 4, 7, 2, 2);
    std::uniform_int_distribution<std::size_t> t_dist(1, pc.d - 1);
    const std::size_t t = t_dist(rng);
    const std::vector<std::size_t> I =
        testing::random_positions(rng, pc.code.n(), t);
    std::uniform_int_distribution<std::size_t> kp_dist(0, t);
    audit(pc.code, I, kp_dist(rng), "random search " + std::to_string(trial));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 9: the classical dimension formula on 100 random codes over F_2
// and F_3; k+k'-t whenever the cut columns are independent; the repetition
// code punctures to [2,1,2].
Verdict criterion_9() {
  Verdict v;
  const FieldRef f2 = Field::make(2, 1);
  const LinearCode rep = LinearCode::from_generators(f2, 3, {{1, 1, 1}});
  const LinearCode rep_out =
      deflate_classical(rep, LinearCode::full(f2, 1), {0});
  v.require(rep_out.n() == 2 && rep_out.k() == 1 &&
                min_distance_classical(rep_out) == 2,
            "repetition example did not give [2,1,2]");

  // The dimension formula is exact when no nonzero codeword is supported
  // entirely on the cut positions, so the random draws insist on t < d.
  std::mt19937 rng(1009);
  int done = 0;
  for (int guard = 0; done < 100 && guard < 20000 && v.pass; ++guard) {
    const FieldRef f = done % 2 == 0 ? f2 : Field::make(3, 1);
    const std::size_t n = 4 + done % 3;
    const std::size_t t = 1 + done % 2;
    std::uniform_int_distribution<FqElem> dist(0, f->q() - 1);
    std::vector<std::vector<FqElem>> gens(t == 2 ? 1 : 2 + done % 2,
                                          std::vector<FqElem>(n));
    for (auto& row : gens)
      for (auto& x : row) x = dist(rng);
    const LinearCode code = LinearCode::from_generators(f, n, gens);
    if (code.k() == 0 || min_distance_classical(code) <= t) continue;
    const std::vector<std::size_t> I = testing::random_positions(rng, n, t);
    const LinearCode prefix =
        done % 3 == 0   ? LinearCode::zero(f, t)
        : done % 3 == 1 ? LinearCode::full(f, t)
                        : euclidean_dual(LinearCode::full(f, t));

    const LinearCode out = deflate_classical(code, prefix, I);
    const ClassicalDimension dims = classical_dimension(code, prefix, I);
    v.require(out.k() == dims.formula_dim,
              "deflated dimension disagrees with the formula at case " +
                  std::to_string(done));
    if (dims.information_set) {
      const long long simplified = static_cast<long long>(code.k()) +
                                   static_cast<long long>(prefix.k()) -
                                   static_cast<long long>(t);
      v.require(static_cast<long long>(out.k()) == simplified,
                "information-set dimension is not k+k'-t at case " +
                    std::to_string(done));
    }
    ++done;
  }
  v.require(done == 100, "could not draw 100 cases with t < d");
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 10: invariant suite, 1000 random cases per family.
Verdict criterion_10() {
  Verdict v;
  std::mt19937 rng(1010);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}};

  // (a) product antisymmetry and self-orthogonality.
  for (int trial = 0; trial < 1000 && v.pass; ++trial) {
    const auto& [p, r] = fields[trial % fields.size()];
    const FieldRef f = Field::make(p, r);
    const SympVector x = testing::random_vector(rng, f, 4);
    const SympVector y = testing::random_vector(rng, f, 4);
    v.require(symp_product(x, x) == 0, "self-product is nonzero");
    v.require((symp_product(x, y) + symp_product(y, x)) % p == 0,
              "product is not antisymmetric");
  }

  // (b) dual involution and the dimension identity.
  for (int trial = 0; trial < 1000 && v.pass; ++trial) {
    const auto& [p, r] = fields[trial % fields.size()];
    const FieldRef f = Field::make(p, r);
    const std::size_t n = 3;
    const SympSubspace s = span_of(
        f, n, {testing::random_vector(rng, f, n),
               testing::random_vector(rng, f, n)});
    const SympSubspace d = symp_dual(s);
    v.require(s.dim() + d.dim() == 2 * f->r() * n,
              "dual dimension identity failed");
    v.require(symp_dual(d) == s, "dual is not an involution");
  }

  // (c) weight splits across prefix and projection.
  for (int trial = 0; trial < 1000 && v.pass; ++trial) {
    const auto& [p, r] = fields[trial % fields.size()];
    const FieldRef f = Field::make(p, r);
    const SympVector x = testing::random_vector(rng, f, 5);
    const std::vector<std::size_t> I = testing::random_positions(rng, 5, 2);
    const std::size_t wp = symp_weight(take_prefix(x, I));
    const std::size_t wq = symp_weight(project(x, I));
    v.require(wp + wq == symp_weight(x), "weight does not split");
    v.require(wq <= symp_weight(x), "projection increased the weight");
  }

  // (d) every deflation output is isotropic.
  DeflateOptions opts;
  opts.measure_distance = false;
  opts.theorem_analysis = false;
  for (int trial = 0; trial < 1000 && v.pass; ++trial) {
    const auto& [p, r] = fields[trial % fields.size()];
    const FieldRef f = Field::make(p, r);
    const std::size_t n = 4;
    const StabilizerCode code =
        testing::random_code(rng, f, n, 1 + trial % 3);
    const std::size_t t = 1 + trial % 2;
    const std::vector<std::size_t> I = testing::random_positions(rng, n, t);
    std::uniform_int_distribution<std::uint32_t> kp_dist(
        0, static_cast<std::uint32_t>(t));
    const std::vector<StabilizerCode> prefixes =
        collect_prefix_codes(f, t, kp_dist(rng), kDefaultBudget);
    std::uniform_int_distribution<std::size_t> pick(0, prefixes.size() - 1);
    const DeflationReport report =
        deflate(code, prefixes[pick(rng)], I, opts);
    v.require(!isotropy_violation(report.raw_space).has_value(),
              "deflation output is not isotropic");
  }
  return v;
}

struct CriterionSpec {
  int number;
  const char* label;
  double limit_seconds;  // 0 = no limit
  Verdict (*run)();
};

}  // namespace

int main() {
  const CriterionSpec specs[] = {
      {1, "bundled [[8,1,2]] example: reference prefixes give [[6,2,1]], "
          "(11|11) gives [[6,2,2]]",
       1.0, criterion_1},
      {2, "closed-form counts at t=2, k'=1 (p=2,3; r=1,2,3)", 0.001,
       criterion_2},
      {3, "closed-form counts at t=3, k'=1 with 3-digit renderings", 0.001,
       criterion_3},
      {4, "enumerated prefix-code cardinalities match the closed form", 30.0,
       criterion_4},
      {5, "duality commutes with deflation (100 random pure codes)", 120.0,
       criterion_5},
      {6, "pure-input parameter law on [[5,1,3]] and 50 random pure codes",
       120.0, criterion_6},
      {7, "shorten/puncture equal their general-deflation forms (100 codes)",
       60.0, criterion_7},
      {8, "improvement criterion implies d~ >= d-t+1 (example + 20 codes)",
       120.0, criterion_8},
      {9, "classical dimension formula (100 random codes, repetition check)",
       10.0, criterion_9},
      {10, "invariant suite: products, duals, weights, isotropy (1000 each)",
       0.0, criterion_10},
  };

  int failures = 0;
  for (const CriterionSpec& spec : specs) {
    Verdict verdict;
    const auto start = std::chrono::steady_clock::now();
    try {
      verdict = spec.run();
    } catch (const std::exception& e) {
      verdict.pass = false;
      verdict.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (spec.limit_seconds > 0.0 && seconds > spec.limit_seconds) {
      verdict.pass = false;
      if (verdict.detail.empty())
        verdict.detail = "exceeded the " + std::to_string(spec.limit_seconds) +
                         " s limit";
    }
    if (!verdict.pass) ++failures;
    std::printf("%s  criterion %2d  %-72s  %8.3f s%s%s\n",
                verdict.pass ? "PASS" : "FAIL", spec.number, spec.label,
                seconds, verdict.detail.empty() ? "" : "  -- ",
                verdict.detail.c_str());
  }
  std::printf("%d/10 acceptance criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
