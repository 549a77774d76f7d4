#include "qdeflate/deflate.hpp"

#include <chrono>
#include <stdexcept>

namespace qdeflate {

namespace {

void check_deflation_shapes(const SympSubspace& v, const SympSubspace& prefix_space,
                            const std::vector<std::size_t>& I) {
  if (!v.field->same_params(*prefix_space.field))
    throw std::invalid_argument("deflate: field mismatch between code and prefix");
  if (prefix_space.n != I.size())
    throw std::invalid_argument(
        "deflate: |I| = " + std::to_string(I.size()) +
        " does not match the prefix length t = " + std::to_string(prefix_space.n));
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (I[i] >= v.n) throw std::invalid_argument("deflate: position out of range");
    if (i > 0 && I[i] <= I[i - 1])
      throw std::invalid_argument("deflate: positions must be strictly ascending");
  }
}

}  // namespace

SympSubspace deflate_space(const SympSubspace& v, const SympSubspace& prefix_space,
                           const std::vector<std::size_t>& I) {
  check_deflation_shapes(v, prefix_space, I);
  if (I.empty()) return v;

  // sigma constraints: one row per basis vector of symp_dual(prefix_space),
  // applied to the prefix of each basis vector of V.  The kernel within V is
  // exactly the set of elements whose prefix lies in prefix_space.
  const std::vector<SympVector> b_rows = basis_vectors(symp_dual(prefix_space));
  const std::vector<SympVector> v_basis = basis_vectors(v);
  FpMatrix constraints(v.flat.p, b_rows.size(), v_basis.size());
  for (std::size_t i = 0; i < v_basis.size(); ++i) {
    const std::vector<Fp> col = sigma(b_rows, I, v_basis[i]);
    for (std::size_t j = 0; j < b_rows.size(); ++j) constraints.at(j, i) = col[j];
  }
  const CanonicalSubspace coeff_kernel = kernel(constraints);

  // Combine kernel coefficients into vectors of V, then delete positions I.
  const std::size_t out_n = v.n - I.size();
  FpMatrix out_rows(v.flat.p, 0, 2 * v.field->r() * out_n);
  for (std::size_t i = 0; i < coeff_kernel.dim(); ++i) {
    std::vector<Fp> combo(v.flat.ambient_dim, 0);
    for (std::size_t j = 0; j < v_basis.size(); ++j)
      add_scaled(combo, v.flat.basis.row(j), coeff_kernel.basis.at(i, j), v.flat.p);
    out_rows.append_row(flatten(project(unflatten(v.field, v.n, combo), I)));
  }
  return {v.field, out_n, subspace_from_rows(out_rows)};
}

TheoremPrediction theorem_bounds(const StabilizerCode& s, const PrefixCode& sp,
                                 const std::vector<std::size_t>& I,
                                 std::uint64_t budget,
                                 std::optional<std::uint32_t> known_d,
                                 std::optional<bool> known_pure) {
  check_deflation_shapes(s.space(), sp.space(), I);
  const std::size_t t = I.size();
  const std::size_t r = s.field().r();

  TheoremPrediction pred;
  const std::uint32_t d = known_d ? *known_d : min_distance(s, budget);
  const bool pure = known_pure ? *known_pure : is_pure(s, d, budget);
  pred.d_input = d;
  pred.pure_input = pure;
  pred.t_lt_d = t < d;

  const SympSubspace proj = prefix_space(s.space(), I);
  const SympSubspace sp_dual = symp_dual(sp.space());

  pred.theorem1_applicable = pure && pred.t_lt_d;
  if (pred.theorem1_applicable && proj.dim() != 2 * r * t)
    throw std::logic_error(
        "theorem_bounds: pure code with t < d must project onto the full "
        "prefix space");

  pred.theorem2_applicable = space_contains(proj, sp_dual);

  if (pred.theorem1_applicable || pred.theorem2_applicable)
    pred.predicted_k = s.k() + sp.k();

  if (pred.theorem1_applicable) {
    pred.predicted_d_lower_bound = static_cast<std::int32_t>(d) -
                                   static_cast<std::int32_t>(t);
  } else if (pred.theorem2_applicable) {
    // The d - t bound needs the side condition: every element of S with
    // prefix in dual(Sp)\Sp has weight >= d.
    bool ok = true;
    for_each_element(s.space(), budget, [&](const std::vector<Fp>& flat) {
      const SympVector v = unflatten(s.field_ref(), s.n(), flat);
      const SympVector pf = take_prefix(v, I);
      if (space_contains(sp_dual, pf) && !space_contains(sp.space(), pf) &&
          symp_weight(v) < d)
        ok = false;
      return ok;
    });
    pred.prefix_weight_ok = ok;
    if (ok)
      pred.predicted_d_lower_bound = static_cast<std::int32_t>(d) -
                                     static_cast<std::int32_t>(t);
  }
  return pred;
}

DeflationReport deflate(const StabilizerCode& s, const PrefixCode& sp,
                        const std::vector<std::size_t>& I,
                        const DeflateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_deflation_shapes(s.space(), sp.space(), I);

  DeflationReport report;
  report.input.n = s.n();
  report.input.k = s.k();
  report.input.q = s.field().q();
  report.t = I.size();
  report.prefix_k = sp.k();
  report.positions = I;

  report.raw_space = deflate_space(s.space(), sp.space(), I);

  // Prop. 1: the deflation of a stabilizer is a stabilizer.
  if (isotropy_violation(report.raw_space))
    throw std::logic_error("deflate: output space is not isotropic");

  const std::size_t r = s.field().r();
  report.dimension_integral = report.raw_space.dim() % r == 0;
  if (report.dimension_integral) {
    report.code = StabilizerCode::from_space(report.raw_space);
    report.measured_k = report.code->k();
    if (options.measure_distance && report.code->k() >= 1)
      report.measured_d = min_distance(*report.code, options.budget);
  }

  if (options.theorem_analysis) {
    report.prediction = theorem_bounds(s, sp, I, options.budget,
                                       options.known_d, options.known_pure);
    report.input.d = report.prediction.d_input;
    report.input.pure = report.prediction.pure_input;
  } else {
    report.input.d = options.known_d;
    report.input.pure = options.known_pure;
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

DeflationReport shorten(const StabilizerCode& s, const std::vector<std::size_t>& I,
                        const DeflateOptions& options) {
  const PrefixCode zero_prefix =
      StabilizerCode::from_space(zero_space(s.field_ref(), I.size()));
  return deflate(s, zero_prefix, I, options);
}

DeflationReport puncture(const StabilizerCode& s, const std::vector<std::size_t>& I,
                         const std::vector<std::vector<SympVector>>& local_spans,
                         const DeflateOptions& options) {
  const std::size_t t = I.size();
  const std::size_t r = s.field().r();
  if (local_spans.size() != t)
    throw std::invalid_argument("puncture: need one local span per position");

  std::vector<SympVector> prefix_generators;
  for (std::size_t j = 0; j < t; ++j) {
    if (local_spans[j].size() != r)
      throw std::invalid_argument(
          "puncture: each local span needs r independent length-1 vectors");
    FpMatrix local(s.field().p(), 0, 2 * r);
    for (const SympVector& lv : local_spans[j]) {
      if (lv.n() != 1)
        throw std::invalid_argument("puncture: local vectors must have length 1");
      local.append_row(flatten(lv));
      // Pad into position j of a length-t vector.
      SympVector padded = zero_vector(s.field_ref(), t);
      padded.a[j] = lv.a[0];
      padded.b[j] = lv.b[0];
      prefix_generators.push_back(padded);
    }
    if (subspace_from_rows(local).dim() != r)
      throw std::invalid_argument(
          "puncture: local span at position " + std::to_string(j + 1) +
          " is linearly dependent");
  }

  const PrefixCode sp =
      StabilizerCode::from_generators(s.field_ref(), t, prefix_generators);
  if (sp.k() != 0)
    throw std::logic_error("puncture: block-diagonal prefix span must have k' = 0");
  return deflate(s, sp, I, options);
}

bool dual_commutation_check(const StabilizerCode& s, const PrefixCode& sp,
                            const std::vector<std::size_t>& I,
                            std::uint64_t budget,
                            std::optional<std::uint32_t> known_d) {
  check_deflation_shapes(s.space(), sp.space(), I);
  const std::uint32_t d = known_d ? *known_d : min_distance(s, budget);
  if (I.size() >= d)
    throw std::invalid_argument("dual_commutation_check: requires t < d");
  const SympSubspace lhs = symp_dual(deflate_space(s.space(), sp.space(), I));
  const SympSubspace rhs =
      deflate_space(symp_dual(s.space()), symp_dual(sp.space()), I);
  return lhs == rhs;
}

InclusionDiagnostic check_inclusions(const StabilizerCode& s, const PrefixCode& sp,
                                     const std::vector<std::size_t>& I) {
  check_deflation_shapes(s.space(), sp.space(), I);
  const SympSubspace proj = prefix_space(s.space(), I);
  const SympSubspace proj_dual = symp_dual(proj);
  const SympSubspace sp_dual = symp_dual(sp.space());
  InclusionDiagnostic diag;
  diag.proj_dual_in_prefix = space_contains(sp.space(), proj_dual);
  diag.prefix_in_prefix_dual = space_contains(sp_dual, sp.space());
  diag.prefix_dual_in_proj = space_contains(proj, sp_dual);
  diag.proj_dual_in_proj = space_contains(proj, proj_dual);
  return diag;
}

}  // namespace qdeflate
