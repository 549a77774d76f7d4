#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdeflate/classical.hpp"
#include "qdeflate/counting.hpp"
#include "qdeflate/deflate.hpp"
#include "qdeflate/search.hpp"
#include "qdeflate/stab_io.hpp"
#include "qdeflate/stabilizer.hpp"

namespace {

using njson = nlohmann::ordered_json;
using namespace qdeflate;

constexpr const char* kExample1 = R"(# An [[8,1,2]]_2 stabilizer code (extended stabilizer matrix).
field p=2 r=1
n 8
10000000|00100000
01000000|00010000
00100010|10000100
00010001|01101111
00001000|00110110
00000111|00000011
00000000|00010101
extended
00000010|00011100
00000000|00100110
)";

std::uint64_t parse_uint64(const std::string& text, const std::string& what) {
  if (text.empty()) throw std::invalid_argument(what + " is empty");
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument(what + " is not a valid integer: '" + text + "'");
    if (value > (std::uint64_t{1} << 60))
      throw std::invalid_argument(what + " is out of range: '" + text + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

std::uint64_t resolve_budget(std::uint64_t flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("QDEFLATE_BUDGET"))
    return parse_uint64(env, "QDEFLATE_BUDGET");
  return kDefaultBudget;
}

/// "--positions 1,2" (1-based) to ascending 0-based indices.
std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> out;
  std::string current;
  auto flush = [&] {
    const std::uint64_t value = parse_uint64(current, "position");
    if (value == 0)
      throw std::invalid_argument("positions are 1-based; 0 is not valid");
    out.push_back(static_cast<std::size_t>(value - 1));
    current.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      current.push_back(c);
  }
  flush();
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw std::invalid_argument("positions must be strictly ascending");
  return out;
}

std::vector<std::size_t> to_one_based(const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(p + 1);
  return out;
}

std::string join_positions(const std::vector<std::size_t>& one_based) {
  std::string out;
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(one_based[i]);
  }
  return out;
}

njson params_json(const CodeParameters& cp) {
  njson j;
  j["n"] = cp.n;
  j["k"] = cp.k;
  j["d"] = cp.d ? njson(*cp.d) : njson(nullptr);
  j["q"] = cp.q;
  j["pure"] = cp.pure ? njson(*cp.pure) : njson(nullptr);
  return j;
}

njson prediction_json(const TheoremPrediction& tp) {
  njson j;
  j["theorem1_applicable"] = tp.theorem1_applicable;
  j["theorem2_applicable"] = tp.theorem2_applicable;
  j["t_lt_d"] = tp.t_lt_d;
  j["prefix_weight_ok"] =
      tp.prefix_weight_ok ? njson(*tp.prefix_weight_ok) : njson(nullptr);
  j["predicted_k"] = tp.predicted_k ? njson(*tp.predicted_k) : njson(nullptr);
  j["predicted_d_lower_bound"] = tp.predicted_d_lower_bound
                                     ? njson(*tp.predicted_d_lower_bound)
                                     : njson(nullptr);
  return j;
}

njson output_json(const DeflationReport& rep) {
  if (!rep.code) return njson(nullptr);
  njson j;
  j["n"] = rep.code->n();
  j["k"] = rep.measured_k ? njson(*rep.measured_k) : njson(nullptr);
  j["d"] = rep.measured_d ? njson(*rep.measured_d) : njson(nullptr);
  j["q"] = rep.code->field().q();
  return j;
}

njson report_json(const DeflationReport& rep, const SympSubspace& prefix_space) {
  njson j;
  j["input"] = params_json(rep.input);
  j["positions"] = to_one_based(rep.positions);
  j["prefix"] = render_space(prefix_space);
  j["prefix_k"] = rep.prefix_k;
  j["raw_dim"] = rep.raw_space.dim();
  j["dimension_integral"] = rep.dimension_integral;
  j["output"] = output_json(rep);
  j["prediction"] = prediction_json(rep.prediction);
  j["criterion"] = rep.improvement_criterion_holds
                       ? njson(*rep.improvement_criterion_holds)
                       : njson(nullptr);
  j["elapsed_seconds"] = rep.elapsed_seconds;
  return j;
}

std::string output_params_string(const DeflationReport& rep) {
  if (!rep.code) return "(dimension not a multiple of r; no code)";
  CodeParameters cp;
  cp.n = rep.code->n();
  cp.k = rep.measured_k.value_or(0);
  cp.d = rep.measured_d;
  cp.q = rep.code->field().q();
  return params_to_string(cp);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report_human(const DeflationReport& rep,
                        const SympSubspace& prefix_space) {
  std::cout << "input: " << params_to_string(rep.input);
  if (rep.input.pure) std::cout << (*rep.input.pure ? ", pure" : ", impure");
  std::cout << "\n";
  std::cout << "positions (1-based): " << join_positions(to_one_based(rep.positions))
            << "\n";
  std::cout << "prefix: " << render_space(prefix_space) << " ([[" << rep.t << ","
            << rep.prefix_k << "]]_" << rep.input.q << ")\n";
  std::cout << "output: " << output_params_string(rep) << "\n";
  std::cout << "raw dimension: " << rep.raw_space.dim()
            << " (integral: " << yes_no(rep.dimension_integral) << ")\n";
  const TheoremPrediction& tp = rep.prediction;
  std::cout << "theorem 1 (pure, t<d): " << yes_no(tp.theorem1_applicable)
            << "; theorem 2 (prefix-dual in projection): "
            << yes_no(tp.theorem2_applicable) << "\n";
  if (tp.predicted_k)
    std::cout << "predicted k: " << *tp.predicted_k << "\n";
  if (tp.predicted_d_lower_bound)
    std::cout << "predicted d lower bound: " << *tp.predicted_d_lower_bound
              << "\n";
  if (tp.prefix_weight_ok)
    std::cout << "prefix-weight side condition: " << yes_no(*tp.prefix_weight_ok)
              << "\n";
  if (rep.improvement_criterion_holds)
    std::cout << "improvement criterion: "
              << (*rep.improvement_criterion_holds ? "holds" : "fails") << "\n";
  std::cout << "elapsed: " << rep.elapsed_seconds << " s\n";
}

void emit_report(const DeflationReport& rep, const SympSubspace& prefix_space,
                 bool as_json) {
  if (as_json)
    std::cout << report_json(rep, prefix_space).dump(2) << "\n";
  else
    print_report_human(rep, prefix_space);
}

std::string format_count(const BigInt& value) {
  // The table renderings switch to 3 significant digits once values stop
  // being comfortably printable in full.
  static const BigInt threshold = BigInt("1000000000000000");  // 10^15
  if (value < threshold) return value.str();
  return to_scientific_3(value);
}

struct CommonFileArgs {
  std::string file;
  std::string positions_text;
  std::uint64_t budget_flag = kDefaultBudget;
  bool json = false;
};

int run_validate(const std::string& file, bool as_json) {
  const ParsedStab parsed = parse_stab_file(file);
  const StabilizerCode& code = parsed.code;
  CodeParameters cp;
  cp.n = code.n();
  cp.k = code.k();
  cp.q = code.field().q();
  if (as_json) {
    njson j;
    j["file"] = file;
    j["p"] = code.field().p();
    j["r"] = code.field().r();
    j["q"] = code.field().q();
    j["n"] = code.n();
    j["k"] = code.k();
    j["stabilizer_dim"] = code.space().dim();
    j["has_completion"] = parsed.has_completion;
    j["completion_verified"] = parsed.has_completion;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "file: " << file << "\n";
    std::cout << "parameters: " << params_to_string(cp) << "\n";
    std::cout << "stabilizer rows (canonical): " << code.space().dim() << "\n";
    if (parsed.has_completion)
      std::cout << "completion: " << parsed.completion.size()
                << " rows, span to the symplectic dual verified\n";
    std::cout << "isotropy: ok\n";
  }
  return 0;
}

int run_distance(const std::string& file, std::uint64_t budget) {
  const ParsedStab parsed = parse_stab_file(file);
  std::cout << min_distance(parsed.code, budget) << "\n";
  return 0;
}

PrefixCode build_prefix(const FieldRef& field, std::size_t t,
                        const std::string& prefix_file,
                        const std::vector<std::string>& prefix_rows) {
  if (!prefix_file.empty() && !prefix_rows.empty())
    throw std::invalid_argument(
        "--prefix-file and --prefix-row are mutually exclusive");
  if (!prefix_file.empty()) {
    ParsedStab parsed = parse_stab_file(prefix_file);
    if (!parsed.code.field().same_params(*field))
      throw std::invalid_argument("prefix code is over a different field");
    if (parsed.code.n() != t)
      throw std::invalid_argument(
          "prefix code length must equal the number of positions");
    return parsed.code;
  }
  std::vector<SympVector> rows;
  rows.reserve(prefix_rows.size());
  for (const std::string& row : prefix_rows)
    rows.push_back(parse_row(field, t, row));
  return StabilizerCode::from_generators(field, t, rows);
}

int run_deflate(const CommonFileArgs& args, const std::string& prefix_file,
                const std::vector<std::string>& prefix_rows, bool criterion,
                bool measure_distance, std::uint64_t budget) {
  const ParsedStab parsed = parse_stab_file(args.file);
  const StabilizerCode& code = parsed.code;
  const std::vector<std::size_t> positions = parse_positions(args.positions_text);
  const PrefixCode prefix =
      build_prefix(code.field_ref(), positions.size(), prefix_file, prefix_rows);

  DeflateOptions opts;
  opts.budget = budget;
  opts.measure_distance = measure_distance;
  DeflationReport report = deflate(code, prefix, positions, opts);
  if (criterion) {
    const std::uint32_t d =
        report.prediction.d_input ? *report.prediction.d_input
                                  : min_distance(code, budget);
    const MSetPair m_sets = build_m_sets(code, positions, d, budget);
    report.improvement_criterion_holds =
        improvement_criterion(code, prefix, positions, m_sets);
  }
  emit_report(report, prefix.space(), args.json);
  return 0;
}

int run_shorten(const CommonFileArgs& args, bool measure_distance,
                std::uint64_t budget) {
  const ParsedStab parsed = parse_stab_file(args.file);
  const std::vector<std::size_t> positions = parse_positions(args.positions_text);
  DeflateOptions opts;
  opts.budget = budget;
  opts.measure_distance = measure_distance;
  const DeflationReport report = shorten(parsed.code, positions, opts);
  emit_report(report, zero_space(parsed.code.field_ref(), positions.size()),
              args.json);
  return 0;
}

int run_puncture(const CommonFileArgs& args,
                 const std::vector<std::string>& span_rows,
                 bool measure_distance, std::uint64_t budget) {
  const ParsedStab parsed = parse_stab_file(args.file);
  const StabilizerCode& code = parsed.code;
  const FieldRef& field = code.field_ref();
  const std::vector<std::size_t> positions = parse_positions(args.positions_text);
  const std::size_t t = positions.size();
  const std::size_t r = field->r();

  std::vector<std::vector<SympVector>> local_spans(t);
  if (span_rows.empty()) {
    // Default local span at each position: (x^s | 0) for s < r.
    for (std::size_t j = 0; j < t; ++j) {
      FqElem scalar = 1;
      for (std::size_t s = 0; s < r; ++s) {
        local_spans[j].push_back(make_vector(field, {scalar}, {0}));
        if (s + 1 < r) scalar = field->mul(scalar, field->p());
      }
    }
  } else {
    if (span_rows.size() != t * r)
      throw std::invalid_argument(
          "--span must be given r times per position (" +
          std::to_string(t * r) + " total), in position order");
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t s = 0; s < r; ++s)
        local_spans[j].push_back(parse_row(field, 1, span_rows[j * r + s]));
  }

  DeflateOptions opts;
  opts.budget = budget;
  opts.measure_distance = measure_distance;
  const DeflationReport report = puncture(code, positions, local_spans, opts);

  // Rebuild the block-diagonal prefix space for display.
  std::vector<SympVector> padded;
  for (std::size_t j = 0; j < t; ++j)
    for (const SympVector& local : local_spans[j]) {
      std::vector<FqElem> a(t, 0), b(t, 0);
      a[j] = local.a[0];
      b[j] = local.b[0];
      padded.push_back(make_vector(field, std::move(a), std::move(b)));
    }
  emit_report(report, span_of(field, t, padded), args.json);
  return 0;
}

int run_search(const CommonFileArgs& args, std::uint32_t kp, bool criterion_only,
               unsigned jobs, std::uint64_t budget) {
  const ParsedStab parsed = parse_stab_file(args.file);
  const StabilizerCode& code = parsed.code;
  const std::vector<std::size_t> positions = parse_positions(args.positions_text);

  SearchOptions opts;
  opts.budget = budget;
  opts.jobs = jobs;
  const SearchResult result = search_deflations(
      code, positions, kp,
      criterion_only ? SearchMode::criterion_filter : SearchMode::exhaustive,
      opts);

  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const SearchEntry& entry = result.entries[i];
    njson rec;
    rec["rank"] = i + 1;
    rec["prefix"] = render_space(entry.prefix.space());
    rec["prefix_k"] = entry.prefix.k();
    rec["criterion"] = entry.report.improvement_criterion_holds
                           ? njson(*entry.report.improvement_criterion_holds)
                           : njson(nullptr);
    rec["output"] = output_json(entry.report);
    rec["theorem1"] = entry.report.prediction.theorem1_applicable;
    rec["theorem2"] = entry.report.prediction.theorem2_applicable;
    std::cout << rec.dump() << "\n";
  }

  CodeParameters cp;
  cp.n = code.n();
  cp.k = code.k();
  cp.d = result.input_d;
  cp.q = code.field().q();
  cp.pure = result.input_pure;
  std::cerr << "input " << params_to_string(cp) << (result.input_pure ? " pure" : "")
            << ": examined " << result.stats.candidates_examined
            << " candidates, " << result.stats.criterion_passes
            << " criterion passes, " << result.stats.distance_computations
            << " distance computations";
  if (!result.entries.empty() && result.entries.front().report.measured_d)
    std::cerr << ", best measured d = "
              << *result.entries.front().report.measured_d;
  if (!result.complete)
    std::cerr << " (INCOMPLETE: " << result.stats.budget_failures
              << " distance scans exceeded the budget)";
  std::cerr << "\n";
  return 0;
}

int run_count(std::uint32_t p, std::uint32_t t, std::uint32_t kp,
              std::uint32_t r_single, bool r_given) {
  std::vector<std::uint32_t> rs;
  if (r_given)
    rs.push_back(r_single);
  else
    rs = {1, 2, 3};

  std::string qs, punc, defl;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i > 0) {
      qs += ", ";
      punc += " | ";
      defl += " | ";
    }
    BigInt q = 1;
    for (std::uint32_t s = 0; s < rs[i]; ++s) q *= p;
    qs += q.str();
    punc += format_count(count_punc_short(p, rs[i], t, kp));
    defl += format_count(count_stabilizers(p, rs[i], t, kp));
  }
  std::cout << "counts for p=" << p << ", t=" << t << ", k'=" << kp
            << " (q = " << qs << ")\n";
  std::cout << "punctured+shortened: " << punc << "\n";
  std::cout << "deflations: " << defl << "\n";
  return 0;
}

std::string classical_params(const LinearCode& code,
                             std::optional<std::size_t> d = {}) {
  std::string out = "[" + std::to_string(code.n()) + "," +
                    std::to_string(code.k());
  if (d) out += "," + std::to_string(*d);
  out += "]_" + std::to_string(code.field().q());
  return out;
}

int run_classical(const CommonFileArgs& args, const std::string& prefix_file,
                  std::uint64_t budget) {
  const LinearCode code = parse_classical_file(args.file);
  const std::vector<std::size_t> positions = parse_positions(args.positions_text);
  const LinearCode prefix =
      prefix_file.empty()
          ? LinearCode::zero(code.field_ref(), positions.size())
          : parse_classical_file(prefix_file);

  const ClassicalDimension dims = classical_dimension(code, prefix, positions);
  const LinearCode deflated = deflate_classical(code, prefix, positions);
  if (deflated.k() != dims.formula_dim)
    throw std::logic_error(
        "classical deflation dimension disagrees with the formula");

  std::optional<std::size_t> d_in, d_out;
  if (code.k() > 0) d_in = min_distance_classical(code, budget);
  if (deflated.k() > 0) d_out = min_distance_classical(deflated, budget);

  if (args.json) {
    njson j;
    j["input"] = {{"n", code.n()},
                  {"k", code.k()},
                  {"d", d_in ? njson(*d_in) : njson(nullptr)},
                  {"q", code.field().q()}};
    j["positions"] = to_one_based(positions);
    j["prefix_k"] = prefix.k();
    j["formula"] = {{"dim", dims.formula_dim},
                    {"projection_dim", dims.projection_dim},
                    {"intersection_dim", dims.intersection_dim}};
    j["information_set"] = dims.information_set;
    j["simplified_dim"] =
        dims.simplified_dim ? njson(*dims.simplified_dim) : njson(nullptr);
    j["output"] = {{"n", deflated.n()},
                   {"k", deflated.k()},
                   {"d", d_out ? njson(*d_out) : njson(nullptr)},
                   {"q", code.field().q()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "input: " << classical_params(code, d_in) << "\n";
    std::cout << "positions (1-based): " << join_positions(to_one_based(positions))
              << "\n";
    std::cout << "prefix: " << classical_params(prefix) << "\n";
    std::cout << "formula: dim = k - (proj - inter) = " << code.k() << " - ("
              << dims.projection_dim << " - " << dims.intersection_dim
              << ") = " << dims.formula_dim << "\n";
    std::cout << "information set: " << yes_no(dims.information_set);
    if (dims.simplified_dim)
      std::cout << " (k + k' - t = " << *dims.simplified_dim << ")";
    std::cout << "\n";
    std::cout << "output: " << classical_params(deflated, d_out) << "\n";
  }
  return 0;
}

int run_verify_example1(const std::string& file, std::uint64_t budget) {
  const ParsedStab parsed =
      file.empty() ? parse_stab(kExample1) : parse_stab_file(file);
  const StabilizerCode& code = parsed.code;
  const FieldRef& field = code.field_ref();

  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    std::cout << (ok ? "  ok: " : "  FAIL: ") << what << "\n";
  };

  std::cout << "verifying the [[8,1,2]]_2 example\n";
  check(code.n() == 8 && code.k() == 1 && code.field().q() == 2,
        "parameters are [[8,1]]_2");
  const std::uint32_t d = min_distance(code, budget);
  check(d == 2, "minimum distance is 2");
  check(is_pure(code, d, budget), "code is pure");
  if (parsed.has_completion)
    check(true, "extended rows span the symplectic dual");

  const std::vector<std::size_t> positions = {0, 1};
  SearchOptions opts;
  opts.budget = budget;
  opts.known_d = d;
  opts.known_pure = true;
  const SearchResult result =
      search_deflations(code, positions, 1, SearchMode::exhaustive, opts);
  check(result.stats.candidates_examined == 15,
        "exactly 15 [[2,1]]_2 prefix codes");

  bool all_62 = true;
  for (const SearchEntry& entry : result.entries)
    if (!entry.report.code || entry.report.code->n() != 6 ||
        entry.report.measured_k != 2u)
      all_62 = false;
  check(all_62, "every deflation yields a [[6,2]]_2 code");

  const std::vector<std::string> display_rows = {"00|01", "00|10", "01|00",
                                                 "01|01", "10|00", "10|10"};
  auto find_entry = [&](const PrefixCode& prefix) -> const SearchEntry* {
    for (const SearchEntry& entry : result.entries)
      if (entry.prefix == prefix) return &entry;
    return nullptr;
  };
  bool display_ok = true;
  for (const std::string& row : display_rows) {
    const PrefixCode prefix = StabilizerCode::from_generators(
        field, 2, {parse_row(field, 2, row)});
    const SearchEntry* entry = find_entry(prefix);
    if (!entry || entry->report.measured_d != 1u) display_ok = false;
  }
  check(display_ok,
        "the 6 puncture/shorten prefixes of the display all measure d = 1");

  const PrefixCode best = StabilizerCode::from_generators(
      field, 2, {parse_row(field, 2, "11|11")});
  const SearchEntry* best_entry = find_entry(best);
  check(best_entry != nullptr && best_entry->report.measured_d == 2u,
        "span{(11|11)} measures d = 2");

  std::cout << "6 prefixes → [[6,2,1]], span{(11|11)} → [[6,2,2]]\n";
  if (failures.empty()) {
    std::cout << "verification: PASS\n";
    return 0;
  }
  std::cout << "verification: FAIL (" << failures.size() << " checks)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deflation of quantum stabilizer codes over F_q in the "
               "symplectic F_p-linear picture"};
  app.require_subcommand(1);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a .stab file");
  std::string validate_file;
  bool validate_json = false;
  validate_cmd->add_option("file", validate_file, ".stab file")->required();
  validate_cmd->add_flag("--json", validate_json, "emit a JSON report");

  // distance
  auto* distance_cmd =
      app.add_subcommand("distance", "minimum distance by dual enumeration");
  std::string distance_file;
  std::uint64_t distance_budget = kDefaultBudget;
  distance_cmd->add_option("file", distance_file, ".stab file")->required();
  auto* distance_budget_opt =
      distance_cmd->add_option("--budget", distance_budget, "enumeration budget");

  // deflate
  auto* deflate_cmd = app.add_subcommand(
      "deflate", "deflate by a prefix code on the given positions");
  CommonFileArgs deflate_args;
  std::string deflate_prefix_file;
  std::vector<std::string> deflate_prefix_rows;
  bool deflate_criterion = false;
  bool deflate_no_distance = false;
  deflate_cmd->add_option("file", deflate_args.file, ".stab file")->required();
  deflate_cmd->add_option("--positions", deflate_args.positions_text,
                          "1-based comma list, e.g. 1,2")->required();
  deflate_cmd->add_option("--prefix-file", deflate_prefix_file,
                          ".stab file with the prefix code");
  deflate_cmd->add_option("--prefix-row", deflate_prefix_rows,
                          "prefix generator row, e.g. '11|11' (repeatable; "
                          "default: zero prefix = shortening)");
  deflate_cmd->add_flag("--criterion", deflate_criterion,
                        "also evaluate the distance-improvement criterion");
  deflate_cmd->add_flag("--no-distance", deflate_no_distance,
                        "skip measuring the deflated distance");
  deflate_cmd->add_flag("--json", deflate_args.json, "emit a JSON report");
  auto* deflate_budget_opt = deflate_cmd->add_option(
      "--budget", deflate_args.budget_flag, "enumeration budget");

  // shorten
  auto* shorten_cmd =
      app.add_subcommand("shorten", "deflate with the zero prefix code");
  CommonFileArgs shorten_args;
  bool shorten_no_distance = false;
  shorten_cmd->add_option("file", shorten_args.file, ".stab file")->required();
  shorten_cmd->add_option("--positions", shorten_args.positions_text,
                          "1-based comma list")->required();
  shorten_cmd->add_flag("--no-distance", shorten_no_distance,
                        "skip measuring the deflated distance");
  shorten_cmd->add_flag("--json", shorten_args.json, "emit a JSON report");
  auto* shorten_budget_opt = shorten_cmd->add_option(
      "--budget", shorten_args.budget_flag, "enumeration budget");

  // puncture
  auto* puncture_cmd = app.add_subcommand(
      "puncture", "deflate with a block-diagonal rank-rt prefix span");
  CommonFileArgs puncture_args;
  std::vector<std::string> puncture_spans;
  bool puncture_no_distance = false;
  puncture_cmd->add_option("file", puncture_args.file, ".stab file")->required();
  puncture_cmd->add_option("--positions", puncture_args.positions_text,
                           "1-based comma list")->required();
  puncture_cmd->add_option(
      "--span", puncture_spans,
      "local length-1 vector 'a|b', r per position in order "
      "(default: (x^s|0) at every position)");
  puncture_cmd->add_flag("--no-distance", puncture_no_distance,
                         "skip measuring the deflated distance");
  puncture_cmd->add_flag("--json", puncture_args.json, "emit a JSON report");
  auto* puncture_budget_opt = puncture_cmd->add_option(
      "--budget", puncture_args.budget_flag, "enumeration budget");

  // search
  auto* search_cmd = app.add_subcommand(
      "search", "evaluate every [[t,k']] prefix code (JSON lines on stdout)");
  CommonFileArgs search_args;
  std::uint32_t search_kp = 0;
  bool search_criterion_only = false;
  unsigned search_jobs = 1;
  search_cmd->add_option("file", search_args.file, ".stab file")->required();
  search_cmd->add_option("--positions", search_args.positions_text,
                         "1-based comma list")->required();
  search_cmd->add_option("--kprime", search_kp, "prefix code dimension k'")
      ->required();
  search_cmd->add_flag("--criterion-only", search_criterion_only,
                       "deflate only criterion-passing candidates");
  search_cmd->add_option("--jobs", search_jobs, "worker threads (default 1)");
  auto* search_budget_opt = search_cmd->add_option(
      "--budget", search_args.budget_flag, "enumeration budget");

  // count
  auto* count_cmd = app.add_subcommand(
      "count", "prefix-code counts (closed form), columns r=1,2,3");
  std::uint32_t count_p = 2, count_t = 0, count_kp = 0, count_r = 1;
  count_cmd->add_option("--p", count_p, "characteristic")->required();
  count_cmd->add_option("--t", count_t, "number of deflated positions")
      ->required();
  count_cmd->add_option("--kprime", count_kp, "prefix code dimension k'")
      ->required();
  auto* count_r_opt =
      count_cmd->add_option("--r", count_r, "single extension degree instead");

  // classical
  auto* classical_cmd = app.add_subcommand(
      "classical", "classical-code deflation (generator-matrix file)");
  CommonFileArgs classical_args;
  std::string classical_prefix_file;
  classical_cmd->add_option("file", classical_args.file, "generator file")
      ->required();
  classical_cmd->add_option("--positions", classical_args.positions_text,
                            "1-based comma list")->required();
  classical_cmd->add_option("--prefix-file", classical_prefix_file,
                            "generator file of the prefix code (default: zero)");
  classical_cmd->add_flag("--json", classical_args.json, "emit a JSON report");
  auto* classical_budget_opt = classical_cmd->add_option(
      "--budget", classical_args.budget_flag, "enumeration budget");

  // verify-example1
  auto* verify_cmd = app.add_subcommand(
      "verify-example1", "re-derive the documented [[8,1,2]]_2 example");
  std::string verify_file;
  std::uint64_t verify_budget = kDefaultBudget;
  verify_cmd->add_option("--file", verify_file,
                         ".stab file (default: embedded copy)");
  auto* verify_budget_opt =
      verify_cmd->add_option("--budget", verify_budget, "enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(validate_file, validate_json);
    if (distance_cmd->parsed())
      return run_distance(distance_file, resolve_budget(distance_budget,
                                                        distance_budget_opt->count() > 0));
    if (deflate_cmd->parsed())
      return run_deflate(deflate_args, deflate_prefix_file, deflate_prefix_rows,
                         deflate_criterion, !deflate_no_distance,
                         resolve_budget(deflate_args.budget_flag,
                                        deflate_budget_opt->count() > 0));
    if (shorten_cmd->parsed())
      return run_shorten(shorten_args, !shorten_no_distance,
                         resolve_budget(shorten_args.budget_flag,
                                        shorten_budget_opt->count() > 0));
    if (puncture_cmd->parsed())
      return run_puncture(puncture_args, puncture_spans, !puncture_no_distance,
                          resolve_budget(puncture_args.budget_flag,
                                         puncture_budget_opt->count() > 0));
    if (search_cmd->parsed())
      return run_search(search_args, search_kp, search_criterion_only,
                        search_jobs,
                        resolve_budget(search_args.budget_flag,
                                       search_budget_opt->count() > 0));
    if (count_cmd->parsed())
      return run_count(count_p, count_t, count_kp, count_r,
                       count_r_opt->count() > 0);
    if (classical_cmd->parsed())
      return run_classical(classical_args, classical_prefix_file,
                           resolve_budget(classical_args.budget_flag,
                                          classical_budget_opt->count() > 0));
    if (verify_cmd->parsed())
      return run_verify_example1(
          verify_file,
          resolve_budget(verify_budget, verify_budget_opt->count() > 0));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
