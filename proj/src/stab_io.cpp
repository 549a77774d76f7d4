#include "qdeflate/stab_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qdeflate {

namespace {

struct SourceLine {
  std::size_t number = 0;  // 1-based
  std::string text;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

std::vector<SourceLine> significant_lines(const std::string& text) {
  std::vector<SourceLine> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(first, last - first + 1)});
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::uint64_t parse_uint(const std::string& token, std::size_t line,
                         const std::string& what) {
  if (token.empty()) fail(line, "expected " + what + ", found nothing");
  std::uint64_t value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(line, "expected " + what + ", found '" + token + "'");
    if (value > (std::uint64_t{1} << 60))
      fail(line, what + " out of range: '" + token + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

/// Parses one side of a row: n packed F_q entries, comma list or (q <= 9)
/// compact digit string.
std::vector<FqElem> parse_side(const std::string& side, const Field& field,
                               std::size_t n, std::size_t line) {
  std::vector<FqElem> out;
  out.reserve(n);
  if (n == 0) {
    if (!side.empty()) fail(line, "expected no entries for n = 0");
    return out;
  }
  const std::vector<std::string> parts = split(side, ',');
  if (parts.size() == n) {
    for (const std::string& part : parts) {
      const std::uint64_t value = parse_uint(part, line, "field element");
      if (value >= field.q())
        fail(line, "entry " + part + " is not an element of F_" +
                       std::to_string(field.q()));
      out.push_back(static_cast<FqElem>(value));
    }
    return out;
  }
  if (field.q() <= 9 && side.size() == n) {
    for (char c : side) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(line, std::string("invalid digit '") + c + "' in compact row");
      const FqElem value = static_cast<FqElem>(c - '0');
      if (value >= field.q())
        fail(line, std::string("entry ") + c + " is not an element of F_" +
                       std::to_string(field.q()));
      out.push_back(value);
    }
    return out;
  }
  fail(line, "expected " + std::to_string(n) +
                 " comma-separated entries (or a compact digit string for "
                 "q <= 9), found '" +
                 side + "'");
}

SympVector parse_symp_row(const std::string& text, const FieldRef& field,
                          std::size_t n, std::size_t line) {
  const std::string compactd = strip_spaces(text);
  const std::size_t bar = compactd.find('|');
  if (bar == std::string::npos)
    fail(line, "expected a row of the form a_1,...,a_n|b_1,...,b_n");
  if (compactd.find('|', bar + 1) != std::string::npos)
    fail(line, "more than one '|' in a row");
  std::vector<FqElem> a =
      parse_side(compactd.substr(0, bar), *field, n, line);
  std::vector<FqElem> b = parse_side(compactd.substr(bar + 1), *field, n, line);
  return make_vector(field, std::move(a), std::move(b));
}

struct Header {
  FieldRef field;
  std::size_t n = 0;
  std::size_t next_index = 0;  // index into the significant-lines array
};

Header parse_header(const std::vector<SourceLine>& lines) {
  if (lines.empty())
    throw std::invalid_argument("line 1: empty input, expected a field line");
  const SourceLine& field_line = lines[0];
  std::istringstream in(field_line.text);
  std::string token;
  in >> token;
  if (token != "field")
    fail(field_line.number, "expected 'field p=<int> r=<int> [poly=...]'");
  std::uint64_t p = 0, r = 0;
  bool saw_p = false, saw_r = false;
  std::vector<std::uint32_t> poly;
  bool saw_poly = false;
  while (in >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      fail(field_line.number, "expected key=value, found '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "p") {
      p = parse_uint(value, field_line.number, "p");
      saw_p = true;
    } else if (key == "r") {
      r = parse_uint(value, field_line.number, "r");
      saw_r = true;
    } else if (key == "poly") {
      for (const std::string& part : split(value, ','))
        poly.push_back(static_cast<std::uint32_t>(
            parse_uint(part, field_line.number, "poly coefficient")));
      saw_poly = true;
    } else {
      fail(field_line.number, "unknown key '" + key + "' in field line");
    }
  }
  if (!saw_p || !saw_r)
    fail(field_line.number, "field line must set both p= and r=");

  Header header;
  try {
    header.field = saw_poly
                       ? Field::make(static_cast<std::uint32_t>(p),
                                     static_cast<std::uint32_t>(r), poly)
                       : Field::make(static_cast<std::uint32_t>(p),
                                     static_cast<std::uint32_t>(r));
  } catch (const std::invalid_argument& e) {
    fail(field_line.number, e.what());
  }

  if (lines.size() < 2)
    fail(field_line.number, "expected an 'n <int>' line after the field line");
  const SourceLine& n_line = lines[1];
  std::istringstream nin(n_line.text);
  std::string n_token, n_value, extra;
  nin >> n_token >> n_value;
  if (n_token != "n" || n_value.empty() || (nin >> extra))
    fail(n_line.number, "expected 'n <int>'");
  header.n = static_cast<std::size_t>(parse_uint(n_value, n_line.number, "n"));
  header.next_index = 2;
  return header;
}

}  // namespace

ParsedStab parse_stab(const std::string& text) {
  const std::vector<SourceLine> lines = significant_lines(text);
  Header header = parse_header(lines);

  std::vector<SympVector> stab_rows;
  std::vector<SympVector> completion;
  bool extended = false;
  std::size_t extended_line = 0;
  for (std::size_t i = header.next_index; i < lines.size(); ++i) {
    if (lines[i].text == "extended") {
      if (extended) fail(lines[i].number, "duplicate 'extended' marker");
      extended = true;
      extended_line = lines[i].number;
      continue;
    }
    SympVector row =
        parse_symp_row(lines[i].text, header.field, header.n, lines[i].number);
    (extended ? completion : stab_rows).push_back(std::move(row));
  }

  ParsedStab result{
      StabilizerCode::from_generators(header.field, header.n, stab_rows),
      extended, completion};
  if (extended) {
    std::vector<SympVector> all = stab_rows;
    all.insert(all.end(), completion.begin(), completion.end());
    const SympSubspace span = span_of(header.field, header.n, all);
    if (!(span == symp_dual(result.code.space())))
      fail(extended_line,
           "rows after 'extended' do not complete the stabilizer span to its "
           "symplectic dual");
  }
  return result;
}

ParsedStab parse_stab_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_stab(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

namespace {

std::string render_side(const Field& field, const std::vector<FqElem>& side) {
  std::string out;
  if (field.q() <= 9) {
    for (FqElem e : side) out += static_cast<char>('0' + e);
    return out;
  }
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(side[i]);
  }
  return out;
}

std::string header_lines(const Field& field, std::size_t n) {
  std::string out = "field p=" + std::to_string(field.p()) +
                    " r=" + std::to_string(field.r());
  if (field.r() > 1) {
    out += " poly=";
    const std::vector<std::uint32_t>& mod = field.modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(mod[i]);
    }
  }
  out += "\nn " + std::to_string(n) + "\n";
  return out;
}

}  // namespace

std::string serialize_stab(const StabilizerCode& code, bool include_extended) {
  std::string out = header_lines(code.field(), code.n());
  const std::vector<SympVector> rows = include_extended
                                           ? extended_rows(code)
                                           : basis_vectors(code.space());
  const std::size_t stab_count = code.space().dim();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (include_extended && i == stab_count) out += "extended\n";
    out += render_side(code.field(), rows[i].a) + "|" +
           render_side(code.field(), rows[i].b) + "\n";
  }
  return out;
}

LinearCode parse_classical(const std::string& text) {
  const std::vector<SourceLine> lines = significant_lines(text);
  Header header = parse_header(lines);
  std::vector<std::vector<FqElem>> rows;
  for (std::size_t i = header.next_index; i < lines.size(); ++i) {
    const std::string compactd = strip_spaces(lines[i].text);
    if (compactd.find('|') != std::string::npos)
      fail(lines[i].number,
           "unexpected '|' in a classical generator row (use plain entries)");
    rows.push_back(parse_side(compactd, *header.field, header.n, lines[i].number));
  }
  return LinearCode::from_generators(header.field, header.n, rows);
}

LinearCode parse_classical_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_classical(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string serialize_classical(const LinearCode& code) {
  std::string out = header_lines(code.field(), code.n());
  for (const auto& word : code.fq_basis())
    out += render_side(code.field(), word) + "\n";
  return out;
}

std::string render_vector(const SympVector& v) {
  return "(" + render_side(*v.field, v.a) + "|" + render_side(*v.field, v.b) +
         ")";
}

std::string render_word(const Field& field, const std::vector<FqElem>& word) {
  return render_side(field, word);
}

std::string render_space(const SympSubspace& space) {
  std::string out = "span{";
  const std::vector<SympVector> basis = basis_vectors(space);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i > 0) out += ", ";
    out += render_vector(basis[i]);
  }
  out += "}";
  return out;
}

SympVector parse_row(const FieldRef& field, std::size_t n,
                     const std::string& text) {
  return parse_symp_row(text, field, n, 1);
}

}  // namespace qdeflate
