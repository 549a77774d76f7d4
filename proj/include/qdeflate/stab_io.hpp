#pragma once

#include <string>
#include <vector>

#include "qdeflate/classical.hpp"
#include "qdeflate/stabilizer.hpp"
#include "qdeflate/symplectic.hpp"

namespace qdeflate {

/// Result of parsing a `.stab` file.  `completion` holds the rows after an
/// `extended` marker; when the marker is present those rows have been
/// verified to extend the stabilizer span to its symplectic dual.
struct ParsedStab {
  StabilizerCode code;
  bool has_completion = false;
  std::vector<SympVector> completion;
};

/// Grammar, one logical line each (whitespace and `#` comments ignored):
///   field p=<int> r=<int> [poly=<c0,...,cr>]
///   n <int>
///   <row>*            stabilizer generator rows
///   [extended
///    <row>*]          completion rows
/// A row is `a_1,...,a_n|b_1,...,b_n` with packed base-10 F_q entries; for
/// q <= 9 the compact one-digit-per-position form `<digits>|<digits>` is also
/// accepted.  Errors carry 1-based line numbers.
ParsedStab parse_stab(const std::string& text);
ParsedStab parse_stab_file(const std::string& path);

/// Emits the canonical basis of the code in the grammar above; with
/// `include_extended`, appends the `extended` marker and completion rows
/// spanning the symplectic dual.  parse(serialize(code)) reproduces the same
/// subspace.
std::string serialize_stab(const StabilizerCode& code,
                           bool include_extended = false);

/// Classical generator files use the same header and row syntax without the
/// `|` separator.
LinearCode parse_classical(const std::string& text);
LinearCode parse_classical_file(const std::string& path);
std::string serialize_classical(const LinearCode& code);

/// "(a_1,...,a_n|b_1,...,b_n)" — compact digit form when q <= 9.
std::string render_vector(const SympVector& v);
/// One classical word, same conventions, no parentheses or separator bar.
std::string render_word(const Field& field, const std::vector<FqElem>& word);
/// "span{(..|..), ...}" over the canonical basis; "span{}" for the zero space.
std::string render_space(const SympSubspace& space);

/// Parses a single symplectic row (the file grammar's row syntax) over the
/// given field and length; used by CLI flags such as --prefix-row.
SympVector parse_row(const FieldRef& field, std::size_t n,
                     const std::string& text);

}  // namespace qdeflate
