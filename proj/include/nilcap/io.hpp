// JSON formats: algebra files (structure constants with exact coefficient
// strings and 1-based indices) and the reports printed by the command line tool.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "nilcap/classify.hpp"

namespace nilcap::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input. The message names the offending location.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Keys in the order schema_version, field, dim, brackets, name. Brackets are
/// sorted by (i, j) and their terms by k; zero brackets are omitted.
Json algebra_to_json(const LieAlgebra& L);
/// Pretty-printed with a trailing newline; emit -> parse -> emit is byte-identical.
std::string emit_algebra(const LieAlgebra& L);

/// Rejects unknown keys, i >= j, indices out of range, repeated pairs and
/// coefficients that do not parse in the declared field. Jacobi is not checked.
LieAlgebra algebra_from_json(const Json& j);
LieAlgebra parse_algebra(std::string_view text);
LieAlgebra read_algebra_file(const std::string& path);

/// Command line spelling: q, gf2, gf3, gf5 or gfp:P.
FieldSpec parse_field_flag(std::string_view text);

Json field_to_json(const FieldSpec& f);
Json vector_to_json(const Vector& v);
Json subspace_to_json(const Subspace& s);  // list of basis rows
Json fingerprint_to_json(const Fingerprint& fp);
Json homology_to_json(const HomologyReport& h);
Json verdict_to_json(const Verdict& v);
Json check_to_json(const Check& c);
Json verify_report_to_json(const VerifyReport& r, const VerifyOptions& opts);

}  // namespace nilcap::io
