#include "nilcap/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nilcap::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(where, "unknown key '" + key + "'");
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t index_in_range(const Json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "index must be an integer");
  const auto x = v.get<long long>();
  if (x < 1 || static_cast<unsigned long long>(x) > dim)
    fail(where, "index " + std::to_string(x) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(x - 1);
}

FieldSpec field_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "field must be an object");
  only_keys(j, where, {"kind", "p"});
  const Json& kind = require(j, "kind", where);
  if (kind == "Q") {
    if (j.contains("p")) fail(where, "Q takes no p");
    return FieldSpec::rationals();
  }
  if (kind == "GFp") {
    const Json& p = require(j, "p", where);
    if (!p.is_number_unsigned()) fail(where + ".p", "must be a positive integer");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const FieldError& e) {
      fail(where + ".p", e.what());
    }
  }
  fail(where + ".kind", "expected \"Q\" or \"GFp\"");
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  Json j;
  if (f.is_rational()) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "GFp";
    j["p"] = f.p();
  }
  return j;
}

Json algebra_to_json(const LieAlgebra& L) {
  Json j;
  j["schema_version"] = "1";
  j["field"] = field_to_json(L.field());
  j["dim"] = L.dim();
  Json brackets = Json::array();
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = a + 1; b < L.dim(); ++b) {
      const auto& v = L.stored_bracket(a, b);
      if (v.empty()) continue;
      Json out = Json::array();
      for (const auto& t : v) out.push_back(Json::array({t.index + 1, t.coeff.to_string()}));
      Json e;
      e["i"] = a + 1;
      e["j"] = b + 1;
      e["out"] = std::move(out);
      brackets.push_back(std::move(e));
    }
  j["brackets"] = std::move(brackets);
  if (!L.name().empty()) j["name"] = L.name();
  return j;
}

std::string emit_algebra(const LieAlgebra& L) { return algebra_to_json(L).dump(2) + "\n"; }

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "top level must be an object");
  only_keys(j, "$", {"schema_version", "field", "dim", "brackets", "name"});
  const Json& version = require(j, "schema_version", "$");
  if (version != "1") fail("$.schema_version", "expected \"1\"");
  FieldSpec f = field_from_json(require(j, "field", "$"), "$.field");
  const Json& dim_json = require(j, "dim", "$");
  if (!dim_json.is_number_unsigned()) fail("$.dim", "must be a non-negative integer");
  const auto dim = dim_json.get<std::size_t>();
  if (dim > 4096) fail("$.dim", "too large");
  std::string name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("$.name", "must be a string");
    name = it->get<std::string>();
  }
  LieAlgebra L(f, dim, name);
  const Json& brackets = require(j, "brackets", "$");
  if (!brackets.is_array()) fail("$.brackets", "must be a list");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "$.brackets[" + std::to_string(e) + "]";
    const Json& entry = brackets[e];
    if (!entry.is_object()) fail(where, "must be an object");
    only_keys(entry, where, {"i", "j", "out"});
    const std::size_t i = index_in_range(require(entry, "i", where), dim, where + ".i");
    const std::size_t jj = index_in_range(require(entry, "j", where), dim, where + ".j");
    if (i >= jj) fail(where, "requires i < j");
    if (!seen.insert({i, jj}).second) fail(where, "pair repeated");
    const Json& out = require(entry, "out", where);
    if (!out.is_array()) fail(where + ".out", "must be a list");
    SparseVector v;
    std::set<std::size_t> ks;
    for (std::size_t t = 0; t < out.size(); ++t) {
      const std::string tw = where + ".out[" + std::to_string(t) + "]";
      const Json& term = out[t];
      if (!term.is_array() || term.size() != 2) fail(tw, "expected [k, \"coeff\"]");
      const std::size_t k = index_in_range(term[0], dim, tw + "[0]");
      if (!ks.insert(k).second) fail(tw, "index repeated");
      if (!term[1].is_string()) fail(tw + "[1]", "coefficient must be a string");
      try {
        v.push_back(Term{k, Scalar::parse(term[1].get<std::string>(), f)});
      } catch (const FieldError& err) {
        fail(tw + "[1]", err.what());
      }
    }
    L.set_bracket(i, jj, std::move(v));
  }
  return L;
}

LieAlgebra parse_algebra(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

LieAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

FieldSpec parse_field_flag(std::string_view text) {
  try {
    return FieldSpec::parse(text);
  } catch (const FieldError& e) {
    throw FormatError(e.what());
  }
}

Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(c.to_string());
  return j;
}

Json subspace_to_json(const Subspace& s) {
  Json j = Json::array();
  for (const auto& v : s.basis_vectors()) j.push_back(vector_to_json(v));
  return j;
}

Json fingerprint_to_json(const Fingerprint& fp) {
  Json j;
  j["field"] = fp.field;
  j["dim"] = fp.dim;
  j["class"] = fp.nilpotency_class;
  j["lower_series"] = fp.lower_series;
  j["upper_series"] = fp.upper_series;
  j["dim_center"] = fp.dim_center;
  j["dim_derived"] = fp.dim_derived;
  j["dim_abelianization"] = fp.dim_abelianization;
  j["dim_M"] = fp.dim_multiplier;
  j["dim_exterior_square"] = fp.dim_exterior_square;
  j["dim_exterior_center"] = fp.dim_exterior_center;
  j["stem"] = fp.stem;
  j["generalized_heisenberg"] = fp.generalized_heisenberg;
  j["capable"] = fp.capable;
  return j;
}

Json homology_to_json(const HomologyReport& h) {
  Json j;
  j["dim_M"] = h.dim_M;
  j["dim_exterior_square"] = h.dim_exterior_square;
  j["dim_exterior_center"] = h.exterior_center.dim();
  j["exterior_center"] = subspace_to_json(h.exterior_center);
  j["capable"] = h.capable;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["capable"] = v.capable;
  j["rule"] = v.rule;
  j["family_label"] = v.family_label ? Json(*v.family_label) : Json(nullptr);
  return j;
}

Json check_to_json(const Check& c) {
  Json j;
  j["group"] = c.group;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["informational"] = c.informational;
  Json values = Json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  j["values"] = std::move(values);
  return j;
}

Json verify_report_to_json(const VerifyReport& r, const VerifyOptions& opts) {
  Json j;
  j["schema_version"] = "1";
  Json fields = Json::array();
  for (const auto& f : opts.fields) fields.push_back(f.name());
  j["fields"] = std::move(fields);
  j["seed"] = opts.seed;
  j["random_samples"] = opts.random_samples;
  j["central_lines"] = opts.central_lines;
  std::size_t failed = 0;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    failed += !c.passed;
    checks.push_back(check_to_json(c));
  }
  j["checks"] = std::move(checks);
  j["total"] = r.checks.size();
  j["failed"] = failed;
  j["all_passed"] = r.all_passed();
  return j;
}

}  // namespace nilcap::io
