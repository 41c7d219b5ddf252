// Command line front end. Exit status: 0 success, 1 bad input or a
// computation outside the supported scope, 2 a failed check (Jacobi, an
// --expect mismatch, or a verification suite failure).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nilcap/io.hpp"

using namespace nilcap;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kCheckFailed = 2;

struct Output {
  bool json = false;
  std::string out_path;
  std::vector<std::string> expect;
};

void print_human(const Json& j) {
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::FormatError(path + ": cannot write");
  out << text;
  if (!out) throw io::FormatError(path + ": write failed");
}

// KEY may be a dotted path into nested objects.
int check_expectations(const Json& j, const std::vector<std::string>& expect) {
  int status = kOk;
  for (const auto& e : expect) {
    const auto eq = e.find('=');
    if (eq == std::string::npos || eq == 0) throw io::FormatError("--expect needs KEY=VAL, got '" + e + "'");
    const std::string key = e.substr(0, eq), want = e.substr(eq + 1);
    std::string pointer = "/" + key;
    for (auto& c : pointer)
      if (c == '.') c = '/';
    const Json::json_pointer ptr(pointer);
    if (!j.contains(ptr)) throw io::FormatError("--expect: no key '" + key + "' in the report");
    const Json& got = j.at(ptr);
    const std::string text = got.is_string() ? got.get<std::string>() : got.dump();
    if (text != want) {
      std::cerr << "expectation failed: " << key << " = " << text << ", expected " << want << "\n";
      status = kCheckFailed;
    }
  }
  return status;
}

int finish(const Json& j, const Output& o) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    print_human(j);
  }
  if (!o.out_path.empty()) write_file(o.out_path, j.dump(2) + "\n");
  return check_expectations(j, o.expect);
}

Json header(const LieAlgebra& L) {
  Json j;
  j["name"] = L.name();
  j["field"] = L.field().name();
  j["dim"] = L.dim();
  return j;
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

int cmd_validate(const std::string& path, const Output& o) {
  LieAlgebra L = io::read_algebra_file(path);
  Json j = header(L);
  ValidationReport rep = validate(L);
  j["jacobi_ok"] = rep.ok;
  Json triples = Json::array();
  for (const auto& v : rep.violations) triples.push_back(Json::array({v.i + 1, v.j + 1, v.k + 1}));
  j["jacobi_violations"] = std::move(triples);
  if (!rep.ok) {
    finish(j, o);
    std::cerr << "Jacobi identity fails on " << rep.violations.size() << " basis triple(s)\n";
    return kCheckFailed;
  }
  try {
    auto lower = lower_central_series(L);
    j["nilpotent"] = true;
    j["class"] = lower.size() - 1;
    j["lower_series"] = dims(lower);
    j["upper_series"] = dims(upper_central_series(L));
  } catch (const NotNilpotent& e) {
    j["nilpotent"] = false;
    finish(j, o);
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return finish(j, o);
}

Json structural_json(const LieAlgebra& L) {
  try {
    return io::verdict_to_json(capability_structural(L));
  } catch (const OutOfScope& e) {
    Json j;
    j["out_of_scope"] = e.what();
    return j;
  }
}

int cmd_analyze(const std::string& path, const Output& o) {
  LieAlgebra L = io::read_algebra_file(path);
  HomologyReport h = homology(L);
  Fingerprint fp = fingerprint(L);
  Json j = header(L);
  const Json fj = io::fingerprint_to_json(fp);
  for (const auto& [k, v] : fj.items()) j[k] = v;
  j["exterior_center"] = io::subspace_to_json(h.exterior_center);
  j["structural"] = structural_json(L);
  return finish(j, o);
}

int cmd_capable(const std::string& path, bool structural_only, const Output& o) {
  LieAlgebra L = io::read_algebra_file(path);
  Json j = header(L);
  if (structural_only) {
    Verdict v = capability_structural(L);  // OutOfScope -> status 1
    j["method"] = "structural";
    const Json vj = io::verdict_to_json(v);
    for (const auto& [k, val] : vj.items()) j[k] = val;
    return finish(j, o);
  }
  HomologyReport h = homology(L);
  j["method"] = "exterior center";
  j["capable"] = h.capable;
  j["dim_exterior_center"] = h.exterior_center.dim();
  j["exterior_center"] = io::subspace_to_json(h.exterior_center);
  Json s = structural_json(L);
  int status = kOk;
  if (s.contains("rule")) {
    j["rule"] = s["rule"];
    j["family_label"] = s["family_label"];
    j["structural_agrees"] = s["capable"] == h.capable;
    if (s["capable"] != h.capable) {
      std::cerr << "structural verdict disagrees with the exterior center\n";
      status = kCheckFailed;
    }
  } else {
    j["rule"] = h.capable ? "exterior center is zero" : "exterior center is nonzero";
    j["family_label"] = nullptr;
    j["structural_agrees"] = nullptr;
  }
  const int e = finish(j, o);
  return std::max(status, e);
}

int cmd_multiplier(const std::string& path, const Output& o) {
  LieAlgebra L = io::read_algebra_file(path);
  HomologyReport h = homology(L);
  Json j = header(L);
  j["dim_M"] = h.dim_M;
  j["dim_exterior_square"] = h.dim_exterior_square;
  return finish(j, o);
}

int cmd_catalog_list() {
  const std::map<std::string, std::string> params{
      {"A", "--n N"},      {"H", "--m M"},        {"L6_22", "--eps S (characteristic != 2)"},
      {"L6_7_2", "--eta S (characteristic 2, eta in {0, omega})"},
      {"L4_3+H", "--m M"}, {"L5_5+H", "--m M"}};
  for (const auto& name : catalog_names()) {
    auto it = params.find(name);
    std::cout << name;
    if (it != params.end()) std::cout << "  " << it->second;
    std::cout << "\n";
  }
  return kOk;
}

struct EmitArgs {
  std::string id;
  std::string field = "q";
  std::optional<std::string> eps, eta;
  std::size_t m = 1, n = 0;
  std::string out;
};

int cmd_catalog_emit(const EmitArgs& a) {
  CatalogParams p;
  p.n = a.n;
  p.m = a.m;
  p.eps = a.eps;
  p.eta = a.eta;
  LieAlgebra L = build(a.id, io::parse_field_flag(a.field), p);
  const std::string text = io::emit_algebra(L);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> fields{"q", "gf2"};
  std::uint64_t seed = 7;
  std::size_t samples = 200;
  std::size_t lines = 20;
};

int cmd_verify(const VerifyArgs& a, const Output& o) {
  VerifyOptions opts;
  for (const auto& f : a.fields) opts.fields.push_back(io::parse_field_flag(f));
  opts.seed = a.seed;
  opts.random_samples = a.samples;
  opts.central_lines = a.lines;
  VerifyReport rep = verify_all(opts);
  Json j = io::verify_report_to_json(rep, opts);
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.informational ? "INFO" : c.passed ? "PASS" : "FAIL") << "  " << c.group << "  " << c.name;
      for (const auto& [k, v] : c.values) std::cout << "  " << k << "=" << v;
      std::cout << "\n";
    }
    std::cout << j["total"].get<std::size_t>() << " checks, " << j["failed"].get<std::size_t>() << " failed\n";
  }
  if (!o.out_path.empty()) write_file(o.out_path, j.dump(2) + "\n");
  return rep.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilcap: exact computations with finite-dimensional nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string path;
  Output out;
  bool structural = false;
  auto add_file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "algebra file (JSON)")->required();
    sub->add_flag("--json", out.json, "print JSON instead of key: value lines");
    sub->add_option("--out", out.out_path, "also write the JSON result here");
    sub->add_option("--expect", out.expect, "KEY=VAL; a mismatch exits with status 2");
    return sub;
  };
  auto* validate_cmd = add_file_command("validate", "check the Jacobi identity and nilpotency");
  auto* analyze_cmd = add_file_command("analyze", "invariant fingerprint and exterior center");
  auto* capable_cmd = add_file_command("capable", "decide capability");
  capable_cmd->add_flag("--structural", structural, "use the structure rules only (dim L^2 <= 2)");
  auto* multiplier_cmd = add_file_command("multiplier", "Schur multiplier and exterior square dimensions");

  auto* catalog_cmd = app.add_subcommand("catalog", "named algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog ids and their parameters");
  EmitArgs emit;
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "write the algebra file of a catalog id");
  emit_cmd->add_option("id", emit.id, "catalog id")->required();
  emit_cmd->add_option("--field", emit.field, "q, gf2, gf3, gf5 or gfp:P")->capture_default_str();
  emit_cmd->add_option("--eps", emit.eps, "parameter of L6_22");
  emit_cmd->add_option("--eta", emit.eta, "parameter of L6_7_2");
  emit_cmd->add_option("--m", emit.m, "Heisenberg rank")->capture_default_str();
  emit_cmd->add_option("--n", emit.n, "dimension of A")->capture_default_str();
  emit_cmd->add_option("--out", emit.out, "output path (default: standard output)");

  VerifyArgs verify;
  Output verify_out;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
  verify_cmd->add_option("--field", verify.fields, "field to cover; repeatable")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "seed for sampled checks")->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples, "random 7-dim samples over GF(2)")->capture_default_str();
  verify_cmd->add_option("--central-lines", verify.lines, "random central lines per algebra")
      ->capture_default_str();
  verify_cmd->add_flag("--json", verify_out.json, "print the JSON report");
  verify_cmd->add_option("--out", verify_out.out_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, out);
    if (analyze_cmd->parsed()) return cmd_analyze(path, out);
    if (capable_cmd->parsed()) return cmd_capable(path, structural, out);
    if (multiplier_cmd->parsed()) return cmd_multiplier(path, out);
    if (list_cmd->parsed()) return cmd_catalog_list();
    if (emit_cmd->parsed()) return cmd_catalog_emit(emit);
    if (verify_cmd->parsed()) return cmd_verify(verify, verify_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
