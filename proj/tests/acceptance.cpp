// One PASS/FAIL line per acceptance criterion, over Q, GF(2), GF(3) and
// GF(5) with seed 7. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "nilcap/classify.hpp"

using namespace nilcap;

namespace {

// Pinned limits, in seconds.
constexpr double kMultiplierLimit = 10.0;      // each computation in criterion 1
constexpr double kFreeAlgebraLimit = 120.0;    // F(7,3) plus one multiplier over GF(2)
constexpr double kRandomSuiteLimit = 1800.0;   // 200 samples
constexpr std::size_t kMinAgreementInstances = 150;

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string value_of(const Check& c, const std::string& key) {
  for (const auto& [k, v] : c.values)
    if (k == key) return v;
  return {};
}

double seconds_of(const Check& c) {
  const std::string s = value_of(c, "seconds");
  return s.empty() ? 0.0 : std::stod(s);
}

Outcome all_pass(const std::vector<Check>& checks) {
  Outcome o;
  std::size_t failed = 0;
  for (const auto& c : checks)
    if (!c.passed) {
      ++failed;
      o.detail += " [failed: " + c.name + "]";
    }
  o.passed = failed == 0 && !checks.empty();
  o.detail = std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed" + o.detail;
  return o;
}

double timed(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  VerifyOptions opts;
  opts.fields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)};
  opts.seed = 7;
  opts.random_samples = 200;
  opts.central_lines = 20;

  Workbench wb;
  bool all = true;
  auto report = [&](int id, const std::string& title, const Outcome& o, double secs) {
    all = all && o.passed;
    std::printf("%s  criterion %d  %s  (%s; %.2f s)\n", o.passed ? "PASS" : "FAIL", id, title.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_multipliers(wb, opts); });
    Outcome o = all_pass(cs);
    double worst = 0;
    for (const auto& c : cs) worst = std::max(worst, seconds_of(c));
    // Q and GF(3) for L6_22, GF(2) for L6_7_2: 4 + 4 + 2 instances at least.
    o.passed = o.passed && worst < kMultiplierLimit && cs.size() >= 10;
    o.detail += ", slowest " + std::to_string(worst) + " s";
    report(1, "Schur multiplier dimension 8 for the rank-2 six-dimensional family", o, s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_class2_capability(wb, opts); });
    report(2, "class-2 capability set", all_pass(cs), s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_class3_capability(wb, opts); });
    report(3, "class-3 capability set and Z^ = Z for the non-capable stems", all_pass(cs), s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_quotient_witnesses(opts); });
    report(4, "quotient tables L5_7/x5 = L4_3 and L6_13/x6 = L5_5", all_pass(cs), s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_central_ideals(wb, opts); });
    Outcome o = all_pass(cs);
    std::size_t lines = 0;
    for (const auto& c : cs) lines += std::stoul(value_of(c, "lines"));
    o.detail += ", " + std::to_string(lines) + " central lines";
    report(5, "multiplier inequality for central lines, equality iff inside Z^", o, s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_central_products(wb, opts); });
    report(6, "central products: fingerprints and A^2 ∩ B^2 inside Z^", all_pass(cs), s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_free_algebras(opts); });
    Outcome o = all_pass(cs);
    bool timed_ok = false;
    for (const auto& c : cs)
      if (c.name.find("F(7,3)") == 0) timed_ok = seconds_of(c) < kFreeAlgebraLimit;
    o.passed = o.passed && timed_ok;
    report(7, "free nilpotent algebras: Witt dimensions, Jacobi, F(7,3) over GF(2)", o, s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_structural_agreement(wb, opts); });
    Outcome o = all_pass(cs);
    std::size_t instances = 0;
    for (const auto& c : cs) instances += std::stoul(value_of(c, "instances"));
    o.passed = o.passed && instances >= kMinAgreementInstances;
    o.detail += ", " + std::to_string(instances) + " instances";
    report(8, "structural verdicts agree with the exterior center", o, s);
  }
  {
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_random_samples(wb, opts); });
    Outcome o = all_pass(cs);
    if (!cs.empty()) {
      o.detail += ", like L27A " + value_of(cs[0], "like_L27A") + ", like L27B " + value_of(cs[0], "like_L27B");
      o.passed = o.passed && value_of(cs[0], "samples") == "200";
    }
    o.passed = o.passed && s < kRandomSuiteLimit;
    report(9, "random rank-2 seven-dimensional samples over GF(2)", o, s);
  }
  {
    // The extra structural checks touch more instances; run them before the identities.
    std::vector<Check> extras = check_structure_extras(wb, opts);
    std::vector<Check> cs;
    const double s = timed([&] { cs = check_identities(wb); });
    Outcome o = all_pass(cs);
    Outcome ex = all_pass(extras);
    o.passed = o.passed && ex.passed;
    o.detail += ", " + value_of(cs[0], "instances") + " instances; structure extras " + ex.detail;
    report(10, "dim L∧L = dim M + dim L^2 and Z^ inside Z(L) ∩ L^2", o, s);
  }

  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
