#include "nilcap/classify.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace nilcap {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s;
  return out.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string sz(std::size_t v) { return std::to_string(v); }

std::string table_key(const LieAlgebra& L) {
  std::ostringstream out;
  out << L.field().name() << '|' << L.dim() << '|';
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const auto& v = L.stored_bracket(i, j);
      if (v.empty()) continue;
      out << i << ',' << j << ':';
      for (const auto& t : v) out << t.index << '=' << t.coeff.to_string() << ' ';
      out << ';';
    }
  return out.str();
}

Fingerprint fingerprint_with(const LieAlgebra& L, const HomologyReport& h) {
  Fingerprint fp;
  fp.field = L.field().name();
  fp.dim = L.dim();
  auto lower = lower_central_series(L);
  for (const auto& s : lower) fp.lower_series.push_back(s.dim());
  fp.nilpotency_class = lower.size() - 1;
  for (const auto& s : upper_central_series(L)) fp.upper_series.push_back(s.dim());
  Subspace z = center(L), d = derived_algebra(L);
  fp.dim_center = z.dim();
  fp.dim_derived = d.dim();
  fp.dim_abelianization = L.dim() - d.dim();
  fp.dim_multiplier = h.dim_M;
  fp.dim_exterior_square = h.dim_exterior_square;
  fp.dim_exterior_center = h.exterior_center.dim();
  fp.stem = d.contains(z);
  fp.generalized_heisenberg = !d.is_zero() && d == z;
  fp.capable = h.capable;
  return fp;
}

std::string with_abelian(const std::string& base, std::size_t k) {
  return k == 0 ? base : base + " (+) A(" + sz(k) + ")";
}

Check make_check(std::string group, std::string name, bool passed,
                 std::vector<std::pair<std::string, std::string>> values = {}) {
  Check c;
  c.group = std::move(group);
  c.name = std::move(name);
  c.passed = passed;
  c.values = std::move(values);
  return c;
}

CatalogParams eps_param(const std::string& e) {
  CatalogParams p;
  p.eps = e;
  return p;
}

CatalogParams eta_param(const std::string& e) {
  CatalogParams p;
  p.eta = e;
  return p;
}

CatalogParams m_param(std::size_t m) {
  CatalogParams p;
  p.m = m;
  return p;
}

const std::vector<std::string> kEpsValues{"0", "1", "-1", "2"};

std::vector<std::string> eta_values(const FieldSpec& f) { return {"0", find_omega(f).to_string()}; }

// The rank-2 algebras of dimension 6 that exist over f.
std::vector<LieAlgebra> six_dim_family(const FieldSpec& f) {
  std::vector<LieAlgebra> out;
  if (f.characteristic() == 2) {
    for (const auto& e : eta_values(f)) out.push_back(build("L6_7_2", f, eta_param(e)));
  } else {
    for (const auto& e : kEpsValues) out.push_back(build("L6_22", f, eps_param(e)));
  }
  return out;
}

// Class-3 stems with dim L^2 = 2.
std::vector<LieAlgebra> class3_stems(const FieldSpec& f) {
  return {build("L4_3", f),          build("L5_5", f),          build("L6_10", f),
          build("L4_3+H", f, m_param(1)), build("L4_3+H", f, m_param(2)), build("L5_5+H", f, m_param(1)),
          build("L5_5+H", f, m_param(2))};
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  std::mt19937_64 rng(seq);
  return rng();
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  if (f.is_rational()) return Scalar::from_int(std::uniform_int_distribution<int>(-5, 5)(rng), f);
  return Scalar::from_int(std::uniform_int_distribution<std::uint32_t>(0, f.p() - 1)(rng), f);
}

std::uint64_t lyndon_count(std::size_t d, std::size_t k) {
  std::vector<std::size_t> w(k, 0);
  std::uint64_t count = 0;
  while (true) {
    bool lyndon = true;
    for (std::size_t s = 1; s < k && lyndon; ++s)
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t a = w[i], b = w[(i + s) % k];
        if (a != b) {
          lyndon = a < b;
          break;
        }
        if (i + 1 == k) lyndon = false;  // equal to a rotation: periodic
      }
    count += lyndon;
    std::size_t i = k;
    while (i > 0 && w[i - 1] == d - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return count;
}

// Dimension of the free nilpotent algebra a presentation of L needs.
std::size_t presentation_size(const LieAlgebra& L) {
  const std::size_t d = L.dim() - derived_algebra(L).dim();
  const std::size_t c = nilpotency_class(L) + 1;
  std::size_t total = 0;
  for (std::size_t k = 1; k <= c; ++k) total += witt_dimension(d, k);
  return total;
}

}  // namespace

Fingerprint fingerprint(const LieAlgebra& L) { return fingerprint_with(L, homology(L)); }

Verdict capability_structural(const LieAlgebra& L) {
  const std::size_t cls = nilpotency_class(L);
  const std::size_t n = L.dim();
  const std::size_t d2 = derived_algebra(L).dim();
  const std::size_t central_quotient = n - center(L).dim();
  Verdict v;
  if (d2 == 0) {
    v.capable = n != 1;
    v.rule = "abelian: capable unless one-dimensional";
    if (v.capable) v.family_label = "A(" + sz(n) + ")";
    return v;
  }
  if (d2 == 1) {
    v.capable = central_quotient == 2;
    v.rule = "dim L^2 = 1: capable iff dim L/Z(L) = 2";
    if (v.capable) v.family_label = with_abelian("H(1)", n - 3);
    return v;
  }
  if (d2 != 2) throw OutOfScope("structural capability covers dim L^2 <= 2 only (got " + sz(d2) + ")");
  if (cls == 3) {
    v.capable = central_quotient >= 3 && central_quotient <= 4;
    v.rule = "class 3, dim L^2 = 2: capable iff 3 <= dim L/Z(L) <= 4";
    if (central_quotient == 3) v.family_label = with_abelian("L4_3", n - 4);
    if (central_quotient == 4) v.family_label = with_abelian("L5_5", n - 5);
    return v;
  }
  StemDecomposition sd = stem_decompose(L);
  const std::size_t t = sd.stem.dim(), k = sd.abelian.dim();
  if (t < 5) throw std::logic_error("class-2 stem with dim L^2 = 2 has dimension below 5");
  if (t <= 6) {
    v.capable = true;
    v.rule = "class 2, dim L^2 = 2: stem part of dimension 5 or 6 is capable";
    if (t == 5) {
      v.family_label = with_abelian("L5_8", k);
    } else {
      v.family_label = with_abelian(L.field().characteristic() == 2 ? "L6_7_2(.)" : "L6_22(.)", k);
    }
  } else if (t == 7) {
    v.capable = is_capable(sd.stem);
    v.rule = "class 2, dim L^2 = 2: stem part of dimension 7 decided by its exterior center";
    if (v.capable) v.family_label = with_abelian("L27A", k);
  } else {
    v.capable = false;
    v.rule = "class 2, dim L^2 = 2: stem part of dimension at least 8 is not capable";
  }
  return v;
}

// ---------------------------------------------------------------- workbench

const InstanceRecord& Workbench::analyze(const LieAlgebra& L) {
  std::string key = table_key(L);
  if (auto it = index_.find(key); it != index_.end()) return records_[it->second];
  Subspace d = derived_algebra(L), z = center(L);
  InstanceRecord r{L.name().empty() ? "(unnamed)" : L.name(), L.field().name(), L.dim(), d.dim(), z.dim(),
                   homology(L), false};
  const Subspace& ze = r.homology.exterior_center;
  r.identities_hold = r.homology.dim_exterior_square == r.homology.dim_M + d.dim() && z.contains(ze) &&
                      (d.is_zero() || d.contains(ze));
  index_.emplace(std::move(key), records_.size());
  records_.push_back(std::move(r));
  return records_.back();
}

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

bool VerifyReport::group_passed(const std::string& group) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.group != group) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

std::vector<LieAlgebra> catalog_instances(const FieldSpec& f, bool include_out_of_scope) {
  std::vector<LieAlgebra> out;
  for (std::size_t n : {2u, 3u}) out.push_back(abelian(f, n));
  for (std::size_t m : {1u, 2u, 3u}) out.push_back(heisenberg(f, m));
  for (const char* name : {"L4_3", "L5_5", "L5_8", "L6_10", "L27A", "L27B"}) out.push_back(build(name, f));
  for (auto& L : six_dim_family(f)) out.push_back(std::move(L));
  out.push_back(build("L4_3+H", f, m_param(1)));
  out.push_back(build("L5_5+H", f, m_param(1)));
  if (include_out_of_scope) {
    out.push_back(build("L5_7", f));
    out.push_back(build("L6_13", f));
  }
  return out;
}

// ---------------------------------------------------------------- C1

std::vector<Check> check_multipliers(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    for (const auto& L : six_dim_family(f)) {
      auto t0 = Clock::now();
      const auto& r = wb.analyze(L);
      const double s = seconds_since(t0);
      out.push_back(make_check("C1", "dim M(" + L.name() + ") over " + f.name(), r.homology.dim_M == 8,
                               {{"dim_M", sz(r.homology.dim_M)}, {"expected", "8"}, {"seconds", fmt_seconds(s)}}));
    }
  }
  return out;
}

// ---------------------------------------------------------------- C2

std::vector<Check> check_class2_capability(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    std::vector<std::pair<LieAlgebra, bool>> cases;
    cases.emplace_back(build("L5_8", f), true);
    for (auto& L : six_dim_family(f)) cases.emplace_back(std::move(L), true);
    cases.emplace_back(build("L27A", f), true);
    cases.emplace_back(build("L27B", f), false);
    cases.emplace_back(heisenberg(f, 2), false);
    cases.emplace_back(heisenberg(f, 3), false);
    for (const auto& [L, expected] : cases) {
      const auto& r = wb.analyze(L);
      out.push_back(make_check("C2", L.name() + " over " + f.name() + " capable=" + yes_no(expected),
                               r.homology.capable == expected,
                               {{"capable", yes_no(r.homology.capable)},
                                {"dim_exterior_center", sz(r.homology.exterior_center.dim())},
                                {"dim_M", sz(r.homology.dim_M)}}));
    }
  }
  return out;
}

// ---------------------------------------------------------------- C3

std::vector<Check> check_class3_capability(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    for (const auto& T : class3_stems(f)) {
      const bool expected = T.dim() <= 5;
      const auto& r = wb.analyze(T);
      Subspace z = center(T);
      const bool unicentral = r.homology.exterior_center == z;
      const bool ok = r.homology.capable == expected && (expected || unicentral);
      out.push_back(make_check("C3", T.name() + " over " + f.name() + " capable=" + yes_no(expected), ok,
                               {{"capable", yes_no(r.homology.capable)},
                                {"dim_exterior_center", sz(r.homology.exterior_center.dim())},
                                {"dim_center", sz(z.dim())},
                                {"exterior_center_equals_center", yes_no(unicentral)}}));
    }
  }
  return out;
}

// ---------------------------------------------------------------- C4

std::vector<Check> check_quotient_witnesses(const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    struct Case {
      const char* source;
      std::size_t central;
      const char* target;
    };
    for (const Case& c : {Case{"L5_7", 4, "L4_3"}, Case{"L6_13", 5, "L5_5"}}) {
      LieAlgebra L = build(c.source, f);
      Subspace I = Subspace::coordinate(f, L.dim(), {c.central});
      const bool central = center(L) == I;
      Quotient q = quotient(L, I);
      const bool same = q.algebra.same_table(build(c.target, f));
      out.push_back(make_check("C4",
                               std::string(c.source) + "/span{x" + sz(c.central + 1) + "} = " + c.target +
                                   " over " + f.name(),
                               central && same,
                               {{"center_is_that_line", yes_no(central)}, {"table_identical", yes_no(same)}}));
    }
  }
  return out;
}

// ---------------------------------------------------------------- C5

std::vector<Check> check_central_ideals(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    for (const auto& L : catalog_instances(f, true)) {
      const auto& base = wb.analyze(L);
      const std::size_t lhs = base.homology.dim_M;
      const Subspace ze = base.homology.exterior_center;
      Subspace z = center(L), d = derived_algebra(L);
      std::vector<Vector> lines = z.basis_vectors();
      std::mt19937_64 rng(mix(opts.seed, name_hash(L.name() + f.name())));
      for (std::size_t s = 0; s < opts.central_lines; ++s) {
        Vector v = zero_vector(f, L.dim());
        for (std::size_t r = 0; r < z.dim(); ++r) {
          Scalar c = random_scalar(rng, f);
          for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * z.basis().at(r, k);
        }
        if (!is_zero(v)) lines.push_back(std::move(v));
      }
      std::size_t violations = 0, equalities = 0;
      for (const auto& v : lines) {
        Subspace I = Subspace::span(f, L.dim(), {v});
        Quotient q = quotient(L, I);
        const auto& qr = wb.analyze(q.algebra);
        const long long rhs = static_cast<long long>(qr.homology.dim_M) -
                              static_cast<long long>(subspace_intersect(d, I).dim());
        const bool contained = ze.contains(I);
        const bool equal = static_cast<long long>(lhs) == rhs;
        equalities += equal;
        if (static_cast<long long>(lhs) < rhs || equal != contained) ++violations;
      }
      out.push_back(make_check("C5", L.name() + " over " + f.name(), violations == 0,
                               {{"lines", sz(lines.size())},
                                {"equalities", sz(equalities)},
                                {"violations", sz(violations)},
                                {"dim_M", sz(lhs)}}));
    }
  }
  return out;
}

// ---------------------------------------------------------------- C6

std::vector<Check> check_central_products(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    LieAlgebra H1 = heisenberg(f, 1);
    const Element z = unit_vector(f, 3, 2);
    struct Case {
      std::string label;
      CentralProduct cp;
      std::optional<LieAlgebra> expect;
    };
    std::vector<Case> cases;
    cases.push_back({"H(1)*H(1)", central_product(H1, H1, {{z, z}}), heisenberg(f, 2)});
    LieAlgebra L43 = build("L4_3", f), L55 = build("L5_5", f);
    cases.push_back({"L4_3*H(1)", central_product(L43, H1, {{unit_vector(f, 4, 3), z}}), build("L6_10", f)});
    cases.push_back({"L5_5*H(1)", central_product(L55, H1, {{unit_vector(f, 5, 4), z}}), std::nullopt});
    cases.push_back(
        {"L4_3*H(2)", central_product(L43, heisenberg(f, 2), {{unit_vector(f, 4, 3), unit_vector(f, 5, 4)}}),
         std::nullopt});
    for (auto& c : cases) {
      LieAlgebra& L = c.cp.algebra;
      L.set_name(c.label);
      const auto& r = wb.analyze(L);
      std::vector<std::pair<std::string, std::string>> values;
      bool ok = true;
      if (c.expect) {
        const auto& er = wb.analyze(*c.expect);
        const bool match = fingerprint_with(L, r.homology) == fingerprint_with(*c.expect, er.homology);
        values.emplace_back("fingerprint_matches_" + c.expect->name(), yes_no(match));
        ok = ok && match;
      }
      Subspace a2 = bracket_subspaces(L, c.cp.image_a, c.cp.image_a);
      Subspace b2 = bracket_subspaces(L, c.cp.image_b, c.cp.image_b);
      Subspace both = subspace_intersect(a2, b2);
      const bool inside = r.homology.exterior_center.contains(both);
      values.emplace_back("dim_A2_cap_B2", sz(both.dim()));
      values.emplace_back("inside_exterior_center", yes_no(inside));
      values.emplace_back("capable", yes_no(r.homology.capable));
      ok = ok && !both.is_zero() && inside && !r.homology.capable;
      out.push_back(make_check("C6", c.label + " over " + f.name(), ok, std::move(values)));
    }
  }
  return out;
}

// ---------------------------------------------------------------- C7

std::vector<Check> check_free_algebras(const VerifyOptions& opts) {
  std::vector<Check> out;
  struct Witt {
    std::size_t d, c;
    std::vector<std::uint64_t> expected;
  };
  for (const Witt& w : {Witt{2, 4, {2, 1, 2, 3}}, Witt{3, 4, {3, 3, 8, 18}}, Witt{5, 3, {5, 10, 40}},
                        Witt{7, 3, {7, 21, 112}}}) {
    auto basis = hall_basis(w.d, w.c);
    std::vector<std::uint64_t> per_degree(w.c, 0);
    for (const auto& t : basis) ++per_degree[t.degree - 1];
    bool ok = per_degree == w.expected;
    std::string lyndon;
    for (std::size_t k = 1; k <= w.c; ++k) {
      const auto count = lyndon_count(w.d, k);
      ok = ok && count == w.expected[k - 1] && witt_dimension(w.d, k) == count;
      lyndon += (k > 1 ? "," : "") + std::to_string(count);
    }
    std::string got;
    for (std::size_t k = 0; k < w.c; ++k) got += (k ? "," : "") + std::to_string(per_degree[k]);
    out.push_back(make_check("C7", "Hall basis sizes of F(" + sz(w.d) + "," + sz(w.c) + ")", ok,
                             {{"per_degree", got}, {"lyndon_words", lyndon}}));
  }

  auto t0 = Clock::now();
  std::size_t failures = 0, checked = 0;
  for (std::size_t d = 1; d <= 5; ++d)
    for (std::size_t c = 1; c <= 4; ++c) {
      FreeNilpotent F = free_nilpotent(d, c, FieldSpec::rationals());
      failures += !validate(*F.algebra).ok;
      ++checked;
    }
  out.push_back(make_check("C7", "Jacobi identity on F(d,c) over Q for d <= 5, c <= 4", failures == 0,
                           {{"algebras", sz(checked)}, {"failures", sz(failures)},
                            {"seconds", fmt_seconds(seconds_since(t0))}}));

  bool want_gf2 = false;
  for (const auto& f : opts.fields) want_gf2 = want_gf2 || (!f.is_rational() && f.p() == 2);
  if (want_gf2) {
    const FieldSpec gf2 = FieldSpec::prime(2);
    t0 = Clock::now();
    FreeNilpotent F = free_nilpotent(7, 3, gf2);
    LieAlgebra L = direct_sum(build("L6_7_2", gf2, eta_param("1")), abelian(gf2, 3));
    const std::size_t m = schur_multiplier_dim(L);
    const double s = seconds_since(t0);
    // M(A (+) B) = M(A) + M(B) + (A/A^2 ⊗ B/B^2): 8 + 3 + 4 * 3.
    out.push_back(make_check("C7", "F(7,3) and dim M(L6_7_2(1) (+) A(3)) over GF(2)",
                             F.dim() == 140 && m == 23,
                             {{"dim_F", sz(F.dim())}, {"dim_M", sz(m)}, {"expected_dim_M", "23"},
                              {"seconds", fmt_seconds(s)}}));
  }
  return out;
}

// ---------------------------------------------------------------- C8

std::vector<Check> check_structural_agreement(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    std::vector<LieAlgebra> bases;
    bases.push_back(abelian(f, 1));
    for (std::size_t m : {1u, 2u, 3u}) bases.push_back(heisenberg(f, m));
    for (const char* name : {"L4_3", "L5_5", "L5_8", "L6_10", "L27A", "L27B"}) bases.push_back(build(name, f));
    for (auto& L : six_dim_family(f)) bases.push_back(std::move(L));
    for (std::size_t m : {1u, 2u}) {
      bases.push_back(build("L4_3+H", f, m_param(m)));
      bases.push_back(build("L5_5+H", f, m_param(m)));
    }
    std::size_t instances = 0;
    std::string disagreements, skipped;
    for (const auto& B : bases)
      for (std::size_t k = 0; k <= 3; ++k) {
        LieAlgebra L = k == 0 ? B : direct_sum(B, abelian(f, k));
        if (presentation_size(L) > kDefaultFreeDimLimit) {
          skipped += (skipped.empty() ? "" : "; ") + L.name();
          continue;
        }
        const bool truth = wb.analyze(L).homology.capable;
        const Verdict v = capability_structural(L);
        ++instances;
        if (v.capable != truth) disagreements += (disagreements.empty() ? "" : "; ") + L.name();
      }
    out.push_back(make_check("C8", "structural verdicts vs exterior center over " + f.name(),
                             disagreements.empty(),
                             {{"instances", sz(instances)},
                              {"disagreements", disagreements.empty() ? "none" : disagreements},
                              {"skipped_free_dim_limit", skipped.empty() ? "none" : skipped}}));
  }
  return out;
}

// ---------------------------------------------------------------- C9

std::vector<Check> check_random_samples(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  bool has_gf2 = false;
  for (const auto& f : opts.fields) has_gf2 = has_gf2 || (!f.is_rational() && f.p() == 2);
  if (!has_gf2) return out;
  const FieldSpec gf2 = FieldSpec::prime(2);
  const auto& a = wb.analyze(build("L27A", gf2)).homology;
  const auto& b = wb.analyze(build("L27B", gf2)).homology;
  const std::size_t ma = a.dim_M, mb = b.dim_M;
  const bool ca = a.capable, cb = b.capable;
  std::mt19937_64 master(opts.seed);
  std::size_t like_a = 0, like_b = 0, exceptions = 0, draws = 0;
  auto t0 = Clock::now();
  for (std::size_t s = 0; s < opts.random_samples; ++s) {
    SampleResult r = random_gen_heisenberg(7, 2, gf2, master());
    draws += r.draws;
    const auto& h = wb.analyze(r.algebra).homology;
    const bool is_a = h.dim_M == ma && h.capable == ca;
    const bool is_b = h.dim_M == mb && h.capable == cb;
    like_a += is_a;
    like_b += is_b;
    if (!(is_a || is_b) || h.capable != (h.dim_M == ma)) ++exceptions;
  }
  out.push_back(make_check("C9", "random 7-dim rank-2 samples over GF(2) match L27A or L27B",
                           exceptions == 0 && opts.random_samples > 0,
                           {{"samples", sz(opts.random_samples)},
                            {"like_L27A", sz(like_a)},
                            {"like_L27B", sz(like_b)},
                            {"exceptions", sz(exceptions)},
                            {"draws", sz(draws)},
                            {"seconds", fmt_seconds(seconds_since(t0))}}));
  return out;
}

// ---------------------------------------------------------------- C10

std::vector<Check> check_identities(const Workbench& wb) {
  std::size_t bad = 0;
  std::string names;
  for (const auto& r : wb.instances())
    if (!r.identities_hold) {
      ++bad;
      names += (names.empty() ? "" : "; ") + r.name + " over " + r.field;
    }
  return {make_check("C10", "dim(L^L) = dim M + dim L^2 and Z^ inside Z(L) and L^2",
                     bad == 0 && !wb.instances().empty(),
                     {{"instances", sz(wb.instances().size())},
                      {"violations", sz(bad)},
                      {"failing", names.empty() ? "none" : names}})};
}

// ---------------------------------------------------------------- extras

std::vector<Check> check_structure_extras(Workbench& wb, const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& f : opts.fields) {
    // Ideals with capable quotients contain the exterior center.
    for (const auto& L : catalog_instances(f, true)) {
      const Subspace ze = wb.analyze(L).homology.exterior_center;
      std::vector<Subspace> ideals;
      for (auto& s : lower_central_series(L)) ideals.push_back(std::move(s));
      for (auto& s : upper_central_series(L)) ideals.push_back(std::move(s));
      Subspace z = center(L);
      for (const auto& v : z.basis_vectors()) ideals.push_back(Subspace::span(f, L.dim(), {v}));
      std::size_t capable_quotients = 0, violations = 0;
      for (const auto& I : ideals) {
        Quotient q = quotient(L, I);
        if (!wb.analyze(q.algebra).homology.capable) continue;
        ++capable_quotients;
        if (!I.contains(ze)) ++violations;
      }
      out.push_back(make_check("epicenter-in-ideal", L.name() + " over " + f.name(), violations == 0,
                               {{"ideals", sz(ideals.size())},
                                {"capable_quotients", sz(capable_quotients)},
                                {"violations", sz(violations)}}));
    }

    // Abelian summands change neither the stem part nor the exterior center.
    std::vector<LieAlgebra> stems{heisenberg(f, 1), build("L4_3", f), build("L5_5", f), build("L5_8", f),
                                  build("L6_10", f), build("L27A", f), build("L27B", f)};
    stems.push_back(six_dim_family(f).front());
    for (const auto& T : stems) {
      const auto& tr = wb.analyze(T);
      bool ok = true;
      for (std::size_t k = 1; k <= 3; ++k) {
        LieAlgebra L = direct_sum(T, abelian(f, k));
        const auto& lr = wb.analyze(L);
        std::vector<Vector> padded;
        for (auto v : tr.homology.exterior_center.basis_vectors()) {
          v.resize(L.dim(), Scalar::zero(f));
          padded.push_back(std::move(v));
        }
        StemDecomposition sd = stem_decompose(L);
        ok = ok && lr.homology.exterior_center == Subspace::span(f, L.dim(), padded) &&
             lr.homology.capable == tr.homology.capable && sd.stem.same_table(T) && sd.abelian.dim() == k;
      }
      out.push_back(make_check("stem-reduction", T.name() + " (+) A(k), k=1..3 over " + f.name(), ok,
                               {{"capable", yes_no(tr.homology.capable)}}));
    }

    // Class-3 stems: Z(T) = T^3 is a line and T/Z(T) is H(1) plus an abelian summand.
    for (const auto& T : class3_stems(f)) {
      Subspace z = center(T);
      auto lower = lower_central_series(T);
      Quotient q = quotient(T, z);
      const std::size_t qd = derived_algebra(q.algebra).dim();
      const std::size_t qc = q.algebra.dim() - center(q.algebra).dim();
      const bool ok = z.dim() == 1 && lower.size() > 2 && z == lower[2] && qd == 1 && qc == 2;
      out.push_back(make_check("class3-center", T.name() + " over " + f.name(), ok,
                               {{"dim_center", sz(z.dim())},
                                {"center_is_T3", yes_no(lower.size() > 2 && z == lower[2])},
                                {"quotient_dim_derived", sz(qd)},
                                {"quotient_dim_mod_center", sz(qc)}}));
    }

    // Second centers of the glued constructions.
    for (const char* base_name : {"L4_3", "L5_5"}) {
      LieAlgebra base = build(base_name, f);
      const bool five = base.dim() == 5;
      for (std::size_t m : {1u, 2u}) {
        LieAlgebra H = heisenberg(f, m);
        CentralProduct cp = central_product(
            base, H, {{unit_vector(f, base.dim(), base.dim() - 1), unit_vector(f, H.dim(), H.dim() - 1)}});
        std::vector<std::size_t> idx = five ? std::vector<std::size_t>{2, 3, 4} : std::vector<std::size_t>{2, 3};
        for (std::size_t i = 0; i < H.dim(); ++i) idx.push_back(base.dim() + i);
        Subspace expected = image(cp.projection, Subspace::coordinate(f, base.dim() + H.dim(), idx));
        auto upper = upper_central_series(cp.algebra);
        const std::size_t want_dim = five ? 2 * m + 3 : 2 * m + 2;
        const std::size_t want_total = five ? 2 * m + 5 : 2 * m + 4;
        const bool ok = upper.size() > 2 && upper[2] == expected && expected.dim() == want_dim &&
                        cp.algebra.dim() == want_total;
        out.push_back(make_check("second-center",
                                 std::string(base_name) + "*H(" + sz(m) + ") over " + f.name(), ok,
                                 {{"dim", sz(cp.algebra.dim())},
                                  {"dim_Z2", sz(upper.size() > 2 ? upper[2].dim() : 0)},
                                  {"expected_dim_Z2", sz(want_dim)}}));
      }
    }

    // Multipliers of the quotients of L6_22 by its central basis lines, recorded only.
    if (f.characteristic() != 2) {
      for (const auto& e : kEpsValues) {
        LieAlgebra L = build("L6_22", f, eps_param(e));
        for (std::size_t c : {4u, 5u}) {
          Quotient q = quotient(L, Subspace::coordinate(f, 6, {c}));
          const auto& r = wb.analyze(q.algebra);
          Check chk = make_check("recorded", "dim M(" + L.name() + "/span{x" + sz(c + 1) + "}) over " + f.name(),
                                 true, {{"dim_M", sz(r.homology.dim_M)}});
          chk.informational = true;
          out.push_back(std::move(chk));
        }
      }
    }
  }
  return out;
}

VerifyReport verify_all(const VerifyOptions& opts) {
  Workbench wb;
  VerifyReport rep;
  auto add = [&](std::vector<Check> cs) {
    for (auto& c : cs) rep.checks.push_back(std::move(c));
  };
  add(check_multipliers(wb, opts));
  add(check_class2_capability(wb, opts));
  add(check_class3_capability(wb, opts));
  add(check_quotient_witnesses(opts));
  add(check_central_ideals(wb, opts));
  add(check_central_products(wb, opts));
  add(check_free_algebras(opts));
  add(check_structural_agreement(wb, opts));
  add(check_random_samples(wb, opts));
  add(check_structure_extras(wb, opts));
  add(check_identities(wb));
  return rep;
}

}  // namespace nilcap
