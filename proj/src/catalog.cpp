#include "nilcap/catalog.hpp"

#include <random>

namespace nilcap {

namespace {

struct Entry {
  std::size_t i, j;  // 1-based
  std::vector<std::pair<std::size_t, Scalar>> out;
};

LieAlgebra from_entries(const FieldSpec& f, std::size_t n, std::string name,
                        const std::vector<Entry>& entries) {
  LieAlgebra L(f, n, std::move(name));
  for (const auto& e : entries) {
    Element v = zero_vector(f, n);
    for (const auto& [k, c] : e.out) v[k - 1] += c;
    if (!is_zero(v)) L.set_bracket(e.i - 1, e.j - 1, v);
  }
  if (!validate(L).ok) throw std::logic_error("catalog table for " + L.name() + " fails Jacobi");
  return L;
}

// Shorthand for entries with unit coefficients.
std::vector<Entry> unit_entries(const FieldSpec& f,
                                std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t>> list) {
  std::vector<Entry> out;
  for (auto [i, j, k] : list) out.push_back(Entry{i, j, {{k, Scalar::one(f)}}});
  return out;
}

const std::string& required(const std::optional<std::string>& v, const char* what, std::string_view name) {
  if (!v) throw CatalogError(std::string(name) + " needs the parameter " + what);
  return *v;
}

Scalar parse_param(const std::string& text, const FieldSpec& f, const char* what) {
  try {
    return Scalar::parse(text, f);
  } catch (const FieldError& e) {
    throw CatalogError(std::string("bad ") + what + " '" + text + "': " + e.what());
  }
}

LieAlgebra glue_heisenberg(const LieAlgebra& base, std::size_t base_center, const FieldSpec& f,
                           std::size_t m, const std::string& name) {
  if (m < 1) throw CatalogError(name + " needs m >= 1");
  LieAlgebra H = heisenberg(f, m);
  CentralProduct cp = central_product(
      base, H, {{unit_vector(f, base.dim(), base_center), unit_vector(f, H.dim(), H.dim() - 1)}});
  cp.algebra.set_name(name + "(" + std::to_string(m) + ")");
  return std::move(cp.algebra);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"A",     "H",     "L4_3",  "L5_5", "L5_7", "L5_8",   "L6_7_2",
          "L6_10", "L6_13", "L6_22", "L27A", "L27B", "L4_3+H", "L5_5+H"};
}

LieAlgebra heisenberg(const FieldSpec& f, std::size_t m) {
  const std::size_t n = 2 * m + 1;
  LieAlgebra L(f, n, "H(" + std::to_string(m) + ")");
  for (std::size_t l = 0; l < m; ++l) L.set_bracket(2 * l, 2 * l + 1, unit_vector(f, n, n - 1));
  return L;
}

LieAlgebra build(std::string_view name, const FieldSpec& f, const CatalogParams& p) {
  const Scalar one = Scalar::one(f);
  if (name == "A") return abelian(f, p.n);
  if (name == "H") {
    if (p.m < 1) throw CatalogError("H needs m >= 1");
    return heisenberg(f, p.m);
  }
  if (name == "L4_3") return from_entries(f, 4, "L4_3", unit_entries(f, {{1, 2, 3}, {1, 3, 4}}));
  if (name == "L5_5")
    return from_entries(f, 5, "L5_5", unit_entries(f, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}}));
  if (name == "L5_7")
    return from_entries(f, 5, "L5_7", unit_entries(f, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}));
  if (name == "L5_8") return from_entries(f, 5, "L5_8", unit_entries(f, {{1, 2, 4}, {1, 3, 5}}));
  if (name == "L6_10")
    return from_entries(f, 6, "L6_10", unit_entries(f, {{1, 2, 3}, {1, 3, 6}, {4, 5, 6}}));
  if (name == "L6_13")
    return from_entries(f, 6, "L6_13",
                        unit_entries(f, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}, {1, 5, 6}, {3, 4, 6}}));
  if (name == "L27A")
    return from_entries(f, 7, "L27A", unit_entries(f, {{1, 2, 6}, {3, 4, 6}, {1, 5, 7}, {2, 3, 7}}));
  if (name == "L27B")
    return from_entries(f, 7, "L27B", unit_entries(f, {{1, 2, 6}, {1, 4, 7}, {3, 5, 7}}));
  if (name == "L6_22") {
    if (f.characteristic() == 2) throw CatalogError("L6_22 requires characteristic different from 2");
    const std::string& text = required(p.eps, "eps", name);
    Scalar eps = parse_param(text, f, "eps");
    auto entries = unit_entries(f, {{1, 2, 5}, {3, 4, 5}, {1, 3, 6}});
    entries.push_back(Entry{2, 4, {{6, eps}}});
    return from_entries(f, 6, "L6_22(" + eps.to_string() + ")", entries);
  }
  if (name == "L6_7_2") {
    if (f.characteristic() != 2) throw CatalogError("L6_7_2 requires characteristic 2");
    const std::string& text = required(p.eta, "eta", name);
    Scalar eta = parse_param(text, f, "eta");
    if (!eta.is_zero() && !(eta == find_omega(f)))
      throw CatalogError("L6_7_2 needs eta = 0 or eta = omega = " + find_omega(f).to_string());
    auto entries = unit_entries(f, {{1, 2, 5}, {1, 3, 6}});
    entries.push_back(Entry{2, 4, {{6, eta}}});
    entries.push_back(Entry{3, 4, {{5, one}, {6, one}}});
    return from_entries(f, 6, "L6_7_2(" + eta.to_string() + ")", entries);
  }
  if (name == "L4_3+H") return glue_heisenberg(build("L4_3", f), 3, f, p.m, "L4_3+H");
  if (name == "L5_5+H") return glue_heisenberg(build("L5_5", f), 4, f, p.m, "L5_5+H");
  throw CatalogError("unknown catalog name '" + std::string(name) + "'");
}

SampleResult random_gen_heisenberg(std::size_t dim, std::size_t rank, const FieldSpec& f,
                                   std::uint64_t seed, std::size_t budget) {
  if (dim != 7 || rank != 2) throw CatalogError("random_gen_heisenberg supports dim 7, rank 2 only");
  if (f.is_rational()) throw CatalogError("random_gen_heisenberg needs a finite field");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  const Subspace target = Subspace::coordinate(f, 7, {5, 6});
  for (std::size_t draw = 1; draw <= budget; ++draw) {
    LieAlgebra L(f, 7, "GH7(seed=" + std::to_string(seed) + ")");
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) {
        Element v = zero_vector(f, 7);
        v[5] = Scalar::from_int(dist(rng), f);
        v[6] = Scalar::from_int(dist(rng), f);
        if (!is_zero(v)) L.set_bracket(i, j, v);
      }
    if (derived_algebra(L) == target && center(L) == target) return SampleResult{std::move(L), draw};
  }
  throw CatalogError("random_gen_heisenberg: no acceptable sample within " + std::to_string(budget) +
                     " draws");
}

}  // namespace nilcap
