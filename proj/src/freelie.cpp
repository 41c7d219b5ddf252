#include "nilcap/freelie.hpp"

#include <algorithm>
#include <map>

namespace nilcap {

namespace {

int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Canonical bracket string as tokens: generator numbers are positive,
// '[' ',' ']' map to -3, -2, -1. Lexicographic order on these sequences is
// string order with generator numbers compared numerically.
void tokens(const std::vector<HallTree>& basis, std::size_t i, std::vector<int>& out) {
  const HallTree& t = basis[i];
  if (t.is_generator()) {
    out.push_back(t.generator + 1);
    return;
  }
  out.push_back(-3);
  tokens(basis, t.left, out);
  out.push_back(-2);
  tokens(basis, t.right, out);
  out.push_back(-1);
}

void add_scaled(IntCombination& acc, std::int64_t c, const IntCombination& v) {
  if (c == 0 || v.empty()) return;
  IntCombination out;
  out.reserve(acc.size() + v.size());
  std::size_t a = 0, b = 0;
  while (a < acc.size() || b < v.size()) {
    if (b == v.size() || (a < acc.size() && acc[a].index < v[b].index)) {
      out.push_back(acc[a++]);
    } else if (a == acc.size() || v[b].index < acc[a].index) {
      out.push_back({v[b].index, c * v[b].coeff});
      ++b;
    } else {
      std::int64_t s = acc[a].coeff + c * v[b].coeff;
      if (s != 0) out.push_back({acc[a].index, s});
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

IntCombination negated(IntCombination v) {
  for (auto& t : v) t.coeff = -t.coeff;
  return v;
}

class Rewriter {
 public:
  Rewriter(const std::vector<HallTree>& basis, std::size_t c) : basis_(basis), c_(c) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!basis[k].is_generator()) index_of_[key(basis[k].left, basis[k].right)] = k;
  }

  IntCombination bracket(std::size_t u, std::size_t v) {
    if (u == v) return {};
    if (basis_[u].degree + basis_[v].degree > c_) return {};
    if (u > v) return negated(bracket(v, u));
    auto k = key(u, v);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    IntCombination result;
    const HallTree& tv = basis_[v];
    if (tv.is_generator() || tv.left <= u) {
      result.push_back({index_of_.at(k), 1});
    } else {
      // [u, [a, b]] = [[u, a], b] + [a, [u, b]]
      const std::size_t a = tv.left, b = tv.right;
      for (const auto& t : bracket(u, a)) add_scaled(result, t.coeff, bracket(t.index, b));
      for (const auto& t : bracket(u, b)) add_scaled(result, t.coeff, bracket(a, t.index));
    }
    memo_.emplace(k, result);
    return result;
  }

 private:
  std::uint64_t key(std::size_t u, std::size_t v) const {
    return static_cast<std::uint64_t>(u) * basis_.size() + v;
  }

  const std::vector<HallTree>& basis_;
  std::size_t c_;
  std::unordered_map<std::uint64_t, std::size_t> index_of_;
  std::unordered_map<std::uint64_t, IntCombination> memo_;
};

}  // namespace

std::uint64_t witt_dimension(std::size_t d, std::size_t k) {
  if (k == 0) return 0;
  __int128 total = 0;
  for (std::size_t m = 1; m <= k; ++m) {
    if (k % m) continue;
    int mu = mobius(m);
    if (mu == 0) continue;
    __int128 power = 1;
    for (std::size_t e = 0; e < k / m; ++e) power *= static_cast<__int128>(d);
    total += mu * power;
  }
  return static_cast<std::uint64_t>(total / static_cast<__int128>(k));
}

std::vector<HallTree> hall_basis(std::size_t d, std::size_t c) {
  if (d == 0 || c == 0) throw LieError("hall_basis needs d >= 1 and c >= 1");
  std::vector<HallTree> basis;
  for (std::size_t g = 0; g < d; ++g) basis.push_back(HallTree{static_cast<int>(g), 0, 0, 1});
  std::vector<std::size_t> begin{0, d};  // begin[k-1]..begin[k] hold degree k
  for (std::size_t k = 2; k <= c; ++k) {
    std::vector<std::pair<std::vector<int>, HallTree>> found;
    for (std::size_t dl = 1; dl < k; ++dl) {
      const std::size_t dr = k - dl;
      for (std::size_t l = begin[dl - 1]; l < begin[dl]; ++l)
        for (std::size_t r = begin[dr - 1]; r < begin[dr]; ++r) {
          if (!(l < r)) continue;
          const HallTree& tr = basis[r];
          if (!tr.is_generator() && !(tr.left <= l)) continue;
          HallTree t{-1, l, r, k};
          std::vector<int> key;
          basis.push_back(t);
          tokens(basis, basis.size() - 1, key);
          basis.pop_back();
          found.emplace_back(std::move(key), t);
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& f : found) basis.push_back(f.second);
    begin.push_back(basis.size());
  }
  return basis;
}

std::string hall_string(const std::vector<HallTree>& basis, std::size_t index) {
  const HallTree& t = basis.at(index);
  if (t.is_generator()) return "x" + std::to_string(t.generator + 1);
  return "[" + hall_string(basis, t.left) + "," + hall_string(basis, t.right) + "]";
}

IntCombination normalize_bracket(const FreeNilpotent& F, std::size_t u, std::size_t v) {
  if (u >= F.dim() || v >= F.dim()) throw LieError("normalize_bracket: index out of range");
  if (u == v) return {};
  const bool swap = u > v;
  auto it = F.products.find(static_cast<std::uint64_t>(swap ? v : u) * F.dim() + (swap ? u : v));
  if (it == F.products.end()) return {};
  return swap ? negated(it->second) : it->second;
}

FreeNilpotent free_nilpotent(std::size_t d, std::size_t c, const FieldSpec& field, std::size_t max_dim) {
  if (d == 0 || c == 0) throw LieError("free_nilpotent needs d >= 1 and c >= 1");
  std::uint64_t expected = 0;
  for (std::size_t k = 1; k <= c; ++k) expected += witt_dimension(d, k);
  if (expected > max_dim)
    throw LieError("free nilpotent algebra F(" + std::to_string(d) + "," + std::to_string(c) +
                   ") has dimension " + std::to_string(expected) + ", above the limit " +
                   std::to_string(max_dim));
  FreeNilpotent F;
  F.d = d;
  F.c = c;
  F.basis = hall_basis(d, c);
  F.degree_offsets.assign(c + 1, 0);
  for (const auto& t : F.basis) ++F.degree_offsets[t.degree];
  for (std::size_t k = 1; k <= c; ++k) F.degree_offsets[k] += F.degree_offsets[k - 1];

  const std::size_t n = F.basis.size();
  Rewriter rw(F.basis, c);
  auto algebra = std::make_shared<LieAlgebra>(field, n,
      "F(" + std::to_string(d) + "," + std::to_string(c) + ")");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (F.basis[u].degree + F.basis[v].degree > c) break;  // degrees are nondecreasing in v
      IntCombination w = rw.bracket(u, v);
      if (w.empty()) continue;
      SparseVector sv;
      for (const auto& t : w) sv.push_back(Term{t.index, Scalar::from_int(t.coeff, field)});
      algebra->set_bracket(u, v, std::move(sv));
      F.products.emplace(static_cast<std::uint64_t>(u) * n + v, std::move(w));
    }
  F.algebra = std::move(algebra);
  return F;
}

Hom extend_hom(const FreeNilpotent& F, std::shared_ptr<const LieAlgebra> L,
               const std::vector<Element>& images) {
  if (images.size() != F.d) throw LieError("extend_hom: expected one image per generator");
  if (nilpotency_class(*L) > F.c)
    throw LieError("extend_hom: target class exceeds the free algebra's class bound");
  Matrix m(L->field(), L->dim(), F.dim());
  std::vector<Element> cols;
  cols.reserve(F.dim());
  for (std::size_t k = 0; k < F.dim(); ++k) {
    const HallTree& t = F.basis[k];
    if (t.is_generator()) {
      if (images[t.generator].size() != L->dim()) throw LieError("extend_hom: image has wrong length");
      cols.push_back(images[t.generator]);
    } else {
      cols.push_back(bracket(*L, cols[t.left], cols[t.right]));
    }
    m.set_column(k, cols.back());
  }
  return Hom{F.algebra, std::move(L), std::move(m)};
}

}  // namespace nilcap
