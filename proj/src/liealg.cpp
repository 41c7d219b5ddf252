#include "nilcap/liealg.hpp"

#include <algorithm>

namespace nilcap {

namespace {

// acc += c * v, both sorted sparse vectors
void add_scaled(SparseVector& acc, const Scalar& c, const SparseVector& v) {
  if (v.empty() || c.is_zero()) return;
  SparseVector out;
  out.reserve(acc.size() + v.size());
  std::size_t a = 0, b = 0;
  while (a < acc.size() || b < v.size()) {
    if (b == v.size() || (a < acc.size() && acc[a].index < v[b].index)) {
      out.push_back(std::move(acc[a++]));
    } else if (a == acc.size() || v[b].index < acc[a].index) {
      out.push_back(Term{v[b].index, c * v[b].coeff});
      ++b;
    } else {
      Scalar s = acc[a].coeff + c * v[b].coeff;
      if (!s.is_zero()) out.push_back(Term{acc[a].index, std::move(s)});
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

SparseVector to_sparse(const Element& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(Term{i, v[i]});
  return out;
}

Element to_dense(const FieldSpec& f, std::size_t n, const SparseVector& v) {
  Element out = zero_vector(f, n);
  for (const auto& t : v) out[t.index] = t.coeff;
  return out;
}

// [e_i, v] for sparse v
SparseVector bracket_basis_with(const LieAlgebra& L, std::size_t i, const SparseVector& v) {
  SparseVector acc;
  for (const auto& t : v) {
    if (t.index == i) continue;
    if (i < t.index) {
      add_scaled(acc, t.coeff, L.stored_bracket(i, t.index));
    } else {
      add_scaled(acc, -t.coeff, L.stored_bracket(t.index, i));
    }
  }
  return acc;
}

void require_dim(const LieAlgebra& L, const Element& x) {
  if (x.size() != L.dim()) throw LieError("element length does not match algebra dimension");
}

void require_ambient(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim() || !(s.field() == L.field()))
    throw LieError("subspace does not live in the algebra");
}

}  // namespace

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(FieldSpec field, std::size_t dim, std::string name)
    : field_(field), dim_(dim), name_(std::move(name)), table_(dim * dim) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Element& value) {
  if (value.size() != dim_) throw LieError("bracket value has wrong length");
  set_bracket(i, j, to_sparse(value));
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value) {
  if (i >= dim_ || j >= dim_) throw LieError("basis index out of range");
  if (i == j) throw LieError("[e_i, e_i] is zero by definition and cannot be set");
  std::sort(value.begin(), value.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVector clean;
  for (auto& t : value) {
    if (t.index >= dim_) throw LieError("bracket value index out of range");
    if (!(t.coeff.field() == field_)) throw LieError("bracket coefficient from a different field");
    if (!clean.empty() && clean.back().index == t.index) {
      clean.back().coeff += t.coeff;
      if (clean.back().coeff.is_zero()) clean.pop_back();
    } else if (!t.coeff.is_zero()) {
      clean.push_back(std::move(t));
    }
  }
  if (i > j) {
    for (auto& t : clean) t.coeff = -t.coeff;
    std::swap(i, j);
  }
  table_[slot(i, j)] = std::move(clean);
}

const SparseVector& LieAlgebra::stored_bracket(std::size_t i, std::size_t j) const {
  return table_[slot(i, j)];
}

SparseVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) return table_[slot(i, j)];
  SparseVector v = table_[slot(j, i)];
  for (auto& t : v) t.coeff = -t.coeff;
  return v;
}

bool LieAlgebra::same_table(const LieAlgebra& other) const {
  return field_ == other.field_ && dim_ == other.dim_ && table_ == other.table_;
}

// ---------------------------------------------------------------- Hom

bool is_bracket_compatible(const LieAlgebra& source, const LieAlgebra& target, const Matrix& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) return false;
  std::vector<Element> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(m.column(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j) {
      Element lhs = m.apply(to_dense(source.field(), source.dim(), source.stored_bracket(i, j)));
      if (lhs != bracket(target, images[i], images[j])) return false;
    }
  return true;
}

bool is_bracket_compatible(const Hom& h) {
  return is_bracket_compatible(*h.source, *h.target, h.matrix);
}

// ---------------------------------------------------------------- basic ops

ValidationReport validate(const LieAlgebra& L) {
  ValidationReport rep;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseVector& eij = L.stored_bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const SparseVector& ejk = L.stored_bracket(j, k);
        const SparseVector& eik = L.stored_bracket(i, k);
        if (eij.empty() && ejk.empty() && eik.empty()) continue;
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        SparseVector acc = bracket_basis_with(L, i, ejk);
        SparseVector t = bracket_basis_with(L, j, eik);
        add_scaled(acc, -Scalar::one(L.field()), t);
        t = bracket_basis_with(L, k, eij);
        add_scaled(acc, Scalar::one(L.field()), t);
        if (!acc.empty()) {
          rep.ok = false;
          rep.violations.push_back({i, j, k, to_dense(L.field(), n, acc)});
        }
      }
    }
  return rep;
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
  require_dim(L, x);
  require_dim(L, y);
  SparseVector acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || i == j) continue;
      Scalar c = x[i] * y[j];
      if (i < j)
        add_scaled(acc, c, L.stored_bracket(i, j));
      else
        add_scaled(acc, -c, L.stored_bracket(j, i));
    }
  }
  return to_dense(L.field(), L.dim(), acc);
}

Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  require_ambient(L, a);
  require_ambient(L, b);
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Element x = a.basis_vector(r);
    for (std::size_t s = 0; s < b.dim(); ++s) {
      Element v = bracket(L, x, b.basis_vector(s));
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  }
  return Subspace::span(L.field(), L.dim(), vs);
}

bool is_ideal(const LieAlgebra& L, const Subspace& I) {
  require_ambient(L, I);
  for (std::size_t r = 0; r < I.dim(); ++r) {
    SparseVector v = to_sparse(I.basis_vector(r));
    for (std::size_t j = 0; j < L.dim(); ++j) {
      SparseVector w = bracket_basis_with(L, j, v);
      if (!w.empty() && !I.contains(to_dense(L.field(), L.dim(), w))) return false;
    }
  }
  return true;
}

bool is_central(const LieAlgebra& L, const Element& x) {
  require_dim(L, x);
  SparseVector v = to_sparse(x);
  for (std::size_t j = 0; j < L.dim(); ++j)
    if (!bracket_basis_with(L, j, v).empty()) return false;
  return true;
}

// ---------------------------------------------------------------- series

Subspace derived_algebra(const LieAlgebra& L) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!L.stored_bracket(i, j).empty())
        vs.push_back(to_dense(L.field(), L.dim(), L.stored_bracket(i, j)));
  return Subspace::span(L.field(), L.dim(), vs);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const auto full = Subspace::full(L.field(), L.dim());
  std::vector<Subspace> series{full};
  while (!series.back().is_zero()) {
    Subspace next = series.size() == 1 ? derived_algebra(L) : bracket_subspaces(L, series.back(), full);
    if (next.dim() == series.back().dim())
      throw NotNilpotent("lower central series stalls at dimension " + std::to_string(next.dim()));
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t nilpotency_class(const LieAlgebra& L) {
  // series = L^1, ..., L^{c+1} = 0
  return lower_central_series(L).size() - 1;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // rows indexed by (j, k): coefficient of e_k in [x, e_j]
  Matrix m(L.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const auto& t : L.basis_bracket(i, j)) m.at(j * n + t.index, i) = t.coeff;
    }
  return kernel(m);
}

std::vector<Subspace> upper_central_series(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Subspace> series{Subspace::zero(L.field(), n)};
  while (!series.back().is_full()) {
    const Subspace& prev = series.back();
    Quotient q = quotient(L, prev);
    Subspace zq = center(q.algebra);
    std::vector<Vector> lifts = prev.basis_vectors();
    for (std::size_t r = 0; r < zq.dim(); ++r) {
      Vector v = zero_vector(L.field(), n);
      for (std::size_t k = 0; k < q.basis_indices.size(); ++k) v[q.basis_indices[k]] = zq.basis().at(r, k);
      lifts.push_back(std::move(v));
    }
    Subspace next = Subspace::span(L.field(), n, lifts);
    if (next.dim() == prev.dim())
      throw NotNilpotent("upper central series stalls at dimension " + std::to_string(prev.dim()));
    series.push_back(std::move(next));
  }
  return series;
}

StructuralFlags structural_predicates(const LieAlgebra& L) {
  const std::size_t cls = nilpotency_class(L);
  Subspace d = derived_algebra(L);
  Subspace z = center(L);
  StructuralFlags f{};
  f.abelian = d.is_zero();
  f.stem = d.contains(z);
  f.generalized_heisenberg = !d.is_zero() && d == z;
  f.heisenberg_rank = f.generalized_heisenberg ? d.dim() : 0;
  f.maximal_class = L.dim() >= 2 && cls == L.dim() - 1;
  return f;
}

// ---------------------------------------------------------------- constructions

Quotient quotient(const LieAlgebra& L, const Subspace& I) {
  require_ambient(L, I);
  if (!is_ideal(L, I)) throw LieError("quotient: subspace is not an ideal");
  const std::size_t n = L.dim();
  std::vector<std::size_t> keep;
  {
    std::vector<bool> pivot(n, false);
    for (auto p : I.pivots()) pivot[p] = true;
    for (std::size_t k = 0; k < n; ++k)
      if (!pivot[k]) keep.push_back(k);
  }
  const std::size_t m = keep.size();
  Matrix proj(L.field(), m, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector r = I.reduce(unit_vector(L.field(), n, c));
    for (std::size_t k = 0; k < m; ++k) proj.at(k, c) = r[keep[k]];
  }
  LieAlgebra Q(L.field(), m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const SparseVector& v = L.stored_bracket(keep[a], keep[b]);
      if (v.empty()) continue;
      Vector img = proj.apply(to_dense(L.field(), n, v));
      Q.set_bracket(a, b, img);
    }
  if (!L.name().empty()) Q.set_name(L.name() + "/I");
  return Quotient{std::move(Q), std::move(proj), std::move(keep)};
}

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S) {
  require_ambient(L, S);
  const std::size_t m = S.dim();
  std::vector<Element> basis = S.basis_vectors();
  LieAlgebra sub(L.field(), m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Element v = bracket(L, basis[a], basis[b]);
      if (is_zero(v)) continue;
      if (!S.contains(v)) throw LieError("restrict_to: subspace is not a subalgebra");
      sub.set_bracket(a, b, S.coordinates(v));
    }
  return sub;
}

LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
  if (!(A.field() == B.field())) throw LieError("direct_sum: field mismatch");
  const std::size_t na = A.dim(), nb = B.dim();
  LieAlgebra S(A.field(), na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      if (!A.stored_bracket(i, j).empty()) S.set_bracket(i, j, A.stored_bracket(i, j));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      const SparseVector& v = B.stored_bracket(i, j);
      if (v.empty()) continue;
      SparseVector shifted;
      for (const auto& t : v) shifted.push_back(Term{t.index + na, t.coeff});
      S.set_bracket(na + i, na + j, std::move(shifted));
    }
  if (!A.name().empty() || !B.name().empty()) S.set_name(A.name() + " (+) " + B.name());
  return S;
}

LieAlgebra abelian(const FieldSpec& field, std::size_t n) {
  return LieAlgebra(field, n, "A(" + std::to_string(n) + ")");
}

CentralProduct central_product(const LieAlgebra& A, const LieAlgebra& B,
                               const std::vector<std::pair<Element, Element>>& identify) {
  if (!(A.field() == B.field())) throw LieError("central_product: field mismatch");
  const FieldSpec& f = A.field();
  const std::size_t na = A.dim(), nb = B.dim();
  std::vector<Vector> as, bs, glue;
  for (const auto& [a, b] : identify) {
    require_dim(A, a);
    require_dim(B, b);
    if (!is_central(A, a) || !is_central(B, b))
      throw LieError("central_product: identified element is not central");
    as.push_back(a);
    bs.push_back(b);
    Vector g = a;
    for (const auto& s : b) g.push_back(-s);
    glue.push_back(std::move(g));
  }
  if (Subspace::span(f, na, as).dim() != as.size() || Subspace::span(f, nb, bs).dim() != bs.size())
    throw LieError("central_product: identification set is linearly dependent");
  LieAlgebra sum = direct_sum(A, B);
  Subspace J = Subspace::span(f, na + nb, glue);
  Quotient q = quotient(sum, J);
  std::vector<std::size_t> a_idx(na), b_idx(nb);
  for (std::size_t i = 0; i < na; ++i) a_idx[i] = i;
  for (std::size_t i = 0; i < nb; ++i) b_idx[i] = na + i;
  Subspace image_a = image(q.projection, Subspace::coordinate(f, na + nb, a_idx));
  Subspace image_b = image(q.projection, Subspace::coordinate(f, na + nb, b_idx));
  q.algebra.set_name(A.name() + " * " + B.name());
  return CentralProduct{std::move(q.algebra), std::move(q.projection), std::move(image_a),
                        std::move(image_b)};
}

StemDecomposition stem_decompose(const LieAlgebra& L) {
  nilpotency_class(L);  // rejects non-nilpotent input
  const FieldSpec& f = L.field();
  const std::size_t n = L.dim();
  Subspace full = Subspace::full(f, n);
  Subspace d = derived_algebra(L);
  Subspace z = center(L);
  Subspace a = complement_in(subspace_intersect(d, z), z);
  Subspace t = subspace_sum(d, complement_in(subspace_sum(d, a), full));
  return StemDecomposition{restrict_to(L, t), abelian(f, a.dim()), std::move(t), std::move(a)};
}

Subspace minimal_generators(const LieAlgebra& L) {
  return complement_in(derived_algebra(L), Subspace::full(L.field(), L.dim()));
}

}  // namespace nilcap
