#include "nilcap/linalg.hpp"

#include <algorithm>

#include "nilcap/detail/echelon.hpp"

namespace nilcap {

using detail::Echelon;
using detail::with_ring;

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LinalgError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw LinalgError("ragged integer matrix");
    std::size_t c = 0;
    for (long long v : row) m.at(r, c++) = Scalar::from_int(v, field);
    ++r;
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw LinalgError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw LinalgError("dimension mismatch in matrix-vector product");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw LinalgError("dimension mismatch in matrix product");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

// ---------------------------------------------------------------- helpers

namespace {

template <class Ring>
void insert_rows(Echelon<Ring>& e, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<typename Ring::value_type> v;
    v.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(e.ring().from(m.at(r, c)));
    e.insert(std::move(v));
  }
}

template <class Ring>
RrefResult finish(const Echelon<Ring>& e, const FieldSpec& f) {
  std::vector<std::size_t> pivots;
  auto rows = e.rref(pivots);
  Matrix out(f, rows.size(), e.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c)
      if (!e.ring().is_zero(rows[r][c])) out.at(r, c) = e.ring().to(rows[r][c]);
  std::size_t rank = rows.size();
  return RrefResult{std::move(out), std::move(pivots), rank};
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
    throw LinalgError("subspaces live in different ambient spaces");
}

}  // namespace

Subspace make_subspace(Matrix basis, std::vector<std::size_t> pivots) {
  return Subspace(std::move(basis), std::move(pivots));
}

RrefResult rref(const Matrix& m) {
  return with_ring(m.field(), [&](auto ring) {
    Echelon e(ring, m.cols());
    insert_rows(e, m);
    return finish(e, m.field());
  });
}

std::size_t rank(const Matrix& m) {
  return with_ring(m.field(), [&](auto ring) {
    Echelon e(ring, m.cols());
    insert_rows(e, m);
    return e.rank();
  });
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw LinalgError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw LinalgError("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.reduced.at(r, n + c);
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  auto red = rref(Matrix::from_rows(field, ambient, vectors));
  return Subspace(std::move(red.reduced), std::move(red.pivots));
}

Subspace Subspace::coordinate(const FieldSpec& field, std::size_t ambient,
                              const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) vs.push_back(unit_vector(field, ambient, i));
  return span(field, ambient, vs);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) throw LinalgError("vector length does not match ambient dimension");
  Vector out = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = out[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t k = pivots_[r]; k < ambient_dim(); ++k)
      if (!basis_.at(r, k).is_zero()) out[k] -= c * basis_.at(r, k);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return nilcap::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw LinalgError("vector is not in the subspace");
  Vector out;
  out.reserve(dim());
  for (auto p : pivots_) out.push_back(v[p]);
  return out;
}

// ---------------------------------------------------------------- operations

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  auto red = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(m.field(), n, f);
    for (std::size_t r = 0; r < red.rank; ++r)
      if (!red.reduced.at(r, f).is_zero()) v[red.pivots[r]] = -red.reduced.at(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace row_space(const Matrix& m) {
  auto red = rref(m);
  return make_subspace(std::move(red.reduced), std::move(red.pivots));
}

Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace image(const Matrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.cols()) throw LinalgError("subspace does not live in the source");
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(m.apply(s.basis_vector(i)));
  return Subspace::span(m.field(), m.rows(), vs);
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (target.ambient_dim() != m.rows()) throw LinalgError("target does not live in the codomain");
  // v -> residue of m v modulo target; its kernel is the preimage
  Matrix residues(m.field(), m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) residues.set_column(c, target.reduce(m.column(c)));
  return kernel(residues);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  auto vs = a.basis_vectors();
  auto bs = b.basis_vectors();
  vs.insert(vs.end(), bs.begin(), bs.end());
  return Subspace::span(a.field(), a.ambient_dim(), vs);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const FieldSpec& f = a.field();
  Matrix block(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      block.at(r, c) = a.basis().at(r, c);
      block.at(r, n + c) = a.basis().at(r, c);
    }
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) block.at(a.dim() + r, c) = b.basis().at(r, c);
  auto red = rref(block);
  std::vector<Vector> inter;
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] < n) continue;
    Vector v;
    for (std::size_t c = 0; c < n; ++c) v.push_back(red.reduced.at(r, n + c));
    inter.push_back(std::move(v));
  }
  return Subspace::span(f, n, inter);
}

Subspace intersect_coordinate_tail(const Subspace& s, std::size_t first) {
  std::vector<Vector> rows;
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (s.pivots()[r] < first) continue;
    rows.push_back(s.basis_vector(r));
    piv.push_back(s.pivots()[r]);
  }
  return make_subspace(Matrix::from_rows(s.field(), s.ambient_dim(), rows), std::move(piv));
}

Subspace complement_in(const Subspace& sub, const Subspace& ambient) {
  require_same_ambient(sub, ambient);
  if (!ambient.contains(sub)) throw LinalgError("complement_in: subspace is not contained in ambient");
  std::vector<Vector> rows;
  std::vector<std::size_t> piv;
  const auto& sp = sub.pivots();
  for (std::size_t r = 0; r < ambient.dim(); ++r) {
    std::size_t p = ambient.pivots()[r];
    if (std::binary_search(sp.begin(), sp.end(), p)) continue;
    rows.push_back(ambient.basis_vector(r));
    piv.push_back(p);
  }
  return make_subspace(Matrix::from_rows(ambient.field(), ambient.ambient_dim(), rows), std::move(piv));
}

}  // namespace nilcap
