// Dense exact linear algebra: matrices, row reduction, and canonical subspaces.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "nilcap/field.hpp"

namespace nilcap {

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_ints(const FieldSpec& field,
                          std::initializer_list<std::initializer_list<long long>> rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  /// Matrix-vector product m * v.
  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;  // nonzero rows only
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; throws LinalgError when singular.
Matrix inverse(const Matrix& m);

/// A subspace of F^n stored by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);
  static Subspace span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors);
  /// Span of the standard vectors e_i for the given indices.
  static Subspace coordinate(const FieldSpec& field, std::size_t ambient,
                             const std::vector<std::size_t>& indices);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical representative of v modulo this subspace (zero at every pivot).
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis. Throws if v is not contained.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  friend Subspace make_subspace(Matrix, std::vector<std::size_t>);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// Row space of m.
Subspace row_space(const Matrix& m);

/// Span of the columns of m.
Subspace column_space(const Matrix& m);

/// Image m(S) of a subspace of the source.
Subspace image(const Matrix& m, const Subspace& s);

/// {v : m v in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Intersection by the Zassenhaus stacked-block method.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Intersection with the coordinate subspace spanned by e_first, ..., e_{n-1}.
Subspace intersect_coordinate_tail(const Subspace& s, std::size_t first);

/// Complement of sub inside ambient made of the ambient basis rows whose
/// pivots are not pivots of sub. Throws LinalgError unless sub is contained.
Subspace complement_in(const Subspace& sub, const Subspace& ambient);

}  // namespace nilcap
