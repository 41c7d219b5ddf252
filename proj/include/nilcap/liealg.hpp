// Finite-dimensional Lie algebras given by structure constants.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nilcap/field.hpp"
#include "nilcap/linalg.hpp"

namespace nilcap {

class LieError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by series-dependent operations on non-nilpotent input.
class NotNilpotent : public LieError {
 public:
  using LieError::LieError;
};

/// Coordinates of an algebra element with respect to the basis e_1..e_n.
using Element = Vector;

struct Term {
  std::size_t index;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse combination of basis vectors, sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

class LieAlgebra {
 public:
  LieAlgebra(FieldSpec field, std::size_t dim, std::string name = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Sets [e_i, e_j] (0-based, i != j); [e_j, e_i] follows by antisymmetry.
  void set_bracket(std::size_t i, std::size_t j, const Element& value);
  void set_bracket(std::size_t i, std::size_t j, SparseVector value);

  /// [e_i, e_j] as a sparse combination, for any i, j.
  SparseVector basis_bracket(std::size_t i, std::size_t j) const;
  /// Stored value for i < j, without copying.
  const SparseVector& stored_bracket(std::size_t i, std::size_t j) const;

  /// Structural equality of the bracket tables (names ignored).
  bool same_table(const LieAlgebra& other) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const { return i * dim_ + j; }

  FieldSpec field_;
  std::size_t dim_;
  std::string name_;
  std::vector<SparseVector> table_;  // indexed by i * dim + j for i < j
};

/// Linear map between algebras, as a target_dim x source_dim matrix.
struct Hom {
  std::shared_ptr<const LieAlgebra> source;
  std::shared_ptr<const LieAlgebra> target;
  Matrix matrix;

  Element apply(const Element& x) const { return matrix.apply(x); }
};

/// phi([e_i, e_j]) == [phi e_i, phi e_j] for all basis pairs.
bool is_bracket_compatible(const LieAlgebra& source, const LieAlgebra& target, const Matrix& m);
bool is_bracket_compatible(const Hom& h);

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  Element value;
};

struct ValidationReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

ValidationReport validate(const LieAlgebra& L);

Element bracket(const LieAlgebra& L, const Element& x, const Element& y);
Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& a, const Subspace& b);

bool is_ideal(const LieAlgebra& L, const Subspace& I);
bool is_central(const LieAlgebra& L, const Element& x);

/// Subspaces L^1 = L, L^2, ..., ending with the first zero term.
/// Throws NotNilpotent if the descent stalls above zero.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
std::size_t nilpotency_class(const LieAlgebra& L);

Subspace derived_algebra(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);

/// Z_0 = 0, Z_1 = Z(L), ..., ending at L. Each step lifts the center of the
/// quotient by the previous term.
std::vector<Subspace> upper_central_series(const LieAlgebra& L);

struct StructuralFlags {
  bool abelian;
  bool stem;
  bool generalized_heisenberg;
  std::size_t heisenberg_rank;  // dim L^2 when generalized Heisenberg, else 0
  bool maximal_class;
};

StructuralFlags structural_predicates(const LieAlgebra& L);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;                       // (n - dim I) x n
  std::vector<std::size_t> basis_indices;  // standard vectors spanning the complement
};

/// L / I on the basis of standard vectors at the non-pivot columns of I.
Quotient quotient(const LieAlgebra& L, const Subspace& I);

/// Subalgebra on the reduced basis of S, which must be closed under brackets.
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S);

LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B);
LieAlgebra abelian(const FieldSpec& field, std::size_t n);

struct CentralProduct {
  LieAlgebra algebra;
  Matrix projection;  // from A (+) B
  Subspace image_a;   // images of the summands inside the result
  Subspace image_b;
};

/// (A (+) B) / span{(a_i, -b_i)}; each a_i, b_i must be central in its algebra.
CentralProduct central_product(const LieAlgebra& A, const LieAlgebra& B,
                               const std::vector<std::pair<Element, Element>>& identify);

struct StemDecomposition {
  LieAlgebra stem;     // T
  LieAlgebra abelian;  // A
  Subspace stem_part;  // T inside L
  Subspace abelian_part;
};

/// L = T (+) A with A abelian and T stem.
StemDecomposition stem_decompose(const LieAlgebra& L);

/// Complement of L^2 in L; its dimension is the minimal number of generators.
Subspace minimal_generators(const LieAlgebra& L);

}  // namespace nilcap
