#include "nilcap/schur.hpp"

#include <random>

namespace nilcap {

namespace {

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  if (f.is_rational()) return Scalar::from_int(std::uniform_int_distribution<int>(-3, 3)(rng), f);
  return Scalar::from_int(std::uniform_int_distribution<std::uint32_t>(0, f.p() - 1)(rng), f);
}

Vector random_combination(std::mt19937_64& rng, const Subspace& s) {
  Vector v = zero_vector(s.field(), s.ambient_dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Scalar c = random_scalar(rng, s.field());
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!s.basis().at(r, k).is_zero()) v[k] += c * s.basis().at(r, k);
  }
  return v;
}

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

// Kernel of z -> ([s(z), h] mod RF)_h over the given elements h of F.
Subspace exterior_center_over(const Presentation& P, const std::vector<Element>& probes) {
  const LieAlgebra& F = *P.F.algebra;
  const std::size_t n = P.L->dim();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n; ++k) {
    Element sz = P.section.column(k);
    Vector col;
    for (const auto& h : probes) append(col, P.RF.reduce(bracket(F, sz, h)));
    cols.push_back(std::move(col));
  }
  Matrix m(P.L->field(), probes.size() * F.dim(), n);
  for (std::size_t k = 0; k < n; ++k) m.set_column(k, cols[k]);
  return kernel(m);
}

}  // namespace

Presentation free_presentation(std::shared_ptr<const LieAlgebra> L, const PresentationOptions& opts) {
  if (L->dim() == 0) throw LieError("free_presentation: zero algebra has no generators");
  const FieldSpec& f = L->field();
  const std::size_t c = nilpotency_class(*L);
  Subspace gens = minimal_generators(*L);
  const std::size_t d = gens.dim();

  std::optional<std::mt19937_64> rng;
  if (opts.perturb_seed) rng.emplace(*opts.perturb_seed);

  std::vector<Element> images = gens.basis_vectors();
  if (rng) {
    Subspace l2 = derived_algebra(*L);
    for (auto& g : images) {
      Vector shift = random_combination(*rng, l2);
      for (std::size_t k = 0; k < g.size(); ++k) g[k] += shift[k];
    }
  }

  FreeNilpotent F = free_nilpotent(d, c + 1, f, opts.max_free_dim);
  Hom pi = extend_hom(F, L, images);
  const std::size_t N = F.dim(), n = L->dim();

  Subspace R = kernel(pi.matrix);

  // Generator-only span: [r, [a, b]] = [[r, a], b] - [[r, b], a] with [r, a] in R.
  std::vector<Vector> rf;
  for (std::size_t r = 0; r < R.dim(); ++r) {
    if (R.pivots()[r] >= F.degree_begin(c + 1)) break;  // top-degree rows bracket to zero
    Element rv = R.basis_vector(r);
    for (std::size_t g = 0; g < d; ++g) {
      Element v = bracket(*F.algebra, rv, unit_vector(f, N, F.generator(g)));
      if (!is_zero(v)) rf.push_back(std::move(v));
    }
  }
  Subspace RF = Subspace::span(f, N, rf);
  Subspace RcapF2 = intersect_coordinate_tail(R, d);

  RrefResult red = rref(pi.matrix);
  if (red.rank != n) throw LieError("free_presentation: generator images do not span L");
  Matrix square(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) square.at(r, k) = pi.matrix.at(r, red.pivots[k]);
  Matrix inv = inverse(square);
  Matrix section(f, N, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) section.at(red.pivots[k], r) = inv.at(k, r);
  if (rng) {
    for (std::size_t col = 0; col < n; ++col) {
      Vector shift = random_combination(*rng, R);
      for (std::size_t k = 0; k < N; ++k)
        if (!shift[k].is_zero()) section.at(k, col) += shift[k];
    }
  }

  return Presentation{std::move(L), std::move(F), std::move(pi), std::move(R),
                      std::move(RF), std::move(RcapF2), std::move(section)};
}

std::size_t multiplier_dim(const Presentation& P) { return P.RcapF2.dim() - P.RF.dim(); }

std::size_t exterior_square_dim(const Presentation& P) {
  return (P.F.dim() - P.F.d) - P.RF.dim();
}

Subspace exterior_center(const Presentation& P) {
  std::vector<Element> probes;
  for (std::size_t g = 0; g < P.F.d; ++g)
    probes.push_back(unit_vector(P.L->field(), P.F.dim(), P.F.generator(g)));
  return exterior_center_over(P, probes);
}

Subspace relation_commutator_full(const Presentation& P) {
  const LieAlgebra& F = *P.F.algebra;
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < P.R.dim(); ++r) {
    Element rv = P.R.basis_vector(r);
    for (std::size_t h = 0; h < F.dim(); ++h) {
      Element v = bracket(F, rv, unit_vector(F.field(), F.dim(), h));
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  }
  return Subspace::span(F.field(), F.dim(), vs);
}

Subspace exterior_center_full(const Presentation& P) {
  std::vector<Element> probes;
  for (std::size_t h = 0; h < P.F.dim(); ++h) probes.push_back(unit_vector(P.L->field(), P.F.dim(), h));
  return exterior_center_over(P, probes);
}

HomologyReport homology(const LieAlgebra& L, const PresentationOptions& opts) {
  if (L.dim() == 0) return HomologyReport{0, 0, Subspace::zero(L.field(), 0), true};
  Presentation P = free_presentation(std::make_shared<const LieAlgebra>(L), opts);
  Subspace z = exterior_center(P);
  const bool capable = z.is_zero();
  return HomologyReport{multiplier_dim(P), exterior_square_dim(P), std::move(z), capable};
}

std::size_t schur_multiplier_dim(const LieAlgebra& L) {
  if (L.dim() == 0) return 0;
  return multiplier_dim(free_presentation(std::make_shared<const LieAlgebra>(L)));
}

std::size_t exterior_square_dim(const LieAlgebra& L) {
  if (L.dim() == 0) return 0;
  return exterior_square_dim(free_presentation(std::make_shared<const LieAlgebra>(L)));
}

Subspace exterior_center(const LieAlgebra& L) { return homology(L).exterior_center; }

bool is_capable(const LieAlgebra& L) { return homology(L).capable; }

CentralIdealTest central_ideal_test(const LieAlgebra& L, const Subspace& I) {
  if (I.ambient_dim() != L.dim()) throw LieError("central_ideal_test: subspace does not live in L");
  if (!center(L).contains(I)) throw LieError("central_ideal_test: ideal is not central");
  HomologyReport h = homology(L);
  Quotient q = quotient(L, I);
  const auto inter = subspace_intersect(derived_algebra(L), I).dim();
  CentralIdealTest t;
  t.lhs = static_cast<std::int64_t>(h.dim_M);
  t.rhs = static_cast<std::int64_t>(schur_multiplier_dim(q.algebra)) - static_cast<std::int64_t>(inter);
  t.contained = h.exterior_center.contains(I);
  return t;
}

}  // namespace nilcap
