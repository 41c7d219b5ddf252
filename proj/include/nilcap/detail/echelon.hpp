// Typed elimination engine shared by the linear algebra and homology code.
// Rows are stored densely; updates walk only the nonzero entries of the
// pivot row unless the row is dense enough for the vector kernels to win.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "nilcap/field.hpp"
#include "nilcap/kernels.hpp"

namespace nilcap::detail {

using Support = std::vector<std::uint32_t>;

struct RationalRing {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  value_type from(const Scalar& s) const { return s.rational(); }
  Scalar to(const value_type& v) const { return Scalar::from_rational(v, FieldSpec::rationals()); }
  value_type neg(const value_type& v) const { return -v; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type inv(const value_type& v) const { return 1 / v; }

  // y += a * x over the given support of x.
  void axpy(std::vector<value_type>& y, const value_type& a, const std::vector<value_type>& x,
            const Support& support) const {
    mpq_class t;
    for (auto i : support) {
      mpq_mul(t.get_mpq_t(), a.get_mpq_t(), x[i].get_mpq_t());
      mpq_add(y[i].get_mpq_t(), y[i].get_mpq_t(), t.get_mpq_t());
    }
  }
  void scale(std::vector<value_type>& y, const value_type& a, std::size_t from) const {
    for (std::size_t i = from; i < y.size(); ++i)
      if (sgn(y[i]) != 0) y[i] *= a;
  }
};

struct ModRing {
  using value_type = std::uint32_t;
  FieldSpec field;
  std::uint32_t p;

  explicit ModRing(const FieldSpec& f) : field(f), p(f.p()) {}

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  static bool is_zero(value_type v) { return v == 0; }
  value_type from(const Scalar& s) const { return s.residue(); }
  Scalar to(value_type v) const { return Scalar::from_int(v, field); }
  value_type neg(value_type v) const { return v == 0 ? 0 : p - v; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type add(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + b) % p);
  }
  value_type inv(value_type v) const { return inverse_mod(v, p); }

  void axpy(std::vector<value_type>& y, value_type a, const std::vector<value_type>& x,
            const Support& support) const {
    if (a == 0 || support.empty()) return;
    const std::size_t from = support.front();
    if (support.size() * 4 >= y.size() - from) {
      kernels::axpy_mod(std::span(y).subspan(from), std::span(x).subspan(from), a, p);
      return;
    }
    for (auto i : support)
      y[i] = static_cast<value_type>((std::uint64_t{y[i]} + std::uint64_t{a} * x[i]) % p);
  }
  void scale(std::vector<value_type>& y, value_type a, std::size_t from) const {
    kernels::scale_mod(std::span(y).subspan(from), a, p);
  }
};

template <class Ring>
Support support_of(const std::vector<typename Ring::value_type>& v, std::size_t from = 0) {
  Support s;
  for (std::size_t i = from; i < v.size(); ++i)
    if (!Ring::is_zero(v[i])) s.push_back(static_cast<std::uint32_t>(i));
  return s;
}

/// Incremental row echelon form. Stored rows are monic at their pivot and
/// vanish at the pivots of all earlier rows, so reduction against them in
/// insertion order is a linear projection whose kernel is the row span.
template <class Ring>
class Echelon {
 public:
  using V = typename Ring::value_type;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Echelon(Ring ring, std::size_t cols) : ring_(ring), cols_(cols), row_at_(cols, npos) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const Ring& ring() const { return ring_; }

  void reduce(std::vector<V>& v) const {
    for (const auto& r : rows_) {
      const V& c = v[r.pivot];
      if (Ring::is_zero(c)) continue;
      V f = ring_.neg(c);
      ring_.axpy(v, f, r.data, r.support);
    }
  }

  /// Reduces v and keeps it if independent. Returns true when the rank grew.
  bool insert(std::vector<V> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < cols_ && Ring::is_zero(v[lead])) ++lead;
    if (lead == cols_) return false;
    if (!(v[lead] == ring_.one())) ring_.scale(v, ring_.inv(v[lead]), lead);
    Row r{std::move(v), lead, {}};
    r.support = support_of<Ring>(r.data, lead);
    row_at_[lead] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  bool has_pivot(std::size_t col) const { return row_at_[col] != npos; }

  /// Canonical reduced row-echelon rows, ordered by pivot.
  std::vector<std::vector<V>> rref(std::vector<std::size_t>& pivots) const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].pivot < rows_[b].pivot; });
    std::vector<std::vector<V>> out(order.size());
    std::vector<Support> supports(order.size());
    pivots.assign(order.size(), 0);
    for (std::size_t k = order.size(); k-- > 0;) {
      const Row& r = rows_[order[k]];
      std::vector<V> v = r.data;
      for (std::size_t s = k + 1; s < order.size(); ++s) {
        const V& c = v[pivots[s]];
        if (Ring::is_zero(c)) continue;
        V f = ring_.neg(c);
        ring_.axpy(v, f, out[s], supports[s]);
      }
      pivots[k] = r.pivot;
      supports[k] = support_of<Ring>(v, r.pivot);
      out[k] = std::move(v);
    }
    return out;
  }

 private:
  struct Row {
    std::vector<V> data;
    std::size_t pivot;
    Support support;
  };

  Ring ring_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> row_at_;
};

template <class Fn>
decltype(auto) with_ring(const FieldSpec& f, Fn&& fn) {
  if (f.is_rational()) return fn(RationalRing{});
  return fn(ModRing(f));
}

template <class Ring>
std::vector<typename Ring::value_type> to_typed(const Ring& ring, const std::vector<Scalar>& v) {
  std::vector<typename Ring::value_type> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(ring.from(s));
  return out;
}

template <class Ring>
std::vector<Scalar> to_scalars(const Ring& ring, const std::vector<typename Ring::value_type>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ring.to(x));
  return out;
}

}  // namespace nilcap::detail
