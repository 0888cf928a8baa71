#pragma once

// Reidemeister numbers of automorphisms of free abelian groups Z^k given by
// integer matrices: R(A) = |det(I - A)|, or infinity when 1 is an
// eigenvalue. Includes a Smith-normal-form oracle for the same count, the
// product over the layers of a central series, and the lower bound used for
// eigenvalue +-1.

#include "braidrep.hpp"
#include "exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidcert {

/// Square matrix of exact integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;

  explicit IntegerMatrix(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != rows_.size()) throw std::invalid_argument("integer matrix must be square");
  }

  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    for (const auto& r : rows) {
      std::vector<BigInt> row;
      for (long long v : r) row.emplace_back(v);
      rows_.push_back(std::move(row));
    }
    for (const auto& r : rows_)
      if (r.size() != rows_.size()) throw std::invalid_argument("integer matrix must be square");
  }

  static IntegerMatrix zero(int k) {
    return IntegerMatrix(std::vector<std::vector<BigInt>>(static_cast<std::size_t>(k),
                                                          std::vector<BigInt>(static_cast<std::size_t>(k))));
  }
  static IntegerMatrix identity(int k) {
    auto m = zero(k);
    for (int i = 0; i < k; ++i) m(i, i) = 1;
    return m;
  }
  static IntegerMatrix from_signed_monomial(const SignedMonomialMatrix& s) {
    auto m = zero(s.dim());
    for (int c = 0; c < s.dim(); ++c) m(s.target(c), c) = s.sign(c);
    return m;
  }

  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  BigInt& operator()(int r, int c) { return rows_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)); }
  const BigInt& operator()(int r, int c) const {
    return rows_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
  }
  const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix product: dimension mismatch");
    auto c = zero(a.dim());
    for (int i = 0; i < a.dim(); ++i)
      for (int k = 0; k < a.dim(); ++k) {
        if (a(i, k) == 0) continue;
        for (int j = 0; j < a.dim(); ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix difference: dimension mismatch");
    auto c = a;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) c(i, j) -= b(i, j);
    return c;
  }
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(IntegerMatrix a) {
  const int n = a.dim();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// A positive integer or infinity; never zero.
class ReidemeisterCount {
 public:
  static ReidemeisterCount infinite() { return ReidemeisterCount(); }
  static ReidemeisterCount finite(BigInt v) {
    if (v <= 0) throw std::invalid_argument("Reidemeister number must be positive");
    ReidemeisterCount r;
    r.value_ = std::move(v);
    return r;
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const BigInt& value() const {
    if (!value_) throw std::logic_error("Reidemeister number is infinite");
    return *value_;
  }

  std::string to_string() const { return value_ ? value_->str() : "infinity"; }

  friend ReidemeisterCount operator*(const ReidemeisterCount& a, const ReidemeisterCount& b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return finite(a.value() * b.value());
  }
  friend bool operator==(const ReidemeisterCount&, const ReidemeisterCount&) = default;

 private:
  ReidemeisterCount() = default;
  std::optional<BigInt> value_;
};

inline ReidemeisterCount reidemeister_of_matrix(const IntegerMatrix& a) {
  const BigInt d = determinant(IntegerMatrix::identity(a.dim()) - a);
  if (d == 0) return ReidemeisterCount::infinite();
  return ReidemeisterCount::finite(abs(d));
}

/// Diagonal of the Smith normal form of a (non-negative entries, each
/// dividing the next; zeros last).
inline std::vector<BigInt> smith_diagonal(IntegerMatrix a) {
  const int n = a.dim();
  auto swap_rows = [&](int r1, int r2) {
    for (int c = 0; c < n; ++c) std::swap(a(r1, c), a(r2, c));
  };
  auto swap_cols = [&](int c1, int c2) {
    for (int r = 0; r < n; ++r) std::swap(a(r, c1), a(r, c2));
  };

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block as pivot.
      int pr = -1, pc = -1;
      for (int r = t; r < n; ++r)
        for (int c = t; c < n; ++c)
          if (a(r, c) != 0 && (pr < 0 || abs(a(r, c)) < abs(a(pr, pc)))) pr = r, pc = c;
      if (pr < 0) {
        std::vector<BigInt> diag;
        for (int i = 0; i < n; ++i) diag.push_back(abs(a(i, i)));
        return diag;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (int r = t + 1; r < n; ++r) {
        if (a(r, t) == 0) continue;
        const BigInt q = a(r, t) / a(t, t);
        for (int c = t; c < n; ++c) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < n; ++c) {
        if (a(t, c) == 0) continue;
        const BigInt q = a(t, c) / a(t, t);
        for (int r = t; r < n; ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with an entry not divisible by the pivot.
      int bad = -1;
      for (int r = t + 1; r < n && bad < 0; ++r)
        for (int c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      for (int c = t; c < n; ++c) a(t, c) += a(bad, c);
    }
  }
  std::vector<BigInt> diag;
  for (int i = 0; i < n; ++i) diag.push_back(abs(a(i, i)));
  return diag;
}

/// Order of the cokernel of I - A, the number of twisted conjugacy classes
/// of A on Z^k.
inline ReidemeisterCount snf_oracle(const IntegerMatrix& a) {
  BigInt order = 1;
  for (const auto& d : smith_diagonal(IntegerMatrix::identity(a.dim()) - a)) {
    if (d == 0) return ReidemeisterCount::infinite();
    order *= d;
  }
  return ReidemeisterCount::finite(order);
}

/// R over a central series with torsion-free layers: the product of the
/// layer counts.
inline ReidemeisterCount product_formula(const std::vector<IntegerMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("product_formula: no blocks");
  auto r = ReidemeisterCount::finite(1);
  for (const auto& b : blocks) r = r * reidemeister_of_matrix(b);
  return r;
}

struct Pm1Report {
  bool has_plus_one = false;
  bool has_minus_one = false;
  ReidemeisterCount lower_bound = ReidemeisterCount::finite(1);

  bool has_pm1() const { return has_plus_one || has_minus_one; }
};

/// Detects eigenvalues 1 and -1 by evaluating det(xI - A) at x = 1 and -1.
inline Pm1Report pm1_bound(const IntegerMatrix& a) {
  const auto I = IntegerMatrix::identity(a.dim());
  Pm1Report rep;
  rep.has_plus_one = determinant(I - a) == 0;
  rep.has_minus_one = determinant(IntegerMatrix::zero(a.dim()) - I - a) == 0;
  if (rep.has_plus_one)
    rep.lower_bound = ReidemeisterCount::infinite();
  else if (rep.has_minus_one)
    rep.lower_bound = ReidemeisterCount::finite(2);
  return rep;
}

/// Random finite-order element of GL_k(Z): a random signed permutation
/// matrix conjugated by a product of `shears` random elementary matrices.
template <typename Rng>
IntegerMatrix random_finite_order_matrix(int k, Rng& rng, int shears = 4) {
  std::uniform_int_distribution<int> coin(0, 1);
  auto perm = Permutation::random(k, rng);
  std::vector<int> target, sign;
  for (int i = 1; i <= k; ++i) {
    target.push_back(perm(i) - 1);
    sign.push_back(coin(rng) ? 1 : -1);
  }
  const auto m = IntegerMatrix::from_signed_monomial(SignedMonomialMatrix(target, sign));
  if (k < 2) return m;

  std::uniform_int_distribution<int> idx(0, k - 1), factor(-2, 2);
  auto u = IntegerMatrix::identity(k);
  auto u_inv = IntegerMatrix::identity(k);
  for (int n = 0; n < shears; ++n) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int f = factor(rng);
    auto e = IntegerMatrix::identity(k), e_inv = IntegerMatrix::identity(k);
    e(i, j) = f;
    e_inv(i, j) = -f;
    u = u * e;
    u_inv = e_inv * u_inv;
  }
  return u * m * u_inv;
}

struct P4LayerBound {
  int levels = 0;                    // L: layers 3..2L are considered
  BigInt bound;                      // 2^{L-1}
  std::map<int, int> ranks;          // k -> rank 5(k-1) of Gamma_k/Gamma_{k+1}, k >= 3
  std::map<int, bool> odd_rank_has_pm1;  // even k >= 4 -> pm1 found on a sampled finite-order matrix
};

/// Lower bound 2^{L-1} for R on G / Gamma_{2L+1}(G), G the metabelian
/// quotient of P4 modulo its centre. Each even layer k has odd rank 5(k-1),
/// so a finite-order automorphism of it has a real eigenvalue +-1 and
/// contributes a factor >= 2. The rank constants are taken as given; the
/// eigenvalue claim is exercised on one sampled finite-order matrix per layer.
inline P4LayerBound p4_even_layer_bound(int L, std::uint64_t seed = 1) {
  if (L < 2) throw std::invalid_argument("p4_even_layer_bound: L must be at least 2");
  P4LayerBound out;
  out.levels = L;
  out.bound = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(L - 1));
  std::mt19937_64 rng(seed);
  for (int k = 3; k <= 2 * L; ++k) {
    out.ranks[k] = 5 * (k - 1);
    if (k % 2 == 0) {
      if (out.ranks[k] % 2 == 0) throw invariant_violation("even layer has even rank");
      out.odd_rank_has_pm1[k] = pm1_bound(random_finite_order_matrix(out.ranks[k], rng)).has_pm1();
      if (!out.odd_rank_has_pm1[k])
        throw invariant_violation("finite-order matrix of odd size without eigenvalue +-1");
    }
  }
  return out;
}

}  // namespace braidcert
