#pragma once

// Induced actions of the pure braid automorphisms on the first two
// lower-central-series quotients, as exact signed-monomial matrices.
//
// Pairs (i, j), i < j, index the images of A_{i,j} in Gamma1/Gamma2. Triples
// (i, j, k), i < j < k, index the basis classes alpha_{i,j,k} of
// Gamma2/Gamma3. A permutation acts on a triple by permuting its entries and
// sorting them back; the basis element picks up the sign of the sorting
// permutation (cyclic reorderings keep it, a single swap inverts it).

#include "exact.hpp"
#include "stembridge.hpp"
#include "symgrp.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidcert {

using Pair = std::array<int, 2>;
using Triple = std::array<int, 3>;

/// Lexicographically ordered pairs (i, j), 1 <= i < j <= s.
class PairBasis {
 public:
  explicit PairBasis(int s) : s_(s) {
    if (s < 2) throw std::invalid_argument("pair basis needs s >= 2");
    for (int i = 1; i <= s; ++i)
      for (int j = i + 1; j <= s; ++j) pairs_.push_back({i, j});
  }
  int strands() const noexcept { return s_; }
  int size() const noexcept { return static_cast<int>(pairs_.size()); }
  const Pair& operator[](int idx) const { return pairs_.at(static_cast<std::size_t>(idx)); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  int index(const Pair& p) const {
    auto [i, j] = p;
    if (!(1 <= i && i < j && j <= s_)) throw std::out_of_range("pair out of range");
    // Pairs starting below i: sum_{r<i} (s - r).
    int before = (i - 1) * s_ - (i - 1) * i / 2;
    return before + (j - i - 1);
  }

 private:
  int s_;
  std::vector<Pair> pairs_;
};

/// Lexicographically ordered triples (i, j, k), 1 <= i < j < k <= s.
class TripleBasis {
 public:
  explicit TripleBasis(int s) : s_(s) {
    if (s < 3) throw std::invalid_argument("triple basis needs s >= 3");
    index_.assign(static_cast<std::size_t>((s + 1) * (s + 1) * (s + 1)), -1);
    for (int i = 1; i <= s; ++i)
      for (int j = i + 1; j <= s; ++j)
        for (int k = j + 1; k <= s; ++k) {
          index_[slot({i, j, k})] = static_cast<int>(triples_.size());
          triples_.push_back({i, j, k});
        }
  }
  int strands() const noexcept { return s_; }
  int size() const noexcept { return static_cast<int>(triples_.size()); }
  const Triple& operator[](int idx) const { return triples_.at(static_cast<std::size_t>(idx)); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  int index(const Triple& t) const {
    for (int v : t)
      if (v < 1 || v > s_) throw std::out_of_range("triple entry out of range");
    int idx = index_[slot(t)];
    if (idx < 0) throw std::out_of_range("triple is not strictly increasing");
    return idx;
  }

 private:
  std::size_t slot(const Triple& t) const {
    const auto w = static_cast<std::size_t>(s_ + 1);
    return (static_cast<std::size_t>(t[0]) * w + static_cast<std::size_t>(t[1])) * w + static_cast<std::size_t>(t[2]);
  }
  int s_;
  std::vector<Triple> triples_;
  std::vector<int> index_;
};

/// One nonzero entry, +1 or -1, in every row and column. Column i has its
/// entry sign[i] in row target[i], i.e. basis vector i maps to
/// sign[i] * basis vector target[i].
class SignedMonomialMatrix {
 public:
  SignedMonomialMatrix() = default;
  SignedMonomialMatrix(std::vector<int> target, std::vector<int> sign)
      : target_(std::move(target)), sign_(std::move(sign)) {
    if (target_.size() != sign_.size()) throw std::invalid_argument("target and sign lengths differ");
    std::vector<bool> hit(target_.size(), false);
    for (std::size_t i = 0; i < target_.size(); ++i) {
      const int t = target_[i];
      if (t < 0 || t >= dim() || hit[static_cast<std::size_t>(t)])
        throw std::invalid_argument("target is not a permutation of the basis indices");
      hit[static_cast<std::size_t>(t)] = true;
      if (sign_[i] != 1 && sign_[i] != -1) throw std::invalid_argument("signs must be +1 or -1");
    }
  }

  static SignedMonomialMatrix identity(int dim) { return scalar(dim, 1); }
  static SignedMonomialMatrix negative_identity(int dim) { return scalar(dim, -1); }

  int dim() const noexcept { return static_cast<int>(target_.size()); }
  int target(int i) const { return target_.at(static_cast<std::size_t>(i)); }
  int sign(int i) const { return sign_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& targets() const noexcept { return target_; }
  const std::vector<int>& signs() const noexcept { return sign_; }

  /// Dense entry (row, col).
  int entry(int row, int col) const { return target(col) == row ? sign(col) : 0; }

  SignedMonomialMatrix inverse() const {
    std::vector<int> t(target_.size()), s(sign_.size());
    for (std::size_t i = 0; i < target_.size(); ++i) {
      t[static_cast<std::size_t>(target_[i])] = static_cast<int>(i);
      s[static_cast<std::size_t>(target_[i])] = sign_[i];
    }
    return {std::move(t), std::move(s)};
  }

  /// Copy with the sign of column i negated.
  SignedMonomialMatrix with_flipped_sign(int i) const {
    auto s = sign_;
    s.at(static_cast<std::size_t>(i)) = -s.at(static_cast<std::size_t>(i));
    return {target_, std::move(s)};
  }

  friend bool operator==(const SignedMonomialMatrix&, const SignedMonomialMatrix&) = default;

 private:
  static SignedMonomialMatrix scalar(int dim, int v) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    std::vector<int> t(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) t[static_cast<std::size_t>(i)] = i;
    return {std::move(t), std::vector<int>(static_cast<std::size_t>(dim), v)};
  }

  std::vector<int> target_;
  std::vector<int> sign_;
};

/// Matrix product a * b (apply b first).
inline SignedMonomialMatrix smm_multiply(const SignedMonomialMatrix& a, const SignedMonomialMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("smm_multiply: dimension mismatch");
  std::vector<int> t(static_cast<std::size_t>(a.dim())), s(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    const int mid = b.target(i);
    t[static_cast<std::size_t>(i)] = a.target(mid);
    s[static_cast<std::size_t>(i)] = b.sign(i) * a.sign(mid);
  }
  return {std::move(t), std::move(s)};
}

inline SignedMonomialMatrix operator*(const SignedMonomialMatrix& a, const SignedMonomialMatrix& b) {
  return smm_multiply(a, b);
}

inline std::int64_t smm_trace(const SignedMonomialMatrix& m) {
  std::int64_t tr = 0;
  for (int i = 0; i < m.dim(); ++i)
    if (m.target(i) == i) tr += m.sign(i);
  return tr;
}

/// A cycle of the underlying index permutation with the product of the
/// signs along it; it contributes x^length - sign to the characteristic
/// polynomial.
struct CycleFactor {
  int length;
  int sign;
  friend auto operator<=>(const CycleFactor&, const CycleFactor&) = default;
};

/// Cycle factors sorted by (length, sign).
inline std::vector<CycleFactor> cycle_factors(const SignedMonomialMatrix& m) {
  std::vector<CycleFactor> out;
  std::vector<bool> seen(static_cast<std::size_t>(m.dim()), false);
  for (int i = 0; i < m.dim(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, sg = 1;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = m.target(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      sg *= m.sign(j);
      ++len;
    }
    out.push_back({len, sg});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Coefficients c_0..c_dim of det(x I - M), lowest degree first.
inline std::vector<BigInt> char_poly(const SignedMonomialMatrix& m) {
  std::vector<BigInt> poly{1};
  for (const auto& f : cycle_factors(m)) {
    // poly *= x^len - sign
    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(f.length));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + static_cast<std::size_t>(f.length)] += poly[k];
      next[k] -= f.sign * poly[k];
    }
    poly = std::move(next);
  }
  return poly;
}

/// det(I - M) = prod over cycles of (1 - sign); zero exactly when 1 is an
/// eigenvalue.
inline BigInt det_I_minus(const SignedMonomialMatrix& m) {
  BigInt d = 1;
  for (const auto& f : cycle_factors(m)) d *= 1 - f.sign;
  return d;
}

/// Eigenvalue exponents mod `order` of a matrix with M^order = I. A factor
/// x^l - 1 gives {0, order/l, 2 order/l, ...}; x^l + 1 gives the odd
/// multiples of order/(2l).
inline CyclicExponentMultiset eigen_exponents(const SignedMonomialMatrix& m, std::int64_t order) {
  if (order < 1) throw std::invalid_argument("eigen_exponents: order must be positive");
  CyclicExponentMultiset out{order, {}};
  for (const auto& f : cycle_factors(m)) {
    const std::int64_t l = f.length;
    const std::int64_t period = f.sign > 0 ? l : 2 * l;
    if (order % period != 0)
      throw std::invalid_argument("eigen_exponents: matrix order does not divide " + std::to_string(order));
    const std::int64_t step = order / period;
    for (std::int64_t k = 0; k < l; ++k)
      out.exponents.push_back(f.sign > 0 ? k * step : (2 * k + 1) * step);
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

// ---------------------------------------------------------------------------
// Actions

/// Image of basis triple t under pi, with sign +1 when sorting
/// (pi(r), pi(s), pi(t)) is a cyclic rotation and -1 when it is a single swap.
inline std::pair<Triple, int> act_on_triple(const Permutation& pi, const Triple& t) {
  const int s = pi.degree();
  if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= s))
    throw std::invalid_argument("act_on_triple: triple must be strictly increasing within {1..s}");
  Triple img{pi(t[0]), pi(t[1]), pi(t[2])};
  int inversions = (img[0] > img[1]) + (img[0] > img[2]) + (img[1] > img[2]);
  std::sort(img.begin(), img.end());
  return {img, inversions % 2 ? -1 : 1};
}

/// rho(pi) on Gamma2/Gamma3 for pi in S_s.
inline SignedMonomialMatrix rho_matrix(const Permutation& pi, int s) {
  if (s < 4) throw std::invalid_argument("rho_matrix: s must be at least 4");
  if (pi.degree() != s) throw std::invalid_argument("rho_matrix: permutation must have degree s");
  TripleBasis basis(s);
  std::vector<int> t(static_cast<std::size_t>(basis.size())), sg(t.size());
  for (int i = 0; i < basis.size(); ++i) {
    auto [img, sign] = act_on_triple(pi, basis[i]);
    t[static_cast<std::size_t>(i)] = basis.index(img);
    sg[static_cast<std::size_t>(i)] = sign;
  }
  return {std::move(t), std::move(sg)};
}

/// Permutation action of pi on pairs: A_{i,j} -> A_{pi(i), pi(j)}.
inline SignedMonomialMatrix pair_action_matrix(const Permutation& pi, int s) {
  if (pi.degree() != s) throw std::invalid_argument("pair_action_matrix: permutation must have degree s");
  PairBasis basis(s);
  std::vector<int> t(static_cast<std::size_t>(basis.size()));
  for (int idx = 0; idx < basis.size(); ++idx) {
    int a = pi(basis[idx][0]), b = pi(basis[idx][1]);
    t[static_cast<std::size_t>(idx)] = basis.index({std::min(a, b), std::max(a, b)});
  }
  std::vector<int> sign(t.size(), 1);
  return {std::move(t), std::move(sign)};
}

/// Generator of the automorphism action: omega_k (1 <= k < s) or epsilon.
struct GeneratorTag {
  enum class Kind { omega, epsilon } kind;
  int k = 0;

  static GeneratorTag omega(int k) { return {Kind::omega, k}; }
  static GeneratorTag epsilon() { return {Kind::epsilon, 0}; }

  std::string to_string() const { return kind == Kind::epsilon ? "epsilon" : "omega_" + std::to_string(k); }
};

/// Action on Gamma1/Gamma2: omega_k permutes pairs by tau_k, epsilon is -I.
inline SignedMonomialMatrix pair_matrix(const GeneratorTag& g, int s) {
  const int dim = s * (s - 1) / 2;
  if (s < 2) throw std::invalid_argument("pair_matrix: s must be at least 2");
  if (g.kind == GeneratorTag::Kind::epsilon) return SignedMonomialMatrix::negative_identity(dim);
  if (g.k < 1 || g.k >= s) throw std::invalid_argument("pair_matrix: invalid generator " + g.to_string());
  return pair_action_matrix(Permutation::adjacent_transposition(s, g.k), s);
}

/// epsilon on Gamma2/Gamma3 is the identity.
inline SignedMonomialMatrix epsilon_triple_action(int s) {
  if (s < 4) throw std::invalid_argument("epsilon_triple_action: s must be at least 4");
  return SignedMonomialMatrix::identity(static_cast<int>(binom_poly(s, 3)));
}

/// omega_k or epsilon on Gamma2/Gamma3.
inline SignedMonomialMatrix triple_matrix(const GeneratorTag& g, int s) {
  if (g.kind == GeneratorTag::Kind::epsilon) return epsilon_triple_action(s);
  if (g.k < 1 || g.k >= s) throw std::invalid_argument("triple_matrix: invalid generator " + g.to_string());
  return rho_matrix(Permutation::adjacent_transposition(s, g.k), s);
}

/// Product of generator matrices along the adjacent-transposition word of pi.
inline SignedMonomialMatrix matrix_from_word(const std::vector<SignedMonomialMatrix>& omegas,
                                             const Permutation& pi) {
  if (omegas.empty()) throw std::invalid_argument("matrix_from_word: no generators");
  if (static_cast<int>(omegas.size()) != pi.degree() - 1)
    throw std::invalid_argument("matrix_from_word: need one generator per adjacent transposition");
  auto m = SignedMonomialMatrix::identity(omegas.front().dim());
  for (int k : pi.adjacent_word()) m = m * omegas[static_cast<std::size_t>(k - 1)];
  return m;
}

}  // namespace braidcert
