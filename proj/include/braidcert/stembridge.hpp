#pragma once

// Cyclic exponents of symmetric-group elements in irreducible
// representations, computed from mu-indices of standard tableaux, and
// tableau certificates showing that 1 is an eigenvalue in the
// representation (N-3,1,1,1).

#include "exact.hpp"
#include "partitions.hpp"
#include "symgrp.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcert {

/// Exponents e of the eigenvalues exp(2 pi i e / m), as a sorted multiset of
/// residues in [0, m).
struct CyclicExponentMultiset {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> exponents;

  std::size_t multiplicity(std::int64_t e) const {
    return static_cast<std::size_t>(
        std::count(exponents.begin(), exponents.end(), mod_floor(e, modulus)));
  }
  bool contains_zero() const { return multiplicity(0) > 0; }

  friend bool operator==(const CyclicExponentMultiset&, const CyclicExponentMultiset&) = default;
};

/// b_mu: for each part mu_i in order, the block m/mu_i, 2m/mu_i, ..., m.
inline std::vector<std::int64_t> b_vector(const CycleType& mu) {
  const std::int64_t m = mu.order();
  std::vector<std::int64_t> b;
  b.reserve(static_cast<std::size_t>(mu.degree()));
  for (int part : mu.parts())
    for (int k = 1; k <= part; ++k) b.push_back(k * (m / part));
  return b;
}

/// Sum of b_mu over the given descents, not reduced.
inline std::int64_t descent_weight(const std::vector<int>& descents, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (int k : descents) s += b.at(static_cast<std::size_t>(k - 1));
  return s;
}

inline std::int64_t mu_index(const StandardTableau& t, const CycleType& mu) {
  if (t.size() != mu.degree()) throw std::invalid_argument("mu_index: size mismatch");
  return mod_floor(descent_weight(descent_set(t), b_vector(mu)), mu.order());
}

inline CyclicExponentMultiset cyclic_exponents(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.degree()) throw std::invalid_argument("cyclic_exponents: size mismatch");
  const auto b = b_vector(mu);
  CyclicExponentMultiset out{mu.order(), {}};
  for_each_syt(lambda, [&](const StandardTableau& t) {
    out.exponents.push_back(mod_floor(descent_weight(descent_set(t), b), out.modulus));
  });
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

/// Which construction produced a zero-index tableau.
enum class ZeroIndexCase : char {
  long_cycle = 'a',         // N > mu_1 >= 3
  full_cycle = 'b',         // mu = (N)
  one_transposition = 'c',  // mu = (2, 1^{N-2})
  transpositions = 'd',     // mu = (2^l, 1^{N-2l}), l >= 2
  identity = 'e',           // mu = (1^N)
};

inline ZeroIndexCase zero_index_case(int N, const CycleType& mu) {
  if (N < 6) throw std::invalid_argument("zero_index_tableau: N must be at least 6");
  if (mu.degree() != N) throw std::invalid_argument("zero_index_tableau: mu is not a partition of N");
  const int mu1 = mu.parts().front();
  if (mu1 == 1) return ZeroIndexCase::identity;
  if (mu1 == N) return ZeroIndexCase::full_cycle;
  if (mu1 >= 3) return ZeroIndexCase::long_cycle;
  return mu.count(2) == 1 ? ZeroIndexCase::one_transposition : ZeroIndexCase::transpositions;
}

/// Descent set {i, j, k} used by each construction.
inline std::vector<int> zero_index_descents(int N, const CycleType& mu) {
  const int mu1 = mu.parts().front();
  switch (zero_index_case(N, mu)) {
    case ZeroIndexCase::long_cycle: return {1, mu1 - 1, mu1};
    case ZeroIndexCase::full_cycle: return {3, N - 2, N - 1};
    case ZeroIndexCase::one_transposition: return {2, 3, 4};
    case ZeroIndexCase::transpositions: return {1, 2, 3};
    case ZeroIndexCase::identity: return {1, 2, 3};
  }
  throw std::logic_error("unreachable");
}

/// A tableau of shape (N-3,1,1,1) whose mu-index is 0 mod m.
inline StandardTableau zero_index_tableau(int N, const CycleType& mu) {
  const auto d = zero_index_descents(N, mu);
  return hook_tableau_with_descents(N, d[0], d[1], d[2]);
}

/// Exhaustive search over F^lambda for a tableau of mu-index 0.
inline std::optional<StandardTableau> find_zero_index_tableau(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.degree()) throw std::invalid_argument("size mismatch");
  const auto b = b_vector(mu);
  const auto m = mu.order();
  std::optional<StandardTableau> hit;
  for_each_syt(lambda, [&](const StandardTableau& t) {
    if (!hit && mod_floor(descent_weight(descent_set(t), b), m) == 0) hit = t;
  });
  return hit;
}

struct TableauCertificate {
  CycleType mu;
  std::int64_t modulus;
  StandardTableau tableau;
  std::vector<int> descents;
  std::int64_t weight;  // unreduced descent sum, e.g. 2m
  std::int64_t index;   // weight mod m, always 0
  ZeroIndexCase construction;
};

/// Re-derives descents and index of a certificate from its tableau.
inline bool certificate_is_valid(const TableauCertificate& c) {
  const int N = c.mu.degree();
  if (c.tableau.shape() != Partition::hook_with_three_legs(N)) return false;
  const auto d = descent_set(c.tableau);
  const auto w = descent_weight(d, b_vector(c.mu));
  return d == c.descents && w == c.weight && c.modulus == c.mu.order() &&
         mod_floor(w, c.modulus) == 0 && c.index == 0;
}

/// One certificate per partition mu of N (canonical order). Each constructive
/// tableau is checked against an exhaustive search of F^(N-3,1,1,1).
inline std::vector<TableauCertificate> eigenvalue_one_certificates(int N) {
  if (N < 6) throw std::invalid_argument("eigenvalue_one_certificates: N must be at least 6");
  const auto lambda = Partition::hook_with_three_legs(N);
  std::vector<TableauCertificate> out;
  for (const auto& p : partitions_of(N)) {
    CycleType mu(p);
    auto t = zero_index_tableau(N, mu);
    auto d = descent_set(t);
    auto w = descent_weight(d, b_vector(mu));
    TableauCertificate c{mu, mu.order(), std::move(t), std::move(d), w, mod_floor(w, mu.order()),
                         zero_index_case(N, mu)};
    if (c.index != 0)
      throw invariant_violation("constructive tableau has nonzero index for mu = " + mu.to_string());
    if (!find_zero_index_tableau(lambda, mu))
      throw invariant_violation("no zero-index tableau exists for mu = " + mu.to_string());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace braidcert
