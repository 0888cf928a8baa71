#pragma once

// Exact characters of the symmetric groups: closed forms for the six
// smallest-dimensional irreducibles, a Murnaghan-Nakayama evaluator used as
// the independent oracle, class-function inner products, the five-class
// obstruction system, and identification of a representation from traces.

#include "exact.hpp"
#include "partitions.hpp"
#include "symgrp.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidcert {

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace detail {

/// Memo for chi_lambda(mu). Keys hold the full (lambda, mu) pair; values are
/// exact. Readers share the lock, insertions take it exclusively.
class MnCache {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  std::optional<std::int64_t> find(const Key& k) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(k);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(Key k, std::int64_t v) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(k), v);
  }

  static MnCache& instance() {
    static MnCache cache;
    return cache;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::int64_t> table_;
};

// lambda given by parts, mu by the remaining cycle lengths (removed from the
// front). Rim hooks are removed on the beta-set: bead b moves to b - r when
// that position is free; the sign counts the beads jumped over.
inline std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  MnCache::Key key{lambda, mu};
  if (auto hit = MnCache::instance().find(key)) return *hit;

  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  std::set<int> beads(beta.begin(), beta.end());

  std::int64_t total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    int jumped = 0;
    for (int c : beta)
      if (c > target && c < b) ++jumped;
    std::vector<int> moved;
    for (int c : beta) moved.push_back(c == b ? target : c);
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int i = 0; i < len; ++i) {
      int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t sub = mn_recurse(smaller, rest);
    total += (jumped % 2 ? -sub : sub);
  }
  MnCache::instance().insert(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi_lambda at the class mu.
inline std::int64_t mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.degree()) throw std::invalid_argument("mn_character: size mismatch");
  return detail::mn_recurse(lambda.parts(), mu.parts());
}

// ---------------------------------------------------------------------------
// Class functions

/// A function on the conjugacy classes of S_n, keyed by cycle type.
struct ClassFunction {
  int n = 0;
  std::map<Partition, Rational> values;

  const Rational& at(const CycleType& mu) const { return values.at(mu.partition()); }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

inline ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction chi{lambda.size(), {}};
  for (const auto& p : partitions_of(chi.n)) chi.values[p] = mn_character(lambda, CycleType(p));
  return chi;
}

inline ClassFunction trivial_character(int n) {
  ClassFunction chi{n, {}};
  for (const auto& p : partitions_of(n)) chi.values[p] = 1;
  return chi;
}

inline ClassFunction sign_character(int n) {
  ClassFunction chi{n, {}};
  for (const auto& p : partitions_of(n)) chi.values[p] = CycleType(p).sign();
  return chi;
}

/// (sign . chi)(mu) = sign(mu) chi(mu).
inline ClassFunction sign_twist(const ClassFunction& chi) {
  ClassFunction out = chi;
  for (auto& [p, v] : out.values)
    if (CycleType(p).sign() < 0) v = -v;
  return out;
}

/// (1/n!) sum_mu |C_mu| chi1(mu) chi2(mu). Characters are real, so no
/// conjugation is needed.
inline Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n != b.n) throw std::invalid_argument("inner_product: degree mismatch");
  Rational sum = 0;
  for (const auto& p : partitions_of(a.n)) {
    auto ia = a.values.find(p);
    auto ib = b.values.find(p);
    if (ia == a.values.end() || ib == b.values.end())
      throw std::invalid_argument("inner_product: class function undefined at " + p.to_string());
    sum += Rational(class_size(CycleType(p))) * ia->second * ib->second;
  }
  return sum / Rational(factorial(a.n));
}

// ---------------------------------------------------------------------------
// Closed forms for the six smallest irreducibles, in terms of a_1, a_2, a_3.

enum class LowRep : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F' };

inline LowRep parse_low_rep(char label) {
  if (label < 'A' || label > 'F') throw std::invalid_argument(std::string("unknown representation label ") + label);
  return static_cast<LowRep>(label);
}

inline Partition low_rep_shape(LowRep r, int n) {
  switch (r) {
    case LowRep::A: return Partition({n});
    case LowRep::B: return Partition({n - 1, 1});
    case LowRep::C: return Partition({n - 2, 2});
    case LowRep::D: return Partition({n - 2, 1, 1});
    case LowRep::E: return Partition({n - 3, 3});
    case LowRep::F: return Partition({n - 3, 1, 1, 1});
  }
  throw std::invalid_argument("unknown representation label");
}

/// Table value from the fixed-point, 2-cycle and 3-cycle counts.
inline BigInt chi_closed_form(LowRep r, int a1, int a2, int a3) {
  const BigInt x1 = a1, x2 = a2, x3 = a3;
  switch (r) {
    case LowRep::A: return 1;
    case LowRep::B: return x1 - 1;
    case LowRep::C: return (2 * x2 + x1 * (x1 - 3)) / 2;
    case LowRep::D: return (-2 * x2 + x1 * x1 - 3 * x1 + 2) / 2;
    case LowRep::E: return (6 * x3 + 6 * x2 * (x1 - 1) + x1 * (x1 - 1) * (x1 - 5)) / 6;
    case LowRep::F: return x3 - x2 * (x1 - 1) + binom_poly(a1 - 1, 3);
  }
  throw std::invalid_argument("unknown representation label");
}

inline BigInt chi_closed_form(LowRep r, const CycleType& mu) {
  return chi_closed_form(r, mu.count(1), mu.count(2), mu.count(3));
}

inline BigInt chi_closed_form(char label, const CycleType& mu) {
  return chi_closed_form(parse_low_rep(label), mu);
}

// ---------------------------------------------------------------------------
// Obstruction system

/// The five even classes used to rule out a decomposition of the
/// (N-3,1,1,1)-dimensional representation into the five smaller ones:
/// Id, (1 2 3), (1 2 3)(4 5 6), (1 2 3)(4 5 6)(7 8 9), (1 2)(3 4).
inline std::array<CycleType, 5> obstruction_classes(int n) {
  auto with_ones = [n](std::vector<int> parts) {
    int used = 0;
    for (int p : parts) used += p;
    for (int i = used; i < n; ++i) parts.push_back(1);
    return CycleType(Partition(std::move(parts)));
  };
  return {with_ones({}), with_ones({3}), with_ones({3, 3}), with_ones({3, 3, 3}), with_ones({2, 2})};
}

/// chi_rho at the five classes, read off from fixed and negated basis
/// triples of the action.
inline std::array<BigInt, 5> obstruction_rhs_formulas(int n) {
  return {binom_poly(n - 1, 3), binom_poly(n - 4, 3) + 1, binom_poly(n - 7, 3) + 2,
          binom_poly(n - 10, 3) + 3, binom_poly(n - 5, 3) - 2 * BigInt(n - 5)};
}

struct ObstructionResult {
  int n = 0;
  std::array<std::array<Rational, 5>, 5> matrix{};
  std::array<Rational, 5> rhs{};
  std::array<Rational, 5> solution{};  // x_a, x_b, x_c, x_d, x_e
  bool contradiction = false;          // some multiplicity negative or non-integral
};

/// Solves sum_j x_j chi_j(mu_i) = rhs_i exactly over the rationals.
inline ObstructionResult obstruction_system(int n, const std::array<BigInt, 5>& rhs) {
  if (n < 13) throw std::invalid_argument("obstruction_system: n must be at least 13");
  ObstructionResult res;
  res.n = n;
  const auto classes = obstruction_classes(n);
  constexpr std::array<LowRep, 5> reps{LowRep::A, LowRep::B, LowRep::C, LowRep::D, LowRep::E};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) res.matrix[i][j] = Rational(chi_closed_form(reps[j], classes[i]));
    res.rhs[i] = Rational(rhs[i]);
  }

  auto a = res.matrix;
  auto b = res.rhs;
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t piv = col;
    while (piv < 5 && a[piv][col] == 0) ++piv;
    if (piv == 5) throw invariant_violation("obstruction system is singular at n = " + std::to_string(n));
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < 5; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < 5; ++i) {
    res.solution[i] = b[i] / a[i][i];
    if (res.solution[i] < 0 || denominator(res.solution[i]) != 1) res.contradiction = true;
  }
  return res;
}

inline ObstructionResult obstruction_system(int n) { return obstruction_system(n, obstruction_rhs_formulas(n)); }

// ---------------------------------------------------------------------------
// Identification

class ambiguous_identification : public std::runtime_error {
 public:
  ambiguous_identification(const std::string& what, std::vector<Partition> candidates)
      : std::runtime_error(what), candidates_(std::move(candidates)) {}
  const std::vector<Partition>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<Partition> candidates_;
};

struct IrrepIdentification {
  Partition shape;
  std::vector<Partition> same_dimension;  // every lambda with the right dimension
  bool twist_check_skipped = false;       // shape is self-conjugate
  std::optional<CycleType> odd_class;     // where shape and its sign twist differ
  std::int64_t value_at_odd_class = 0;
  std::int64_t twist_value_at_odd_class = 0;
};

/// Finds the irreducible of S_{s+1} with dimension binom(s,3) whose
/// character agrees with trace_data on every class having a fixed point.
inline IrrepIdentification identify_irrep(int s, const std::map<CycleType, std::int64_t>& trace_data) {
  if (s < 5) throw std::invalid_argument("identify_irrep: s must be at least 5");
  const int N = s + 1;
  const BigInt dim = binom_poly(s, 3);

  std::vector<CycleType> classes;
  for (const auto& p : partitions_of(N)) {
    CycleType mu(p);
    if (mu.count(1) == 0) continue;
    if (!trace_data.count(mu))
      throw std::invalid_argument("identify_irrep: trace data missing class " + mu.to_string());
    classes.push_back(mu);
  }

  IrrepIdentification out;
  std::vector<Partition> matches;
  for (const auto& lambda : partitions_of(N)) {
    if (hook_dimension(lambda) != dim) continue;
    out.same_dimension.push_back(lambda);
    bool agree = true;
    for (const auto& mu : classes)
      if (mn_character(lambda, mu) != trace_data.at(mu)) {
        agree = false;
        break;
      }
    if (agree) matches.push_back(lambda);
  }
  if (matches.empty()) throw invariant_violation("identify_irrep: no irreducible matches the trace data");
  if (matches.size() > 1) throw ambiguous_identification("identify_irrep: trace data matches several irreducibles", matches);

  out.shape = matches.front();
  if (out.shape.is_self_conjugate()) {
    out.twist_check_skipped = true;
    return out;
  }
  // The transposition class first, then the remaining odd classes.
  const auto twisted = out.shape.conjugate();
  std::vector<int> transposition{2};
  transposition.resize(static_cast<std::size_t>(N - 1), 1);
  std::vector<CycleType> odd{CycleType(Partition(transposition))};
  for (const auto& mu : classes)
    if (!mu.is_even() && mu != odd.front()) odd.push_back(mu);
  for (const auto& mu : odd) {
    const auto v = mn_character(out.shape, mu);
    const auto tv = mn_character(twisted, mu);
    if (v != tv) {
      out.odd_class = mu;
      out.value_at_odd_class = v;
      out.twist_value_at_odd_class = tv;
      break;
    }
  }
  if (!out.odd_class)
    throw invariant_violation("identify_irrep: sign twist of a non-self-conjugate shape not separated");
  return out;
}

}  // namespace braidcert
