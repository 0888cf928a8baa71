#pragma once

// Permutations of {1..n}, cycle types and conjugacy-class bookkeeping.
//
// Composition is right-to-left: compose(p, q)(x) == p(q(x)). With this
// convention compose(tau_1, tau_2) is the 3-cycle 1 -> 2 -> 3 -> 1.

#include "exact.hpp"
#include "partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcert {

class Permutation {
 public:
  static Permutation identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be positive");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  /// One-line notation, 1-based: images[x-1] is the image of x.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n < 1) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("images are not a bijection of {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  /// Product of disjoint cycles given as lists of points, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(int n, std::initializer_list<std::vector<int>> cycles) {
    return from_cycles(n, std::vector<std::vector<int>>(cycles));
  }

  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    auto img = identity(n).images_;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) {
        int x = c[i];
        if (x < 1 || x > n || used[static_cast<std::size_t>(x)])
          throw std::invalid_argument("cycles must be disjoint and lie in {1..n}");
        used[static_cast<std::size_t>(x)] = true;
        img[static_cast<std::size_t>(x - 1)] = c[(i + 1) % c.size()];
      }
    return Permutation(std::move(img));
  }

  /// tau_k = (k, k+1).
  static Permutation adjacent_transposition(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("adjacent transposition index out of range");
    return from_cycles(n, {{k, k + 1}});
  }

  /// Uniformly random permutation of degree n.
  template <typename Rng>
  static Permutation random(int n, Rng& rng) {
    auto img = identity(n).images_;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 1; x <= degree(); ++x) inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
    return Permutation(std::move(inv));
  }

  /// Disjoint cycles including fixed points, each starting at its least point,
  /// ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(degree()) + 1, false);
    for (int x = 1; x <= degree(); ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      std::vector<int> c;
      for (int y = x; !seen[static_cast<std::size_t>(y)]; y = (*this)(y)) {
        seen[static_cast<std::size_t>(y)] = true;
        c.push_back(y);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  int sign() const {
    int transpositions = 0;
    for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
    return transpositions % 2 ? -1 : 1;
  }

  /// Adjacent-transposition indices k_1..k_r with p = tau_{k_1} ... tau_{k_r}
  /// (right-to-left product). Length equals the inversion count.
  std::vector<int> adjacent_word() const {
    std::vector<int> a = images_;
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) {
          std::swap(a[i], a[i + 1]);
          swaps.push_back(static_cast<int>(i) + 1);
          changed = true;
        }
    }
    // p * t_1 * ... * t_r = id, so p = t_r * ... * t_1.
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ')';
    }
    if (!any) os << "id";
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// compose(p, q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) img[static_cast<std::size_t>(x - 1)] = p(q(x));
  return Permutation(std::move(img));
}

/// Multiset of cycle lengths of an element of S_n; fixed points are parts
/// equal to one.
class CycleType {
 public:
  explicit CycleType(Partition parts) : parts_(std::move(parts)) {}
  CycleType(std::initializer_list<int> parts) : parts_(Partition::from_unsorted(parts)) {}

  const Partition& partition() const noexcept { return parts_; }
  const std::vector<int>& parts() const noexcept { return parts_.parts(); }
  int degree() const noexcept { return parts_.size(); }

  /// a(j): number of cycles of length j.
  int count(int j) const {
    return static_cast<int>(std::count(parts().begin(), parts().end(), j));
  }

  /// Order of any element of this type: lcm of the parts.
  std::int64_t order() const {
    std::int64_t m = 1;
    for (int p : parts()) m = std::lcm(m, static_cast<std::int64_t>(p));
    return m;
  }

  int sign() const { return (degree() - static_cast<int>(parts().size())) % 2 ? -1 : 1; }
  bool is_even() const { return sign() == 1; }

  std::string to_string() const { return parts_.to_string(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  Partition parts_;
};

inline CycleType cycle_type(const Permutation& p) {
  std::vector<int> lens;
  for (const auto& c : p.cycles()) lens.push_back(static_cast<int>(c.size()));
  return CycleType(Partition::from_unsorted(std::move(lens)));
}

/// Extends p to {1..N} by fixing p.degree()+1 .. N.
inline Permutation embed_fixing_last(const Permutation& p, int N) {
  if (N <= p.degree()) throw std::invalid_argument("embed_fixing_last: N must exceed the degree");
  auto img = p.images();
  for (int x = p.degree() + 1; x <= N; ++x) img.push_back(x);
  return Permutation(std::move(img));
}

/// n! / prod_j ( j^{a(j)} a(j)! ).
inline BigInt class_size(const CycleType& mu) {
  BigInt centralizer = 1;
  for (int j = 1; j <= mu.degree(); ++j) {
    int a = mu.count(j);
    if (a == 0) continue;
    centralizer *= boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(a)) * factorial(a);
  }
  return factorial(mu.degree()) / centralizer;
}

/// Cycles filled left to right with consecutive integers, largest parts
/// first: (3,3) -> (1 2 3)(4 5 6).
inline Permutation class_representative(const CycleType& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : mu.parts()) {
    std::vector<int> c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(mu.degree(), cycles);
}

/// Drops one part equal to one: the cycle type of the restriction to
/// {1..N-1} of an element of S_N fixing N.
inline CycleType remove_fixed_point(const CycleType& mu) {
  auto parts = mu.parts();
  auto it = std::find(parts.begin(), parts.end(), 1);
  if (it == parts.end()) throw std::invalid_argument("cycle type has no fixed point");
  parts.erase(it);
  if (parts.empty()) throw std::invalid_argument("cannot remove the only point");
  return CycleType(Partition(std::move(parts)));
}

}  // namespace braidcert
