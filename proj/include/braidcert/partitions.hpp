#pragma once

// Integer partitions, Young diagrams, standard Young tableaux and their
// descent sets.

#include "exact.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidcert {

/// A partition lambda_1 >= lambda_2 >= ... >= lambda_l >= 1.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into a partition.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// The hook (n-3, 1, 1, 1) for n >= 4.
  static Partition hook_with_three_legs(int n) {
    if (n < 4) throw std::invalid_argument("hook (n-3,1,1,1) needs n >= 4");
    return Partition({n - 3, 1, 1, 1});
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  int size() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  Partition conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
      cols.assign(static_cast<std::size_t>(parts_.front()), 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
  }

  bool is_self_conjugate() const { return conjugate() == *this; }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...,
/// (1^n).
inline std::vector<Partition> partitions_of(int n) {
  if (n <= 0) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur{n};
  for (;;) {
    out.emplace_back(cur);
    // Rightmost part larger than one.
    int ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty()) break;
    int k = --cur.back();
    int rest = ones + 1;
    while (rest > 0) {
      int take = std::min(k, rest);
      cur.push_back(take);
      rest -= take;
    }
  }
  return out;
}

/// Number of standard tableaux of shape lambda, by the hook-length formula.
inline BigInt hook_dimension(const Partition& lambda) {
  const auto conj = lambda.conjugate();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  return factorial(lambda.size()) / hooks;
}

/// A standard Young tableau, stored row-major.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
  }

  /// Builds from rows alone; the shape is read off the row lengths.
  explicit StandardTableau(std::vector<std::vector<int>> rows)
      : StandardTableau(shape_of(rows), rows) {}

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.size(); }

  /// 0-based row holding the entry k.
  int row_of(int k) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (std::find(rows_[i].begin(), rows_[i].end(), k) != rows_[i].end())
        return static_cast<int>(i);
    throw std::out_of_range("entry not present in tableau");
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  static Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lens;
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
  }

  void validate() const {
    if (rows_.size() != shape_.length())
      throw std::invalid_argument("tableau row count does not match shape");
    const int n = shape_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(rows_[i].size()) != shape_[i])
        throw std::invalid_argument("tableau row length does not match shape");
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        int v = rows_[i][j];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
          throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
        seen[static_cast<std::size_t>(v)] = true;
        if (j > 0 && rows_[i][j - 1] >= v)
          throw std::invalid_argument("tableau rows must increase");
        if (i > 0 && rows_[i - 1][j] >= v)
          throw std::invalid_argument("tableau columns must increase");
      }
    }
  }

  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Calls visit(tableau) once for every standard tableau of shape lambda.
/// Entries 1..n are inserted in order; a cell may take the next entry when
/// its row is not full and the row above is strictly longer. Only the tableau
/// under construction is held in memory.
template <typename Visitor>
void for_each_syt(const Partition& lambda, Visitor&& visit) {
  const std::size_t rows = lambda.length();
  const int n = lambda.size();
  std::vector<std::vector<int>> fill(rows);
  for (std::size_t i = 0; i < rows; ++i) fill[i].reserve(static_cast<std::size_t>(lambda[i]));

  auto place = [&](auto& self, int k) -> void {
    if (k > n) {
      visit(StandardTableau(lambda, fill));
      return;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      const auto len = fill[i].size();
      if (static_cast<int>(len) >= lambda[i]) continue;
      if (i > 0 && fill[i - 1].size() <= len) continue;
      fill[i].push_back(k);
      self(self, k + 1);
      fill[i].pop_back();
    }
  };
  place(place, 1);
}

inline std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
  std::vector<StandardTableau> out;
  for_each_syt(lambda, [&](const StandardTableau& t) { out.push_back(t); });
  return out;
}

/// { k in 1..n-1 : k+1 sits in a strictly lower row than k }, ascending.
inline std::vector<int> descent_set(const StandardTableau& t) {
  const int n = t.size();
  std::vector<int> row(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    for (int v : t.rows()[i]) row[static_cast<std::size_t>(v)] = static_cast<int>(i);
  std::vector<int> d;
  for (int k = 1; k < n; ++k)
    if (row[static_cast<std::size_t>(k) + 1] > row[static_cast<std::size_t>(k)]) d.push_back(k);
  return d;
}

/// The unique tableau of shape (n-3,1,1,1) whose descent set is
/// {i, j, k}: first column 1, i+1, j+1, k+1, remaining entries in row one.
inline StandardTableau hook_tableau_with_descents(int n, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k < n))
    throw std::invalid_argument("descents must satisfy 1 <= i < j < k < n");
  std::vector<int> top{1};
  for (int v = 2; v <= n; ++v)
    if (v != i + 1 && v != j + 1 && v != k + 1) top.push_back(v);
  return StandardTableau(Partition::hook_with_three_legs(n),
                         {top, {i + 1}, {j + 1}, {k + 1}});
}

}  // namespace braidcert
