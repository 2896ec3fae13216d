#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace csmd {

/// Dense storage for one value per unordered pair (i, j), i != j, of n items.
/// Only the strict upper triangle is stored; access is symmetric.
template <typename T>
class PairMatrix {
 public:
  PairMatrix() = default;
  explicit PairMatrix(std::size_t n, T init = T{})
      : n_(n), data_(n < 2 ? 0 : n * (n - 1) / 2, init) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return data_.size(); }

  static std::size_t offset(std::size_t n, std::size_t i, std::size_t j) noexcept {
    if (i > j) std::swap(i, j);
    assert(i != j && j < n);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[offset(n_, i, j)]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[offset(n_, i, j)];
  }

  /// Symmetric read with a zero diagonal.
  T at(std::size_t i, std::size_t j) const noexcept { return i == j ? T{} : (*this)(i, j); }

  void fill(const T& value) { std::fill(data_.begin(), data_.end(), value); }

  std::vector<T>& raw() noexcept { return data_; }
  const std::vector<T>& raw() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace csmd
