#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cpl {

/// Dense tensor with runtime rank (<= 6) and a common edge length `dim` per
/// slot (all our tensors live on one chart, so every index runs 0..2n-1).
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  Tensor(int rank, int dim, const T& fill = T())
      : rank_(rank), dim_(dim), data_(pow_size(dim, rank), fill) {}

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  size_t size() const { return data_.size(); }

  T& operator[](size_t flat) { return data_[flat]; }
  const T& operator[](size_t flat) const { return data_[flat]; }

  T& operator()(int i) { return data_[idx1(i)]; }
  const T& operator()(int i) const { return data_[idx1(i)]; }
  T& operator()(int i, int j) { return data_[idx2(i, j)]; }
  const T& operator()(int i, int j) const { return data_[idx2(i, j)]; }
  T& operator()(int i, int j, int k) { return data_[idx3(i, j, k)]; }
  const T& operator()(int i, int j, int k) const { return data_[idx3(i, j, k)]; }
  T& operator()(int i, int j, int k, int l) { return data_[idx4(i, j, k, l)]; }
  const T& operator()(int i, int j, int k, int l) const { return data_[idx4(i, j, k, l)]; }
  T& operator()(int i, int j, int k, int l, int m) { return data_[idx5(i, j, k, l, m)]; }
  const T& operator()(int i, int j, int k, int l, int m) const {
    return data_[idx5(i, j, k, l, m)];
  }

  T& at(const std::array<int, 6>& ix) { return data_[flatten(ix)]; }
  const T& at(const std::array<int, 6>& ix) const { return data_[flatten(ix)]; }

  size_t flatten(const std::array<int, 6>& ix) const {
    size_t f = 0;
    for (int s = 0; s < rank_; ++s) f = f * dim_ + ix[s];
    return f;
  }
  std::array<int, 6> unflatten(size_t flat) const {
    std::array<int, 6> ix{};
    for (int s = rank_ - 1; s >= 0; --s) {
      ix[s] = int(flat % dim_);
      flat /= dim_;
    }
    return ix;
  }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

 private:
  static size_t pow_size(int dim, int rank) {
    size_t s = 1;
    for (int i = 0; i < rank; ++i) s *= size_t(dim);
    return s;
  }
  size_t idx1(int i) const {
    assert(rank_ == 1);
    return size_t(i);
  }
  size_t idx2(int i, int j) const {
    assert(rank_ == 2);
    return size_t(i) * dim_ + j;
  }
  size_t idx3(int i, int j, int k) const {
    assert(rank_ == 3);
    return (size_t(i) * dim_ + j) * dim_ + k;
  }
  size_t idx4(int i, int j, int k, int l) const {
    assert(rank_ == 4);
    return ((size_t(i) * dim_ + j) * dim_ + k) * dim_ + l;
  }
  size_t idx5(int i, int j, int k, int l, int m) const {
    assert(rank_ == 5);
    return (((size_t(i) * dim_ + j) * dim_ + k) * dim_ + l) * dim_ + m;
  }

  int rank_ = 0;
  int dim_ = 0;
  std::vector<T> data_;
};

using TensorD = Tensor<double>;

}  // namespace cpl
