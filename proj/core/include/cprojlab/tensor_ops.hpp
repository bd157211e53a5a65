#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cprojlab/tensor.hpp"

namespace cpl {

/// Variance string: one char per slot, 'u' contravariant / 'd' covariant.
inline void check_variance(const std::string& variance, int rank) {
  if (int(variance.size()) != rank)
    throw std::invalid_argument("variance string does not match tensor rank");
  for (char c : variance)
    if (c != 'u' && c != 'd') throw std::invalid_argument("variance chars must be 'u' or 'd'");
}

namespace detail {

inline bool next_perm(std::vector<int>& p) { return std::next_permutation(p.begin(), p.end()); }

inline int perm_sign(std::vector<int> p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

template <typename T, typename Weight>
Tensor<T> permute_average(const Tensor<T>& t, const std::vector<int>& slots, Weight weight) {
  const int rank = t.rank();
  Tensor<T> out(rank, t.dim());
  std::vector<int> base(slots.size());
  std::iota(base.begin(), base.end(), 0);

  for (size_t flat = 0; flat < out.size(); ++flat) {
    auto ix = out.unflatten(flat);
    T acc{};
    bool first = true;
    std::vector<int> p = base;
    double count = 0;
    do {
      auto jx = ix;
      for (size_t s = 0; s < slots.size(); ++s) jx[slots[s]] = ix[slots[p[s]]];
      T term = t.at(jx);
      double w = weight(p);
      if (w < 0) term = -term;
      if (first) {
        acc = term;
        first = false;
      } else {
        acc += term;
      }
      count += 1;
    } while (next_perm(p));
    acc *= 1.0 / count;
    out[flat] = acc;
  }
  return out;
}

}  // namespace detail

/// Average over all permutations of `slots` (round-bracket symmetrisation,
/// 1/k! normalisation). All chosen slots must share the same variance.
template <typename T>
Tensor<T> symmetrize(const Tensor<T>& t, const std::string& variance,
                     const std::vector<int>& slots) {
  check_variance(variance, t.rank());
  for (size_t i = 1; i < slots.size(); ++i)
    if (variance[slots[i]] != variance[slots[0]])
      throw std::invalid_argument("symmetrize: mixed-variance index subset");
  return detail::permute_average(t, slots, [](const std::vector<int>&) { return 1.0; });
}

/// Signed average over all permutations (square-bracket skew part).
template <typename T>
Tensor<T> antisymmetrize(const Tensor<T>& t, const std::string& variance,
                         const std::vector<int>& slots) {
  check_variance(variance, t.rank());
  for (size_t i = 1; i < slots.size(); ++i)
    if (variance[slots[i]] != variance[slots[0]])
      throw std::invalid_argument("antisymmetrize: mixed-variance index subset");
  return detail::permute_average(t, slots,
                                 [](const std::vector<int>& p) { return double(detail::perm_sign(p)); });
}

/// Einstein contraction of one upper with one lower slot.
template <typename T>
Tensor<T> contract(const Tensor<T>& t, const std::string& variance, int slot_a, int slot_b) {
  check_variance(variance, t.rank());
  if (variance[slot_a] == variance[slot_b])
    throw std::invalid_argument("contract: slots must have opposite variance");
  const int rank = t.rank(), dim = t.dim();
  Tensor<T> out(rank - 2, dim);
  for (size_t flat = 0; flat < out.size(); ++flat) {
    auto ox = out.unflatten(flat);
    std::array<int, 6> ix{};
    T acc{};
    for (int c = 0; c < dim; ++c) {
      int o = 0;
      for (int s = 0; s < rank; ++s) {
        if (s == slot_a || s == slot_b)
          ix[s] = c;
        else
          ix[s] = ox[o++];
      }
      if (c == 0)
        acc = t.at(ix);
      else
        acc += t.at(ix);
    }
    out[flat] = acc;
  }
  return out;
}

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b) {
  Tensor<T> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b) {
  Tensor<T> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <typename T>
Tensor<T> scale(const Tensor<T>& a, double c) {
  Tensor<T> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] *= c;
  return r;
}

inline double max_abs(const TensorD& t) {
  double m = 0;
  for (size_t i = 0; i < t.size(); ++i) m = std::max(m, std::abs(t[i]));
  return m;
}

}  // namespace cpl
