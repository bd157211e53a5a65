#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cprojlab/chart.hpp"
#include "cprojlab/jet.hpp"
#include "cprojlab/tensor.hpp"

namespace cpl {

using JetCoords = std::vector<Jet>;

inline JetCoords seed_coords(const Point& p, int order) {
  const int m = int(p.size());
  JetCoords x;
  x.reserve(m);
  for (int i = 0; i < m; ++i) x.push_back(Jet::variable(p[i], i, m, order));
  return x;
}

/// Tensor-valued field on a chart given by closed-form component functions.
/// Evaluating at a point with jet order k returns all components carrying
/// their coordinate partials up to order k.
class TensorField {
 public:
  using BatchFn = std::function<void(const JetCoords&, Tensor<Jet>&)>;

  TensorField() = default;
  TensorField(int rank, std::string variance, int dim, BatchFn fn, int max_jet_order = 3)
      : rank_(rank),
        dim_(dim),
        variance_(std::move(variance)),
        fn_(std::move(fn)),
        max_jet_order_(max_jet_order) {}

  static TensorField scalar(int dim, std::function<Jet(const JetCoords&)> f,
                            int max_jet_order = 3) {
    return TensorField(0, "", dim,
                       [f](const JetCoords& x, Tensor<Jet>& out) { out[0] = f(x); },
                       max_jet_order);
  }

  static TensorField constant(int rank, const std::string& variance, const TensorD& value,
                              int max_jet_order = 3) {
    const int dim = value.dim();
    return TensorField(
        rank, variance, dim,
        [value, rank, dim](const JetCoords& x, Tensor<Jet>& out) {
          const int m = int(x.size());
          const int order = m ? x[0].order() : 0;
          for (size_t i = 0; i < out.size(); ++i)
            out[i] = Jet::constant(value[i], m, order);
          (void)rank;
          (void)dim;
        },
        max_jet_order);
  }

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  const std::string& variance() const { return variance_; }
  int max_jet_order() const { return max_jet_order_; }

  Tensor<Jet> eval(const Point& p, int order) const {
    if (order > max_jet_order_)
      throw std::invalid_argument("requested jet order exceeds max_jet_order");
    Tensor<Jet> out(rank_, dim_, Jet::constant(0.0, dim_, order));
    fn_(seed_coords(p, order), out);
    return out;
  }

  TensorD values(const Point& p) const {
    auto t = eval(p, 0);
    TensorD out(rank_, dim_);
    for (size_t i = 0; i < t.size(); ++i) out[i] = t[i].value();
    return out;
  }

 private:
  int rank_ = 0;
  int dim_ = 0;
  std::string variance_;
  BatchFn fn_;
  int max_jet_order_ = 3;
};

/// Jet of a scalar field at an interior point; entry point for the spec'd
/// derivative substrate (value + partials to order <= 3).
inline Jet jet_of(const TensorField& f, const Chart& chart, const Point& p, int order) {
  if (!chart.interior(p)) throw std::invalid_argument("jet: point not interior to chart");
  if (f.rank() != 0) throw std::invalid_argument("jet_of expects a scalar field");
  return f.eval(p, order)[0];
}

inline TensorD values_of(const Tensor<Jet>& t) {
  TensorD out(t.rank(), t.dim());
  for (size_t i = 0; i < t.size(); ++i) out[i] = t[i].value();
  return out;
}

}  // namespace cpl
