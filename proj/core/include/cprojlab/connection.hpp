#pragma once

#include <memory>

#include "cprojlab/geometry.hpp"
#include "cprojlab/tensor_ops.hpp"

namespace cpl {

/// Torsion-free connection given by its Christoffel symbols with jets.
class Connection {
 public:
  virtual ~Connection() = default;
  virtual int dim() const = 0;
  /// Gamma(a,b,c) = Gamma^c_{ab}, components carrying jets to `order`.
  virtual Tensor<Jet> christoffel(const Point& p, int order) const = 0;
};

class LeviCivitaConnection : public Connection {
 public:
  explicit LeviCivitaConnection(const KahlerStructure& ks) : ks_(&ks) {}
  int dim() const override { return ks_->dim(); }
  Tensor<Jet> christoffel(const Point& p, int order) const override;

 private:
  const KahlerStructure* ks_;
};

class FlatChartConnection : public Connection {
 public:
  explicit FlatChartConnection(int dim) : m_(dim) {}
  int dim() const override { return m_; }
  Tensor<Jet> christoffel(const Point& p, int order) const override {
    (void)p;
    return Tensor<Jet>(3, m_, Jet::constant(0.0, m_, order));
  }

 private:
  int m_;
};

/// Connection changed by a one-form: Gamma + upsilon with
/// upsilon_{ab}^c = (Y_a d_b^c + d_a^c Y_b - (JY)_a J_b^c - J_a^c (JY)_b)/2.
class ChangedConnection : public Connection {
 public:
  ChangedConnection(std::shared_ptr<const Connection> base, TensorField upsilon_oneform,
                    TensorField J)
      : base_(std::move(base)), ups_(std::move(upsilon_oneform)), J_(std::move(J)) {}
  int dim() const override { return base_->dim(); }
  Tensor<Jet> christoffel(const Point& p, int order) const override;

 private:
  std::shared_ptr<const Connection> base_;
  TensorField ups_;  // (0,1)
  TensorField J_;    // (1,1)
};

/// Christoffel symbols of a metric from its jet (order >= 1 in, order-1 out).
Tensor<Jet> christoffel_of_metric(const Tensor<Jet>& g, const Tensor<Jet>& ginv);

/// Curvature R_{ab}{}^c{}_d from Christoffel jets (order >= 1 in, order-1 out),
/// with (nabla_a nabla_b - nabla_b nabla_a) X^c = R_{ab}{}^c{}_d X^d.
Tensor<Jet> riemann_of_christoffel(const Tensor<Jet>& Gamma);

/// Covariant derivative; the new covariant slot comes first. Output jets one
/// order below the input tensor jets.
Tensor<Jet> covd(const Tensor<Jet>& t, const std::string& variance, const Tensor<Jet>& Gamma);

TensorD covd_values(const Tensor<Jet>& t, const std::string& variance, const Tensor<Jet>& Gamma);

}  // namespace cpl
