#pragma once

#include <Eigen/Dense>

#include "cprojlab/chart.hpp"
#include "cprojlab/field.hpp"
#include "cprojlab/tensor.hpp"

namespace cpl {

/// Gauss-Jordan inverse of a rank-2 jet tensor (partial pivoting on values).
Tensor<Jet> jet_matrix_inverse(const Tensor<Jet>& m);

Tensor<Jet> jet_matmul(const Tensor<Jet>& a, const Tensor<Jet>& b);

/// Almost complex structure as a (1,1) field J_alpha{}^beta; on holomorphic
/// charts the components are the constant standard block matrix, the
/// orthotoric charts carry coordinate-dependent components.
struct ComplexStructure {
  TensorField J;  // slots (alpha, beta) = J_alpha{}^beta
};

/// Standard constant J for coordinates ordered (x_1..x_n, y_1..y_n).
TensorD standard_J(int n);

/// Kahler chart data: metric g_{alpha beta} and complex structure.
/// The fundamental 2-form is derived, Omega_{alpha beta} = J_alpha^gamma g_{gamma beta}.
struct KahlerStructure {
  Chart chart;
  TensorField g;  // (0,2)
  TensorField J;  // (1,1)

  int dim() const { return chart.real_dim; }
  int ncomplex() const { return chart.real_dim / 2; }
};

/// Pointwise geometric data with jets to the requested order.
struct GeomJets {
  int m = 0;
  int order = 0;
  Tensor<Jet> g;     // g_{ab}
  Tensor<Jet> ginv;  // g^{ab}
  Tensor<Jet> J;     // J_a{}^b
  Tensor<Jet> Om;    // Omega_{ab} = J_a{}^c g_{cb}
  Tensor<Jet> Omup;  // Omega^{ab} = J_c{}^b g^{ac}
};

GeomJets eval_geometry(const KahlerStructure& ks, const Point& p, int order);

/// Values-only convenience snapshot.
struct GeomValues {
  int m = 0;
  Eigen::MatrixXd g, ginv, J, Om, Omup;
};

GeomValues geom_values(const KahlerStructure& ks, const Point& p);

Eigen::MatrixXd tensor2_to_matrix(const TensorD& t);
TensorD matrix_to_tensor2(const Eigen::MatrixXd& m);

}  // namespace cpl
