#include "cprojlab/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace cpl {

Tensor<Jet> jet_matmul(const Tensor<Jet>& a, const Tensor<Jet>& b) {
  const int m = a.dim();
  Tensor<Jet> r(2, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Jet acc = a(i, 0) * b(0, j);
      for (int k = 1; k < m; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

Tensor<Jet> jet_matrix_inverse(const Tensor<Jet>& m_in) {
  const int m = m_in.dim();
  if (m_in.rank() != 2) throw std::invalid_argument("jet_matrix_inverse: rank-2 expected");
  const int order = m_in[0].order();
  const int jdim = m_in[0].dim();

  // Augmented Gauss-Jordan over the jet ring.
  std::vector<std::vector<Jet>> a(m, std::vector<Jet>(2 * m, Jet::constant(0.0, jdim, order)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = m_in(i, j);
    a[i][m + i] = Jet::constant(1.0, jdim, order);
  }

  for (int col = 0; col < m; ++col) {
    int piv = col;
    double best = std::abs(a[col][col].value());
    for (int r = col + 1; r < m; ++r)
      if (std::abs(a[r][col].value()) > best) {
        best = std::abs(a[r][col].value());
        piv = r;
      }
    if (best == 0.0) throw std::runtime_error("jet_matrix_inverse: singular matrix");
    std::swap(a[col], a[piv]);

    Jet inv_p = a[col][col].reciprocal();
    for (int j = 0; j < 2 * m; ++j) a[col][j] = a[col][j] * inv_p;
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      Jet f = a[r][col];
      if (f.value() == 0.0 && f.order() == 0) continue;
      for (int j = 0; j < 2 * m; ++j) a[r][j] -= f * a[col][j];
    }
  }

  Tensor<Jet> out(2, m, Jet::constant(0.0, jdim, order));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = a[i][m + j];
  return out;
}

TensorD standard_J(int n) {
  // J dx_k = dy_k style block structure: J(e_{x_k}) = e_{y_k}, J(e_{y_k}) = -e_{x_k},
  // stored as J_alpha{}^beta.
  const int m = 2 * n;
  TensorD J(2, m);
  for (int k = 0; k < n; ++k) {
    J(k, n + k) = 1.0;
    J(n + k, k) = -1.0;
  }
  return J;
}

GeomJets eval_geometry(const KahlerStructure& ks, const Point& p, int order) {
  GeomJets out;
  out.m = ks.dim();
  out.order = order;
  out.g = ks.g.eval(p, order);
  out.J = ks.J.eval(p, order);
  out.ginv = jet_matrix_inverse(out.g);

  const int m = out.m;
  out.Om = Tensor<Jet>(2, m, Jet::constant(0.0, m, order));
  out.Omup = Tensor<Jet>(2, m, Jet::constant(0.0, m, order));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Jet acc = out.J(a, 0) * out.g(0, b);
      Jet acc2 = out.J(0, b) * out.ginv(a, 0);
      for (int c = 1; c < m; ++c) {
        acc += out.J(a, c) * out.g(c, b);
        acc2 += out.J(c, b) * out.ginv(a, c);
      }
      out.Om(a, b) = acc;
      out.Omup(a, b) = acc2;
    }
  return out;
}

Eigen::MatrixXd tensor2_to_matrix(const TensorD& t) {
  const int m = t.dim();
  Eigen::MatrixXd out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = t(i, j);
  return out;
}

TensorD matrix_to_tensor2(const Eigen::MatrixXd& m) {
  TensorD out(2, int(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

GeomValues geom_values(const KahlerStructure& ks, const Point& p) {
  auto gj = eval_geometry(ks, p, 0);
  GeomValues v;
  v.m = gj.m;
  v.g = tensor2_to_matrix(values_of(gj.g));
  v.ginv = tensor2_to_matrix(values_of(gj.ginv));
  v.J = tensor2_to_matrix(values_of(gj.J));
  v.Om = tensor2_to_matrix(values_of(gj.Om));
  v.Omup = tensor2_to_matrix(values_of(gj.Omup));
  return v;
}

}  // namespace cpl
