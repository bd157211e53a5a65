#include "cprojlab/connection.hpp"

namespace cpl {

Tensor<Jet> christoffel_of_metric(const Tensor<Jet>& g, const Tensor<Jet>& ginv) {
  const int m = g.dim();
  const int order = g[0].order();
  const int out_order = order - 1;

  // dg(a, b, c) = d_a g_{bc}
  Tensor<Jet> dg(3, m, Jet::constant(0.0, g[0].dim(), out_order));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) dg(a, b, c) = g(b, c).extract_d(a);

  Tensor<Jet> Gamma(3, m, Jet::constant(0.0, g[0].dim(), out_order));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        Jet acc = Jet::constant(0.0, g[0].dim(), out_order);
        for (int d = 0; d < m; ++d)
          acc += ginv(c, d).truncate(out_order) * (dg(a, d, b) + dg(b, d, a) - dg(d, a, b));
        Gamma(a, b, c) = acc * 0.5;
      }
  return Gamma;
}

Tensor<Jet> riemann_of_christoffel(const Tensor<Jet>& Gamma) {
  const int m = Gamma.dim();
  const int jdim = Gamma[0].dim();
  const int out_order = Gamma[0].order() - 1;

  Tensor<Jet> R(4, m, Jet::constant(0.0, jdim, out_order));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          Jet acc = Gamma(b, d, c).extract_d(a) - Gamma(a, d, c).extract_d(b);
          for (int e = 0; e < m; ++e)
            acc += Gamma(a, e, c).truncate(out_order) * Gamma(b, d, e).truncate(out_order) -
                   Gamma(b, e, c).truncate(out_order) * Gamma(a, d, e).truncate(out_order);
          R(a, b, c, d) = acc;
        }
  return R;
}

Tensor<Jet> covd(const Tensor<Jet>& t, const std::string& variance, const Tensor<Jet>& Gamma) {
  check_variance(variance, t.rank());
  const int m = t.dim();
  const int jdim = t[0].dim();
  const int out_order = std::min(t[0].order() - 1, Gamma[0].order());
  const int rank = t.rank();

  Tensor<Jet> out(rank + 1, m, Jet::constant(0.0, jdim, out_order));
  std::array<int, 6> ix{};
  for (size_t flat = 0; flat < out.size(); ++flat) {
    auto ox = out.unflatten(flat);
    const int a = ox[0];
    for (int s = 0; s < rank; ++s) ix[s] = ox[s + 1];

    Jet acc = t.at(ix).extract_d(a).truncate(out_order);
    for (int s = 0; s < rank; ++s) {
      auto jx = ix;
      for (int e = 0; e < m; ++e) {
        jx[s] = e;
        const Jet& te = t.at(jx);
        if (variance[s] == 'u')
          acc += Gamma(a, e, ix[s]).truncate(out_order) * te.truncate(out_order);
        else
          acc -= Gamma(a, ix[s], e).truncate(out_order) * te.truncate(out_order);
      }
    }
    out[flat] = acc;
  }
  return out;
}

TensorD covd_values(const Tensor<Jet>& t, const std::string& variance, const Tensor<Jet>& Gamma) {
  auto r = covd(t, variance, Gamma);
  return values_of(r);
}

Tensor<Jet> LeviCivitaConnection::christoffel(const Point& p, int order) const {
  auto gj = eval_geometry(*ks_, p, order + 1);
  return christoffel_of_metric(gj.g, gj.ginv);
}

Tensor<Jet> ChangedConnection::christoffel(const Point& p, int order) const {
  Tensor<Jet> Gamma = base_->christoffel(p, order);
  const int m = dim();
  auto Y = ups_.eval(p, order);
  auto J = J_.eval(p, order);

  // JY_a = J_a{}^d Y_d
  std::vector<Jet> JY(m, Jet::constant(0.0, m, order));
  for (int a = 0; a < m; ++a) {
    Jet acc = J(a, 0) * Y(0);
    for (int d = 1; d < m; ++d) acc += J(a, d) * Y(d);
    JY[a] = acc;
  }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        Jet ups = Jet::constant(0.0, m, order);
        if (b == c) ups += Y(a);
        if (a == c) ups += Y(b);
        ups -= JY[a] * J(b, c);
        ups -= JY[b] * J(a, c);
        Gamma(a, b, c) += ups * 0.5;
      }
  return Gamma;
}

}  // namespace cpl
