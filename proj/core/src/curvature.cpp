#include "cprojlab/curvature.hpp"

#include <cmath>

namespace cpl {

namespace {

Eigen::MatrixXd ricci_of(const TensorD& R) {
  const int m = R.dim();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(m, m);
  for (int b = 0; b < m; ++b)
    for (int d = 0; d < m; ++d) {
      double acc = 0;
      for (int c = 0; c < m; ++c) acc += R(c, b, c, d);
      ric(b, d) = acc;
    }
  return ric;
}

Tensor<Jet> ricci_of_jets(const Tensor<Jet>& R) {
  const int m = R.dim();
  const int order = R[0].order();
  Tensor<Jet> ric(2, m, Jet::constant(0.0, R[0].dim(), order));
  for (int b = 0; b < m; ++b)
    for (int d = 0; d < m; ++d) {
      Jet acc = Jet::constant(0.0, R[0].dim(), order);
      for (int c = 0; c < m; ++c) acc += R(c, b, c, d);
      ric(b, d) = acc;
    }
  return ric;
}

}  // namespace

Eigen::MatrixXd rho_tensor(const TensorD& R, const Eigen::MatrixXd& J) {
  const int m = R.dim();
  const int n = m / 2;
  Eigen::MatrixXd ric = ricci_of(R);
  Eigen::MatrixXd sym = 0.5 * (ric + ric.transpose());
  // J_(a^c J_b)^d Ric_cd
  Eigen::MatrixXd jj = J * ric * J.transpose();
  Eigen::MatrixXd jjsym = 0.5 * (jj + jj.transpose());
  return (ric + (sym - jjsym) / double(n - 1)) / double(n + 1);
}

Tensor<Jet> rho_tensor_jets(const Tensor<Jet>& R, const Tensor<Jet>& J) {
  const int m = R.dim();
  const int n = m / 2;
  const int order = R[0].order();
  Tensor<Jet> ric = ricci_of_jets(R);
  Tensor<Jet> P(2, m, Jet::constant(0.0, R[0].dim(), order));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Jet sym = (ric(a, b) + ric(b, a)) * 0.5;
      Jet jj = Jet::constant(0.0, R[0].dim(), order);
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          jj += (J(a, c) * J(b, d) + J(b, c) * J(a, d)) * ric(c, d) * 0.5;
      P(a, b) = (ric(a, b) + (sym - jj) * (1.0 / double(n - 1))) * (1.0 / double(n + 1));
    }
  return P;
}

TensorD rho_insertion(const Eigen::MatrixXd& P, const Eigen::MatrixXd& J) {
  const int m = int(P.rows());
  Eigen::MatrixXd PJ = P * J.transpose();          // P_{b z} J_e{}^z at (b,e)
  Eigen::MatrixXd JP = Eigen::MatrixXd::Zero(m, m);  // J_a{}^z P_{b z} at (a,b)
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double acc = 0;
      for (int z = 0; z < m; ++z) acc += J(a, z) * P(b, z);
      JP(a, b) = acc;
    }

  TensorD dP(4, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int e = 0; e < m; ++e) {
          double v = 0;
          if (a == c) v += 0.5 * P(b, e);
          if (b == c) v -= 0.5 * P(a, e);
          v -= 0.5 * (J(a, c) * PJ(b, e) - J(b, c) * PJ(a, e));
          if (e == c) v -= 0.5 * (P(a, b) - P(b, a));
          v -= 0.5 * (JP(a, b) - JP(b, a)) * J(e, c);
          dP(a, b, c, e) = v;
        }
  return dP;
}

Tensor<Jet> rho_insertion_jets(const Tensor<Jet>& P, const Tensor<Jet>& J) {
  const int m = P.dim();
  const int order = P[0].order();
  const Jet zero = Jet::constant(0.0, P[0].dim(), order);

  Tensor<Jet> PJ(2, m, zero), JP(2, m, zero);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Jet acc1 = zero, acc2 = zero;
      for (int z = 0; z < m; ++z) {
        acc1 += P(a, z) * J(b, z);  // P_{a z} J_b{}^z
        acc2 += J(a, z) * P(b, z);  // J_a{}^z P_{b z}
      }
      PJ(a, b) = acc1;
      JP(a, b) = acc2;
    }

  Tensor<Jet> dP(4, m, zero);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int e = 0; e < m; ++e) {
          Jet v = zero;
          if (a == c) v += P(b, e) * 0.5;
          if (b == c) v -= P(a, e) * 0.5;
          v -= (J(a, c) * PJ(b, e) - J(b, c) * PJ(a, e)) * 0.5;
          if (e == c) v -= (P(a, b) - P(b, a)) * 0.5;
          v -= (JP(a, b) - JP(b, a)) * J(e, c) * 0.5;
          dP(a, b, c, e) = v;
        }
  return dP;
}

TensorD harmonic_curvature(const TensorD& R, const Eigen::MatrixXd& P, const Eigen::MatrixXd& J) {
  TensorD dP = rho_insertion(P, J);
  return sub(R, dP);
}

CurvaturePackage compute_curvature(const KahlerStructure& ks, const Point& p) {
  LeviCivitaConnection lc(ks);
  return compute_curvature(ks, lc, p);
}

CurvaturePackage compute_curvature(const KahlerStructure& ks, const Connection& conn,
                                   const Point& p) {
  CurvaturePackage cp;
  cp.m = ks.dim();
  auto gv = geom_values(ks, p);
  cp.g = gv.g;
  cp.ginv = gv.ginv;
  cp.J = gv.J;
  cp.Om = gv.Om;
  cp.Omup = gv.Omup;

  Tensor<Jet> Gamma = conn.christoffel(p, 1);
  cp.Gamma = values_of(Gamma);
  cp.R = values_of(riemann_of_christoffel(Gamma));

  const int m = cp.m;
  cp.Rlow = TensorD(4, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          double acc = 0;
          for (int e = 0; e < m; ++e) acc += cp.g(c, e) * cp.R(a, b, e, d);
          cp.Rlow(a, b, c, d) = acc;
        }

  cp.Ric = ricci_of(cp.R);
  cp.Scal = (cp.ginv.array() * cp.Ric.array()).sum();
  cp.P = rho_tensor(cp.R, cp.J);
  cp.H = harmonic_curvature(cp.R, cp.P, cp.J);
  return cp;
}

CurvatureJets compute_curvature_jets(const KahlerStructure& ks, const Connection& conn,
                                     const Point& p) {
  CurvatureJets cj;
  cj.m = ks.dim();
  cj.Gamma = conn.christoffel(p, 2);
  cj.R = riemann_of_christoffel(cj.Gamma);
  cj.Ric = ricci_of_jets(cj.R);
  auto gj = eval_geometry(ks, p, 1);
  cj.P = rho_tensor_jets(cj.R, gj.J);
  cj.H = sub(cj.R, rho_insertion_jets(cj.P, gj.J));

  // Cotton-York from nabla P.
  auto gradP = covd(cj.P, "dd", cj.Gamma);
  const int m = cj.m;
  cj.CY = TensorD(3, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        cj.CY(a, b, c) = gradP(a, b, c).value() - gradP(b, a, c).value();
  return cj;
}

TensorD chsc_model_tensor(const Eigen::MatrixXd& g, const Eigen::MatrixXd& Om) {
  const int m = int(g.rows());
  TensorD S(4, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          S(a, b, c, d) = g(a, c) * g(b, d) - g(b, c) * g(a, d) + Om(a, c) * Om(b, d) -
                          Om(b, c) * Om(a, d) + 2.0 * Om(a, b) * Om(c, d);
  return S;
}

BochnerParts bochner_decompose(const CurvaturePackage& cp) {
  const int m = cp.m;
  const int n = m / 2;
  BochnerParts parts;
  parts.Lambda = cp.Scal / double(4 * n * (n + 1));
  parts.Xi = (cp.Ric - (cp.Scal / double(2 * n)) * cp.g) / double(2 * (n + 2));
  parts.Sig = Eigen::MatrixXd::Zero(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double acc = 0;
      for (int c = 0; c < m; ++c) acc += cp.J(a, c) * parts.Xi(b, c);
      parts.Sig(a, b) = acc;
    }

  const Eigen::MatrixXd &g = cp.g, &Om = cp.Om, &Xi = parts.Xi, &Sg = parts.Sig;
  TensorD U(4, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          double rest = g(a, c) * Xi(b, d) - g(b, c) * Xi(a, d) - g(a, d) * Xi(b, c) +
                        g(b, d) * Xi(a, c);
          rest += Om(a, c) * Sg(b, d) - Om(b, c) * Sg(a, d) - Om(a, d) * Sg(b, c) +
                  Om(b, d) * Sg(a, c) + 2.0 * Om(a, b) * Sg(c, d) + 2.0 * Om(c, d) * Sg(a, b);
          rest += parts.Lambda *
                  (g(a, c) * g(b, d) - g(b, c) * g(a, d) + Om(a, c) * Om(b, d) -
                   Om(b, c) * Om(a, d) + 2.0 * Om(a, b) * Om(c, d));
          U(a, b, c, d) = cp.Rlow(a, b, c, d) - rest;
        }
  parts.U = U;
  return parts;
}

TensorD bochner_reassemble(const BochnerParts& parts, const Eigen::MatrixXd& g,
                           const Eigen::MatrixXd& Om) {
  const int m = int(g.rows());
  TensorD R(4, m);
  const Eigen::MatrixXd &Xi = parts.Xi, &Sg = parts.Sig;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          double v = parts.U(a, b, c, d);
          v += g(a, c) * Xi(b, d) - g(b, c) * Xi(a, d) - g(a, d) * Xi(b, c) + g(b, d) * Xi(a, c);
          v += Om(a, c) * Sg(b, d) - Om(b, c) * Sg(a, d) - Om(a, d) * Sg(b, c) +
               Om(b, d) * Sg(a, c) + 2.0 * Om(a, b) * Sg(c, d) + 2.0 * Om(c, d) * Sg(a, b);
          v += parts.Lambda *
               (g(a, c) * g(b, d) - g(b, c) * g(a, d) + Om(a, c) * Om(b, d) -
                Om(b, c) * Om(a, d) + 2.0 * Om(a, b) * Om(c, d));
          R(a, b, c, d) = v;
        }
  return R;
}

TensorD projective_weyl(const CurvaturePackage& cp) {
  const int m = cp.m;
  TensorD W = cp.Rlow;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          W(a, b, c, d) -=
              (cp.g(a, c) * cp.Ric(b, d) - cp.g(b, c) * cp.Ric(a, d)) / double(m - 1);
  return W;
}

TensorD conformal_weyl(const CurvaturePackage& cp) {
  const int m = cp.m;
  Eigen::MatrixXd Q =
      (cp.Ric - (cp.Scal / double(2 * (m - 1))) * cp.g) / double(m - 2);
  TensorD W = cp.Rlow;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          W(a, b, c, d) -= cp.g(a, c) * Q(b, d) - cp.g(b, c) * Q(a, d) + cp.g(b, d) * Q(a, c) -
                           cp.g(a, d) * Q(b, c);
  return W;
}

SymplecticParts symplectic_decompose(const CurvaturePackage& cp) {
  const int m = cp.m;
  const int n = m / 2;
  // T_{abcd} = R_{ab}{}^e{}_d Om_{ec}, symmetric in (c,d).
  TensorD T(4, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          double acc = 0;
          for (int e = 0; e < m; ++e) acc += cp.R(a, b, e, d) * cp.Om(e, c);
          T(a, b, c, d) = acc;
        }

  SymplecticParts sp;
  sp.Phi = Eigen::MatrixXd::Zero(m, m);
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) {
      double acc = 0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) acc += cp.Omup(a, b) * T(a, b, c, d);
      sp.Phi(c, d) = acc / double(4 * (n + 1));
    }

  sp.V = TensorD(4, m);
  const Eigen::MatrixXd &Om = cp.Om, &Phi = sp.Phi;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          sp.V(a, b, c, d) = T(a, b, c, d) - (Om(a, c) * Phi(b, d) - Om(b, c) * Phi(a, d) +
                                              Om(a, d) * Phi(b, c) - Om(b, d) * Phi(a, c) +
                                              2.0 * Om(a, b) * Phi(c, d));
  return sp;
}

KahlerValidation validate_kahler(const KahlerStructure& ks, const std::vector<Point>& samples) {
  KahlerValidation out;
  LeviCivitaConnection lc(ks);
  const int m = ks.dim();
  for (const auto& p : samples) {
    GeomJets gj;
    try {
      gj = eval_geometry(ks, p, 1);
    } catch (const std::exception&) {
      ++out.skipped;
      continue;
    }
    auto g = values_of(gj.g);
    auto J = values_of(gj.J);
    auto Om = gj.Om;

    double herm = 0, jsq = 0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double acc = 0, jj = (a == b) ? 1.0 : 0.0;
        for (int c = 0; c < m; ++c) {
          for (int d = 0; d < m; ++d) acc += J(a, c) * J(b, d) * g(c, d);
          jj += J(a, c) * J(c, b);
        }
        herm = std::max(herm, std::abs(acc - g(a, b)));
        jsq = std::max(jsq, std::abs(jj));
      }

    // d(Omega) from coordinate partials.
    double dom = 0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          double v = Om(b, c).d1(a) + Om(c, a).d1(b) + Om(a, b).d1(c);
          dom = std::max(dom, std::abs(v));
        }

    // nabla(Omega) with the Levi-Civita connection.
    auto Gamma = lc.christoffel(p, 0);
    double nom = max_abs(covd_values(Om, "dd", Gamma));

    out.hermitian_residual = std::max(out.hermitian_residual, herm);
    out.jsquare_residual = std::max(out.jsquare_residual, jsq);
    out.d_omega_residual = std::max(out.d_omega_residual, dom);
    out.nabla_omega_residual = std::max(out.nabla_omega_residual, nom);
  }
  return out;
}

std::optional<double> chsc_check(const KahlerStructure& ks, const std::vector<Point>& samples,
                                 double tol_parts, double tol_const) {
  double lam0 = 0;
  bool first = true;
  double acc = 0;
  for (const auto& p : samples) {
    auto cp = compute_curvature(ks, p);
    auto parts = bochner_decompose(cp);
    if (max_abs(parts.U) > tol_parts) return std::nullopt;
    if (parts.Xi.cwiseAbs().maxCoeff() > tol_parts) return std::nullopt;
    if (first) {
      lam0 = parts.Lambda;
      first = false;
    } else if (std::abs(parts.Lambda - lam0) > tol_const) {
      return std::nullopt;
    }
    acc += parts.Lambda;
  }
  return acc / double(samples.size());
}

std::shared_ptr<Connection> cproj_change(const KahlerStructure& ks, TensorField upsilon) {
  auto base = std::make_shared<LeviCivitaConnection>(ks);
  return std::make_shared<ChangedConnection>(base, std::move(upsilon), ks.J);
}

}  // namespace cpl
