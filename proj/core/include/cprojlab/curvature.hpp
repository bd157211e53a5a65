#pragma once

#include <optional>

#include "cprojlab/connection.hpp"

namespace cpl {

/// Pointwise curvature data of a torsion-free complex connection on a chart.
/// All tensors are stored in real indices.
struct CurvaturePackage {
  int m = 0;
  Eigen::MatrixXd g, ginv, J, Om, Omup;
  TensorD Gamma;  // Gamma^c_{ab} at (a,b,c)
  TensorD R;      // R_{ab}{}^c{}_d
  TensorD Rlow;   // R_{abcd} = g_{ce} R_{ab}{}^e{}_d
  Eigen::MatrixXd Ric;
  double Scal = 0;
  Eigen::MatrixXd P;  // Rho tensor
  TensorD H;          // harmonic curvature R - dP, slots as R
};

/// Same data with one order of jets retained where downstream formulas need
/// covariant derivatives (Cotton-York, prolongation corrections).
struct CurvatureJets {
  int m = 0;
  Tensor<Jet> Gamma;  // order 2
  Tensor<Jet> R;      // order 1
  Tensor<Jet> Ric;    // order 1
  Tensor<Jet> P;      // order 1
  Tensor<Jet> H;      // order 1
  TensorD CY;         // Cotton-York C_{abc} = nabla_a P_bc - nabla_b P_ac
};

CurvaturePackage compute_curvature(const KahlerStructure& ks, const Point& p);
CurvaturePackage compute_curvature(const KahlerStructure& ks, const Connection& conn,
                                   const Point& p);
CurvatureJets compute_curvature_jets(const KahlerStructure& ks, const Connection& conn,
                                     const Point& p);

/// Rho tensor of a complex torsion-free connection,
/// P = (Ric + (Ric_(ab) - J J Ric)/(n-1))/(n+1); reduces to Ric/(n+1) when Ric
/// is symmetric and J-invariant.
Eigen::MatrixXd rho_tensor(const TensorD& R, const Eigen::MatrixXd& J);
Tensor<Jet> rho_tensor_jets(const Tensor<Jet>& R, const Tensor<Jet>& J);

/// dP insertion making W = R - dP trace-free.
TensorD rho_insertion(const Eigen::MatrixXd& P, const Eigen::MatrixXd& J);
Tensor<Jet> rho_insertion_jets(const Tensor<Jet>& P, const Tensor<Jet>& J);

/// Harmonic curvature H = R - dP.
TensorD harmonic_curvature(const TensorD& R, const Eigen::MatrixXd& P, const Eigen::MatrixXd& J);

/// Irreducible pieces of a Kahler curvature tensor: totally trace-free part,
/// trace-free Ricci part, and scalar part.
struct BochnerParts {
  TensorD U;            // (0,4), trace-free against g and Omega
  Eigen::MatrixXd Xi;   // symmetric, trace-free, J-invariant
  Eigen::MatrixXd Sig;  // Sig_ab = J_a^c Xi_bc
  double Lambda = 0;    // Scal / (4n(n+1))
};

BochnerParts bochner_decompose(const CurvaturePackage& cp);
TensorD bochner_reassemble(const BochnerParts& parts, const Eigen::MatrixXd& g,
                           const Eigen::MatrixXd& Om);

/// Model curvature tensor of constant holomorphic sectional curvature 4:
/// S_abcd = g_ac g_bd - g_bc g_ad + Om_ac Om_bd - Om_bc Om_ad + 2 Om_ab Om_cd.
TensorD chsc_model_tensor(const Eigen::MatrixXd& g, const Eigen::MatrixXd& Om);

TensorD projective_weyl(const CurvaturePackage& cp);
TensorD conformal_weyl(const CurvaturePackage& cp);

struct SymplecticParts {
  TensorD V;            // V_{[ab](cd)}, Omega-trace-free, V_{[abc]d} = 0
  Eigen::MatrixXd Phi;  // symmetric
};
SymplecticParts symplectic_decompose(const CurvaturePackage& cp);

struct KahlerValidation {
  double hermitian_residual = 0;   // |J^T g J - g|
  double nabla_omega_residual = 0; // |nabla Omega|
  double d_omega_residual = 0;     // |d Omega|
  double jsquare_residual = 0;     // |J^2 + Id|
  int skipped = 0;
  double max_residual() const {
    return std::max(std::max(hermitian_residual, nabla_omega_residual),
                    std::max(d_omega_residual, jsquare_residual));
  }
};
KahlerValidation validate_kahler(const KahlerStructure& ks, const std::vector<Point>& samples);

/// Constant holomorphic sectional curvature test: succeeds iff U and Xi vanish
/// at every sample and Lambda agrees across samples.
std::optional<double> chsc_check(const KahlerStructure& ks, const std::vector<Point>& samples,
                                 double tol_parts = 1e-6, double tol_const = 1e-6);

/// Connection change by a one-form (gradient or not).
std::shared_ptr<Connection> cproj_change(const KahlerStructure& ks, TensorField upsilon);

}  // namespace cpl
