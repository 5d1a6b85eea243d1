// Brute-force cross-checks: Weyl-measure quadrature over the maximal torus,
// Schur characters, and a Monte-Carlo estimate of the covariant Choi state.
#pragma once

#include "progcost/protocol.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <vector>

namespace progcost {

/// Uniform product grid on the maximal torus of SU(d) with Weyl weights
/// |Vandermonde|^2, normalised numerically. Node k has eigenphase angles
/// angles[k] (length d, summing to 0 mod 2pi).
struct TorusGrid {
  int d;
  int max_degree;            // largest box count integrated exactly
  int points_per_direction;
  std::vector<Eigen::VectorXd> angles;
  Eigen::VectorXd weights;   // sums to 1
  double raw_weight_mean;    // mean |Vandermonde|^2; d! for the Haar measure
};

/// Grid resolving characters of diagrams with up to `max_degree` boxes.
/// SU(2): 8(max_degree+1) nodes; SU(d >= 3): 4(max_degree+d) per direction.
TorusGrid torus_grid(int d, int max_degree);

/// Weyl numerator det[x_i^(lambda_j + d - 1 - j)] at eigenphase angles.
std::complex<double> weyl_numerator(const YoungDiagram& diagram, const Eigen::VectorXd& angles);

/// Bialternant ratio at unit-modulus eigenvalues. Coincident eigenvalues are
/// separated by a 1e-9 jitter, except when all coincide.
std::complex<double> schur_character(const YoungDiagram& diagram,
                                     const std::vector<std::complex<double>>& phases);

/// sin((l1 - l2 + 1) theta/2) / sin(theta/2) for eigenvalues e^{+-i theta/2}.
double su2_character(const YoungDiagram& diagram, double theta);

/// (1/d^2) int dU |chi_{e1}(U) sum_l sqrt(q_l) chi_l(U)|^2 by quadrature.
/// Throws PreconditionError when the grid cannot resolve degree n+1.
double haar_fidelity(const WeightVector& q, const TorusGrid& grid);

/// max |int chi_l chi_m^* dU - [l ~ m]| over all pairs, where l ~ m when the
/// diagrams differ by full columns (same SU(d) irrep).
double character_orthonormality_check(const TorusGrid& grid, const std::vector<YoungDiagram>& diagrams);

struct ChoiFit {
  double a;                // weight on the orthogonal complement
  double residual;         // Frobenius distance to (1-a) Phi+ + a rho_perp
  double fidelity;         // 1 - a
  double reference_fidelity;
  Eigen::Matrix4cd choi;
};

/// Monte-Carlo Choi state of the measure-and-operate channel at U = I for a
/// d = 2 weight vector. Samples Haar SU(2) elements as normalised Gaussian
/// quaternions, weighted by the outcome law. With `enforce`, throws
/// VerificationError when the residual or |fidelity - reference| exceed
/// 5/sqrt(samples).
ChoiFit choi_monte_carlo_su2(const WeightVector& q, long samples, std::uint64_t seed,
                             bool enforce = true);

}  // namespace progcost
