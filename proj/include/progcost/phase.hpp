// Qubit phase-gate programming: sine-state program with covariant
// measurement versus a classical interval mesh.
#pragma once

#include "progcost/common.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace progcost {

/// A real, normalised program state sum_m c_m |m>.
class PhaseProtocol {
 public:
  /// Throws PreconditionError unless sum c_m^2 == 1 within 1e-12.
  explicit PhaseProtocol(Eigen::VectorXd amplitudes);

  int dP() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXd amplitudes_;
};

/// c_m = sqrt(2/dP) sin(pi (m + 1/2) / dP). Requires dP >= 2.
PhaseProtocol sine_state(int dP);

/// Real trigonometric polynomial p(x) = sum_{|k|<=K} c_k e^{ikx} with
/// symmetric coefficients c_k = c_{-k}.
class TrigPolynomial {
 public:
  explicit TrigPolynomial(Eigen::VectorXd coefficients);  // length 2K+1, index k+K

  int degree() const { return static_cast<int>(coefficients_.size() / 2); }
  double coefficient(int k) const;
  double evaluate(double x) const;
  /// Integral over [0, 2pi).
  double integral() const { return 2.0 * std::numbers::pi * coefficient(0); }
  /// Integral of p(x) e^{ikx} over [0, 2pi).
  double moment(int k) const { return 2.0 * std::numbers::pi * coefficient(-k); }

 private:
  Eigen::VectorXd coefficients_;
};

/// Outcome law p(x) = |sum_m c_m e^{imx}|^2 / (2 pi) as Fourier coefficients
/// (1/2pi) sum_m c_m c_{m+k}.
TrigPolynomial outcome_density(const PhaseProtocol& protocol);

/// Half-angle form sin(pi/(2 dP)).
template <typename Scalar = double>
Scalar classical_phase_error(int dP) {
  if (dP < 1) throw PreconditionError("classical_phase_error: dP must be >= 1");
  return std::sin(std::numbers::pi_v<Scalar> / (Scalar(2) * Scalar(dP)));
}

/// Cosine form sqrt((1 - cos(pi/dP))/2); loses relative accuracy for large
/// dP in double, use long double for cross-checks.
template <typename Scalar = double>
Scalar classical_phase_error_cosine_form(int dP) {
  if (dP < 1) throw PreconditionError("classical_phase_error: dP must be >= 1");
  return std::sqrt((Scalar(1) - std::cos(std::numbers::pi_v<Scalar> / Scalar(dP))) / Scalar(2));
}

/// Off-diagonal factor kappa of the averaged channel
/// E(rho) = int p(x) U_x rho U_x^dag dx with U_x = diag(1, e^{-ix}).
std::complex<double> phase_coherence(const PhaseProtocol& protocol);

/// 1 - F_ent of the averaged channel; closed form 1 - (1/2 + (1/2) sum c_m c_{m+1}).
double choi_infidelity(const PhaseProtocol& protocol);

/// (1/2) || ((E - I) (x) I)(psi) ||_1 for a pure state psi on qubit (x) qubit,
/// basis index 2*system + reference.
double phase_channel_distance(const PhaseProtocol& protocol, const Eigen::Vector4cd& psi);

struct DiamondSearch {
  double value;            // best half trace distance found
  double entangled_value;  // value at the maximally entangled input
  double spread;           // max - min over all starts
  int starts;
};

/// Multi-start Nelder-Mead over pure inputs (6 real parameters) from the
/// maximally entangled start plus `seeds` random starts drawn from `seed`.
/// Throws VerificationError("unreliable maximum") when the starts disagree
/// by more than 1e-6.
DiamondSearch quantum_phase_search(const PhaseProtocol& protocol, int seeds = 32,
                                   std::uint64_t seed = 0);

inline double quantum_phase_error(const PhaseProtocol& protocol) {
  return quantum_phase_search(protocol).value;
}

struct PhaseReport {
  int dP;
  double eps_classical;
  double eps_quantum;
  double choi_infidelity;
  double asymptote_ratio;  // eps_quantum * 2 dP^2 / pi^2
  double multistart_spread;
};

PhaseReport phase_report(int dP, std::uint64_t seed = 0);

}  // namespace progcost
