#include "progcost/phase.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <random>
#include <vector>

namespace progcost {

namespace {

using Params = Eigen::Matrix<double, 6, 1>;

// Hyperspherical magnitudes and three relative phases.
Eigen::Vector4cd state_from_params(const Params& p) {
  const double r0 = std::cos(p(0));
  const double r1 = std::sin(p(0)) * std::cos(p(1));
  const double r2 = std::sin(p(0)) * std::sin(p(1)) * std::cos(p(2));
  const double r3 = std::sin(p(0)) * std::sin(p(1)) * std::sin(p(2));
  Eigen::Vector4cd psi;
  psi << r0, std::polar(r1, p(3)), std::polar(r2, p(4)), std::polar(r3, p(5));
  return psi;
}

Params maximally_entangled_params() {
  Params p;
  p << std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi / 2, 0, 0, 0;
  return p;
}

// Minimises f with the standard Nelder-Mead moves.
template <typename F>
Params nelder_mead(F&& f, const Params& start, double step) {
  constexpr int n = 6;
  std::array<Params, n + 1> simplex;
  std::array<double, n + 1> values{};
  simplex[0] = start;
  for (int i = 0; i < n; ++i) {
    simplex[i + 1] = start;
    simplex[i + 1](i) += step;
  }
  for (int i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  for (int iter = 0; iter < 20000; ++iter) {
    std::array<int, n + 1> order{};
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    const int best = order[0];
    const int worst = order[n];
    const int second = order[n - 1];

    double size = 0.0;
    for (int i = 0; i <= n; ++i) size = std::max(size, (simplex[i] - simplex[best]).cwiseAbs().maxCoeff());
    if (values[worst] - values[best] < 1e-15 && size < 1e-9) break;

    Params centroid = Params::Zero();
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += simplex[i];
    centroid /= n;

    const Params reflected = centroid + (centroid - simplex[worst]);
    const double fr = f(reflected);
    if (fr < values[best]) {
      const Params expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Params contracted = outside ? Params(centroid + 0.5 * (reflected - centroid))
                                      : Params(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = f(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  return simplex[static_cast<std::size_t>(it - values.begin())];
}

}  // namespace

PhaseProtocol::PhaseProtocol(Eigen::VectorXd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw PreconditionError("PhaseProtocol: empty amplitude vector");
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-12)
    throw PreconditionError("PhaseProtocol: amplitudes are not normalised");
}

PhaseProtocol sine_state(int dP) {
  if (dP < 2) throw PreconditionError("sine_state: dP must be >= 2");
  Eigen::VectorXd c(dP);
  const double scale = std::sqrt(2.0 / dP);
  for (int m = 0; m < dP; ++m) c(m) = scale * std::sin(std::numbers::pi * (m + 0.5) / dP);
  return PhaseProtocol(std::move(c));
}

TrigPolynomial::TrigPolynomial(Eigen::VectorXd coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() % 2 != 1)
    throw PreconditionError("TrigPolynomial: coefficient vector must have odd length");
}

double TrigPolynomial::coefficient(int k) const {
  const int K = degree();
  if (k < -K || k > K) return 0.0;
  return coefficients_(k + K);
}

double TrigPolynomial::evaluate(double x) const {
  const int K = degree();
  double value = coefficient(0);
  for (int k = 1; k <= K; ++k) value += (coefficient(k) + coefficient(-k)) * std::cos(k * x);
  return value;
}

TrigPolynomial outcome_density(const PhaseProtocol& protocol) {
  const auto& c = protocol.amplitudes();
  const int size = protocol.dP();
  const int K = size - 1;
  Eigen::VectorXd coefficients = Eigen::VectorXd::Zero(2 * K + 1);
  for (int k = 0; k <= K; ++k) {
    const double overlap = c.head(size - k).dot(c.tail(size - k)) / (2.0 * std::numbers::pi);
    coefficients(K + k) = overlap;
    coefficients(K - k) = overlap;
  }
  return TrigPolynomial(std::move(coefficients));
}

std::complex<double> phase_coherence(const PhaseProtocol& protocol) {
  // rho_01 picks up e^{ix} under U_x.
  return {outcome_density(protocol).moment(1), 0.0};
}

double choi_infidelity(const PhaseProtocol& protocol) {
  const double kappa = phase_coherence(protocol).real();
  return 1.0 - (0.5 + 0.5 * kappa);
}

double phase_channel_distance(const PhaseProtocol& protocol, const Eigen::Vector4cd& psi) {
  const std::complex<double> kappa = phase_coherence(protocol);
  const Eigen::Matrix4cd rho = psi * psi.adjoint();
  // (E - I) (x) I only rescales the system off-diagonal blocks.
  Eigen::Matrix4cd delta = Eigen::Matrix4cd::Zero();
  delta.block<2, 2>(0, 2) = (kappa - 1.0) * rho.block<2, 2>(0, 2);
  delta.block<2, 2>(2, 0) = (std::conj(kappa) - 1.0) * rho.block<2, 2>(2, 0);
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(delta, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

DiamondSearch quantum_phase_search(const PhaseProtocol& protocol, int seeds, std::uint64_t seed) {
  if (seeds < 0) throw PreconditionError("quantum_phase_search: seeds must be >= 0");
  auto objective = [&](const Params& p) {
    return -phase_channel_distance(protocol, state_from_params(p));
  };

  std::vector<Params> starts{maximally_entangled_params()};
  for (int s = 0; s < seeds; ++s) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(sequence);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    Params p;
    p << angle(rng), angle(rng), angle(rng), phase(rng), phase(rng), phase(rng);
    starts.push_back(p);
  }

  std::vector<double> results;
  results.reserve(starts.size());
  for (const auto& start : starts) results.push_back(-objective(nelder_mead(objective, start, 0.3)));

  const auto [lo, hi] = std::minmax_element(results.begin(), results.end());
  DiamondSearch out{*hi, phase_channel_distance(protocol, state_from_params(starts.front())),
                    *hi - *lo, static_cast<int>(starts.size())};
  if (out.spread > 1e-6)
    throw VerificationError("unreliable maximum: multi-start spread " + std::to_string(out.spread));
  return out;
}

PhaseReport phase_report(int dP, std::uint64_t seed) {
  const PhaseProtocol protocol = sine_state(dP);
  const DiamondSearch search = quantum_phase_search(protocol, 32, seed);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return {dP,
          classical_phase_error<double>(dP),
          search.value,
          choi_infidelity(protocol),
          search.value * 2.0 * dP * dP / pi2,
          search.spread};
}

}  // namespace progcost
