#include "progcost/oracle.hpp"

#include "progcost/detail/parallel.hpp"
#include "progcost/scoring.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

namespace progcost {

namespace {

constexpr int kChunks = 64;

std::pair<std::size_t, std::size_t> chunk_range(std::size_t total, int chunk) {
  const std::size_t c = static_cast<std::size_t>(chunk);
  return {total * c / kChunks, total * (c + 1) / kChunks};
}

bool su_equivalent(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.d() != b.d()) return false;
  const int last = a.d() - 1;
  for (int i = 0; i < a.d(); ++i)
    if (a[i] - a[last] != b[i] - b[last]) return false;
  return true;
}

}  // namespace

TorusGrid torus_grid(int d, int max_degree) {
  if (d < 2) throw PreconditionError("torus_grid: d must be >= 2");
  if (max_degree < 0) throw PreconditionError("torus_grid: max_degree must be >= 0");
  const int K = d == 2 ? 8 * (max_degree + 1) : 4 * (max_degree + d);

  TorusGrid grid{d, max_degree, K, {}, {}, 0.0};
  std::size_t count = 1;
  for (int i = 0; i < d - 1; ++i) count *= static_cast<std::size_t>(K);
  grid.angles.reserve(count);
  Eigen::VectorXd raw(static_cast<Eigen::Index>(count));

  std::vector<int> index(static_cast<std::size_t>(d - 1), 0);
  for (std::size_t node = 0; node < count; ++node) {
    Eigen::VectorXd phi(d);
    double total = 0.0;
    for (int i = 0; i < d - 1; ++i) {
      phi(i) = 2.0 * std::numbers::pi * index[static_cast<std::size_t>(i)] / K;
      total += phi(i);
    }
    phi(d - 1) = -total;
    // Vandermonde |x_i - x_j|^2 = 4 sin^2((phi_i - phi_j)/2).
    double vandermonde = 1.0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const double s = std::sin(0.5 * (phi(i) - phi(j)));
        vandermonde *= 4.0 * s * s;
      }
    raw(static_cast<Eigen::Index>(node)) = vandermonde;
    grid.angles.push_back(std::move(phi));
    for (int i = d - 2; i >= 0; --i) {
      if (++index[static_cast<std::size_t>(i)] < K) break;
      index[static_cast<std::size_t>(i)] = 0;
    }
  }
  const double sum = raw.sum();
  grid.raw_weight_mean = sum / static_cast<double>(count);
  grid.weights = raw / sum;
  return grid;
}

std::complex<double> weyl_numerator(const YoungDiagram& diagram, const Eigen::VectorXd& angles) {
  const int d = diagram.d();
  if (angles.size() != d) throw PreconditionError("weyl_numerator: angle count differs from d");
  Eigen::MatrixXcd m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      m(r, c) = std::polar(1.0, angles(r) * static_cast<double>(diagram[c] + d - 1 - c));
  if (d == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return m.partialPivLu().determinant();
}

std::complex<double> schur_character(const YoungDiagram& diagram,
                                     const std::vector<std::complex<double>>& phases) {
  const int d = diagram.d();
  if (static_cast<int>(phases.size()) != d)
    throw PreconditionError("schur_character: phase count differs from d");
  Eigen::VectorXd angles(d);
  for (int i = 0; i < d; ++i) angles(i) = std::arg(phases[static_cast<std::size_t>(i)]);

  bool all_equal = true;
  bool any_equal = false;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const bool same = std::abs(phases[static_cast<std::size_t>(i)] - phases[static_cast<std::size_t>(j)]) < 1e-12;
      any_equal = any_equal || same;
      all_equal = all_equal && same;
    }
  if (all_equal) {
    const double dim = irrep_dimension(diagram).convert_to<double>();
    return dim * std::polar(1.0, angles(0) * static_cast<double>(diagram.boxes()));
  }
  if (any_equal)
    for (int i = 0; i < d; ++i) angles(i) += 1e-9 * i;

  const YoungDiagram empty(std::vector<YoungDiagram::Row>{}, d);
  return weyl_numerator(diagram, angles) / weyl_numerator(empty, angles);
}

double su2_character(const YoungDiagram& diagram, double theta) {
  if (diagram.d() != 2) throw PreconditionError("su2_character: diagram must have d = 2");
  const double k = static_cast<double>(diagram[0] - diagram[1] + 1);
  const double s = std::sin(0.5 * theta);
  if (std::abs(s) < 1e-12) return k * std::cos(0.5 * k * theta) / std::cos(0.5 * theta);
  return std::sin(0.5 * k * theta) / s;
}

double haar_fidelity(const WeightVector& q, const TorusGrid& grid) {
  const DiagramSet& set = *q.set;
  if (grid.d != set.d()) throw PreconditionError("haar_fidelity: grid and set have different d");
  if (grid.max_degree < set.n() + 1)
    throw PreconditionError("under-resolved grid: need max_degree >= n + 1 = " +
                            std::to_string(set.n() + 1));
  const Eigen::VectorXd amplitudes = q.amplitudes();
  const auto& members = set.members();

  // sum_nodes |chi_e1 sum_l sqrt(q_l) a_{l+delta}|^2 / sum_nodes |a_delta|^2
  const auto partial = detail::map_chunks<double>(kChunks, [&](int chunk) {
    const auto [begin, end] = chunk_range(grid.angles.size(), chunk);
    double acc = 0.0;
    for (std::size_t node = begin; node < end; ++node) {
      const Eigen::VectorXd& phi = grid.angles[node];
      std::complex<double> self(0.0, 0.0);
      for (int i = 0; i < grid.d; ++i) self += std::polar(1.0, phi(i));
      std::complex<double> combined(0.0, 0.0);
      for (std::size_t l = 0; l < members.size(); ++l) {
        const double amp = amplitudes(static_cast<Eigen::Index>(l));
        if (amp != 0.0) combined += amp * weyl_numerator(members[l], phi);
      }
      acc += std::norm(self * combined);
    }
    return acc;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  const double normaliser = grid.raw_weight_mean * static_cast<double>(grid.angles.size());
  return total / normaliser / (static_cast<double>(grid.d) * grid.d);
}

double character_orthonormality_check(const TorusGrid& grid, const std::vector<YoungDiagram>& diagrams) {
  for (const auto& diagram : diagrams) {
    if (diagram.d() != grid.d)
      throw PreconditionError("character_orthonormality_check: diagram row budget differs from grid");
    if (diagram.boxes() > grid.max_degree)
      throw PreconditionError("under-resolved grid for diagram with " +
                              std::to_string(diagram.boxes()) + " boxes");
  }
  const std::size_t count = diagrams.size();
  const std::size_t nodes = grid.angles.size();
  Eigen::MatrixXcd numerators(static_cast<Eigen::Index>(nodes), static_cast<Eigen::Index>(count));
  for (std::size_t node = 0; node < nodes; ++node)
    for (std::size_t l = 0; l < count; ++l)
      numerators(static_cast<Eigen::Index>(node), static_cast<Eigen::Index>(l)) =
          weyl_numerator(diagrams[l], grid.angles[node]);
  const double normaliser = grid.raw_weight_mean * static_cast<double>(nodes);
  const Eigen::MatrixXcd gram = numerators.adjoint() * numerators / normaliser;

  double worst = 0.0;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const double expected = su_equivalent(diagrams[a], diagrams[b]) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(gram(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) - expected));
    }
  return worst;
}

ChoiFit choi_monte_carlo_su2(const WeightVector& q, long samples, std::uint64_t seed, bool enforce) {
  const DiagramSet& set = *q.set;
  if (set.d() != 2) throw PreconditionError("choi_monte_carlo_su2: requires a d = 2 weight vector");
  if (samples < 100'000) throw PreconditionError("choi_monte_carlo_su2: samples must be >= 1e5");

  std::vector<double> amplitudes;
  std::vector<double> spins;  // l1 - l2 + 1
  for (Eigen::Index l = 0; l < set.size(); ++l) {
    const double amp = std::sqrt(q.probabilities(l));
    if (amp == 0.0) continue;
    amplitudes.push_back(amp);
    const auto& m = set.members()[static_cast<std::size_t>(l)];
    spins.push_back(static_cast<double>(m[0] - m[1] + 1));
  }

  // One independent stream per chunk, keyed by (seed, chunk).
  std::set<std::uint64_t> stream_heads;
  for (int chunk = 0; chunk < kChunks; ++chunk) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(chunk)};
    std::mt19937_64 rng(sequence);
    if (!stream_heads.insert(rng()).second)
      throw PreconditionError("choi_monte_carlo_su2: seed reuse across parallel streams");
  }

  struct Partial {
    Eigen::Matrix4cd weighted = Eigen::Matrix4cd::Zero();
    double weight = 0.0;
  };
  const auto partials = detail::map_chunks<Partial>(kChunks, [&](int chunk) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(chunk)};
    std::mt19937_64 rng(sequence);
    rng();  // stream head consumed by the uniqueness check
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto [begin, end] = chunk_range(static_cast<std::size_t>(samples), chunk);
    Partial out;
    for (std::size_t s = begin; s < end; ++s) {
      Eigen::Vector4d quaternion(normal(rng), normal(rng), normal(rng), normal(rng));
      quaternion.normalize();
      const double a = quaternion(0), b = quaternion(1), c = quaternion(2), e = quaternion(3);
      // Eigenvalues e^{+-i phi} with cos(phi) = a.
      const double phi = std::acos(std::clamp(a, -1.0, 1.0));
      const double sin_phi = std::sin(phi);
      double amplitude_sum = 0.0;
      for (std::size_t l = 0; l < amplitudes.size(); ++l) {
        const double k = spins[l];
        const double chi = sin_phi < 1e-12 ? k * std::cos(k * phi) / std::cos(phi)
                                           : std::sin(k * phi) / sin_phi;
        amplitude_sum += amplitudes[l] * chi;
      }
      const double p = amplitude_sum * amplitude_sum;
      Eigen::Matrix2cd U;
      U << std::complex<double>(a, b), std::complex<double>(c, e), std::complex<double>(-c, e),
          std::complex<double>(a, -b);
      // (U (x) I)|Phi+>: component (s, r) is U_{s r} / sqrt(2).
      Eigen::Vector4cd v;
      v << U(0, 0), U(0, 1), U(1, 0), U(1, 1);
      v /= std::sqrt(2.0);
      out.weighted.noalias() += p * (v * v.adjoint());
      out.weight += p;
    }
    return out;
  });

  Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
  double weight = 0.0;
  for (const auto& partial : partials) {
    sum += partial.weighted;
    weight += partial.weight;
  }
  ChoiFit fit{};
  fit.choi = sum / weight;

  Eigen::Vector4cd phi_plus(1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0));
  const Eigen::Matrix4cd max_entangled = phi_plus * phi_plus.adjoint();
  const Eigen::Matrix4cd rho_perp = (Eigen::Matrix4cd::Identity() - max_entangled) / 3.0;
  const Eigen::Matrix4cd direction = rho_perp - max_entangled;
  fit.a = (direction.adjoint() * (fit.choi - max_entangled)).trace().real() / direction.squaredNorm();
  fit.residual = (fit.choi - (1.0 - fit.a) * max_entangled - fit.a * rho_perp).norm();
  fit.fidelity = 1.0 - fit.a;
  fit.reference_fidelity = entanglement_fidelity(q, score_matrix(q.set)).fidelity;

  if (enforce) {
    const double tolerance = 5.0 / std::sqrt(static_cast<double>(samples));
    if (fit.residual > tolerance)
      throw VerificationError("choi_monte_carlo_su2: residual " + std::to_string(fit.residual) +
                              " exceeds " + std::to_string(tolerance));
    if (std::abs(fit.fidelity - fit.reference_fidelity) > tolerance)
      throw VerificationError("choi_monte_carlo_su2: fitted fidelity disagrees with the score matrix");
  }
  return fit;
}

}  // namespace progcost
