// Construction of the sine-weighted estimation protocol: capacity parameter,
// flat base diagram, the lattice of viable diagrams and the product weights.
#pragma once

#include "progcost/young.hpp"

#include <Eigen/Core>

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

namespace progcost {

/// Lattice of viable diagrams. Member k has lattice coordinates
/// coordinates(k) in {0..N-1}^(d-1), read row-major with the first
/// coordinate most significant.
class DiagramSet {
 public:
  DiagramSet(int d, long long n, int N, long long n0, YoungDiagram mu0,
             std::vector<YoungDiagram> members);

  int d() const { return d_; }
  long long n() const { return n_; }
  int N() const { return N_; }
  long long n0() const { return n0_; }
  const YoungDiagram& mu0() const { return mu0_; }
  const std::vector<YoungDiagram>& members() const { return members_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(members_.size()); }

  std::vector<int> coordinates(Eigen::Index index) const;
  /// Returns -1 when the coordinates fall outside the lattice.
  Eigen::Index index_of(const std::vector<int>& coords) const;

  bool operator==(const DiagramSet& other) const;

 private:
  int d_;
  long long n_;
  int N_;
  long long n0_;
  YoungDiagram mu0_;
  std::vector<YoungDiagram> members_;
};

using DiagramSetPtr = std::shared_ptr<const DiagramSet>;

/// Probability distribution over a DiagramSet; probe amplitudes are sqrt(q).
struct WeightVector {
  DiagramSetPtr set;
  Eigen::VectorXd probabilities;

  /// Validates non-negativity and unit sum within 1e-12.
  WeightVector(DiagramSetPtr set, Eigen::VectorXd probabilities);

  Eigen::VectorXd amplitudes() const { return probabilities.cwiseSqrt(); }
};

/// c_min,d from the capacity bracket N in [c_min n, c_max n].
double capacity_cmin(int d, long long n);
double capacity_cmax(int d, long long n);

/// N = floor((2n/(d-1) + d - 2)/(3d - 2)). Requires d >= 2 and
/// n >= 2d(d-1) ("insufficient uses") and rejects N < 2 ("degenerate
/// weight regime").
int capacity_parameter(long long n, int d);

/// n0 = n - ((3d-2)N - d + 2)(d-1)/2, checked to be a non-negative integer.
long long base_box_count(long long n, int d, int N);

/// Most balanced diagram with n0 boxes and d rows.
YoungDiagram flat_diagram(long long n0, int d);

/// Lattice set for an explicit capacity N >= 1 (no weight-regime check).
DiagramSetPtr lattice_set(long long n, int d, int N);

/// The viable set for n uses: lattice_set(n, d, capacity_parameter(n, d)).
DiagramSetPtr viable_set(long long n, int d);

/// g_k = (2/N) sin^2(pi (2k+1) / (2N)), k = 0..N-1.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> sine_distribution(int N) {
  if (N < 2) throw PreconditionError("sine_distribution: N must be >= 2 (g is unnormalized at N = 1)");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> g(N);
  for (int k = 0; k < N; ++k) {
    const Scalar s = std::sin(pi * Scalar(2 * k + 1) / Scalar(2 * N));
    g(k) = Scalar(2) / Scalar(N) * s * s;
  }
  return g;
}

/// Nearest-neighbour coherence deficit 1 - sum_k sqrt(g_k g_{k+1}).
template <typename Scalar = double>
Scalar epsilon_g(int N) {
  const auto g = sine_distribution<Scalar>(N);
  const auto root = g.cwiseSqrt();
  return Scalar(1) - root.head(N - 1).dot(root.tail(N - 1));
}

/// Product weights q*_t = prod_i g_{t_i}. Throws for N < 2.
WeightVector sine_weights(const DiagramSetPtr& set);

}  // namespace progcost
