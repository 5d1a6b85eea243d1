// Score matrix over a diagram set and the entanglement-fidelity quadratic form.
#pragma once

#include "progcost/protocol.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cmath>
#include <string>
#include <vector>

namespace progcost {

/// Sparse symmetric matrix with diagonal d and unit entries between diagrams
/// at Young distance 2. Stored as sorted adjacency lists.
class ScoreMatrix {
 public:
  ScoreMatrix(DiagramSetPtr set, std::vector<std::vector<Eigen::Index>> neighbors);

  const DiagramSetPtr& set() const { return set_; }
  int d() const { return set_->d(); }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(neighbors_.size()); }
  const std::vector<Eigen::Index>& neighbors(Eigen::Index row) const {
    return neighbors_[static_cast<std::size_t>(row)];
  }

  /// S v with a fixed per-row summation order (diagonal first, then
  /// neighbours ascending).
  template <typename Derived>
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> apply(
      const Eigen::MatrixBase<Derived>& v) const {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(dimension());
    const Scalar diagonal(d());
    for (Eigen::Index row = 0; row < dimension(); ++row) {
      Scalar acc = diagonal * v(row);
      for (Eigen::Index col : neighbors(row)) acc += v(col);
      out(row) = acc;
    }
    return out;
  }

  template <typename Scalar = double>
  Eigen::SparseMatrix<Scalar> to_sparse() const {
    std::vector<Eigen::Triplet<Scalar>> triplets;
    for (Eigen::Index row = 0; row < dimension(); ++row) {
      triplets.emplace_back(row, row, Scalar(d()));
      for (Eigen::Index col : neighbors(row)) triplets.emplace_back(row, col, Scalar(1));
    }
    Eigen::SparseMatrix<Scalar> out(dimension(), dimension());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
  }

  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
    return Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(to_sparse<Scalar>());
  }

  bool operator==(const ScoreMatrix& other) const;

 private:
  DiagramSetPtr set_;
  std::vector<std::vector<Eigen::Index>> neighbors_;
};

/// Lattice construction: neighbours at t +- e_i and t +- (e_i - e_j).
ScoreMatrix score_matrix(const DiagramSetPtr& set);

/// Direct construction from pairwise Young distances; O(|set|^2).
ScoreMatrix score_matrix_pairwise(const DiagramSetPtr& set);

/// a^T S a for an amplitude vector a.
template <typename Derived>
typename Derived::Scalar score_quadratic_form(const ScoreMatrix& score,
                                              const Eigen::MatrixBase<Derived>& amplitudes) {
  return amplitudes.dot(score.apply(amplitudes));
}

struct FidelityResult {
  double fidelity;
  double error;
  WeightVector weights_used;
};

/// F = (1/d^2) sqrt(q)^T S sqrt(q). Throws PreconditionError when q and S
/// live on different sets.
FidelityResult entanglement_fidelity(const WeightVector& q, const ScoreMatrix& score);

struct PowerIterationOptions {
  double relative_tolerance = 1e-12;
  long max_iterations = 1'000'000;
};

template <typename Scalar>
struct EigenPair {
  Scalar value;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> vector;
  Scalar residual;
  long iterations;
};

/// Largest eigenpair of S by power iteration from the all-ones vector;
/// stops when ||S v - theta v|| <= tol * theta.
template <typename Scalar = double>
EigenPair<Scalar> principal_eigenpair(const ScoreMatrix& score,
                                      const PowerIterationOptions& options = {}) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index size = score.dimension();
  Vector v = Vector::Ones(size) / std::sqrt(Scalar(size));
  Scalar theta(0);
  Scalar residual(0);
  for (long it = 1; it <= options.max_iterations; ++it) {
    Vector w = score.apply(v);
    theta = v.dot(w);
    residual = (w - theta * v).norm();
    if (residual <= Scalar(options.relative_tolerance) * theta) return {theta, v, residual, it};
    v = w / w.norm();
  }
  throw VerificationError("principal_eigenpair: no convergence after " +
                          std::to_string(options.max_iterations) +
                          " iterations, residual norm " + std::to_string(double(residual)));
}

/// Optimal fidelity lambda_max(S)/d^2 with the squared principal eigenvector
/// as weights.
FidelityResult optimal_fidelity(const ScoreMatrix& score, const PowerIterationOptions& options = {});

/// q*^T S q* = d + (d-1)(d-2)(1-eps_g)^2 + 2(d-1)(1-eps_g).
template <typename Scalar = double>
Scalar qstar_score_closed_form(int d, Scalar eps_g) {
  const Scalar dd(d);
  const Scalar coherence = Scalar(1) - eps_g;
  return dd + (dd - 1) * (dd - 2) * coherence * coherence + Scalar(2) * (dd - 1) * coherence;
}

/// 1 - 2(pi(d-1)/(d c_min n))^2; negative values are returned and flagged.
BoundValue lemma3_bound(int d, long long n);

}  // namespace progcost
