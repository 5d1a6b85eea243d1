#include "progcost/scoring.hpp"

#include <algorithm>
#include <numbers>

namespace progcost {

ScoreMatrix::ScoreMatrix(DiagramSetPtr set, std::vector<std::vector<Eigen::Index>> neighbors)
    : set_(std::move(set)), neighbors_(std::move(neighbors)) {
  if (!set_) throw PreconditionError("ScoreMatrix: null diagram set");
  if (static_cast<Eigen::Index>(neighbors_.size()) != set_->size())
    throw PreconditionError("ScoreMatrix: adjacency size differs from the diagram set");
  for (auto& row : neighbors_) std::sort(row.begin(), row.end());
}

bool ScoreMatrix::operator==(const ScoreMatrix& other) const {
  return *set_ == *other.set_ && neighbors_ == other.neighbors_;
}

ScoreMatrix score_matrix(const DiagramSetPtr& set) {
  const int dims = set->d() - 1;
  std::vector<std::vector<Eigen::Index>> neighbors(static_cast<std::size_t>(set->size()));
  for (Eigen::Index k = 0; k < set->size(); ++k) {
    const std::vector<int> t = set->coordinates(k);
    auto& row = neighbors[static_cast<std::size_t>(k)];
    auto try_add = [&](std::vector<int> shifted) {
      const Eigen::Index j = set->index_of(shifted);
      if (j >= 0) row.push_back(j);
    };
    for (int i = 0; i < dims; ++i) {
      for (int sign : {+1, -1}) {
        auto s = t;
        s[static_cast<std::size_t>(i)] += sign;
        try_add(s);
      }
      // Ordered pairs (i, j) cover both +f_ij and -f_ij.
      for (int j = 0; j < dims; ++j) {
        if (j == i) continue;
        auto s = t;
        s[static_cast<std::size_t>(i)] += 1;
        s[static_cast<std::size_t>(j)] -= 1;
        try_add(s);
      }
    }
  }
  return ScoreMatrix(set, std::move(neighbors));
}

ScoreMatrix score_matrix_pairwise(const DiagramSetPtr& set) {
  const auto& members = set->members();
  for (const auto& m : members)
    if (!m.strictly_decreasing())
      throw PreconditionError("score_matrix_pairwise: diagonal d requires strictly decreasing rows");
  std::vector<std::vector<Eigen::Index>> neighbors(members.size());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      if (a != b && young_distance(members[a], members[b]) == 2)
        neighbors[a].push_back(static_cast<Eigen::Index>(b));
  return ScoreMatrix(set, std::move(neighbors));
}

FidelityResult entanglement_fidelity(const WeightVector& q, const ScoreMatrix& score) {
  if (q.set != score.set() && !(*q.set == *score.set()))
    throw PreconditionError("entanglement_fidelity: weights and score matrix use different sets");
  const double d2 = static_cast<double>(score.d()) * score.d();
  const double fidelity = score_quadratic_form(score, q.amplitudes()) / d2;
  return {fidelity, 1.0 - fidelity, q};
}

FidelityResult optimal_fidelity(const ScoreMatrix& score, const PowerIterationOptions& options) {
  const auto pair = principal_eigenpair<double>(score, options);
  Eigen::VectorXd weights = pair.vector.cwiseAbs2();
  weights /= weights.sum();
  const double d2 = static_cast<double>(score.d()) * score.d();
  const double fidelity = pair.value / d2;
  return {fidelity, 1.0 - fidelity, WeightVector(score.set(), std::move(weights))};
}

BoundValue lemma3_bound(int d, long long n) {
  capacity_parameter(n, d);
  const double ratio = std::numbers::pi * (d - 1) /
                       (static_cast<double>(d) * capacity_cmin(d, n) * static_cast<double>(n));
  const double value = 1.0 - 2.0 * ratio * ratio;
  return {value, value < 0.0};
}

}  // namespace progcost
