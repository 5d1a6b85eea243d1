#include "progcost/protocol.hpp"

#include <string>

namespace progcost {

namespace {

Eigen::Index lattice_volume(int N, int dims) {
  Eigen::Index volume = 1;
  for (int i = 0; i < dims; ++i) volume *= N;
  return volume;
}

}  // namespace

DiagramSet::DiagramSet(int d, long long n, int N, long long n0, YoungDiagram mu0,
                       std::vector<YoungDiagram> members)
    : d_(d), n_(n), N_(N), n0_(n0), mu0_(std::move(mu0)), members_(std::move(members)) {
  if (static_cast<Eigen::Index>(members_.size()) != lattice_volume(N_, d_ - 1))
    throw VerificationError("DiagramSet: member count differs from N^(d-1)");
}

std::vector<int> DiagramSet::coordinates(Eigen::Index index) const {
  std::vector<int> coords(static_cast<std::size_t>(d_ - 1));
  for (int i = d_ - 2; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = static_cast<int>(index % N_);
    index /= N_;
  }
  return coords;
}

Eigen::Index DiagramSet::index_of(const std::vector<int>& coords) const {
  Eigen::Index index = 0;
  for (int c : coords) {
    if (c < 0 || c >= N_) return -1;
    index = index * N_ + c;
  }
  return index;
}

bool DiagramSet::operator==(const DiagramSet& other) const {
  return d_ == other.d_ && n_ == other.n_ && N_ == other.N_ && members_ == other.members_;
}

WeightVector::WeightVector(DiagramSetPtr set_, Eigen::VectorXd probabilities_)
    : set(std::move(set_)), probabilities(std::move(probabilities_)) {
  if (!set) throw PreconditionError("WeightVector: null diagram set");
  if (probabilities.size() != set->size())
    throw PreconditionError("WeightVector: size differs from the diagram set");
  if ((probabilities.array() < 0.0).any())
    throw PreconditionError("WeightVector: negative probability");
  if (std::abs(probabilities.sum() - 1.0) > 1e-12)
    throw PreconditionError("WeightVector: probabilities do not sum to 1");
}

double capacity_cmin(int d, long long n) {
  const double dd = d;
  return 2.0 * (1.0 - dd * (dd - 1.0) / static_cast<double>(n)) / ((3.0 * dd - 2.0) * (dd - 1.0));
}

double capacity_cmax(int d, long long n) {
  const double dd = d;
  return 2.0 * (1.0 + (dd - 2.0) * (dd - 1.0) / (2.0 * static_cast<double>(n))) /
         ((3.0 * dd - 2.0) * (dd - 1.0));
}

int capacity_parameter(long long n, int d) {
  if (d < 2) throw PreconditionError("capacity_parameter: d must be >= 2");
  const long long min_uses = 2LL * d * (d - 1);
  if (n < min_uses)
    throw PreconditionError("insufficient uses: n must be >= 2d(d-1) = " +
                            std::to_string(min_uses) + " for d = " + std::to_string(d));
  // (2n/(d-1) + d - 2)/(3d-2) over a common denominator.
  const long long numerator = 2 * n + static_cast<long long>(d - 2) * (d - 1);
  const long long denominator = static_cast<long long>(d - 1) * (3 * d - 2);
  const long long N = numerator / denominator;
  if (N < 2)
    throw PreconditionError("degenerate weight regime: n = " + std::to_string(n) +
                            ", d = " + std::to_string(d) + " gives N = " + std::to_string(N) +
                            " < 2");
  const double scaled = static_cast<double>(n);
  if (N < capacity_cmin(d, n) * scaled - 1e-9 || N > capacity_cmax(d, n) * scaled + 1e-9)
    throw VerificationError("capacity_parameter: N outside [c_min n, c_max n]");
  return static_cast<int>(N);
}

long long base_box_count(long long n, int d, int N) {
  const long long twice = (static_cast<long long>(3 * d - 2) * N - d + 2) * (d - 1);
  if (twice % 2 != 0) throw VerificationError("base_box_count: n0 is not an integer");
  const long long n0 = n - twice / 2;
  if (n0 < 0)
    throw PreconditionError("base_box_count: n0 is negative for n = " + std::to_string(n) +
                            ", N = " + std::to_string(N));
  return n0;
}

YoungDiagram flat_diagram(long long n0, int d) {
  if (n0 < 0 || d < 1) throw PreconditionError("flat_diagram: need n0 >= 0, d >= 1");
  std::vector<YoungDiagram::Row> rows(static_cast<std::size_t>(d), n0 / d);
  for (long long i = 0; i < n0 % d; ++i) ++rows[static_cast<std::size_t>(i)];
  return YoungDiagram(std::move(rows), d);
}

DiagramSetPtr lattice_set(long long n, int d, int N) {
  if (d < 2) throw PreconditionError("lattice_set: d must be >= 2");
  if (N < 1) throw PreconditionError("lattice_set: N must be >= 1");
  const long long n0 = base_box_count(n, d, N);
  YoungDiagram mu0 = flat_diagram(n0, d);

  const Eigen::Index volume = lattice_volume(N, d - 1);
  std::vector<YoungDiagram> members;
  members.reserve(static_cast<std::size_t>(volume));
  std::vector<YoungDiagram::Row> rows(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < volume; ++k) {
    // Decode mixed-radix coordinates, first coordinate most significant.
    Eigen::Index rest = k;
    std::vector<int> t(static_cast<std::size_t>(d - 1));
    for (int i = d - 2; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(rest % N);
      rest /= N;
    }
    long long used = 0;
    for (int i = 0; i < d - 1; ++i) {
      // 0-based row i: mu0_i + N(2d-3) + 1 - (N+1) i + t_i
      rows[static_cast<std::size_t>(i)] = mu0[i] + static_cast<long long>(N) * (2 * d - 3) + 1 -
                                          static_cast<long long>(N + 1) * i +
                                          t[static_cast<std::size_t>(i)];
      used += rows[static_cast<std::size_t>(i)];
    }
    rows[static_cast<std::size_t>(d - 1)] = n - used;
    for (int i = 0; i < d; ++i) {
      const auto r = rows[static_cast<std::size_t>(i)];
      if (r < 0 || (i > 0 && rows[static_cast<std::size_t>(i - 1)] <= r))
        throw VerificationError("lattice_set: constructed diagram is not strictly decreasing");
    }
    members.emplace_back(rows, d);
  }
  return std::make_shared<const DiagramSet>(d, n, N, n0, std::move(mu0), std::move(members));
}

DiagramSetPtr viable_set(long long n, int d) { return lattice_set(n, d, capacity_parameter(n, d)); }

WeightVector sine_weights(const DiagramSetPtr& set) {
  const Eigen::VectorXd g = sine_distribution<double>(set->N());
  Eigen::VectorXd q(set->size());
  for (Eigen::Index k = 0; k < set->size(); ++k) {
    double product = 1.0;
    for (int t : set->coordinates(k)) product *= g(t);
    q(k) = product;
  }
  return WeightVector(set, std::move(q));
}

}  // namespace progcost
