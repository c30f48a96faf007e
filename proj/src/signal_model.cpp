#include "absq/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absq/errors.hpp"

namespace absq {

SparseSignal::SparseSignal(Eigen::VectorXd values_in,
                           std::vector<int> support_in, int k)
    : values(std::move(values_in)), support(std::move(support_in)),
      sparsity_k(k) {
  const int m = static_cast<int>(values.size());
  if (k <= 0 || k >= m) {
    throw InvalidArgument("SparseSignal: sparsity must satisfy 0 < k < m");
  }
  if (static_cast<int>(support.size()) > k) {
    throw InvalidArgument("SparseSignal: support larger than sparsity_k");
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 0 || support[i] >= m) {
      throw InvalidArgument("SparseSignal: support index out of range");
    }
    if (i > 0 && support[i] <= support[i - 1]) {
      throw InvalidArgument("SparseSignal: support must be strictly increasing");
    }
  }
  std::size_t next = 0;
  for (int i = 0; i < m; ++i) {
    if (next < support.size() && support[next] == i) {
      ++next;
      continue;
    }
    if (values[i] != 0.0) {
      throw InvalidArgument("SparseSignal: nonzero value off support");
    }
  }
}

SensingMatrix::SensingMatrix(Eigen::MatrixXd entries_in)
    : entries(std::move(entries_in)) {
  if (entries.rows() < 1 || entries.cols() < 1 ||
      entries.rows() > entries.cols()) {
    throw InvalidArgument("SensingMatrix: need 1 <= n <= m");
  }
  if (!entries.allFinite()) {
    throw InvalidArgument("SensingMatrix: entries must be finite");
  }
}

SparseSignal gen_sparse_signal(RandomStream& rng, int m, int k) {
  if (k <= 0 || k >= m) {
    throw InvalidArgument("gen_sparse_signal: invalid sparsity, need 0 < k < m");
  }
  // Partial Fisher-Yates gives a uniform k-subset.
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.next_below(m - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<int> support(idx.begin(), idx.begin() + k);
  std::sort(support.begin(), support.end());

  Eigen::VectorXd values = Eigen::VectorXd::Zero(m);
  for (int s : support) values[s] = rng.next_gaussian();
  return SparseSignal(std::move(values), std::move(support), k);
}

SensingMatrix gen_sensing_matrix(RandomStream& rng, int n, int m) {
  if (n <= 0 || n >= m) {
    throw InvalidArgument("gen_sensing_matrix: invalid shape, need 0 < n < m");
  }
  Eigen::MatrixXd phi(n, m);
  const double sigma = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) phi(i, j) = sigma * rng.next_gaussian();
  }
  for (int j = 0; j < m; ++j) {
    const double norm = phi.col(j).norm();
    if (norm == 0.0) {
      throw InvalidArgument("gen_sensing_matrix: degenerate zero column");
    }
    phi.col(j) /= norm;
  }
  return SensingMatrix(std::move(phi));
}

Eigen::VectorXd measure(const SensingMatrix& phi, const Eigen::VectorXd& x) {
  if (x.size() != phi.cols_m()) {
    throw InvalidArgument("measure: dimension mismatch");
  }
  return phi.entries * x;
}

Eigen::VectorXd measure(const SensingMatrix& phi, const SparseSignal& x) {
  return measure(phi, x.values);
}

double nmse(const std::vector<SparseSignal>& originals,
            const std::vector<Eigen::VectorXd>& estimates) {
  if (originals.empty() || originals.size() != estimates.size()) {
    throw InvalidArgument("nmse: need equal, nonempty lists");
  }
  double err = 0.0;
  double energy = 0.0;
  for (std::size_t t = 0; t < originals.size(); ++t) {
    if (originals[t].values.size() != estimates[t].size()) {
      throw InvalidArgument("nmse: per-pair dimension mismatch");
    }
    err += (originals[t].values - estimates[t]).squaredNorm();
    energy += originals[t].energy();
  }
  if (energy == 0.0) {
    throw InvalidArgument("nmse: all originals have zero energy");
  }
  return err / energy;
}

}  // namespace absq
