#pragma once

#include <Eigen/Dense>
#include <vector>

#include "absq/random.hpp"

namespace absq {

// K-sparse source vector together with its support set. Immutable after
// construction; the constructor validates sparsity and off-support zeros.
struct SparseSignal {
  Eigen::VectorXd values;    // length m, zero off support
  std::vector<int> support;  // strictly increasing indices into values
  int sparsity_k = 0;

  SparseSignal(Eigen::VectorXd values_in, std::vector<int> support_in, int k);

  int dim() const { return static_cast<int>(values.size()); }
  double energy() const { return values.squaredNorm(); }
};

// Dense sensing matrix. Generated matrices have unit-norm columns and
// n < m; the constructor itself only enforces n <= m so tests can build
// square instances (identity action checks and the like).
struct SensingMatrix {
  Eigen::MatrixXd entries;

  explicit SensingMatrix(Eigen::MatrixXd entries_in);

  int rows_n() const { return static_cast<int>(entries.rows()); }
  int cols_m() const { return static_cast<int>(entries.cols()); }
  double alpha() const {
    return static_cast<double>(rows_n()) / static_cast<double>(cols_m());
  }
};

// Uniform random k-subset support, i.i.d. standard Gaussian nonzeros.
SparseSignal gen_sparse_signal(RandomStream& rng, int m, int k);

// Entries i.i.d. N(0, 1/n), then every column rescaled to unit norm.
SensingMatrix gen_sensing_matrix(RandomStream& rng, int n, int m);

// y = phi * x.
Eigen::VectorXd measure(const SensingMatrix& phi, const SparseSignal& x);
Eigen::VectorXd measure(const SensingMatrix& phi, const Eigen::VectorXd& x);

// Ratio-of-sums estimate: sum ||x_t - xhat_t||^2 / sum ||x_t||^2.
double nmse(const std::vector<SparseSignal>& originals,
            const std::vector<Eigen::VectorXd>& estimates);

}  // namespace absq
