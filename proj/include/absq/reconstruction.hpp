#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "absq/signal_model.hpp"

namespace absq {

// Pluggable sparse reconstruction contract: (phi, y, k) -> length-m vector
// with at most k nonzeros, deterministic in its inputs.
using ReconstructionFn = std::function<Eigen::VectorXd(
    const SensingMatrix&, const Eigen::VectorXd&, int)>;

struct ReconDiagnostics {
  long iterations = 0;
  long rank_deficient_solves = 0;
};

// Least squares of y against the columns of phi listed in `support`,
// scattered back into a length-m vector. Rank-deficient systems fall back to
// the minimum-norm solution and bump the diagnostics counter; never a hard
// error.
Eigen::VectorXd least_squares_on_support(const SensingMatrix& phi,
                                         const std::vector<int>& support,
                                         const Eigen::VectorXd& y,
                                         ReconDiagnostics* diag = nullptr);

// Orthogonal matching pursuit: k greedy column selections with a full
// least-squares refit per iteration. Early exit once the residual norm drops
// below 1e-12 * ||y||. Ties in column selection go to the lowest index.
Eigen::VectorXd omp_reconstruct(const SensingMatrix& phi,
                                const Eigen::VectorXd& y, int k,
                                ReconDiagnostics* diag = nullptr);

// Exhaustive best k-sparse fit: least squares on every k-subset of columns,
// minimum residual wins, ties to the lexicographically smallest support.
// Guarded at C(m, k) <= 10^6.
Eigen::VectorXd oracle_best_ksparse(const SensingMatrix& phi,
                                    const Eigen::VectorXd& y, int k);

// Default realization of the reconstruction contract.
ReconstructionFn make_omp_reconstructor();

}  // namespace absq
