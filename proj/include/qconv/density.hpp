#pragma once

#include <vector>

#include "qconv/register.hpp"

namespace qconv {

/// Hermitian, positive-semidefinite operator on n qubits. Trace may be
/// below 1 for postselected intermediates; normalized() rescales.
class DensityOperator {
  public:
    DensityOperator(int n, Eigen::MatrixXcd entries);

    static DensityOperator from_pure(const QubitRegister& state);
    static DensityOperator maximally_mixed(int n);

    int qubit_count() const { return n_; }
    Eigen::Index dim() const { return m_.rows(); }
    const Eigen::MatrixXcd& entries() const { return m_; }

    double trace() const { return m_.trace().real(); }
    DensityOperator normalized() const;

    /// Eigenvalues, ascending, with [-1e-10, 0) clamped to zero. Throws
    /// if an eigenvalue is more negative than the clamp window.
    Eigen::VectorXd clamped_eigenvalues() const;

  private:
    int n_;
    Eigen::MatrixXcd m_;
};

/// Reduce onto the (1-based, ascending) qubit set `keep`. Trace preserved.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

DensityOperator apply_local(const DensityOperator& rho, const LocalOperator& op, int target);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double state_fidelity(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace qconv
