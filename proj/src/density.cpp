#include "qconv/density.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qconv {

namespace {
constexpr double kHermTol = 1e-10;
constexpr double kEigClamp = -1e-10;
}  // namespace

DensityOperator::DensityOperator(int n, Eigen::MatrixXcd entries)
    : n_(n), m_(std::move(entries)) {
    if (n < 1 || n > kMaxQubits) {
        throw std::out_of_range("qubit count outside 1..8");
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    if (m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("density operator must be 2^n x 2^n");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
        throw std::invalid_argument("density operator is not Hermitian");
    }
}

DensityOperator DensityOperator::from_pure(const QubitRegister& state) {
    return DensityOperator(state.qubit_count(),
                           state.amplitudes() * state.amplitudes().adjoint());
}

DensityOperator DensityOperator::maximally_mixed(int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    return DensityOperator(n, Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

DensityOperator DensityOperator::normalized() const {
    const double t = trace();
    if (std::abs(t) < 1e-14) {
        throw std::invalid_argument("cannot normalize a trace-zero operator");
    }
    return DensityOperator(n_, m_ / t);
}

Eigen::VectorXd DensityOperator::clamped_eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < 0.0) {
            if (ev(i) < kEigClamp) {
                throw std::domain_error("operator has eigenvalue " + std::to_string(ev(i)) +
                                        " below the positivity tolerance");
            }
            ev(i) = 0.0;
        }
    }
    return ev;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
    const int n = rho.qubit_count();
    if (keep.empty()) {
        throw std::invalid_argument("keep set must be nonempty");
    }
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("keep set has duplicates");
    }
    if (sorted.front() < 1 || sorted.back() > n) {
        throw std::out_of_range("keep set outside 1..n");
    }

    const int k = static_cast<int>(sorted.size());
    const int t = n - k;
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q) {
        if (!std::binary_search(sorted.begin(), sorted.end(), q)) traced.push_back(q);
    }

    // Compose a full index from kept bits `a` and traced bits `e`.
    auto full_index = [&](Eigen::Index a, Eigen::Index e) {
        Eigen::Index idx = 0;
        for (int i = 0; i < k; ++i) {
            if (a & (Eigen::Index{1} << (k - 1 - i))) idx |= Eigen::Index{1} << (n - sorted[i]);
        }
        for (int i = 0; i < t; ++i) {
            if (e & (Eigen::Index{1} << (t - 1 - i))) idx |= Eigen::Index{1} << (n - traced[i]);
        }
        return idx;
    };

    const Eigen::Index dk = Eigen::Index{1} << k;
    const Eigen::Index dt = Eigen::Index{1} << t;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
    for (Eigen::Index r = 0; r < dk; ++r) {
        for (Eigen::Index c = 0; c < dk; ++c) {
            Complex sum = 0.0;
            for (Eigen::Index e = 0; e < dt; ++e) {
                sum += rho.entries()(full_index(r, e), full_index(c, e));
            }
            out(r, c) = sum;
        }
    }
    return DensityOperator(k, std::move(out));
}

DensityOperator apply_local(const DensityOperator& rho, const LocalOperator& op, int target) {
    const int n = rho.qubit_count();
    if (target < 1 || target > n) {
        throw std::out_of_range("target qubit outside 1..n");
    }
    const Eigen::Index d = rho.dim();
    const Eigen::Index bit = Eigen::Index{1} << (n - target);
    const auto& u = op.matrix;

    // U rho U†, applied on rows then columns.
    Eigen::MatrixXcd m = rho.entries();
    Eigen::MatrixXcd tmp(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const Eigen::Index i0 = i & ~bit;
        const Eigen::Index i1 = i | bit;
        const int r = (i & bit) ? 1 : 0;
        tmp.row(i) = u(r, 0) * m.row(i0) + u(r, 1) * m.row(i1);
    }
    Eigen::MatrixXcd out(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::Index j0 = j & ~bit;
        const Eigen::Index j1 = j | bit;
        const int c = (j & bit) ? 1 : 0;
        out.col(j) = std::conj(u(c, 0)) * tmp.col(j0) + std::conj(u(c, 1)) * tmp.col(j1);
    }
    return DensityOperator(n, std::move(out));
}

double state_fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.qubit_count() != sigma.qubit_count()) {
        throw std::invalid_argument("state_fidelity requires equal qubit counts");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXcd sqrt_rho =
        es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> inner(sqrt_rho * sigma.entries() * sqrt_rho);
    const double root_sum = inner.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return root_sum * root_sum;
}

}  // namespace qconv
