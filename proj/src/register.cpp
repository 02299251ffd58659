#include "qconv/register.hpp"

#include <cmath>

namespace qconv {

namespace {

Eigen::Matrix2cd pauli_x_m() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y_m() {
    Eigen::Matrix2cd m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Eigen::Matrix2cd pauli_z_m() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd hadamard_m() {
    Eigen::Matrix2cd m;
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
}

}  // namespace

const LocalOperator& LocalOperator::identity() {
    static const LocalOperator op{"I", Eigen::Matrix2cd::Identity()};
    return op;
}

const LocalOperator& LocalOperator::sigma_x() {
    static const LocalOperator op{"X", pauli_x_m()};
    return op;
}

const LocalOperator& LocalOperator::sigma_y() {
    static const LocalOperator op{"Y", pauli_y_m()};
    return op;
}

const LocalOperator& LocalOperator::sigma_z() {
    static const LocalOperator op{"Z", pauli_z_m()};
    return op;
}

const LocalOperator& LocalOperator::hadamard() {
    static const LocalOperator op{"H", hadamard_m()};
    return op;
}

const LocalOperator& LocalOperator::sigma_zx() {
    static const LocalOperator op{"ZX", pauli_z_m() * pauli_x_m()};
    return op;
}

LocalOperator LocalOperator::arbitrary(std::string name, const Eigen::Matrix2cd& m) {
    return LocalOperator{std::move(name), m};
}

bool LocalOperator::is_unitary(double tol) const {
    return (matrix * matrix.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tol;
}

QubitRegister::QubitRegister(int n, Eigen::VectorXcd amplitudes, Norm norm)
    : n_(n), amps_(std::move(amplitudes)) {
    if (n < 1 || n > kMaxQubits) {
        throw std::out_of_range("qubit count " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxQubits));
    }
    if (amps_.size() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("amplitude vector length must be 2^n");
    }
    if (norm == Norm::enforce) {
        const double nrm = amps_.norm();
        if (nrm < 1e-14) {
            throw std::invalid_argument("cannot normalize a zero state vector");
        }
        amps_ /= nrm;
    }
}

QubitRegister QubitRegister::basis(std::string_view kets) {
    const int n = static_cast<int>(kets.size());
    if (n < 1 || n > kMaxQubits) {
        throw std::out_of_range("ket string length outside 1..8");
    }
    int index = 0;
    for (char c : kets) {
        if (c != 'H' && c != 'V') {
            throw std::invalid_argument("ket string may contain only H and V");
        }
        index = index * 2 + (c == 'V' ? 1 : 0);
    }
    return basis(n, index);
}

QubitRegister QubitRegister::basis(int n, int index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    v(index) = 1.0;
    return QubitRegister(n, std::move(v), Norm::keep);
}

QubitRegister QubitRegister::normalized() const {
    return QubitRegister(n_, amps_, Norm::enforce);
}

QubitRegister tensor(const QubitRegister& a, const QubitRegister& b) {
    const int n = a.qubit_count() + b.qubit_count();
    if (n > kMaxQubits) {
        throw std::out_of_range("tensor product exceeds the " + std::to_string(kMaxQubits) +
                                "-qubit capacity");
    }
    Eigen::VectorXcd out(a.dim() * b.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        out.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
    }
    return QubitRegister(n, std::move(out), QubitRegister::Norm::keep);
}

QubitRegister apply_local(const QubitRegister& state, const LocalOperator& op, int target) {
    const int n = state.qubit_count();
    if (target < 1 || target > n) {
        throw std::out_of_range("target qubit " + std::to_string(target) + " outside 1.." +
                                std::to_string(n));
    }
    const Eigen::Index bit = Eigen::Index{1} << (n - target);
    const auto& u = op.matrix;
    Eigen::VectorXcd out(state.dim());
    for (Eigen::Index i = 0; i < state.dim(); ++i) {
        const Eigen::Index i0 = i & ~bit;  // target bit cleared
        const Eigen::Index i1 = i | bit;
        if (i & bit) {
            out(i) = u(1, 0) * state.amplitude(static_cast<int>(i0)) +
                     u(1, 1) * state.amplitude(static_cast<int>(i1));
        } else {
            out(i) = u(0, 0) * state.amplitude(static_cast<int>(i0)) +
                     u(0, 1) * state.amplitude(static_cast<int>(i1));
        }
    }
    return QubitRegister(n, std::move(out), QubitRegister::Norm::keep);
}

double fidelity(const QubitRegister& a, const QubitRegister& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("fidelity requires equal qubit counts");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace qconv
