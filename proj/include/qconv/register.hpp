#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qconv {

using Complex = std::complex<double>;

// Dense storage is capped at 8 qubits; everything in this project fits.
inline constexpr int kMaxQubits = 8;

inline constexpr double kNormTol = 1e-12;

/// A 2x2 single-qubit operator tagged with a printable name.
struct LocalOperator {
    std::string name;
    Eigen::Matrix2cd matrix;

    static const LocalOperator& identity();
    static const LocalOperator& sigma_x();
    static const LocalOperator& sigma_y();
    static const LocalOperator& sigma_z();
    static const LocalOperator& hadamard();
    /// sigma_z * sigma_x, the third factor of the Dicke correction.
    static const LocalOperator& sigma_zx();
    static LocalOperator arbitrary(std::string name, const Eigen::Matrix2cd& m);

    bool is_unitary(double tol = kNormTol) const;
};

/// Pure state of n polarization qubits. Qubit 1 is the most significant
/// index; H maps to bit 0 and V to bit 1, so |HV> sits at index 01b.
class QubitRegister {
  public:
    enum class Norm { enforce, keep };

    QubitRegister(int n, Eigen::VectorXcd amplitudes, Norm norm = Norm::enforce);

    /// Computational basis state from its ket string, e.g. "HHVV".
    static QubitRegister basis(std::string_view kets);
    static QubitRegister basis(int n, int index);

    int qubit_count() const { return n_; }
    Eigen::Index dim() const { return amps_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    Complex amplitude(int index) const { return amps_(index); }
    double norm() const { return amps_.norm(); }

    QubitRegister normalized() const;

  private:
    int n_;
    Eigen::VectorXcd amps_;
};

/// Kronecker composition; qubits of `a` become the leading (most
/// significant) block of the result.
QubitRegister tensor(const QubitRegister& a, const QubitRegister& b);

/// Apply a single-qubit operator to `target` (1-based).
QubitRegister apply_local(const QubitRegister& state, const LocalOperator& op, int target);

/// |<a|b>|^2 — global-phase invariant.
double fidelity(const QubitRegister& a, const QubitRegister& b);

}  // namespace qconv
