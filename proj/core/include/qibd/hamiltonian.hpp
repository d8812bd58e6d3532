#pragma once

#include <span>
#include <vector>

namespace qibd {

/// One ZZ-type coupling term: weight * (-1)^(x_i xor x_j).
struct Coupling {
    int i = 0;
    int j = 0;
    double weight = 1.0;
};

/// Interaction Hamiltonian diagonal in the computational basis,
/// stored as the table diag(x) = <x|H|x>.
class DiagonalHamiltonian {
public:
    DiagonalHamiltonian(int num_qubits, std::vector<double> diag);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return diag_.size(); }
    std::span<const double> diag() const { return diag_; }
    double operator[](std::size_t x) const { return diag_[x]; }

private:
    int num_qubits_ = 0;
    std::vector<double> diag_;
};

/// Phase function of the evolution e^{i alpha H}: phases(x) = alpha * diag(x).
struct PhaseProfile {
    double alpha = 0.0;
    std::vector<double> phases;

    int num_qubits() const;
};

/// Nearest-neighbor chain: diag(x) = sum over adjacent bit pairs of
/// (-1)^(x_i xor x_{i+1}), with bit 1 the most significant. Requires n >= 2.
DiagonalHamiltonian ising_chain(int n);

/// diag(x) = sum over couplings of weight * (-1)^(x_i xor x_j).
/// Pairs must satisfy 0 <= i < j < n and be distinct.
DiagonalHamiltonian custom_diagonal(int n, std::span<const Coupling> couplings);

PhaseProfile phase_profile(const DiagonalHamiltonian& h, double alpha);

}  // namespace qibd
