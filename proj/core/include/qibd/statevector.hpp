#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qibd {

using complex_t = std::complex<double>;

/// Contiguous block of qubit indices [first, first + count).
/// Qubit 0 is the most significant bit of the basis index, so a data
/// register starting at qubit 1 occupies the low bits below the ancilla.
struct QubitRange {
    int first = 0;
    int count = 0;
};

/// Outcome of repeated single-qubit measurements with a fixed seed.
struct ShotCounts {
    std::uint64_t shots = 0;
    std::uint64_t count_zero = 0;
    std::uint64_t count_one = 0;
    std::uint64_t seed = 0;
};

/// Self-adjoint unitary that maps |0...0> to a given vector of real
/// nonnegative amplitudes. Realized as the rank-1 reflection I - 2ww^T
/// with w along e0 - v; the degenerate target v = e0 is the identity.
/// Self-adjointness makes the inverse free: applying twice is a no-op.
class Preparation {
public:
    /// Empty placeholder (dim 0); usable members come from the factories.
    Preparation() = default;
    /// Build from unit-norm amplitudes (length a power of two, entries >= 0).
    static Preparation from_amplitudes(std::vector<double> target);
    /// Build from a probability vector; amplitudes are elementwise square roots.
    static Preparation from_probabilities(std::span<const double> probs);

    int num_data_qubits() const { return num_data_qubits_; }
    std::size_t dim() const { return target_.size(); }
    bool is_identity() const { return reflection_.empty(); }
    std::span<const double> target_amplitudes() const { return target_; }
    /// Unit Householder direction; empty in the identity case.
    std::span<const double> reflection_vector() const { return reflection_; }

private:
    Preparation(int n, std::vector<double> target, std::vector<double> reflection);

    int num_data_qubits_ = 0;
    std::vector<double> target_;
    std::vector<double> reflection_;
};

/// Dense statevector over m qubits: 2^m complex amplitudes, qubit 0 stored
/// as the most significant bit of the basis index. Carries exactly the gate
/// set the interferometric circuit needs.
class StateVector {
public:
    /// |0...0>
    explicit StateVector(int num_qubits);
    /// Takes ownership of the amplitudes; they must already be unit norm.
    StateVector(int num_qubits, std::vector<complex_t> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const complex_t> amplitudes() const { return amps_; }
    complex_t& operator[](std::size_t i) { return amps_[i]; }
    const complex_t& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

    void apply_hadamard(int qubit);
    /// Multiplies the |1> component of the qubit by e^{i angle}.
    void apply_phase(int qubit, double angle);
    /// Basis state |x> on the data register gains phase e^{i phase_angles[x]},
    /// restricted to the control qubit's |1> branch when a control is given.
    void apply_diagonal(std::span<const double> phase_angles, QubitRange data,
                        std::optional<int> control = std::nullopt);
    /// Applies the preparation reflection to the data register, optionally
    /// controlled. Rank-1 update, O(2^m) total.
    void apply_preparation(const Preparation& prep, QubitRange data,
                           std::optional<int> control = std::nullopt);

    /// Probability of reading 0 on the qubit, clamped to [0, 1].
    double prob_zero(int qubit) const;
    /// Bernoulli samples of the qubit; deterministic for a fixed seed.
    ShotCounts sample_qubit(int qubit, std::uint64_t shots, std::uint64_t seed) const;

private:
    std::size_t qubit_mask(int qubit) const;
    void check_qubit(int qubit) const;
    void check_range(const QubitRange& data, const std::optional<int>& control) const;

    int num_qubits_ = 0;
    std::vector<complex_t> amps_;
};

}  // namespace qibd
