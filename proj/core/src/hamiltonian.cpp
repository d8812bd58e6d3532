#include "qibd/hamiltonian.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qibd {

namespace {

void check_qubit_count(int n) {
    if (n < 2) {
        throw std::invalid_argument("diagonal Hamiltonians need at least two qubits");
    }
    if (n > 20) {
        throw std::invalid_argument("diagonal table limited to 20 qubits");
    }
}

}  // namespace

DiagonalHamiltonian::DiagonalHamiltonian(int num_qubits, std::vector<double> diag)
    : num_qubits_(num_qubits), diag_(std::move(diag)) {
    if (num_qubits < 1 || diag_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("diagonal length does not match qubit count");
    }
}

int PhaseProfile::num_qubits() const {
    int n = 0;
    while ((std::size_t{1} << n) < phases.size()) ++n;
    return n;
}

DiagonalHamiltonian ising_chain(int n) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> diag(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        // Adjacent bit pairs, bit 1 at the top: equal neighbors +1, unequal -1.
        int value = 0;
        for (int b = n - 1; b >= 1; --b) {
            const int hi = static_cast<int>((x >> b) & 1);
            const int lo = static_cast<int>((x >> (b - 1)) & 1);
            value += (hi == lo) ? 1 : -1;
        }
        diag[x] = static_cast<double>(value);
    }
    return DiagonalHamiltonian(n, std::move(diag));
}

DiagonalHamiltonian custom_diagonal(int n, std::span<const Coupling> couplings) {
    check_qubit_count(n);
    for (std::size_t a = 0; a < couplings.size(); ++a) {
        const Coupling& c = couplings[a];
        if (c.i < 0 || c.j >= n || c.i >= c.j) {
            throw std::invalid_argument("coupling (" + std::to_string(c.i) + ", " +
                                        std::to_string(c.j) + ") must satisfy 0 <= i < j < n");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (couplings[b].i == c.i && couplings[b].j == c.j) {
                throw std::invalid_argument("duplicate coupling (" + std::to_string(c.i) + ", " +
                                            std::to_string(c.j) + ")");
            }
        }
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> diag(dim, 0.0);
    for (std::size_t x = 0; x < dim; ++x) {
        double value = 0.0;
        for (const Coupling& c : couplings) {
            const int bi = static_cast<int>((x >> (n - 1 - c.i)) & 1);
            const int bj = static_cast<int>((x >> (n - 1 - c.j)) & 1);
            value += (bi == bj) ? c.weight : -c.weight;
        }
        diag[x] = value;
    }
    return DiagonalHamiltonian(n, std::move(diag));
}

PhaseProfile phase_profile(const DiagonalHamiltonian& h, double alpha) {
    PhaseProfile profile;
    profile.alpha = alpha;
    profile.phases.resize(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) profile.phases[x] = alpha * h[x];
    return profile;
}

}  // namespace qibd
