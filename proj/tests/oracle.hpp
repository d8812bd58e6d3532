// Reference implementations used only by tests: dense matrices assembled
// from Kronecker factors, applied by full matrix-vector products. Slow and
// obvious on purpose, so disagreements point at the library.
#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;
using cmat = std::vector<std::vector<cplx>>;

cmat identity(std::size_t dim);
cmat kron(const cmat& a, const cmat& b);

/// u2 on the given qubit of an m-qubit register, qubit 0 most significant.
cmat single_qubit(int m, int qubit, const cmat& u2);

/// I - 2 w w^T with w along e0 - v, built densely from the amplitudes v.
cmat householder(const std::vector<double>& target);

/// Block-diagonal [I 0; 0 u]: u on all qubits below a control at qubit 0.
cmat controlled_block(const cmat& u);

/// u on the contiguous qubits [first, first + k), identities elsewhere.
cmat embed(int m, int first, const cmat& u);

cvec matvec(const cmat& a, const cvec& v);
double max_abs_diff(const cvec& a, const cvec& b);

/// Normalized random complex vector over m qubits.
cvec random_state(int m, std::mt19937_64& rng);

/// Random normalized probability vector of length 2^n.
std::vector<double> random_probs(int n, std::mt19937_64& rng);

/// Transition amplitude sum_x sqrt(p(x) q(x)) e^{i phi(x)} accumulated in
/// extended precision.
cplx amplitude_sum(const std::vector<double>& p, const std::vector<double>& q,
                   const std::vector<double>& phases);

}  // namespace oracle
