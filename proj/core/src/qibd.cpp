#include "qibd/qibd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qibd/hamiltonian.hpp"

namespace qibd {

double qibd_distance(double qibc) {
    if (!(qibc >= 0.0) || qibc > 1.0 + 1e-12) {
        throw std::invalid_argument("interference overlap outside [0, 1]: " +
                                    std::to_string(qibc));
    }
    if (qibc > 1.0) qibc = 1.0;
    // Zero overlap means the distance diverges; below this floor the log is
    // meaningless noise anyway.
    if (qibc < 1e-300) {
        return std::numeric_limits<double>::infinity();
    }
    return -std::log(qibc) + 0.0;  // unit overlap gives +0, not -0
}

QibdResult qibc_direct(const DiscreteDistribution& p, const DiscreteDistribution& q,
                       const PhaseProfile& phases) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("distributions must share the qubit count");
    }
    if (phases.num_qubits() != p.num_qubits()) {
        throw std::invalid_argument("phase profile does not match the distribution size");
    }
    // Plain left-to-right sums: at alpha = 0 every cosine is one and every
    // sine is zero, so the real part reproduces the classical overlap sum
    // term for term and the two paths agree exactly, not just closely.
    double re = 0.0;
    double im = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        const double w = std::sqrt(p[x] * q[x]);
        re += w * std::cos(phases.phases[x]);
        im += w * std::sin(phases.phases[x]);
    }
    QibdResult result;
    result.amplitude_re = re;
    result.amplitude_im = im;
    result.qibc = std::clamp(re * re + im * im, 0.0, 1.0);
    result.distance = qibd_distance(result.qibc);
    return result;
}

double fidelity(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    const double bc = bhattacharyya_coefficient(p, q);
    return bc * bc;
}

double first_order_element(const DiscreteDistribution& p, const DiscreteDistribution& q,
                           const DiagonalHamiltonian& h) {
    if (p.num_qubits() != q.num_qubits() || h.num_qubits() != p.num_qubits()) {
        throw std::invalid_argument("distributions and diagonal must share the qubit count");
    }
    double m = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        m += std::sqrt(p[x] * q[x]) * h[x];
    }
    return m;
}

}  // namespace qibd
