#pragma once

#include "qibd/distribution.hpp"
#include "qibd/hamiltonian.hpp"

namespace qibd {

/// Transition amplitude A = sum_x sqrt(p(x)q(x)) e^{i phi(x)} split into
/// components, the interference visibility |A|^2, and the distance -ln|A|^2.
struct QibdResult {
    double amplitude_re = 0.0;
    double amplitude_im = 0.0;
    double qibc = 0.0;
    double distance = 0.0;
};

/// Closed-form evaluation of the visibility and distance.
QibdResult qibc_direct(const DiscreteDistribution& p, const DiscreteDistribution& q,
                       const PhaseProfile& phases);

/// -ln(qibc) with the conventions shared by both evaluation paths:
/// values in (1, 1 + 1e-12] clamp to one first, anything below 1e-300 maps
/// to +infinity, and inputs outside [0, 1 + 1e-12] are rejected.
double qibd_distance(double qibc);

/// |<psi_p|psi_q>|^2 for real amplitude encodings, i.e. BC^2.
double fidelity(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Matrix element <psi_p|H|psi_q> = sum_x sqrt(p(x)q(x)) diag(x); the
/// coefficient of the linear term of A(alpha).
double first_order_element(const DiscreteDistribution& p, const DiscreteDistribution& q,
                           const DiagonalHamiltonian& h);

}  // namespace qibd
