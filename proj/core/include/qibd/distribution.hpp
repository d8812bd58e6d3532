#pragma once

#include <filesystem>
#include <span>
#include <vector>

namespace qibd {

/// Normalized probability mass over 2^n outcomes.
class DiscreteDistribution {
public:
    /// Validates size = 2^n, nonnegative entries, total mass 1 within 1e-12.
    DiscreteDistribution(int num_qubits, std::vector<double> probs);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return probs_.size(); }
    std::span<const double> probs() const { return probs_; }
    double operator[](std::size_t x) const { return probs_[x]; }

private:
    int num_qubits_ = 0;
    std::vector<double> probs_;
};

/// Location and spread of a discrete Gaussian, in outcome-index units.
struct GaussianSpec {
    double mu = 0.0;
    double sigma = 1.0;
};

/// Nearest-neighbor-correlated family: probs proportional to
/// exp(theta * h(x)) with h the Ising chain diagonal.
struct ThetaFamilySpec {
    double theta = 0.0;
    int num_qubits = 2;
};

/// Gaussian mass truncated to {0 .. 2^n-1} and renormalized over that domain.
DiscreteDistribution gaussian(int n, const GaussianSpec& spec);

/// exp(theta * h(x)) / N(theta), h(x) the Ising chain diagonal for spec.num_qubits.
DiscreteDistribution theta_correlated(const ThetaFamilySpec& spec);

DiscreteDistribution uniform(int n);

/// Sum over x of sqrt(p(x) q(x)), clamped to [0, 1].
double bhattacharyya_coefficient(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// -ln BC^2; +infinity when the supports are disjoint.
double classical_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);

/// Reads a CSV (one probability per line) or JSON (flat array) file.
/// The length must be a power of two; a total mass within 1e-6 of one is
/// renormalized, anything further off is rejected.
DiscreteDistribution load_distribution(const std::filesystem::path& path);

}  // namespace qibd
