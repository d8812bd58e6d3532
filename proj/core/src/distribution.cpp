#include "qibd/distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "qibd/hamiltonian.hpp"
#include "compensated.hpp"

namespace qibd {

namespace {

double checked_sum(std::span<const double> values) {
    KahanSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

/// Normalizes weights in place. The divisor comes from a compensated sum,
/// so the normalized mass is one to a few ulp regardless of length.
void normalize(std::vector<double>& weights) {
    const double total = checked_sum(weights);
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw std::invalid_argument("weights must have positive finite total mass");
    }
    for (double& w : weights) w /= total;
}

int qubits_for_length(std::size_t len, const std::string& what) {
    if (len < 2 || !std::has_single_bit(len)) {
        throw std::invalid_argument(what + " length must be a power of two >= 2, got " +
                                    std::to_string(len));
    }
    return std::countr_zero(len);
}

std::vector<double> parse_csv_lines(std::istream& in, const std::string& name) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // tolerate blank lines and CR line endings
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(line.substr(start), &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                        ": not a number: '" + line + "'");
        }
        if (start + consumed != line.size()) {
            throw std::invalid_argument(name + ":" + std::to_string(lineno) +
                                        ": trailing characters after number: '" + line + "'");
        }
        values.push_back(v);
    }
    return values;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(int num_qubits, std::vector<double> probs)
    : num_qubits_(num_qubits), probs_(std::move(probs)) {
    if (num_qubits < 1 || probs_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("probability vector length does not match qubit count");
    }
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("probabilities must be nonnegative");
        }
    }
    const double total = checked_sum(probs_);
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("probabilities must sum to one, got " + std::to_string(total));
    }
}

DiscreteDistribution gaussian(int n, const GaussianSpec& spec) {
    if (n < 1) {
        throw std::invalid_argument("gaussian needs at least one qubit");
    }
    if (!(spec.sigma > 0.0)) {
        throw std::invalid_argument("gaussian sigma must be positive");
    }
    const std::size_t dim = std::size_t{1} << n;
    // Work relative to the smallest exponent over the truncated domain so a
    // far-off-domain mean cannot underflow every weight.
    double min_exponent = std::numeric_limits<double>::infinity();
    std::vector<double> exponents(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        const double d = (static_cast<double>(x) - spec.mu) / spec.sigma;
        exponents[x] = 0.5 * d * d;
        min_exponent = std::min(min_exponent, exponents[x]);
    }
    std::vector<double> weights(dim);
    for (std::size_t x = 0; x < dim; ++x) weights[x] = std::exp(min_exponent - exponents[x]);
    normalize(weights);
    return DiscreteDistribution(n, std::move(weights));
}

DiscreteDistribution theta_correlated(const ThetaFamilySpec& spec) {
    if (spec.num_qubits < 2) {
        throw std::invalid_argument("theta family needs at least two qubits (no neighbor pairs)");
    }
    if (spec.num_qubits > 20) {
        throw std::invalid_argument("theta family limited to 20 qubits");
    }
    if (!(spec.theta >= 0.0)) {
        throw std::invalid_argument("theta must be nonnegative");
    }
    // The exponent is exactly the chain diagonal, so the correlation
    // structure aligns with the probing Hamiltonian by construction.
    const DiagonalHamiltonian h = ising_chain(spec.num_qubits);
    const double top = spec.theta * static_cast<double>(spec.num_qubits - 1);
    std::vector<double> weights(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) {
        weights[x] = std::exp(spec.theta * h[x] - top);
    }
    normalize(weights);
    return DiscreteDistribution(spec.num_qubits, std::move(weights));
}

DiscreteDistribution uniform(int n) {
    if (n < 1) {
        throw std::invalid_argument("uniform needs at least one qubit");
    }
    const std::size_t dim = std::size_t{1} << n;
    return DiscreteDistribution(n, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

double bhattacharyya_coefficient(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("distributions must share the qubit count");
    }
    double bc = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        bc += std::sqrt(p[x] * q[x]);
    }
    return std::clamp(bc, 0.0, 1.0);
}

double classical_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    const double bc = bhattacharyya_coefficient(p, q);
    const double overlap = bc * bc;
    if (overlap < 1e-300) {
        return std::numeric_limits<double>::infinity();
    }
    return -std::log(overlap) + 0.0;  // unit overlap gives +0, not -0
}

DiscreteDistribution load_distribution(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open distribution file: " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw std::invalid_argument("distribution file is empty: " + path.string());
    }

    std::vector<double> values;
    if (text[first] == '[') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(path.string() + ": invalid JSON: " + e.what());
        }
        if (!doc.is_array()) {
            throw std::invalid_argument(path.string() + ": expected a flat JSON array of numbers");
        }
        for (const auto& item : doc) {
            if (!item.is_number()) {
                throw std::invalid_argument(path.string() +
                                            ": expected a flat JSON array of numbers");
            }
            values.push_back(item.get<double>());
        }
    } else {
        std::istringstream lines(text);
        values = parse_csv_lines(lines, path.string());
    }

    const int n = qubits_for_length(values.size(), path.string() + ": distribution");
    for (double v : values) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument(path.string() + ": negative probability entry");
        }
    }
    const double total = checked_sum(values);
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::invalid_argument(path.string() + ": probabilities sum to " +
                                    std::to_string(total) + ", outside [1-1e-6, 1+1e-6]");
    }
    normalize(values);
    return DiscreteDistribution(n, std::move(values));
}

}  // namespace qibd
