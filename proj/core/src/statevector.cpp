#include "qibd/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "compensated.hpp"

namespace qibd {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

int qubits_for_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude vector length must be a power of two >= 2, got " +
                                    std::to_string(dim));
    }
    return std::countr_zero(dim);
}

}  // namespace

Preparation::Preparation(int n, std::vector<double> target, std::vector<double> reflection)
    : num_data_qubits_(n), target_(std::move(target)), reflection_(std::move(reflection)) {}

Preparation Preparation::from_amplitudes(std::vector<double> target) {
    const int n = qubits_for_dim(target.size());
    for (double v : target) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument("target amplitudes must be nonnegative");
        }
    }
    double norm_sq = 0.0;
    {
        KahanSum acc;
        for (double v : target) acc.add(v * v);
        norm_sq = acc.value();
    }
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        throw std::invalid_argument("target amplitudes must have unit norm, |v|^2 = " +
                                    std::to_string(norm_sq));
    }

    // Householder direction w along e0 - v. A zero direction means the
    // target is the first basis state and the preparation is the identity.
    std::vector<double> w(target.size());
    w[0] = 1.0 - target[0];
    for (std::size_t x = 1; x < target.size(); ++x) w[x] = -target[x];
    KahanSum wsq;
    for (double v : w) wsq.add(v * v);
    if (wsq.value() <= 0.0) {
        return Preparation(n, std::move(target), {});
    }
    const double inv_norm = 1.0 / std::sqrt(wsq.value());
    for (double& v : w) v *= inv_norm;
    return Preparation(n, std::move(target), std::move(w));
}

Preparation Preparation::from_probabilities(std::span<const double> probs) {
    std::vector<double> target(probs.size());
    for (std::size_t x = 0; x < probs.size(); ++x) {
        if (!(probs[x] >= 0.0)) {
            throw std::invalid_argument("probabilities must be nonnegative");
        }
        target[x] = std::sqrt(probs[x]);
    }
    return from_amplitudes(std::move(target));
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("state vector needs at least one qubit");
    }
    if (num_qubits > 30) {
        throw std::invalid_argument("state vector limited to 30 qubits");
    }
    amps_.assign(std::size_t{1} << num_qubits, complex_t{0.0, 0.0});
    amps_[0] = complex_t{1.0, 0.0};
}

StateVector::StateVector(int num_qubits, std::vector<complex_t> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits < 1 || amps_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
}

double StateVector::norm_squared() const {
    KahanSum acc;
    for (const complex_t& a : amps_) acc.add(std::norm(a));
    return acc.value();
}

std::size_t StateVector::qubit_mask(int qubit) const {
    return std::size_t{1} << (num_qubits_ - 1 - qubit);
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(num_qubits_) + " qubits");
    }
}

void StateVector::check_range(const QubitRange& data, const std::optional<int>& control) const {
    if (data.count < 1 || data.first < 0 || data.first + data.count > num_qubits_) {
        throw std::out_of_range("data qubit range out of bounds");
    }
    if (control) {
        check_qubit(*control);
        if (*control >= data.first && *control < data.first + data.count) {
            throw std::invalid_argument("control qubit overlaps the data range");
        }
    }
}

void StateVector::apply_hadamard(int qubit) {
    check_qubit(qubit);
    const std::size_t mask = qubit_mask(qubit);
    for (std::size_t base = 0; base < amps_.size(); base += 2 * mask) {
        for (std::size_t off = 0; off < mask; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + mask;
            const complex_t a0 = amps_[i0];
            const complex_t a1 = amps_[i1];
            amps_[i0] = (a0 + a1) * kInvSqrt2;
            amps_[i1] = (a0 - a1) * kInvSqrt2;
        }
    }
}

void StateVector::apply_phase(int qubit, double angle) {
    check_qubit(qubit);
    const std::size_t mask = qubit_mask(qubit);
    const complex_t w = std::polar(1.0, angle);
    for (std::size_t base = 0; base < amps_.size(); base += 2 * mask) {
        for (std::size_t off = 0; off < mask; ++off) {
            amps_[base + off + mask] *= w;
        }
    }
}

void StateVector::apply_diagonal(std::span<const double> phase_angles, QubitRange data,
                                 std::optional<int> control) {
    check_range(data, control);
    if (phase_angles.size() != (std::size_t{1} << data.count)) {
        throw std::invalid_argument("phase table length does not match the data range");
    }
    std::vector<complex_t> w(phase_angles.size());
    for (std::size_t x = 0; x < w.size(); ++x) w[x] = std::polar(1.0, phase_angles[x]);

    const int shift = num_qubits_ - data.first - data.count;
    const std::size_t xmask = (std::size_t{1} << data.count) - 1;
    const std::size_t cmask = control ? qubit_mask(*control) : 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (cmask && !(i & cmask)) continue;
        amps_[i] *= w[(i >> shift) & xmask];
    }
}

void StateVector::apply_preparation(const Preparation& prep, QubitRange data,
                                    std::optional<int> control) {
    check_range(data, control);
    if (prep.dim() != (std::size_t{1} << data.count)) {
        throw std::invalid_argument("preparation dimension does not match the data range");
    }
    if (prep.is_identity()) return;

    const std::span<const double> w = prep.reflection_vector();
    const int shift = num_qubits_ - data.first - data.count;
    const std::size_t step = std::size_t{1} << shift;
    const std::size_t block = std::size_t{1} << (shift + data.count);
    const std::size_t cmask = control ? qubit_mask(*control) : 0;

    // One reflection per (high bits, low bits) slice through the data block.
    for (std::size_t obase = 0; obase < amps_.size(); obase += block) {
        for (std::size_t inner = 0; inner < step; ++inner) {
            const std::size_t base = obase + inner;
            if (cmask && !(base & cmask)) continue;
            complex_t dot{0.0, 0.0};
            for (std::size_t x = 0; x < w.size(); ++x) {
                dot += w[x] * amps_[base + (x << shift)];
            }
            dot *= 2.0;
            for (std::size_t x = 0; x < w.size(); ++x) {
                amps_[base + (x << shift)] -= w[x] * dot;
            }
        }
    }
}

double StateVector::prob_zero(int qubit) const {
    check_qubit(qubit);
    const std::size_t mask = qubit_mask(qubit);
    KahanSum acc;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * mask) {
        for (std::size_t off = 0; off < mask; ++off) {
            acc.add(std::norm(amps_[base + off]));
        }
    }
    return std::clamp(acc.value(), 0.0, 1.0);
}

ShotCounts StateVector::sample_qubit(int qubit, std::uint64_t shots, std::uint64_t seed) const {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be positive");
    }
    const double p0 = prob_zero(qubit);
    std::mt19937_64 rng(seed);
    std::uint64_t count_zero = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1); avoids distribution classes so the
        // stream is identical across standard library implementations.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        count_zero += (u < p0) ? 1 : 0;
    }
    return ShotCounts{shots, count_zero, shots - count_zero, seed};
}

}  // namespace qibd
