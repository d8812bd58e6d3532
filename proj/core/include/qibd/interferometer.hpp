#pragma once

#include <cstdint>

#include "qibd/distribution.hpp"
#include "qibd/hamiltonian.hpp"
#include "qibd/statevector.hpp"

namespace qibd {

/// Which amplitude component the ancilla readout extracts. The imaginary
/// setting inserts a -pi/2 ancilla phase before the final Hadamard, turning
/// P(0) = (1 + Re A)/2 into (1 + Im A)/2.
enum class MeasurementSetting { RealPart, ImagPart };

/// One configured run of the single-ancilla circuit: ancilla is qubit 0,
/// data qubits 1..n. All components must share the data qubit count.
struct CircuitSpec {
    int num_data_qubits = 0;
    Preparation prep_p;
    Preparation prep_q;
    PhaseProfile phases;
    MeasurementSetting setting = MeasurementSetting::RealPart;
};

/// Exact Born probabilities, or a finite shot budget per measurement setting.
struct ReadoutMode {
    static ReadoutMode exact() { return {}; }
    static ReadoutMode with_shots(std::uint64_t count, std::uint64_t seed);

    bool is_exact() const { return shot_count == 0; }

    std::uint64_t shot_count = 0;  // 0 means exact
    std::uint64_t seed = 0;
};

/// Ancilla probabilities for both settings plus the reconstruction.
struct InterferometerReading {
    double p0_real_setting = 0.0;
    double p0_imag_setting = 0.0;
    double amplitude_re = 0.0;
    double amplitude_im = 0.0;
    double qibc = 0.0;
    double distance = 0.0;
    ReadoutMode mode;
};

/// Builds the spec from distributions, checking dimensions.
CircuitSpec make_circuit_spec(const DiscreteDistribution& p, const DiscreteDistribution& q,
                              PhaseProfile phases,
                              MeasurementSetting setting = MeasurementSetting::RealPart);

/// State after Hadamard, uncontrolled prep_p, controlled prep_p and
/// controlled prep_q: (|0>|psi_p> + |1>|psi_q>)/sqrt(2).
StateVector prepare_superposition(const CircuitSpec& spec);

/// Full circuit for the configured setting, up to the ancilla measurement.
StateVector run_circuit(const CircuitSpec& spec);

/// Ancilla P(0) for the configured setting.
double run_setting(const CircuitSpec& spec);

/// Runs both settings and reconstructs amplitude components, visibility and
/// distance. Shot mode draws an independent budget per setting, with
/// per-setting seeds derived from mode.seed.
InterferometerReading measure_qibd(CircuitSpec spec, const ReadoutMode& mode);

}  // namespace qibd
