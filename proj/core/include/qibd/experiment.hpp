#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qibd/distribution.hpp"
#include "qibd/hamiltonian.hpp"
#include "qibd/interferometer.hpp"

namespace qibd {

enum class SourceKind { Gaussian, Theta, Uniform, File };

/// Where a distribution comes from. Text form: "gaussian:MU,SIGMA",
/// "theta:THETA", "uniform", or "file:PATH".
struct DistributionSource {
    SourceKind kind = SourceKind::Uniform;
    GaussianSpec gauss;
    double theta = 0.0;
    std::string path;
};

enum class HamiltonianKind { IsingChain, Custom };

struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::IsingChain;
    std::vector<Coupling> couplings;  // Custom only
};

enum class OutputFormat { Csv, Json };

/// Everything a sweep or distance command needs. Mirrored by the JSON
/// config file; command-line flags override individual fields.
struct ExperimentConfig {
    int n = 0;  // 0 means: infer from file sources
    DistributionSource p_source;
    DistributionSource q_source;
    HamiltonianSpec hamiltonian;
    std::vector<double> alpha_grid;
    std::optional<std::vector<double>> theta_grid;
    ReadoutMode mode = ReadoutMode::exact();
    std::string output_path;  // empty: write to the command's output stream
    OutputFormat format = OutputFormat::Csv;
};

/// One emitted grid point.
struct SweepRow {
    double alpha = 0.0;
    std::optional<double> theta;
    double qibd = 0.0;
    double classical = 0.0;
    double qibc = 0.0;
    double amplitude_re = 0.0;
    double amplitude_im = 0.0;
};

DistributionSource parse_source(const std::string& text);
std::string source_to_string(const DistributionSource& source);

/// "ising", or "custom:FILE" with FILE parsed by load_couplings.
HamiltonianSpec parse_hamiltonian(const std::string& text);

/// "START:STOP:STEP" inclusive of both endpoints (step > 0, stop >= start).
std::vector<double> parse_grid(const std::string& text);

/// Materializes a source at n qubits; file sources must match n when n > 0.
DiscreteDistribution realize_source(const DistributionSource& source, int n);

/// Reads a JSON file mirroring ExperimentConfig.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Reads couplings from a JSON file holding a list of [i, j, weight] triples.
std::vector<Coupling> load_couplings(const std::filesystem::path& path);

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_rows_json(std::ostream& out, const std::vector<SweepRow>& rows);

/// Exit codes shared by the commands: 0 success, 1 validation mismatch,
/// 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Reproduces the embedded n=3 reference table through both evaluation
/// paths and prints one row per interaction strength, then cross-checks a
/// weighted non-chain coupling instance whose signed imaginary component
/// pins the phase convention. Returns 0 only if every check passes.
int cmd_validate(std::ostream& out);

/// One row per alpha; the classical column is constant across rows.
int cmd_sweep_alpha(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

/// One row per theta at fixed alpha; q is the theta-correlated family member.
int cmd_sweep_theta(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

/// Single comparison record: qibd, classical, fidelity, qibc, amplitude.
int cmd_distance(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

}  // namespace qibd
