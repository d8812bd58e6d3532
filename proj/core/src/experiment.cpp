#include "qibd/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qibd/qibd.hpp"

namespace qibd {

namespace {

bool log_enabled() {
    const char* v = std::getenv("QIBD_LOG");
    if (v == nullptr) return false;
    const std::string_view s(v);
    return !s.empty() && s != "0" && s != "quiet";
}

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

nlohmann::json json_value(double v) {
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    return v;
}

double parse_number(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": not a number: '" + text + "'");
    }
    if (pos != text.size()) {
        throw std::invalid_argument(what + ": trailing characters in number: '" + text + "'");
    }
    if (!std::isfinite(v)) {
        throw std::invalid_argument(what + ": must be finite: '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

DiagonalHamiltonian build_hamiltonian(const HamiltonianSpec& spec, int n) {
    if (spec.kind == HamiltonianKind::IsingChain) {
        return ising_chain(n);
    }
    return custom_diagonal(n, spec.couplings);
}

/// Materializes both sources. A qubit count of zero is filled in from the
/// first file source; purely generated sources need an explicit count.
std::pair<DiscreteDistribution, DiscreteDistribution> realize_pair(const ExperimentConfig& config) {
    int n = config.n;
    std::optional<DiscreteDistribution> p;
    std::optional<DiscreteDistribution> q;
    if (n == 0) {
        if (config.p_source.kind == SourceKind::File) {
            p = realize_source(config.p_source, 0);
            n = p->num_qubits();
        } else if (config.q_source.kind == SourceKind::File) {
            q = realize_source(config.q_source, 0);
            n = q->num_qubits();
        } else {
            throw std::invalid_argument("qubit count required: pass --n or use a file source");
        }
    }
    if (!p) p = realize_source(config.p_source, n);
    if (!q) q = realize_source(config.q_source, n);
    if (p->num_qubits() != q->num_qubits()) {
        throw std::invalid_argument("p and q have different sizes");
    }
    return {std::move(*p), std::move(*q)};
}

ReadoutMode row_mode(const ReadoutMode& base, std::size_t row) {
    if (base.is_exact()) return base;
    return ReadoutMode::with_shots(base.shot_count, base.seed ^ static_cast<std::uint64_t>(row));
}

SweepRow evaluate_row(const DiscreteDistribution& p, const DiscreteDistribution& q,
                      const DiagonalHamiltonian& h, double alpha, std::optional<double> theta,
                      double classical, const ReadoutMode& mode) {
    const InterferometerReading reading =
        measure_qibd(make_circuit_spec(p, q, phase_profile(h, alpha)), mode);
    SweepRow row;
    row.alpha = alpha;
    row.theta = theta;
    row.qibd = reading.distance;
    row.classical = classical;
    row.qibc = reading.qibc;
    row.amplitude_re = reading.amplitude_re;
    row.amplitude_im = reading.amplitude_im;
    return row;
}

/// Writes rows to the configured destination (file, or the command stream).
void emit_rows(const ExperimentConfig& config, const std::vector<SweepRow>& rows,
               std::ostream& out, std::ostream& log) {
    const auto write = [&](std::ostream& sink) {
        if (config.format == OutputFormat::Csv) {
            write_rows_csv(sink, rows);
        } else {
            write_rows_json(sink, rows);
        }
    };
    if (config.output_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(config.output_path);
    if (!file) {
        throw std::invalid_argument("cannot open output file: " + config.output_path);
    }
    write(file);
    if (!file.good()) {
        throw std::invalid_argument("failed while writing: " + config.output_path);
    }
    if (log_enabled()) {
        log << "wrote " << rows.size() << " rows to " << config.output_path << "\n";
    }
}

std::vector<double> grid_from_json(const nlohmann::json& value, const std::string& key) {
    if (value.is_string()) {
        return parse_grid(value.get<std::string>());
    }
    if (value.is_array()) {
        std::vector<double> grid;
        for (const auto& item : value) {
            if (!item.is_number()) {
                throw std::invalid_argument("config key '" + key + "': expected numbers");
            }
            grid.push_back(item.get<double>());
        }
        if (grid.empty()) {
            throw std::invalid_argument("config key '" + key + "': grid is empty");
        }
        return grid;
    }
    if (value.is_number()) {
        return {value.get<double>()};
    }
    throw std::invalid_argument("config key '" + key +
                                "': expected \"START:STOP:STEP\", a list, or a number");
}

}  // namespace

DistributionSource parse_source(const std::string& text) {
    DistributionSource source;
    if (text == "uniform") {
        source.kind = SourceKind::Uniform;
        return source;
    }
    const std::size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);
    if (head == "gaussian" && colon != std::string::npos) {
        const std::vector<std::string> args = split(rest, ',');
        if (args.size() != 2) {
            throw std::invalid_argument("gaussian source needs MU,SIGMA, got '" + text + "'");
        }
        source.kind = SourceKind::Gaussian;
        source.gauss.mu = parse_number(args[0], "gaussian mu");
        source.gauss.sigma = parse_number(args[1], "gaussian sigma");
        return source;
    }
    if (head == "theta" && colon != std::string::npos) {
        source.kind = SourceKind::Theta;
        source.theta = parse_number(rest, "theta");
        return source;
    }
    if (head == "file" && colon != std::string::npos && !rest.empty()) {
        source.kind = SourceKind::File;
        source.path = rest;
        return source;
    }
    throw std::invalid_argument(
        "unknown source '" + text +
        "'; expected gaussian:MU,SIGMA | theta:THETA | uniform | file:PATH");
}

std::string source_to_string(const DistributionSource& source) {
    switch (source.kind) {
        case SourceKind::Gaussian:
            return "gaussian:" + format_value(source.gauss.mu) + "," +
                   format_value(source.gauss.sigma);
        case SourceKind::Theta:
            return "theta:" + format_value(source.theta);
        case SourceKind::Uniform:
            return "uniform";
        case SourceKind::File:
            return "file:" + source.path;
    }
    return "uniform";
}

HamiltonianSpec parse_hamiltonian(const std::string& text) {
    HamiltonianSpec spec;
    if (text == "ising") {
        spec.kind = HamiltonianKind::IsingChain;
        return spec;
    }
    constexpr std::string_view kPrefix = "custom:";
    if (text.size() > kPrefix.size() && std::string_view(text).substr(0, kPrefix.size()) == kPrefix) {
        spec.kind = HamiltonianKind::Custom;
        spec.couplings = load_couplings(text.substr(kPrefix.size()));
        return spec;
    }
    throw std::invalid_argument("unknown hamiltonian '" + text + "'; expected ising | custom:FILE");
}

std::vector<double> parse_grid(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3) {
        throw std::invalid_argument("grid must be START:STOP:STEP, got '" + text + "'");
    }
    const double start = parse_number(parts[0], "grid start");
    const double stop = parse_number(parts[1], "grid stop");
    const double step = parse_number(parts[2], "grid step");
    if (!(step > 0.0)) {
        throw std::invalid_argument("grid step must be positive, got '" + parts[2] + "'");
    }
    if (stop < start) {
        throw std::invalid_argument("grid stop must be >= start, got '" + text + "'");
    }
    // Tolerate the usual float drift so STOP lands on the grid when it is an
    // exact multiple of STEP away from START.
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> grid(count + 1);
    for (std::size_t k = 0; k <= count; ++k) {
        grid[k] = start + static_cast<double>(k) * step;
    }
    return grid;
}

DiscreteDistribution realize_source(const DistributionSource& source, int n) {
    if (source.kind == SourceKind::File) {
        DiscreteDistribution d = load_distribution(source.path);
        if (n > 0 && d.num_qubits() != n) {
            throw std::invalid_argument(source.path + ": holds " +
                                        std::to_string(d.num_qubits()) + " qubits, expected " +
                                        std::to_string(n));
        }
        return d;
    }
    if (n <= 0) {
        throw std::invalid_argument("generated sources need an explicit qubit count");
    }
    switch (source.kind) {
        case SourceKind::Gaussian:
            return gaussian(n, source.gauss);
        case SourceKind::Theta:
            return theta_correlated(ThetaFamilySpec{source.theta, n});
        default:
            return uniform(n);
    }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path.string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument(path.string() + ": config must be a JSON object");
    }

    ExperimentConfig config;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    for (const auto& [key, value] : doc.items()) {
        if (key == "n") {
            if (!value.is_number_integer() || value.get<int>() < 0) {
                throw std::invalid_argument("config key 'n': expected a nonnegative integer");
            }
            config.n = value.get<int>();
        } else if (key == "p") {
            config.p_source = parse_source(value.get<std::string>());
        } else if (key == "q") {
            config.q_source = parse_source(value.get<std::string>());
        } else if (key == "hamiltonian") {
            config.hamiltonian = parse_hamiltonian(value.get<std::string>());
        } else if (key == "alpha" || key == "alpha_grid") {
            if (!config.alpha_grid.empty()) {
                throw std::invalid_argument("config: give either 'alpha' or 'alpha_grid', not both");
            }
            config.alpha_grid = grid_from_json(value, key);
        } else if (key == "theta_grid") {
            config.theta_grid = grid_from_json(value, key);
        } else if (key == "shots") {
            if (!value.is_number_unsigned()) {
                throw std::invalid_argument("config key 'shots': expected a nonnegative integer");
            }
            shots = value.get<std::uint64_t>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) {
                throw std::invalid_argument("config key 'seed': expected a nonnegative integer");
            }
            seed = value.get<std::uint64_t>();
        } else if (key == "out") {
            config.output_path = value.get<std::string>();
        } else if (key == "format") {
            const std::string f = value.get<std::string>();
            if (f == "csv") {
                config.format = OutputFormat::Csv;
            } else if (f == "json") {
                config.format = OutputFormat::Json;
            } else {
                throw std::invalid_argument("config key 'format': expected csv or json");
            }
        } else {
            throw std::invalid_argument(path.string() + ": unknown config key '" + key + "'");
        }
    }
    config.mode = shots == 0 ? ReadoutMode::exact() : ReadoutMode::with_shots(shots, seed);
    return config;
}

std::vector<Coupling> load_couplings(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open couplings file: " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path.string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_array()) {
        throw std::invalid_argument(path.string() + ": expected a JSON array of [i, j, weight]");
    }
    std::vector<Coupling> couplings;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number()) {
            throw std::invalid_argument(path.string() + ": each coupling must be [i, j, weight]");
        }
        couplings.push_back(Coupling{item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
    }
    return couplings;
}

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "alpha,theta,qibd,classical,qibc,amp_re,amp_im\n";
    for (const SweepRow& row : rows) {
        out << format_value(row.alpha) << ',';
        if (row.theta) out << format_value(*row.theta);
        out << ',' << format_value(row.qibd) << ',' << format_value(row.classical) << ','
            << format_value(row.qibc) << ',' << format_value(row.amplitude_re) << ','
            << format_value(row.amplitude_im) << '\n';
    }
}

void write_rows_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const SweepRow& row : rows) {
        nlohmann::json record;
        record["alpha"] = json_value(row.alpha);
        record["theta"] = row.theta ? json_value(*row.theta) : nlohmann::json(nullptr);
        record["qibd"] = json_value(row.qibd);
        record["classical"] = json_value(row.classical);
        record["qibc"] = json_value(row.qibc);
        record["amp_re"] = json_value(row.amplitude_re);
        record["amp_im"] = json_value(row.amplitude_im);
        doc.push_back(std::move(record));
    }
    out << doc.dump(2) << '\n';
}

int cmd_validate(std::ostream& out) {
    const DiscreteDistribution p = gaussian(3, GaussianSpec{2.0, 1.0});
    const DiscreteDistribution q = gaussian(3, GaussianSpec{5.0, 1.5});
    const DiagonalHamiltonian chain = ising_chain(3);
    const double classical = classical_distance(p, q);

    constexpr double alphas[] = {0.0, 0.5, 1.0, 1.5};
    constexpr double targets[] = {1.417, 1.666, 2.469, 3.627};

    bool ok = true;
    std::vector<std::string> diffs;
    char line[160];
    out << "  alpha    direct   circuit  classical   target\n";
    for (int k = 0; k < 4; ++k) {
        const double alpha = alphas[k];
        const QibdResult direct = qibc_direct(p, q, phase_profile(chain, alpha));
        const InterferometerReading circuit =
            measure_qibd(make_circuit_spec(p, q, phase_profile(chain, alpha)), ReadoutMode::exact());

        const double direct_err = std::abs(direct.distance - targets[k]);
        const double circuit_err = std::abs(circuit.distance - targets[k]);
        const double path_gap = std::abs(direct.distance - circuit.distance);
        bool row_ok = direct_err <= 0.01 && circuit_err <= 0.01 && path_gap <= 1e-10;
        if (direct_err > 0.01) {
            std::snprintf(line, sizeof line, "alpha=%.2f: direct off target by %.3g (tol 0.01)",
                          alpha, direct_err);
            diffs.emplace_back(line);
        }
        if (circuit_err > 0.01) {
            std::snprintf(line, sizeof line, "alpha=%.2f: circuit off target by %.3g (tol 0.01)",
                          alpha, circuit_err);
            diffs.emplace_back(line);
        }
        if (path_gap > 1e-10) {
            std::snprintf(line, sizeof line, "alpha=%.2f: paths disagree by %.3g (tol 1e-10)",
                          alpha, path_gap);
            diffs.emplace_back(line);
        }
        if (alpha == 0.0) {
            const double gap = std::max(std::abs(direct.distance - classical),
                                        std::abs(circuit.distance - classical));
            if (gap > 1e-12) {
                std::snprintf(line, sizeof line,
                              "alpha=0: distance differs from the classical value by %.3g (tol 1e-12)",
                              gap);
                diffs.emplace_back(line);
                row_ok = false;
            }
        }
        ok = ok && row_ok;
        std::snprintf(line, sizeof line, "  %5.2f  %8.6f  %8.6f   %8.6f    %5.3f  %s\n", alpha,
                      direct.distance, circuit.distance, classical, targets[k],
                      row_ok ? "ok" : "FAIL");
        out << line;
    }

    // Non-chain weighted couplings with an asymmetric pair: the signed
    // imaginary component pins the phase sign and the bit ordering, which
    // the table above cannot see (its visibility is even in alpha).
    const std::vector<Coupling> couplings = {{0, 1, 1.0}, {1, 2, 0.5}, {0, 2, -0.75}};
    const DiagonalHamiltonian custom = custom_diagonal(3, couplings);
    const PhaseProfile profile = phase_profile(custom, 0.9);
    const QibdResult direct = qibc_direct(p, q, profile);
    const InterferometerReading circuit =
        measure_qibd(make_circuit_spec(p, q, profile), ReadoutMode::exact());
    constexpr double kExpectedRe = 0.2280422614865826;
    constexpr double kExpectedIm = -0.03067307237273806;
    for (const auto& [label, re, im] :
         {std::tuple{"direct", direct.amplitude_re, direct.amplitude_im},
          std::tuple{"circuit", circuit.amplitude_re, circuit.amplitude_im}}) {
        const double err = std::max(std::abs(re - kExpectedRe), std::abs(im - kExpectedIm));
        std::snprintf(line, sizeof line, "  coupling regression (%s): amplitude %.8f %+.8fi  %s\n",
                      label, re, im, err <= 1e-6 ? "ok" : "FAIL");
        out << line;
        if (err > 1e-6) {
            std::snprintf(line, sizeof line, "coupling regression (%s): amplitude off by %.3g (tol 1e-6)",
                          label, err);
            diffs.emplace_back(line);
            ok = false;
        }
    }

    if (!ok) {
        out << "validation FAILED\n";
        for (const std::string& d : diffs) out << "  " << d << "\n";
        return kExitValidationFailed;
    }
    out << "validation passed\n";
    return kExitOk;
}

int cmd_sweep_alpha(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
    try {
        if (config.alpha_grid.empty()) {
            throw std::invalid_argument("sweep-alpha needs --alpha-grid (or --alpha)");
        }
        const auto [p, q] = realize_pair(config);
        const DiagonalHamiltonian h = build_hamiltonian(config.hamiltonian, p.num_qubits());
        const double classical = classical_distance(p, q);

        std::vector<SweepRow> rows;
        rows.reserve(config.alpha_grid.size());
        for (std::size_t k = 0; k < config.alpha_grid.size(); ++k) {
            rows.push_back(evaluate_row(p, q, h, config.alpha_grid[k], std::nullopt, classical,
                                        row_mode(config.mode, k)));
            if (log_enabled()) {
                log << "alpha=" << format_value(rows.back().alpha)
                    << " qibd=" << format_value(rows.back().qibd) << "\n";
            }
        }
        emit_rows(config, rows, out, log);
        return kExitOk;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_sweep_theta(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
    try {
        if (!config.theta_grid || config.theta_grid->empty()) {
            throw std::invalid_argument("sweep-theta needs --theta-grid");
        }
        if (config.alpha_grid.size() > 1) {
            throw std::invalid_argument("sweep-theta runs at one fixed --alpha");
        }
        const double alpha = config.alpha_grid.empty() ? 1.0 : config.alpha_grid.front();

        int n = config.n;
        std::optional<DiscreteDistribution> p;
        if (n == 0) {
            if (config.p_source.kind != SourceKind::File) {
                throw std::invalid_argument("qubit count required: pass --n or use a file source");
            }
            p = realize_source(config.p_source, 0);
            n = p->num_qubits();
        } else {
            p = realize_source(config.p_source, n);
        }
        const DiagonalHamiltonian h = build_hamiltonian(config.hamiltonian, n);

        std::vector<SweepRow> rows;
        rows.reserve(config.theta_grid->size());
        for (std::size_t k = 0; k < config.theta_grid->size(); ++k) {
            const double theta = (*config.theta_grid)[k];
            const DiscreteDistribution q = theta_correlated(ThetaFamilySpec{theta, n});
            rows.push_back(evaluate_row(*p, q, h, alpha, theta, classical_distance(*p, q),
                                        row_mode(config.mode, k)));
            if (log_enabled()) {
                log << "theta=" << format_value(theta)
                    << " qibd=" << format_value(rows.back().qibd) << "\n";
            }
        }
        emit_rows(config, rows, out, log);
        return kExitOk;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_distance(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
    try {
        if (config.alpha_grid.size() != 1) {
            throw std::invalid_argument("distance needs exactly one --alpha");
        }
        const double alpha = config.alpha_grid.front();
        const auto [p, q] = realize_pair(config);
        const DiagonalHamiltonian h = build_hamiltonian(config.hamiltonian, p.num_qubits());
        const InterferometerReading reading =
            measure_qibd(make_circuit_spec(p, q, phase_profile(h, alpha)),
                         row_mode(config.mode, 0));
        const double classical = classical_distance(p, q);
        const double fid = fidelity(p, q);

        const auto write = [&](std::ostream& sink) {
            if (config.format == OutputFormat::Csv) {
                sink << "alpha,qibd,classical,fidelity,qibc,amp_re,amp_im\n"
                     << format_value(alpha) << ',' << format_value(reading.distance) << ','
                     << format_value(classical) << ',' << format_value(fid) << ','
                     << format_value(reading.qibc) << ',' << format_value(reading.amplitude_re)
                     << ',' << format_value(reading.amplitude_im) << '\n';
            } else {
                nlohmann::json record;
                record["alpha"] = json_value(alpha);
                record["qibd"] = json_value(reading.distance);
                record["classical"] = json_value(classical);
                record["fidelity"] = json_value(fid);
                record["qibc"] = json_value(reading.qibc);
                record["amp_re"] = json_value(reading.amplitude_re);
                record["amp_im"] = json_value(reading.amplitude_im);
                sink << record.dump(2) << '\n';
            }
        };
        if (config.output_path.empty()) {
            write(out);
        } else {
            std::ofstream file(config.output_path);
            if (!file) {
                throw std::invalid_argument("cannot open output file: " + config.output_path);
            }
            write(file);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace qibd
