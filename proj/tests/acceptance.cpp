// End-to-end acceptance run. Each numbered check prints one PASS/FAIL line;
// the process exits nonzero if any check fails. Everything here goes through
// the public API only.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qibd/distribution.hpp"
#include "qibd/hamiltonian.hpp"
#include "qibd/interferometer.hpp"
#include "qibd/qibd.hpp"
#include "qibd/statevector.hpp"

using namespace qibd;

namespace {

int failures = 0;

void report(int index, const char* label, bool pass, const std::string& detail) {
    std::printf("[%d] %-34s %s%s%s\n", index, label, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b, c, d);
    return buf;
}

DiscreteDistribution random_dist(int n, std::mt19937_64& rng) {
    return DiscreteDistribution(n, oracle::random_probs(n, rng));
}

double circuit_distance(const DiscreteDistribution& p, const DiscreteDistribution& q,
                        const PhaseProfile& profile) {
    return measure_qibd(make_circuit_spec(p, q, profile), ReadoutMode::exact()).distance;
}

void pair_disjoint(int n, std::vector<double>& lo, std::vector<double>& hi) {
    const std::size_t dim = std::size_t{1} << n;
    lo.assign(dim, 0.0);
    hi.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim / 2; ++i) {
        lo[i] = 2.0 / static_cast<double>(dim);
        hi[dim / 2 + i] = 2.0 / static_cast<double>(dim);
    }
}

void check_validation_table() {
    const auto start = std::chrono::steady_clock::now();
    const DiscreteDistribution p = gaussian(3, GaussianSpec{2.0, 1.0});
    const DiscreteDistribution q = gaussian(3, GaussianSpec{5.0, 1.5});
    const DiagonalHamiltonian h = ising_chain(3);
    const double alphas[] = {0.0, 0.5, 1.0, 1.5};
    const double targets[] = {1.417, 1.666, 2.469, 3.627};
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
        const PhaseProfile profile = phase_profile(h, alphas[k]);
        worst = std::max(worst, std::abs(qibc_direct(p, q, profile).distance - targets[k]));
        worst = std::max(worst, std::abs(circuit_distance(p, q, profile) - targets[k]));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, "reference table, both paths", worst <= 0.01 && seconds < 1.0,
           fmt("max deviation %.2e, %.3f s", worst, seconds));
}

void check_classical_limit() {
    std::mt19937_64 rng(101);
    const DiscreteDistribution p0 = gaussian(3, GaussianSpec{2.0, 1.0});
    const DiscreteDistribution q0 = gaussian(3, GaussianSpec{5.0, 1.5});
    double worst =
        std::abs(qibc_direct(p0, q0, phase_profile(ising_chain(3), 0.0)).distance -
                 classical_distance(p0, q0));
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const DiscreteDistribution p = random_dist(n, rng);
        const DiscreteDistribution q = random_dist(n, rng);
        const PhaseProfile zero = phase_profile(ising_chain(n), 0.0);
        const double classical = classical_distance(p, q);
        worst = std::max(worst, std::abs(qibc_direct(p, q, zero).distance - classical));
    }
    report(2, "zero-interaction classical limit", worst <= 1e-12,
           fmt("max |difference| %.2e over 201 pairs (tol 1e-12)", worst));
}

void check_dual_path() {
    std::mt19937_64 rng(102);
    const DiscreteDistribution p0 = gaussian(3, GaussianSpec{2.0, 1.0});
    const DiscreteDistribution q0 = gaussian(3, GaussianSpec{5.0, 1.5});
    double worst = 0.0;
    for (double alpha : {0.0, 0.5, 1.0, 1.5}) {
        const PhaseProfile profile = phase_profile(ising_chain(3), alpha);
        worst = std::max(worst, std::abs(circuit_distance(p0, q0, profile) -
                                         qibc_direct(p0, q0, profile).distance));
    }
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const DiscreteDistribution p = random_dist(n, rng);
        const DiscreteDistribution q = random_dist(n, rng);
        const double alpha = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        const PhaseProfile profile = phase_profile(ising_chain(n), alpha);
        worst = std::max(worst, std::abs(circuit_distance(p, q, profile) -
                                         qibc_direct(p, q, profile).distance));
    }
    bool disjoint_ok = true;
    for (int n = 2; n <= 6; ++n) {
        std::vector<double> lo, hi;
        pair_disjoint(n, lo, hi);
        const DiscreteDistribution p(n, lo);
        const DiscreteDistribution q(n, hi);
        const PhaseProfile profile = phase_profile(ising_chain(n), 0.9);
        disjoint_ok = disjoint_ok && std::isinf(qibc_direct(p, q, profile).distance) &&
                      std::isinf(circuit_distance(p, q, profile));
    }
    report(3, "circuit agrees with direct formula", worst <= 1e-10 && disjoint_ok,
           fmt("max |difference| %.2e (tol 1e-10), disjoint pairs both diverge: %.0f", worst,
               disjoint_ok ? 1.0 : 0.0));
}

void check_headline_sweep() {
    const DiscreteDistribution p = gaussian(5, GaussianSpec{5.0, 1.5});
    const DiscreteDistribution q = gaussian(5, GaussianSpec{9.0, 2.0});
    const DiagonalHamiltonian h = ising_chain(5);
    const double classical = classical_distance(p, q);
    std::vector<double> curve;
    for (int k = 0; k <= 16; ++k) {
        curve.push_back(circuit_distance(p, q, phase_profile(h, 0.05 * k)));
    }
    bool monotone = true;
    for (std::size_t k = 1; k < curve.size(); ++k) monotone = monotone && curve[k] > curve[k - 1];
    const bool classical_ok = std::abs(classical - 1.321) <= 0.005;
    const bool start_ok = std::abs(curve.front() - classical) <= 1e-10;
    const bool end_ok = std::abs(curve.back() - 2.994) <= 0.01;
    report(4, "five-qubit sweep endpoints", classical_ok && start_ok && end_ok && monotone,
           fmt("classical %.4f, endpoint %.4f, monotone %.0f", classical, curve.back(),
               monotone ? 1.0 : 0.0));
}

void check_theta_endpoints() {
    const DiscreteDistribution p = gaussian(5, GaussianSpec{5.0, 1.5});
    const DiagonalHamiltonian h = ising_chain(5);
    const PhaseProfile profile = phase_profile(h, 1.0);
    const DiscreteDistribution q0 = theta_correlated(ThetaFamilySpec{0.0, 5});
    const DiscreteDistribution q8 = theta_correlated(ThetaFamilySpec{0.8, 5});
    const double qibd0 = circuit_distance(p, q0, profile);
    const double qibd8 = circuit_distance(p, q8, profile);
    const double cl0 = classical_distance(p, q0);
    const double cl8 = classical_distance(p, q8);
    const bool ok = std::abs(qibd0 - 4.1) <= 0.15 && std::abs(cl0 - 1.45) <= 0.15 &&
                    std::abs(qibd8 - 4.3) <= 0.15 && std::abs(cl8 - 2.17) <= 0.15;
    report(5, "correlation sweep endpoints", ok,
           fmt("theta=0: %.3f/%.3f, theta=0.8: %.3f (tol 0.15)", qibd0, cl0, qibd8));
}

void check_properties() {
    std::mt19937_64 rng(103);
    bool positive = true;
    double sym_worst = 0.0;
    double even_worst = 0.0;
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const DiscreteDistribution p = random_dist(n, rng);
        const DiscreteDistribution q = random_dist(n, rng);
        const double alpha = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
        const DiagonalHamiltonian h = ising_chain(n);
        const QibdResult pq = qibc_direct(p, q, phase_profile(h, alpha));
        const QibdResult qp = qibc_direct(q, p, phase_profile(h, alpha));
        const QibdResult mirror = qibc_direct(p, q, phase_profile(h, -alpha));
        positive = positive && pq.distance >= 0.0 &&
                   circuit_distance(p, q, phase_profile(h, alpha)) >= 0.0;
        sym_worst = std::max(sym_worst, std::abs(pq.qibc - qp.qibc));
        even_worst = std::max(even_worst, std::abs(pq.qibc - mirror.qibc));
    }

    // Relabeling witness: same classical overlap, visibly different response.
    const DiscreteDistribution p = gaussian(3, GaussianSpec{2.0, 1.0});
    const DiscreteDistribution q = gaussian(3, GaussianSpec{5.0, 1.5});
    std::vector<double> ps(8), qs(8);
    for (std::size_t x = 0; x < 8; ++x) {
        ps[(x + 3) % 8] = p[x];
        qs[(x + 3) % 8] = q[x];
    }
    const PhaseProfile unit = phase_profile(ising_chain(3), 1.0);
    const double bc_gap = std::abs(bhattacharyya_coefficient(p, q) -
                                   bhattacharyya_coefficient(DiscreteDistribution(3, ps),
                                                             DiscreteDistribution(3, qs)));
    const double vis_gap = std::abs(qibc_direct(p, q, unit).qibc -
                                    qibc_direct(DiscreteDistribution(3, ps),
                                                DiscreteDistribution(3, qs), unit)
                                        .qibc);
    const bool witness = bc_gap < 1e-12 && vis_gap > 0.01;

    // First-order expansion: residual of A(alpha) about alpha=0 drops ~100x
    // per decade.
    const double bc = bhattacharyya_coefficient(p, q);
    const double m = first_order_element(p, q, ising_chain(3));
    const auto residual = [&](double alpha) {
        const QibdResult r = qibc_direct(p, q, phase_profile(ising_chain(3), alpha));
        return std::abs(std::complex<double>(r.amplitude_re - bc, r.amplitude_im - alpha * m));
    };
    const double ratio = residual(1e-2) / residual(1e-3);
    const bool quadratic = ratio > 66.0 && ratio < 151.0;

    // Coincident inputs with no interaction sit at exactly +0, sign included.
    const QibdResult self = qibc_direct(p, p, phase_profile(ising_chain(3), 0.0));
    const bool zero_ok = self.distance == 0.0 && !std::signbit(self.distance);

    const bool pass = positive && zero_ok && sym_worst <= 1e-14 && even_worst <= 1e-14 &&
                      witness && quadratic && bc_gap < 1e-12;
    report(6, "property suite", pass,
           fmt("symmetry %.1e, evenness %.1e, witness gap %.3f, residual ratio %.1f", sym_worst,
               even_worst, vis_gap, ratio));
}

void check_shot_noise() {
    const DiscreteDistribution p = gaussian(3, GaussianSpec{2.0, 1.0});
    const DiscreteDistribution q = gaussian(3, GaussianSpec{5.0, 1.5});
    const PhaseProfile profile = phase_profile(ising_chain(3), 1.0);
    const double exact = qibc_direct(p, q, profile).qibc;

    const auto rmse = [&](std::uint64_t shots, std::uint64_t seed_base) {
        double sum_sq = 0.0;
        for (int rep = 0; rep < 50; ++rep) {
            const InterferometerReading r = measure_qibd(
                make_circuit_spec(p, q, profile),
                ReadoutMode::with_shots(shots, seed_base + static_cast<std::uint64_t>(rep)));
            const double err = r.qibc - exact;
            sum_sq += err * err;
        }
        return std::sqrt(sum_sq / 50.0);
    };
    const double r3 = rmse(1000, 1000);
    const double r4 = rmse(10000, 2000);
    const double r5 = rmse(100000, 3000);

    const double lo = std::sqrt(10.0) / 2.0;
    const double hi = 2.0 * std::sqrt(10.0);
    const double ratio_a = r3 / r4;
    const double ratio_b = r4 / r5;
    const bool ok = ratio_a > lo && ratio_a < hi && ratio_b > lo && ratio_b < hi;
    report(7, "shot-noise scaling", ok,
           fmt("rmse decade ratios %.2f, %.2f (want sqrt(10) within 2x)", ratio_a, ratio_b));
}

void check_preparation() {
    std::mt19937_64 rng(104);
    double prep_worst = 0.0;
    for (int round = 0; round < 20; ++round) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const std::vector<double> probs = oracle::random_probs(n, rng);
        StateVector sv(n);
        sv.apply_preparation(Preparation::from_probabilities(probs), QubitRange{0, n});
        for (std::size_t x = 0; x < sv.dim(); ++x) {
            prep_worst =
                std::max(prep_worst, std::abs(sv[x] - complex_t(std::sqrt(probs[x]), 0.0)));
        }
    }

    double mid_worst = 0.0;
    for (int round = 0; round < 10; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const DiscreteDistribution p = random_dist(n, rng);
        const DiscreteDistribution q = random_dist(n, rng);
        const StateVector mid =
            prepare_superposition(make_circuit_spec(p, q, phase_profile(ising_chain(n), 1.0)));
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t x = 0; x < dim; ++x) {
            mid_worst = std::max(
                mid_worst, std::abs(mid[x] - complex_t(std::sqrt(p[x] / 2.0), 0.0)));
            mid_worst = std::max(
                mid_worst, std::abs(mid[dim + x] - complex_t(std::sqrt(q[x] / 2.0), 0.0)));
        }
    }
    report(8, "preparation and midpoint state", prep_worst <= 1e-12 && mid_worst <= 1e-12,
           fmt("encode %.2e, midpoint %.2e (tol 1e-12)", prep_worst, mid_worst));
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    check_validation_table();
    check_classical_limit();
    check_dual_path();
    check_headline_sweep();
    check_theta_endpoints();
    check_properties();
    check_shot_noise();
    check_preparation();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %d check line(s) failed, %.2f s total\n",
                failures == 0 ? "ACCEPTED" : "REJECTED", failures, seconds);
    return failures == 0 ? 0 : 1;
}
