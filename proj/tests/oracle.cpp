#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

cmat identity(std::size_t dim) {
    cmat m(dim, cvec(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

cmat kron(const cmat& a, const cmat& b) {
    const std::size_t ra = a.size(), ca = a[0].size();
    const std::size_t rb = b.size(), cb = b[0].size();
    cmat out(ra * rb, cvec(ca * cb, 0.0));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return out;
}

cmat single_qubit(int m, int qubit, const cmat& u2) {
    cmat out = identity(1);
    for (int k = 0; k < m; ++k) out = kron(out, k == qubit ? u2 : identity(2));
    return out;
}

cmat householder(const std::vector<double>& target) {
    const std::size_t dim = target.size();
    std::vector<double> w(dim, 0.0);
    w[0] = 1.0 - target[0];
    for (std::size_t i = 1; i < dim; ++i) w[i] = -target[i];
    double wsq = 0.0;
    for (double v : w) wsq += v * v;
    cmat out = identity(dim);
    if (wsq == 0.0) return out;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out[i][j] -= 2.0 * w[i] * w[j] / wsq;
    return out;
}

cmat controlled_block(const cmat& u) {
    const std::size_t dim = u.size();
    cmat out = identity(2 * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out[dim + i][dim + j] = u[i][j];
    return out;
}

cmat embed(int m, int first, const cmat& u) {
    std::size_t udim = u.size();
    int k = 0;
    while ((std::size_t{1} << k) < udim) ++k;
    const int rest = m - first - k;
    if (rest < 0) throw std::invalid_argument("embed: range does not fit");
    return kron(kron(identity(std::size_t{1} << first), u), identity(std::size_t{1} << rest));
}

cvec matvec(const cmat& a, const cvec& v) {
    cvec out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

double max_abs_diff(const cvec& a, const cvec& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

cvec random_state(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cvec v(std::size_t{1} << m);
    double norm = 0.0;
    for (cplx& a : v) {
        a = cplx(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (cplx& a : v) a /= norm;
    return v;
}

std::vector<double> random_probs(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    std::vector<double> p(std::size_t{1} << n);
    long double total = 0.0L;
    for (double& v : p) {
        v = unit(rng);
        total += v;
    }
    for (double& v : p) v = static_cast<double>(v / total);
    return p;
}

cplx amplitude_sum(const std::vector<double>& p, const std::vector<double>& q,
                   const std::vector<double>& phases) {
    long double re = 0.0L, im = 0.0L;
    for (std::size_t x = 0; x < p.size(); ++x) {
        const long double w = std::sqrt(static_cast<long double>(p[x]) * q[x]);
        re += w * std::cos(static_cast<long double>(phases[x]));
        im += w * std::sin(static_cast<long double>(phases[x]));
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace oracle
