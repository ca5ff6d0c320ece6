#include "diskfactor/transforms.hpp"

#include <unsupported/Eigen/FFT>

#include <stdexcept>
#include <vector>

namespace diskfactor {

namespace {

void require_resolved(int n, std::complex<double> z) {
    if (std::abs(z) > 1.0 - 1.0 / n)
        throw std::domain_error("transform: |z| too close to 1 for this grid (kernel under-resolved)");
}

}  // namespace

double poisson_transform(const RealGridFunction& u, std::complex<double> z) {
    const int n = u.size();
    require_resolved(n, z);
    const double r2 = std::norm(z);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = u.theta(k);
        const std::complex<double> w(std::cos(t), std::sin(t));
        acc += (1.0 - r2) / std::norm(w - z) * u[k];
    }
    return acc / n;
}

std::complex<double> poisson_transform(const ComplexGridFunction& f, std::complex<double> z) {
    const int n = f.size();
    require_resolved(n, z);
    const double r2 = std::norm(z);
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = f.theta(k);
        const std::complex<double> w(std::cos(t), std::sin(t));
        acc += (1.0 - r2) / std::norm(w - z) * f[k];
    }
    return acc / static_cast<double>(n);
}

std::complex<double> herglotz_transform(const RealGridFunction& u, std::complex<double> z) {
    const int n = u.size();
    require_resolved(n, z);
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = u.theta(k);
        const std::complex<double> w(std::cos(t), std::sin(t));
        acc += (w + z) / (w - z) * u[k];
    }
    return acc / static_cast<double>(n);
}

RealGridFunction conjugate_samples(const RealGridFunction& u) {
    const int n = u.size();
    std::vector<std::complex<double>> time(static_cast<std::size_t>(n)), freq;
    for (int k = 0; k < n; ++k) time[static_cast<std::size_t>(k)] = u[k];
    Eigen::FFT<double> fft;
    fft.fwd(freq, time);
    freq[0] = 0.0;
    freq[static_cast<std::size_t>(n / 2)] = 0.0;  // Nyquist convention: zeroed
    const std::complex<double> minus_i(0.0, -1.0), plus_i(0.0, 1.0);
    for (int k = 1; k < n / 2; ++k) freq[static_cast<std::size_t>(k)] *= minus_i;
    for (int k = n / 2 + 1; k < n; ++k) freq[static_cast<std::size_t>(k)] *= plus_i;
    fft.inv(time, freq);
    Eigen::ArrayXd out(n);
    for (int k = 0; k < n; ++k) out[k] = time[static_cast<std::size_t>(k)].real();
    return RealGridFunction(std::move(out));
}

}  // namespace diskfactor
