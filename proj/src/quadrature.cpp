#include "diskfactor/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "diskfactor/circle.hpp"

namespace diskfactor {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half).
constexpr double kNodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kWeights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <class T, class F>
T gauss16_impl(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T acc{};
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kNodes[i];
        acc += kWeights[i] * (f(c - dx) + f(c + dx));
    }
    return h * acc;
}

template <class T, class F>
T adapt(const F& f, double a, double b, T whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const T left = gauss16_impl<T>(f, a, m);
    const T right = gauss16_impl<T>(f, m, b);
    const T sum = left + right;
    if (depth <= 0 || std::abs(sum - whole) <= tol) return sum;
    return adapt(f, a, m, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

double gauss16(const std::function<double(double)>& f, double a, double b) {
    return gauss16_impl<double>(f, a, b);
}

std::complex<double> gauss16(const std::function<std::complex<double>(double)>& f, double a,
                             double b) {
    return gauss16_impl<std::complex<double>>(f, a, b);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
    return adapt(f, a, b, gauss16_impl<double>(f, a, b), tol, max_depth);
}

std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol, int max_depth) {
    return adapt(f, a, b, gauss16_impl<std::complex<double>>(f, a, b), tol, max_depth);
}

std::complex<double> integrate_circle(const std::function<std::complex<double>(double)>& f,
                                      std::vector<double> split_angles, double tol) {
    for (double& s : split_angles) s = CirclePoint(s).theta();
    std::sort(split_angles.begin(), split_angles.end());
    split_angles.erase(std::unique(split_angles.begin(), split_angles.end()), split_angles.end());
    if (split_angles.empty()) split_angles.push_back(0.0);
    std::complex<double> acc = 0.0;
    const std::size_t m = split_angles.size();
    const double per_panel_tol = tol / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double a = split_angles[i];
        double b = (i + 1 < m) ? split_angles[i + 1] : split_angles[0] + kTwoPi;
        if (b <= a) b += kTwoPi;
        acc += integrate_adaptive(f, a, b, per_panel_tol);
    }
    return acc;
}

}  // namespace diskfactor
