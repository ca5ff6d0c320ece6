#ifndef DISKFACTOR_QUADRATURE_HPP
#define DISKFACTOR_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace diskfactor {

// 16-point Gauss-Legendre rule on [a, b].
double gauss16(const std::function<double(double)>& f, double a, double b);
std::complex<double> gauss16(const std::function<std::complex<double>(double)>& f, double a,
                             double b);

// Adaptive bisection built on gauss16. Integrable endpoint singularities
// (log-type) are handled by the grading the recursion produces on its own;
// nodes never touch the interval endpoints.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-11, int max_depth = 52);
std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol = 1e-11,
                                        int max_depth = 52);

// Integral over [0, 2*pi) of a periodic integrand, split at the given angles
// (singular or non-smooth points of the integrand).
std::complex<double> integrate_circle(const std::function<std::complex<double>(double)>& f,
                                      std::vector<double> split_angles, double tol = 1e-11);

}  // namespace diskfactor

#endif
