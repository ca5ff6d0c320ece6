#ifndef DISKFACTOR_TRANSFORMS_HPP
#define DISKFACTOR_TRANSFORMS_HPP

#include <complex>

#include "diskfactor/grid.hpp"

namespace diskfactor {

// Trapezoidal Poisson integral (1/2pi) int (1-|z|^2)/|e^{i t}-z|^2 u(t) dt.
// Spectrally exact for band-limited u; requires |z| <= 1 - 1/n so the kernel
// stays resolved on the grid.
double poisson_transform(const RealGridFunction& u, std::complex<double> z);

// Same quadrature applied to complex samples; for f analytic this is the
// analytic extension of the trigonometric interpolant.
std::complex<double> poisson_transform(const ComplexGridFunction& f, std::complex<double> z);

// Trapezoidal Herglotz integral (1/2pi) int (e^{i t}+z)/(e^{i t}-z) u(t) dt.
// Re herglotz_transform(u, z) == poisson_transform(u, z).
std::complex<double> herglotz_transform(const RealGridFunction& u, std::complex<double> z);

// Discrete conjugate function: multiplier -i*sgn(k) on Fourier modes, with
// the constant and Nyquist modes mapped to zero.
RealGridFunction conjugate_samples(const RealGridFunction& u);

}  // namespace diskfactor

#endif
