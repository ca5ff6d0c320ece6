#ifndef DISKFACTOR_GRID_HPP
#define DISKFACTOR_GRID_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "diskfactor/circle.hpp"

namespace diskfactor {

namespace detail {
inline bool finite_value(double x) { return std::isfinite(x); }
inline bool finite_value(const std::complex<double>& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}
}  // namespace detail

// Samples of a function on the uniform circle grid theta_k = 2*pi*k/n.
template <class Scalar>
class GridFunction {
  public:
    using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

    explicit GridFunction(Array values) : values_(std::move(values)) {
        require_grid_size(static_cast<int>(values_.size()));
        for (Eigen::Index k = 0; k < values_.size(); ++k)
            if (!detail::finite_value(values_[k]))
                throw std::invalid_argument("GridFunction: samples must be finite");
    }

    static GridFunction zeros(int n) {
        require_grid_size(n);
        return GridFunction(Array::Zero(n));
    }

    template <class F>
    static GridFunction sample(int n, F&& f) {
        require_grid_size(n);
        Array v(n);
        for (int k = 0; k < n; ++k) v[k] = f(kTwoPi * k / n);
        return GridFunction(std::move(v));
    }

    int size() const { return static_cast<int>(values_.size()); }
    double theta(int k) const { return kTwoPi * k / size(); }
    Scalar operator[](int k) const { return values_[k]; }
    const Array& values() const { return values_; }
    Array& values() { return values_; }

  private:
    Array values_;
};

using RealGridFunction = GridFunction<double>;
using ComplexGridFunction = GridFunction<std::complex<double>>;

}  // namespace diskfactor

#endif
