#ifndef DISKFACTOR_BOUNDARY_FUNCTION_HPP
#define DISKFACTOR_BOUNDARY_FUNCTION_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diskfactor/circle.hpp"
#include "diskfactor/grid.hpp"
#include "diskfactor/moduli.hpp"

namespace diskfactor {

// Boundary samples of a function in the disk algebra, optionally backed by a
// closed-form evaluator valid on the closed disk.
class BoundaryFunction {
  public:
    using Evaluator = std::function<std::complex<double>(std::complex<double>)>;

    BoundaryFunction(ComplexGridFunction samples, std::string name);
    BoundaryFunction(int n, Evaluator evaluator, std::string name);

    int grid_size() const { return samples_.size(); }
    const ComplexGridFunction& samples() const { return samples_; }
    std::complex<double> boundary(int k) const { return samples_[k]; }
    bool has_evaluator() const { return static_cast<bool>(evaluator_); }
    std::complex<double> eval(std::complex<double> z) const;
    const std::string& name() const { return name_; }
    double sup_norm_grid() const;

  private:
    ComplexGridFunction samples_;
    Evaluator evaluator_;
    std::string name_;
};

// built-in functions (CLI specs: poly:<coeffs>, oneminusz, power:<beta>)
BoundaryFunction make_poly(int n, std::vector<std::complex<double>> coeffs);
BoundaryFunction make_one_minus_z(int n);
BoundaryFunction make_power(int n, double beta);  // (1-z)^beta, principal branch
BoundaryFunction parse_function(const std::string& spec, int n);

BoundaryFunction difference(const BoundaryFunction& f, const BoundaryFunction& g);
BoundaryFunction product(const BoundaryFunction& f, const BoundaryFunction& g);

struct OmegaNorm {
    double sup = 0.0;
    double seminorm = 0.0;
    double total = 0.0;
};

// Deterministic structured-plus-seeded-random pair estimate of the weighted
// Lipschitz norm: adjacent and dyadic-offset boundary pairs, plus pair_budget
// seeded pairs (drawn from the closed disk when an evaluator exists).
OmegaNorm omega_norm(const BoundaryFunction& f, const Modulus& w, int pair_budget,
                     std::uint64_t seed);

// Oracle mode: all grid index pairs.
OmegaNorm omega_norm_brute(const BoundaryFunction& f, const Modulus& w);

struct LipProfile {
    std::vector<double> bands;   // separation scales, decreasing
    std::vector<double> values;  // M(band): sup quotient over pairs with |z-w| <= band
    bool membership;             // decay diagnosis for membership in Lambda_omega
};

LipProfile lip_profile(const BoundaryFunction& f, const Modulus& w, std::vector<double> bands,
                       std::uint64_t seed, int pair_budget = 8192);
std::vector<double> default_bands(int n);

struct TamrazovResult {
    double ratio = 1.0;
    double disk_seminorm = 0.0;
    double boundary_seminorm = 0.0;
    bool degenerate = false;    // both seminorms at floating noise level
    bool inconsistent = false;  // boundary ~ 0 but disk is not
};

// (seminorm over mixed interior/boundary pairs) / (boundary-only seminorm),
// same budget; evidence that the boundary norm controls the disk norm.
TamrazovResult tamrazov_ratio(const BoundaryFunction& f, const Modulus& w, std::uint64_t seed,
                              int pair_budget = 8192);

struct ZeroSetEstimate {
    ClosedBoundarySet set;
    bool all_below_tol = false;          // |f| <= tol everywhere: E = T, flagged
    std::vector<double> cluster_angles;  // midpoint angle of each sub-tol run
};

ZeroSetEstimate zero_set_estimate(const BoundaryFunction& f, double tol);

}  // namespace diskfactor

#endif
