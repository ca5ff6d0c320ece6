#ifndef DISKFACTOR_FACTORIZATION_HPP
#define DISKFACTOR_FACTORIZATION_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskfactor/boundary_function.hpp"
#include "diskfactor/circle.hpp"
#include "diskfactor/grid.hpp"
#include "diskfactor/moduli.hpp"

namespace diskfactor {

// log|f| samples below this floor are clipped before the conjugate/Herglotz
// transforms; the affected indices are carried as a mask.
inline constexpr double kLogClipFloor = -50.0;

struct ZeroList {
    struct Zero {
        std::complex<double> a;
        int multiplicity = 1;
    };
    std::vector<Zero> zeros;

    ZeroList() = default;
    explicit ZeroList(std::vector<Zero> zs);
    bool empty() const { return zeros.empty(); }
};

struct SingularMeasure {
    struct Atom {
        CirclePoint xi;
        double mass = 0.0;
    };
    std::vector<Atom> atoms;

    SingularMeasure() = default;
    explicit SingularMeasure(std::vector<Atom> as);
    bool empty() const { return atoms.empty(); }
    double total_mass() const;
};

// B(z) = prod (|a|/a * (a - z)/(1 - conj(a) z))^mult, with the a = 0 factor z.
std::complex<double> blaschke_eval(const ZeroList& zl, std::complex<double> z);

// S(z) = exp(-(1/2pi) sum m_j (w_j + z)/(w_j - z)); valid on the closed disk
// away from the atoms themselves.
std::complex<double> singular_inner_eval(const SingularMeasure& m, std::complex<double> z);

class InnerFunction {
  public:
    InnerFunction() = default;
    InnerFunction(ZeroList blaschke, SingularMeasure singular)
        : blaschke_(std::move(blaschke)), singular_(std::move(singular)) {}

    const ZeroList& blaschke() const { return blaschke_; }
    const SingularMeasure& singular() const { return singular_; }
    bool trivial() const { return blaschke_.empty() && singular_.empty(); }

    std::complex<double> eval(std::complex<double> z) const {
        return blaschke_eval(blaschke_, z) * singular_inner_eval(singular_, z);
    }

  private:
    ZeroList blaschke_;
    SingularMeasure singular_;
};

// Outer function determined by a boundary log-modulus: interior values via the
// Herglotz integral, boundary values via the conjugate function. Interior
// evaluation uses the grid trapezoid rule, or singularity-split adaptive
// quadrature of the exact log-modulus when the source had an evaluator (the
// grid alone cannot resolve the log singularity at a boundary zero).
class OuterFunction {
  public:
    static OuterFunction from_log_modulus(Eigen::ArrayXd u_raw);
    static OuterFunction from_boundary(const BoundaryFunction& f);
    // log-modulus restricted to gamma (or to its complement)
    static OuterFunction from_boundary_restricted(const BoundaryFunction& f, const ArcUnion& gamma,
                                                  bool complement_of_gamma = false);

    std::complex<double> evaluate(std::complex<double> z) const;  // |z| < 1
    std::complex<double> boundary_value(int k) const;             // exp(u_k + i ut_k)
    double log_modulus_mean() const;  // same integration rule as evaluate(0)

    int grid_size() const { return u_.size(); }
    bool refined() const { return static_cast<bool>(exact_log_modulus_); }
    const RealGridFunction& log_modulus() const { return u_; }
    const RealGridFunction& conjugate() const { return utilde_; }
    const std::vector<std::uint8_t>& clip_mask() const { return clipped_; }

    BoundaryFunction boundary_function(const std::string& name) const;

  private:
    OuterFunction(RealGridFunction u, RealGridFunction utilde, std::vector<std::uint8_t> clipped)
        : u_(std::move(u)), utilde_(std::move(utilde)), clipped_(std::move(clipped)) {}

    RealGridFunction u_;       // clipped log-modulus samples
    RealGridFunction utilde_;  // conjugate samples
    std::vector<std::uint8_t> clipped_;
    std::function<double(double)> exact_log_modulus_;  // theta -> log|f|, optional
    std::vector<double> split_angles_;                 // singular/non-smooth angles
};

struct InnerPartResult {
    BoundaryFunction quotient;             // boundary values of U_f = f / O_f
    double max_deviation_unclipped;        // max | |U| - 1 | over unclipped indices
    double max_deviation_away;             // same, at chordal distance >= exclusion from clusters
    double exclusion_radius;
    ClosedBoundarySet zero_clusters;
    std::vector<int> flagged;              // clipped indices
};

InnerPartResult inner_part(const BoundaryFunction& f, double tol, double exclusion_radius = 0.1);

class DivisibilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct DivisionResult {
    BoundaryFunction quotient;
    double fpr_ratio;  // omega_norm(quotient).total / omega_norm(f).total
    OmegaNorm quotient_norm;
    OmegaNorm f_norm;
};

// f / U on the grid; interior probes near the zeros and atoms of U must stay
// below 10^3 * sup|f| or the division is rejected (f/U not in H^inf).
DivisionResult divide_by_inner(const BoundaryFunction& f, const InnerFunction& U, const Modulus& w,
                               std::uint64_t seed, int pair_budget = 8192);
// probe check only (used by standard_membership)
void require_divisible(const BoundaryFunction& f, const InnerFunction& U);

SingularMeasure restrict_singular(const SingularMeasure& m, const ClosedBoundarySet& K);
SingularMeasure restrict_singular(const SingularMeasure& m, const ArcUnion& K);

// a(xi) = sum mult (1-|a|^2)/|xi-a|^2 + (1/pi) sum m_j / |w_j - xi|^2
double counting_function(const InnerFunction& U, const CirclePoint& xi);

// Euclidean distance from xi to the zero set (zeros and atom support).
double zero_set_distance(const InnerFunction& U, const CirclePoint& xi);

struct Fpr2Check {
    double lhs = 0.0;  // |U(rho xi)|
    double rhs = 0.0;  // exp(-(1-rho)/8 a(xi))
    bool applicable = false;
    bool holds = false;
};

Fpr2Check fpr2_check(const InnerFunction& U, const CirclePoint& xi, double rho);

struct Fpr1Profile {
    std::vector<double> radii;
    std::vector<double> directions;
    std::vector<std::vector<double>> table;  // r(rho, xi) per radius row
    std::vector<double> row_max;
    bool decreasing = false;
};

// r(rho, xi) = max(0, |O_f(rho xi)| - A |f(xi)|) / omega(1 - rho)
Fpr1Profile fpr1_profile(const BoundaryFunction& f, const Modulus& w, std::vector<double> radii,
                         double A = 8.0, int directions = 64);

}  // namespace diskfactor

#endif
