#ifndef DISKFACTOR_IDEAL_HPP
#define DISKFACTOR_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "diskfactor/boundary_function.hpp"
#include "diskfactor/circle.hpp"
#include "diskfactor/factorization.hpp"
#include "diskfactor/moduli.hpp"

namespace diskfactor {

// Outer function with log-modulus restricted to the arc union gamma.
OuterFunction truncated_outer(const BoundaryFunction& f, const ArcUnion& gamma);

// psi(z) = prod_n (z conj(a_n) - 1) / (z conj(a_n) - 1 - delta); |psi| <= 1 on
// the closed disk, psi(a_n) = 0.
BoundaryFunction psi_mollifier(int n, const std::vector<CirclePoint>& points, double delta);

// Two-factor mollifier vanishing at a e^{i eps} and b e^{-i eps}, the
// endpoints of the arc (a, b) shrunk by eps.
BoundaryFunction phi_mollifier(int n, const Arc& arc, double eps, double delta);

struct ConvergenceTable {
    std::vector<double> params;
    std::vector<double> sup_gap;
    std::vector<double> seminorm_gap;
    std::vector<double> total_gap;
    bool pass = false;  // decay gate: final <= 0.1 * initial, or final at the absolute floor
};

// Gate constants: 10x decay, with an absolute floor for families that reach
// the target exactly at finite parameter values.
inline constexpr double kDecayGate = 0.1;
inline constexpr double kAbsoluteGapFloor = 1e-9;

ConvergenceTable convergence_table(const std::vector<BoundaryFunction>& family,
                                   const std::vector<double>& params,
                                   const BoundaryFunction& target, const Modulus& w,
                                   std::uint64_t seed, int pair_budget = 8192);

struct CarlesonResult {
    double value = 0.0;
    bool divergent = false;
    double refinement_delta = 0.0;  // change under tolerance refinement
};

// (1/2pi) int log(1/d(e^{it}, E)) dt, arc by arc, with the endpoint log
// singularity split off and integrated in closed form.
CarlesonResult carleson_integral(const ClosedBoundarySet& E);

struct MembershipReport {
    bool member = false;
    bool vanishing_ok = false;
    bool divisible_ok = false;
    double max_near_E = 0.0;  // max |f| at grid points within tol of E
    std::string detail;
};

// f vanishes on E (within tol) and f/U passes the divisibility probe.
MembershipReport standard_membership(const BoundaryFunction& f, const ClosedBoundarySet& E,
                                     const InnerFunction& U, double tol);

// --- prop1 / prop3 convergence scenarios -----------------------------------

struct PropScenario {
    int grid_n = 4096;
    std::uint64_t seed = 1;
    Modulus omega;
    double rho = 2.0;
    int gamma_max = 6;  // exhaustion parameter runs N = 0..gamma_max
    ClosedBoundarySet E;
    SingularMeasure atoms;
    BoundaryFunction g;  // outer factor, vanishes on E, has an evaluator
    std::string name;
};

inline constexpr double kProfileBound = 100.0;  // uniform LipProfile gate

PropScenario builtin_prop_scenario(int n, std::uint64_t seed);
// non-exhausting control: multi-point E, truncation stopped early
PropScenario negative_prop_scenario(int n, std::uint64_t seed);

struct PropRun {
    ConvergenceTable table;
    std::vector<LipProfile> profiles;  // one per N
    double profile_peak = 0.0;
    bool profiles_bounded = false;
    bool pass = false;
};

// assertion 2 diagnostics: || S g^2 f_{Gamma_N^c} - S g^2 ||_omega -> 0
PropRun run_prop1(const PropScenario& sc, int pair_budget = 8192);
// assertion 2 diagnostics: || U O^rho g_{Gamma_N^c} - U O^rho ||_omega -> 0
PropRun run_prop3(const PropScenario& sc, int pair_budget = 8192);

// mollifier scenario (psi_delta f -> f); negative control uses f == 1
struct MollifierRun {
    ConvergenceTable table;
    std::vector<double> deltas;
};
MollifierRun run_mollifier(int n, const Modulus& w, bool negative_control, std::uint64_t seed,
                           int pair_budget = 8192);

}  // namespace diskfactor

#endif
