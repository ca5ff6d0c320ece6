#include "diskfactor/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "diskfactor/quadrature.hpp"

namespace diskfactor {

namespace {

using Complex = std::complex<double>;

Complex circle_point(double theta) { return {std::cos(theta), std::sin(theta)}; }

// -log(sin(s/2) / (s/2)), the smooth remainder of -log(2 sin(s/2)) + log(s)
double log_sinc_half(double s) {
    const double h = 0.5 * s;
    if (h < 1e-8) return h * h / 6.0;
    return -std::log(std::sin(h) / h);
}

// J(x) = int_0^x -log(2 sin(s/2)) ds, endpoint singularity in closed form
double carleson_arc_half(double x, double tol) {
    if (x <= 0.0) return 0.0;
    const double exact = x - x * std::log(x);
    const double smooth = integrate_adaptive([](double s) { return log_sinc_half(s); }, 0.0, x, tol);
    return exact + smooth;
}

}  // namespace

OuterFunction truncated_outer(const BoundaryFunction& f, const ArcUnion& gamma) {
    return OuterFunction::from_boundary_restricted(f, gamma, false);
}

BoundaryFunction psi_mollifier(int n, const std::vector<CirclePoint>& points, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("psi_mollifier: delta must be positive");
    if (points.empty()) throw std::invalid_argument("psi_mollifier: need at least one point");
    std::vector<Complex> conj_pts;
    conj_pts.reserve(points.size());
    for (const auto& p : points) conj_pts.push_back(std::conj(p.point()));
    auto eval = [conj_pts, delta](Complex z) {
        Complex prod = 1.0;
        for (const Complex& cp : conj_pts) {
            const Complex w = z * cp - 1.0;
            prod *= w / (w - delta);
        }
        return prod;
    };
    return BoundaryFunction(n, std::move(eval), "psi:" + std::to_string(delta));
}

BoundaryFunction phi_mollifier(int n, const Arc& arc, double eps, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("phi_mollifier: delta must be positive");
    if (!(eps >= 0.0) || 2.0 * eps >= arc.length())
        throw std::invalid_argument("phi_mollifier: eps does not leave a nonempty shrunken arc");
    const Complex ca = std::conj(arc.a().point()) * std::polar(1.0, -eps);
    const Complex cb = std::conj(arc.b().point()) * std::polar(1.0, +eps);
    auto eval = [ca, cb, delta](Complex z) {
        const Complex wa = z * ca - 1.0;
        const Complex wb = z * cb - 1.0;
        return (wa / (wa - delta)) * (wb / (wb - delta));
    };
    return BoundaryFunction(n, std::move(eval), "phi:" + std::to_string(delta));
}

ConvergenceTable convergence_table(const std::vector<BoundaryFunction>& family,
                                   const std::vector<double>& params,
                                   const BoundaryFunction& target, const Modulus& w,
                                   std::uint64_t seed, int pair_budget) {
    if (family.size() != params.size() || family.empty())
        throw std::invalid_argument("convergence_table: family and parameter sizes disagree");
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        inc = inc && params[i] < params[i + 1];
        dec = dec && params[i] > params[i + 1];
    }
    if (params.size() > 1 && !inc && !dec)
        throw std::invalid_argument("convergence_table: parameter sequence must be monotone");

    ConvergenceTable out;
    out.params = params;
    for (const BoundaryFunction& member : family) {
        if (member.grid_size() != target.grid_size())
            throw std::invalid_argument("convergence_table: family member grid mismatch");
        const BoundaryFunction diff = difference(member, target);
        const OmegaNorm norm = omega_norm(diff, w, pair_budget, seed);
        out.sup_gap.push_back(diff.sup_norm_grid());
        out.seminorm_gap.push_back(norm.seminorm);
        out.total_gap.push_back(diff.sup_norm_grid() + norm.seminorm);
    }
    const double initial = out.total_gap.front();
    const double final_v = out.total_gap.back();
    const double floor = kAbsoluteGapFloor * std::max(1.0, target.sup_norm_grid());
    out.pass = (final_v <= kDecayGate * initial) || (final_v <= floor);
    return out;
}

CarlesonResult carleson_integral(const ClosedBoundarySet& E) {
    if (E.is_empty()) throw std::domain_error("carleson_integral: undefined for the empty set");
    CarlesonResult out;
    const double complement_length = E.complement().total_length();
    if (complement_length < kTwoPi * 1e-6) {
        out.divergent = true;  // E has (numerically) full measure, d(., E) == 0
        return out;
    }
    double coarse = 0.0, fine = 0.0;
    for (const Arc& arc : E.complement().arcs()) {
        const double x = 0.5 * arc.length();
        coarse += 2.0 * carleson_arc_half(x, 1e-8);
        fine += 2.0 * carleson_arc_half(x, 1e-10);
    }
    out.value = fine / kTwoPi;
    out.refinement_delta = std::fabs(fine - coarse) / kTwoPi;
    return out;
}

MembershipReport standard_membership(const BoundaryFunction& f, const ClosedBoundarySet& E,
                                     const InnerFunction& U, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("standard_membership: tol must be positive");
    MembershipReport rep;
    const double supf = f.sup_norm_grid();
    const int n = f.grid_size();

    double max_near = 0.0;
    if (!E.is_empty()) {
        for (int k = 0; k < n; ++k) {
            if (chordal_distance(CirclePoint(kTwoPi * k / n), E) <= tol)
                max_near = std::max(max_near, std::abs(f.boundary(k)));
        }
        if (f.has_evaluator()) {
            for (const Arc& arc : E.complement().arcs()) {
                max_near = std::max(max_near, std::abs(f.eval(arc.a().point())));
                max_near = std::max(max_near, std::abs(f.eval(arc.b().point())));
            }
        }
    }
    rep.max_near_E = max_near;
    rep.vanishing_ok = max_near <= tol * supf;

    try {
        require_divisible(f, U);
        rep.divisible_ok = true;
    } catch (const DivisibilityError& e) {
        rep.divisible_ok = false;
        rep.detail = e.what();
    }
    rep.member = rep.vanishing_ok && rep.divisible_ok;
    if (!rep.vanishing_ok)
        rep.detail = "vanishing clause failed: max |f| near E is " + std::to_string(max_near) +
                     (rep.detail.empty() ? "" : "; " + rep.detail);
    return rep;
}

// --- scenarios --------------------------------------------------------------

namespace {

// complement arcs of E not picked by the N-term exhaustion
ArcUnion exhaustion_rest(const ClosedBoundarySet& E, int N) {
    std::vector<Arc> pool = E.complement().arcs();
    std::sort(pool.begin(), pool.end(), [](const Arc& x, const Arc& y) {
        if (x.length() != y.length()) return x.length() > y.length();
        return x.a().theta() < y.a().theta();
    });
    if (static_cast<std::size_t>(N) >= pool.size()) return ArcUnion();
    pool.erase(pool.begin(), pool.begin() + N);
    return ArcUnion(std::move(pool));
}

bool atom_hit(const SingularMeasure& m, double theta) {
    const CirclePoint p(theta);
    for (const auto& atom : m.atoms)
        if (chord(p, atom.xi) == 0.0) return true;
    return false;
}

// samples of S * extra(k), with the limit value 0 at exact atom hits
ComplexGridFunction scenario_samples(int n, const SingularMeasure& S,
                                     const std::function<Complex(int)>& extra) {
    ComplexGridFunction::Array v(n);
    for (int k = 0; k < n; ++k) {
        const double theta = kTwoPi * k / n;
        if (atom_hit(S, theta)) {
            v[k] = 0.0;
            continue;
        }
        const Complex s = singular_inner_eval(S, circle_point(theta));
        v[k] = s * extra(k);
    }
    return ComplexGridFunction(std::move(v));
}

PropRun run_prop_common(const PropScenario& sc, int pair_budget, bool power_rho) {
    const int n = sc.grid_n;
    if (sc.g.grid_size() != n) throw std::invalid_argument("scenario: g grid size mismatch");

    // the fixed factor: S g^2 (prop1) or U_g O_g^rho with U_g = S (prop3)
    OuterFunction Og = OuterFunction::from_boundary(sc.g);
    auto fixed_factor = [&](int k) -> Complex {
        if (power_rho) {
            // O^rho via exp(rho (u + i conj u))
            return std::exp(sc.rho * Complex(Og.log_modulus()[k], Og.conjugate()[k]));
        }
        const Complex gk = sc.g.boundary(k);
        return gk * gk;
    };

    const BoundaryFunction target(scenario_samples(n, sc.atoms, fixed_factor),
                                  sc.name + ":target");

    std::vector<BoundaryFunction> family;
    std::vector<double> params;
    for (int N = 0; N <= sc.gamma_max; ++N) {
        const ArcUnion rest = exhaustion_rest(sc.E, N);
        if (rest.empty()) {
            family.emplace_back(target.samples(), sc.name + ":N" + std::to_string(N));
        } else {
            OuterFunction trunc = OuterFunction::from_boundary_restricted(sc.g, rest, false);
            auto member_factor = [&](int k) { return fixed_factor(k) * trunc.boundary_value(k); };
            family.emplace_back(scenario_samples(n, sc.atoms, member_factor),
                                sc.name + ":N" + std::to_string(N));
        }
        params.push_back(static_cast<double>(N));
    }

    PropRun run;
    run.table = convergence_table(family, params, target, sc.omega, sc.seed, pair_budget);
    for (const BoundaryFunction& member : family) {
        run.profiles.push_back(lip_profile(member, sc.omega, default_bands(n), sc.seed));
        for (double v : run.profiles.back().values) run.profile_peak = std::max(run.profile_peak, v);
    }
    run.profiles_bounded = run.profile_peak <= kProfileBound;
    run.pass = run.table.pass && run.profiles_bounded;
    return run;
}

}  // namespace

PropScenario builtin_prop_scenario(int n, std::uint64_t seed) {
    PropScenario sc{n,
                    seed,
                    log_modulus(1.0),
                    2.0,
                    6,
                    ClosedBoundarySet::from_points({0.0}),
                    SingularMeasure({{CirclePoint(0.0), 1.0}}),
                    make_one_minus_z(n),
                    "builtin"};
    return sc;
}

PropScenario negative_prop_scenario(int n, std::uint64_t seed) {
    // E = eighth roots of unity, g = z^8 - 1 vanishes exactly on E; stopping
    // the exhaustion at N = 2 leaves most of the log-mass untruncated, so the
    // decay gate must fail.
    std::vector<double> angles;
    for (int j = 0; j < 8; ++j) angles.push_back(kTwoPi * j / 8.0);
    std::vector<Complex> coeffs(9, 0.0);
    coeffs[0] = -1.0;
    coeffs[8] = 1.0;
    PropScenario sc{n,
                    seed,
                    log_modulus(1.0),
                    2.0,
                    2,
                    ClosedBoundarySet::from_points(angles),
                    SingularMeasure({{CirclePoint(0.0), 1.0}}),
                    make_poly(n, coeffs),
                    "negative"};
    return sc;
}

PropRun run_prop1(const PropScenario& sc, int pair_budget) {
    return run_prop_common(sc, pair_budget, false);
}

PropRun run_prop3(const PropScenario& sc, int pair_budget) {
    return run_prop_common(sc, pair_budget, true);
}

MollifierRun run_mollifier(int n, const Modulus& w, bool negative_control, std::uint64_t seed,
                           int pair_budget) {
    MollifierRun run;
    run.deltas = {1e-1, 1e-2, 1e-3, 1e-4};
    const BoundaryFunction f =
        negative_control ? make_poly(n, {Complex(1.0)}) : make_one_minus_z(n);
    const std::vector<CirclePoint> pts{CirclePoint(0.0)};
    std::vector<BoundaryFunction> family;
    for (double d : run.deltas) family.push_back(product(psi_mollifier(n, pts, d), f));
    run.table = convergence_table(family, run.deltas, f, w, seed, pair_budget);
    return run;
}

}  // namespace diskfactor
