#include "diskfactor/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diskfactor/quadrature.hpp"
#include "diskfactor/transforms.hpp"

namespace diskfactor {

namespace {

using Complex = std::complex<double>;

Complex circle_point(double theta) { return {std::cos(theta), std::sin(theta)}; }

constexpr double kHardLogFloor = -745.0;  // below double underflow of exp

double safe_log_abs(const Complex& v) {
    const double a = std::abs(v);
    if (!(a > 0.0) || !std::isfinite(a)) return -std::numeric_limits<double>::infinity();
    return std::log(a);
}

}  // namespace

ZeroList::ZeroList(std::vector<Zero> zs) : zeros(std::move(zs)) {
    for (const Zero& z : zeros) {
        if (!(std::abs(z.a) < 1.0))
            throw std::invalid_argument("ZeroList: zeros must lie in the open disk");
        if (z.multiplicity < 1) throw std::invalid_argument("ZeroList: multiplicity must be >= 1");
    }
}

SingularMeasure::SingularMeasure(std::vector<Atom> as) : atoms(std::move(as)) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!(atoms[i].mass > 0.0))
            throw std::invalid_argument("SingularMeasure: masses must be positive");
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i].xi == atoms[j].xi)
                throw std::invalid_argument("SingularMeasure: atom angles must be distinct");
    }
}

double SingularMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.mass;
    return m;
}

Complex blaschke_eval(const ZeroList& zl, Complex z) {
    Complex prod = 1.0;
    for (const auto& zero : zl.zeros) {
        Complex factor;
        if (zero.a == Complex(0.0)) {
            factor = z;
        } else {
            factor = (std::abs(zero.a) / zero.a) * (zero.a - z) / (1.0 - std::conj(zero.a) * z);
        }
        for (int m = 0; m < zero.multiplicity; ++m) prod *= factor;
    }
    return prod;
}

Complex singular_inner_eval(const SingularMeasure& m, Complex z) {
    Complex expo = 0.0;
    for (const auto& atom : m.atoms) {
        const Complex w = atom.xi.point();
        expo += atom.mass * (w + z) / (w - z);
    }
    return std::exp(-expo / kTwoPi);
}

OuterFunction OuterFunction::from_log_modulus(Eigen::ArrayXd u_raw) {
    const int n = static_cast<int>(u_raw.size());
    require_grid_size(n);
    std::vector<std::uint8_t> clipped(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        if (std::isnan(u_raw[k]) || u_raw[k] == std::numeric_limits<double>::infinity())
            throw std::invalid_argument("outer: log-modulus must be < +inf (bounded modulus)");
        if (u_raw[k] < kLogClipFloor) {
            u_raw[k] = kLogClipFloor;
            clipped[static_cast<std::size_t>(k)] = 1;
        }
    }
    RealGridFunction u(std::move(u_raw));
    RealGridFunction ut = conjugate_samples(u);
    return OuterFunction(std::move(u), std::move(ut), std::move(clipped));
}

OuterFunction OuterFunction::from_boundary(const BoundaryFunction& f) {
    const int n = f.grid_size();
    Eigen::ArrayXd raw(n);
    for (int k = 0; k < n; ++k) raw[k] = safe_log_abs(f.boundary(k));
    OuterFunction out = from_log_modulus(std::move(raw));
    if (f.has_evaluator()) {
        BoundaryFunction fc = f;
        out.exact_log_modulus_ = [fc](double theta) {
            const double l = safe_log_abs(fc.eval(circle_point(theta)));
            return std::max(l, kHardLogFloor);
        };
        out.split_angles_ = zero_set_estimate(f, 1e-9).cluster_angles;
    }
    return out;
}

OuterFunction OuterFunction::from_boundary_restricted(const BoundaryFunction& f,
                                                      const ArcUnion& gamma,
                                                      bool complement_of_gamma) {
    const int n = f.grid_size();
    auto keep = [&gamma, complement_of_gamma](double theta) {
        const bool in = gamma.contains(CirclePoint(theta));
        return complement_of_gamma ? !in : in;
    };
    Eigen::ArrayXd raw(n);
    for (int k = 0; k < n; ++k)
        raw[k] = keep(kTwoPi * k / n) ? safe_log_abs(f.boundary(k)) : 0.0;
    OuterFunction out = from_log_modulus(std::move(raw));
    if (f.has_evaluator()) {
        BoundaryFunction fc = f;
        out.exact_log_modulus_ = [fc, keep](double theta) {
            if (!keep(theta)) return 0.0;
            const double l = safe_log_abs(fc.eval(circle_point(theta)));
            return std::max(l, kHardLogFloor);
        };
        out.split_angles_ = zero_set_estimate(f, 1e-9).cluster_angles;
        for (const Arc& arc : gamma.arcs()) {
            out.split_angles_.push_back(arc.a().theta());
            out.split_angles_.push_back(arc.b().theta());
        }
    }
    return out;
}

Complex OuterFunction::evaluate(Complex z) const {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("OuterFunction::evaluate: point must be interior");
    if (exact_log_modulus_) {
        auto integrand = [this, z](double theta) -> Complex {
            const Complex w = circle_point(theta);
            return (w + z) / (w - z) * exact_log_modulus_(theta);
        };
        return std::exp(integrate_circle(integrand, split_angles_) / kTwoPi);
    }
    return std::exp(herglotz_transform(u_, z));
}

Complex OuterFunction::boundary_value(int k) const {
    return std::exp(Complex(u_[k], utilde_[k]));
}

double OuterFunction::log_modulus_mean() const {
    if (exact_log_modulus_) {
        auto integrand = [this](double theta) -> Complex {
            const Complex w = circle_point(theta);
            return (w + Complex(0.0)) / (w - Complex(0.0)) * exact_log_modulus_(theta);
        };
        return integrate_circle(integrand, split_angles_).real() / kTwoPi;
    }
    return u_.values().mean();
}

BoundaryFunction OuterFunction::boundary_function(const std::string& name) const {
    ComplexGridFunction::Array v(grid_size());
    for (int k = 0; k < grid_size(); ++k) v[k] = boundary_value(k);
    return BoundaryFunction(ComplexGridFunction(std::move(v)), name);
}

InnerPartResult inner_part(const BoundaryFunction& f, double tol, double exclusion_radius) {
    const int n = f.grid_size();
    auto zs = zero_set_estimate(f, tol);
    if (zs.all_below_tol)
        throw std::invalid_argument("inner_part: f vanishes identically at this tolerance");
    OuterFunction O = OuterFunction::from_boundary(f);

    ComplexGridFunction::Array q(n);
    for (int k = 0; k < n; ++k) q[k] = f.boundary(k) / O.boundary_value(k);

    InnerPartResult out{BoundaryFunction(ComplexGridFunction(q), "inner(" + f.name() + ")"),
                        0.0,
                        0.0,
                        exclusion_radius,
                        zs.set,
                        {}};
    const auto& mask = O.clip_mask();
    for (int k = 0; k < n; ++k) {
        if (mask[static_cast<std::size_t>(k)]) {
            out.flagged.push_back(k);
            continue;
        }
        const double dev = std::fabs(std::abs(q[k]) - 1.0);
        out.max_deviation_unclipped = std::max(out.max_deviation_unclipped, dev);
        if (zs.set.is_empty() ||
            chordal_distance(CirclePoint(kTwoPi * k / n), zs.set) >= exclusion_radius)
            out.max_deviation_away = std::max(out.max_deviation_away, dev);
    }
    return out;
}

namespace {

Complex interior_value(const BoundaryFunction& f, Complex z) {
    if (f.has_evaluator()) return f.eval(z);
    return poisson_transform(f.samples(), z);
}

bool poisson_resolved(const BoundaryFunction& f, Complex z) {
    return f.has_evaluator() || std::abs(z) <= 1.0 - 1.0 / f.grid_size();
}

}  // namespace

void require_divisible(const BoundaryFunction& f, const InnerFunction& U) {
    const double supf = f.sup_norm_grid();
    if (supf == 0.0) return;
    const double cap = 1e3 * supf;
    const int n = f.grid_size();

    auto probe = [&](Complex z) {
        if (!poisson_resolved(f, z)) return;
        const Complex Uz = U.eval(z);
        const double au = std::abs(Uz);
        if (!(au > 0.0) || au > 0.1) return;  // probe only where U is nearly zero
        const double fq = std::abs(interior_value(f, z)) / au;
        if (fq > cap)
            throw DivisibilityError("divide_by_inner: interior quotient " + std::to_string(fq) +
                                    " exceeds 10^3 sup|f| near a zero of U (f/U not in H^inf)");
    };

    for (const auto& zero : U.blaschke().zeros) {
        const Complex dir = zero.a == Complex(0.0) ? Complex(1.0) : zero.a / std::abs(zero.a);
        for (double t : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) probe(zero.a - t * dir);
    }
    for (const auto& atom : U.singular().atoms) {
        const Complex w = atom.xi.point();
        for (double d : {1e-1, 1e-2, std::max(1e-3, 2.0 / n)}) probe((1.0 - d) * w);
    }
}

DivisionResult divide_by_inner(const BoundaryFunction& f, const InnerFunction& U, const Modulus& w,
                               std::uint64_t seed, int pair_budget) {
    require_divisible(f, U);

    const int n = f.grid_size();
    const double supf = f.sup_norm_grid();
    ComplexGridFunction::Array q(n);
    std::vector<bool> valid(static_cast<std::size_t>(n), true);
    for (int k = 0; k < n; ++k) {
        const Complex Uk = U.eval(circle_point(kTwoPi * k / n));
        const double au = std::abs(Uk);
        if (!std::isfinite(au) || std::fabs(au - 1.0) > 0.1) {
            valid[static_cast<std::size_t>(k)] = false;  // atom hit; filled below
            q[k] = 0.0;
            continue;
        }
        q[k] = f.boundary(k) / Uk;
    }
    // fill atom hits from one-sided neighbors
    for (int k = 0; k < n; ++k) {
        if (valid[static_cast<std::size_t>(k)]) continue;
        int l = k, r = k;
        for (int step = 0; step < n; ++step) {
            l = (l - 1 + n) % n;
            if (valid[static_cast<std::size_t>(l)]) break;
        }
        for (int step = 0; step < n; ++step) {
            r = (r + 1) % n;
            if (valid[static_cast<std::size_t>(r)]) break;
        }
        q[k] = 0.5 * (q[l] + q[r]);
    }
    double qmax = 0.0;
    for (int k = 0; k < n; ++k) qmax = std::max(qmax, std::abs(q[k]));
    if (supf > 0.0 && qmax > 1e3 * supf)
        throw DivisibilityError("divide_by_inner: boundary quotient exceeds 10^3 sup|f|");

    // strip evaluators so both norms run on the same boundary pair scheme
    BoundaryFunction quotient(ComplexGridFunction(std::move(q)), f.name() + "/U");
    BoundaryFunction f_samples(f.samples(), f.name());
    DivisionResult out{quotient, 0.0, omega_norm(quotient, w, pair_budget, seed),
                       omega_norm(f_samples, w, pair_budget, seed)};
    out.fpr_ratio = out.f_norm.total > 0.0
                        ? out.quotient_norm.total / out.f_norm.total
                        : std::numeric_limits<double>::infinity();
    return out;
}

SingularMeasure restrict_singular(const SingularMeasure& m, const ClosedBoundarySet& K) {
    std::vector<SingularMeasure::Atom> kept;
    for (const auto& atom : m.atoms)
        if (K.contains(atom.xi)) kept.push_back(atom);
    return SingularMeasure(std::move(kept));
}

SingularMeasure restrict_singular(const SingularMeasure& m, const ArcUnion& K) {
    std::vector<SingularMeasure::Atom> kept;
    for (const auto& atom : m.atoms)
        if (K.contains(atom.xi)) kept.push_back(atom);
    return SingularMeasure(std::move(kept));
}

double counting_function(const InnerFunction& U, const CirclePoint& xi) {
    const Complex p = xi.point();
    double acc = 0.0;
    for (const auto& zero : U.blaschke().zeros) {
        const double d2 = std::norm(p - zero.a);
        if (d2 == 0.0) throw std::domain_error("counting_function: xi coincides with a zero");
        acc += zero.multiplicity * (1.0 - std::norm(zero.a)) / d2;
    }
    for (const auto& atom : U.singular().atoms) {
        const double d2 = std::norm(p - atom.xi.point());
        if (d2 == 0.0) throw std::domain_error("counting_function: xi coincides with an atom");
        acc += atom.mass / (kTwoPi / 2.0) / d2;  // (1/pi) prefactor
    }
    return acc;
}

double zero_set_distance(const InnerFunction& U, const CirclePoint& xi) {
    double d = std::numeric_limits<double>::infinity();
    const Complex p = xi.point();
    for (const auto& zero : U.blaschke().zeros) d = std::min(d, std::abs(p - zero.a));
    for (const auto& atom : U.singular().atoms) d = std::min(d, chord(xi, atom.xi));
    return d;
}

Fpr2Check fpr2_check(const InnerFunction& U, const CirclePoint& xi, double rho) {
    if (U.trivial()) throw std::invalid_argument("fpr2_check: U must be nontrivial");
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("fpr2_check: rho must be in (0, 1)");
    Fpr2Check out;
    const double d = zero_set_distance(U, xi);
    out.applicable = (1.0 - rho) <= d;
    if (!out.applicable) return out;
    out.lhs = std::abs(U.eval(rho * xi.point()));
    out.rhs = std::exp(-(1.0 - rho) / 8.0 * counting_function(U, xi));
    out.holds = out.lhs <= out.rhs * (1.0 + 1e-9);
    return out;
}

Fpr1Profile fpr1_profile(const BoundaryFunction& f, const Modulus& w, std::vector<double> radii,
                         double A, int directions) {
    if (!f.has_evaluator())
        throw std::invalid_argument("fpr1_profile: requires a closed-form evaluator");
    for (std::size_t j = 0; j + 1 < radii.size(); ++j)
        if (!(radii[j] < radii[j + 1]))
            throw std::invalid_argument("fpr1_profile: radii must increase toward 1");
    if (radii.empty() || !(radii.front() > 0.0 && radii.back() < 1.0))
        throw std::invalid_argument("fpr1_profile: radii must lie in (0, 1)");

    OuterFunction O = OuterFunction::from_boundary(f);
    Fpr1Profile out;
    out.radii = radii;
    for (int i = 0; i < directions; ++i) out.directions.push_back(kTwoPi * i / directions);

    for (double rho : radii) {
        std::vector<double> row;
        double rmax = 0.0;
        for (double t : out.directions) {
            const Complex xi = circle_point(t);
            const double numer =
                std::max(0.0, std::abs(O.evaluate(rho * xi)) - A * std::abs(f.eval(xi)));
            const double r = numer / w(1.0 - rho);
            row.push_back(r);
            rmax = std::max(rmax, r);
        }
        out.table.push_back(std::move(row));
        out.row_max.push_back(rmax);
    }
    out.decreasing = true;
    for (std::size_t j = 0; j + 1 < out.row_max.size(); ++j)
        if (out.row_max[j + 1] > out.row_max[j] + 1e-12) out.decreasing = false;
    return out;
}

}  // namespace diskfactor
