#include "diskfactor/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diskfactor {

namespace {

double canonical_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;  // fmod rounding at the seam
    return t;
}

// angular distance in [0, pi]
double angular_distance(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, kTwoPi - d);
}

}  // namespace

CirclePoint::CirclePoint(double theta) : theta_(canonical_angle(theta)) {
    if (!std::isfinite(theta)) throw std::invalid_argument("CirclePoint: angle must be finite");
}

std::complex<double> CirclePoint::point() const {
    return {std::cos(theta_), std::sin(theta_)};
}

double chord(const CirclePoint& a, const CirclePoint& b) {
    return 2.0 * std::sin(0.5 * angular_distance(a.theta(), b.theta()));
}

double chord(const CirclePoint& a, const std::complex<double>& z) {
    return std::abs(a.point() - z);
}

Arc::Arc(CirclePoint a, CirclePoint b) : a_(a), b_(b) {
    double len = canonical_angle(b_.theta() - a_.theta());
    length_ = (len == 0.0) ? kTwoPi : len;
}

bool Arc::contains(const CirclePoint& p) const {
    double s = canonical_angle(p.theta() - a_.theta());
    return s > 0.0 && s < length_;
}

ArcUnion::ArcUnion(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& x, const Arc& y) { return x.a().theta() < y.a().theta(); });
    double total = 0.0;
    for (const Arc& arc : arcs_) total += arc.length();
    if (total > kTwoPi * (1.0 + 1e-12))
        throw std::invalid_argument("ArcUnion: total length exceeds 2*pi");
    if (arcs_.empty()) return;
    // Disjoint sorted arcs wind around the circle exactly once: the lengths
    // plus the counterclockwise gaps between consecutive arcs sum to 2*pi.
    // Any overlap inflates a gap by a full extra turn.
    double winding = total;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& cur = arcs_[i];
        const Arc& nxt = arcs_[(i + 1) % arcs_.size()];
        winding += canonical_angle(nxt.a().theta() - (cur.a().theta() + cur.length()));
    }
    if (std::fabs(winding - kTwoPi) > 1e-9)
        throw std::invalid_argument("ArcUnion: arcs are not pairwise disjoint");
}

double ArcUnion::total_length() const {
    double total = 0.0;
    for (const Arc& arc : arcs_) total += arc.length();
    return total;
}

bool ArcUnion::contains(const CirclePoint& p) const {
    for (const Arc& arc : arcs_)
        if (arc.contains(p)) return true;
    return false;
}

ClosedBoundarySet::ClosedBoundarySet(ArcUnion complement) : complement_(std::move(complement)) {}

ClosedBoundarySet ClosedBoundarySet::empty_set() {
    ClosedBoundarySet e;
    e.empty_ = true;
    return e;
}

ClosedBoundarySet ClosedBoundarySet::from_points(std::vector<double> thetas) {
    if (thetas.empty()) throw std::invalid_argument("from_points: need at least one point");
    std::vector<double> angles;
    angles.reserve(thetas.size());
    for (double t : thetas) angles.push_back(CirclePoint(t).theta());
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    std::vector<Arc> arcs;
    const std::size_t m = angles.size();
    for (std::size_t i = 0; i < m; ++i)
        arcs.emplace_back(CirclePoint(angles[i]), CirclePoint(angles[(i + 1) % m]));
    return ClosedBoundarySet(ArcUnion(std::move(arcs)));
}

bool ClosedBoundarySet::contains(const CirclePoint& p) const {
    return !empty_ && !complement_.contains(p);
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_grid_size(int n) {
    if (!is_power_of_two(n) || n < 8)
        throw std::invalid_argument("grid size must be a power of two, at least 8");
}

std::vector<CirclePoint> uniform_grid(int n) {
    require_grid_size(n);
    std::vector<CirclePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pts.emplace_back(kTwoPi * k / n);
    return pts;
}

double chordal_distance(const CirclePoint& xi, const ClosedBoundarySet& E) {
    if (E.is_empty()) throw std::domain_error("chordal_distance: distance to the empty set is undefined");
    for (const Arc& arc : E.complement().arcs()) {
        if (arc.contains(xi))
            return std::min(chord(xi, arc.a()), chord(xi, arc.b()));
    }
    return 0.0;  // xi belongs to E
}

ArcUnion gamma_exhaustion(const ClosedBoundarySet& E, int N) {
    if (E.is_empty() || E.complement().empty())
        throw std::invalid_argument("gamma_exhaustion: E has no complementary arcs");
    if (N < 0) throw std::invalid_argument("gamma_exhaustion: N must be nonnegative");
    std::vector<Arc> pool = E.complement().arcs();
    std::sort(pool.begin(), pool.end(), [](const Arc& x, const Arc& y) {
        if (x.length() != y.length()) return x.length() > y.length();
        return x.a().theta() < y.a().theta();
    });
    if (static_cast<std::size_t>(N) < pool.size()) pool.resize(static_cast<std::size_t>(N));
    return ArcUnion(std::move(pool));
}

}  // namespace diskfactor
