#ifndef DISKFACTOR_CIRCLE_HPP
#define DISKFACTOR_CIRCLE_HPP

#include <complex>
#include <vector>

namespace diskfactor {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Point on the unit circle, stored as a canonical angle in [0, 2*pi).
class CirclePoint {
  public:
    CirclePoint() = default;
    explicit CirclePoint(double theta);

    double theta() const { return theta_; }
    std::complex<double> point() const;

    friend bool operator==(const CirclePoint& p, const CirclePoint& q) {
        return p.theta_ == q.theta_;
    }

  private:
    double theta_ = 0.0;
};

// Euclidean chord length |e^{i a} - e^{i b}|, in [0, 2].
double chord(const CirclePoint& a, const CirclePoint& b);
double chord(const CirclePoint& a, const std::complex<double>& z);

// Open arc traversed counterclockwise from a to b.  Coincident endpoints
// denote the full circle minus that point (length 2*pi), the degenerate
// complement of a one-point closed set.
class Arc {
  public:
    Arc(CirclePoint a, CirclePoint b);

    const CirclePoint& a() const { return a_; }
    const CirclePoint& b() const { return b_; }
    double length() const { return length_; }
    bool contains(const CirclePoint& p) const;

  private:
    CirclePoint a_, b_;
    double length_;  // in (0, 2*pi]
};

// Finite union of pairwise-disjoint open arcs, sorted by start angle.
class ArcUnion {
  public:
    ArcUnion() = default;
    explicit ArcUnion(std::vector<Arc> arcs);

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool empty() const { return arcs_.empty(); }
    std::size_t size() const { return arcs_.size(); }
    double total_length() const;
    bool contains(const CirclePoint& p) const;

  private:
    std::vector<Arc> arcs_;
};

// Closed subset E of the circle, represented by its complementary open arcs.
// With a finite complement list E is never empty unless explicitly marked so
// (the degenerate output of a zero-set scan that found no zeros).
class ClosedBoundarySet {
  public:
    ClosedBoundarySet() = default;  // complement empty: E is the whole circle
    explicit ClosedBoundarySet(ArcUnion complement);

    static ClosedBoundarySet full_circle() { return ClosedBoundarySet(); }
    static ClosedBoundarySet empty_set();
    static ClosedBoundarySet from_points(std::vector<double> thetas);

    bool is_empty() const { return empty_; }
    bool is_full_circle() const { return !empty_ && complement_.empty(); }
    bool contains(const CirclePoint& p) const;
    const ArcUnion& complement() const { return complement_; }

  private:
    ArcUnion complement_;
    bool empty_ = false;
};

// Equispaced angles theta_k = 2*pi*k/n; n must be a power of two, n >= 8.
std::vector<CirclePoint> uniform_grid(int n);

bool is_power_of_two(int n);
void require_grid_size(int n);

// min over e in E of |xi - e|; attained at xi itself or at a complementary
// arc endpoint.
double chordal_distance(const CirclePoint& xi, const ClosedBoundarySet& E);

// Union of the N longest complementary arcs of E (ties: smaller start angle).
ArcUnion gamma_exhaustion(const ClosedBoundarySet& E, int N);

}  // namespace diskfactor

#endif
