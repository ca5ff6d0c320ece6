#include "diskfactor/boundary_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "diskfactor/rng.hpp"

namespace diskfactor {

namespace {

using Complex = std::complex<double>;

Complex circle_point(double theta) { return {std::cos(theta), std::sin(theta)}; }

// max quotient |f(z)-f(w)| / omega(|z-w|) accumulator
class QuotientScan {
  public:
    QuotientScan(const Modulus& w) : w_(w) {}

    void feed(const Complex& fz, const Complex& fw, double sep) {
        if (sep < 1e-15) return;
        const double denom = w_(sep);
        if (denom == 0.0)
            throw std::domain_error("omega vanishes at positive separation (degenerate modulus)");
        best_ = std::max(best_, std::abs(fz - fw) / denom);
    }

    double best() const { return best_; }

  private:
    const Modulus& w_;
    double best_ = 0.0;
};

// chord between grid indices at offset m
double offset_chord(int n, int m) { return 2.0 * std::sin(3.14159265358979323846 * m / n); }

std::vector<int> structured_offsets(int n) {
    std::vector<int> offs;
    offs.push_back(1);
    for (int m = 2; m <= n / 2; m *= 2) offs.push_back(m);
    return offs;
}

void scan_offset(const ComplexGridFunction& s, int m, double denom, double& best) {
    const int n = s.size();
    for (int k = 0; k < n; ++k) {
        const double q = std::abs(s[k] - s[(k + m) % n]) / denom;
        if (q > best) best = q;
    }
}

}  // namespace

BoundaryFunction::BoundaryFunction(ComplexGridFunction samples, std::string name)
    : samples_(std::move(samples)), name_(std::move(name)) {}

BoundaryFunction::BoundaryFunction(int n, Evaluator evaluator, std::string name)
    : samples_(ComplexGridFunction::sample(n, [&](double t) { return evaluator(circle_point(t)); })),
      evaluator_(std::move(evaluator)),
      name_(std::move(name)) {}

Complex BoundaryFunction::eval(Complex z) const {
    if (!evaluator_) throw std::logic_error("BoundaryFunction '" + name_ + "' has no evaluator");
    return evaluator_(z);
}

double BoundaryFunction::sup_norm_grid() const {
    double m = 0.0;
    for (int k = 0; k < samples_.size(); ++k) m = std::max(m, std::abs(samples_[k]));
    return m;
}

BoundaryFunction make_poly(int n, std::vector<Complex> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    std::ostringstream name;
    name << "poly:";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) name << ",";
        name << coeffs[i].real();
        if (coeffs[i].imag() != 0.0) name << "+" << coeffs[i].imag() << "i";
    }
    auto eval = [coeffs](Complex z) {
        Complex acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    return BoundaryFunction(n, std::move(eval), name.str());
}

BoundaryFunction make_one_minus_z(int n) {
    return BoundaryFunction(n, [](Complex z) { return 1.0 - z; }, "oneminusz");
}

BoundaryFunction make_power(int n, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("power function: beta must be positive");
    auto eval = [beta](Complex z) -> Complex {
        const Complex w = 1.0 - z;
        if (std::abs(w) == 0.0) return 0.0;
        return std::pow(w, beta);
    };
    return BoundaryFunction(n, std::move(eval), "power:" + std::to_string(beta));
}

BoundaryFunction parse_function(const std::string& spec, int n) {
    if (spec == "oneminusz") return make_one_minus_z(n);
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        if (kind == "power") return make_power(n, std::stod(arg));
        if (kind == "poly") {
            std::vector<Complex> coeffs;
            std::istringstream in(arg);
            std::string tok;
            while (std::getline(in, tok, ',')) coeffs.emplace_back(std::stod(tok));
            return make_poly(n, std::move(coeffs));
        }
    }
    throw std::invalid_argument("unknown function spec '" + spec + "'");
}

BoundaryFunction difference(const BoundaryFunction& f, const BoundaryFunction& g) {
    if (f.grid_size() != g.grid_size())
        throw std::invalid_argument("difference: grid sizes disagree");
    const std::string name = "(" + f.name() + " - " + g.name() + ")";
    if (f.has_evaluator() && g.has_evaluator()) {
        BoundaryFunction fb = f, gb = g;
        return BoundaryFunction(f.grid_size(),
                                [fb, gb](Complex z) { return fb.eval(z) - gb.eval(z); }, name);
    }
    ComplexGridFunction::Array v(f.grid_size());
    for (int k = 0; k < f.grid_size(); ++k) v[k] = f.boundary(k) - g.boundary(k);
    return BoundaryFunction(ComplexGridFunction(std::move(v)), name);
}

BoundaryFunction product(const BoundaryFunction& f, const BoundaryFunction& g) {
    if (f.grid_size() != g.grid_size()) throw std::invalid_argument("product: grid sizes disagree");
    const std::string name = f.name() + "*" + g.name();
    if (f.has_evaluator() && g.has_evaluator()) {
        BoundaryFunction fb = f, gb = g;
        return BoundaryFunction(f.grid_size(),
                                [fb, gb](Complex z) { return fb.eval(z) * gb.eval(z); }, name);
    }
    ComplexGridFunction::Array v(f.grid_size());
    for (int k = 0; k < f.grid_size(); ++k) v[k] = f.boundary(k) * g.boundary(k);
    return BoundaryFunction(ComplexGridFunction(std::move(v)), name);
}

OmegaNorm omega_norm(const BoundaryFunction& f, const Modulus& w, int pair_budget,
                     std::uint64_t seed) {
    if (pair_budget < 1000) throw std::invalid_argument("omega_norm: pair_budget must be >= 1000");
    const int n = f.grid_size();
    const ComplexGridFunction& s = f.samples();

    QuotientScan scan(w);
    double best = 0.0;
    for (int m : structured_offsets(n)) {
        const double denom = w(offset_chord(n, m));
        if (denom == 0.0)
            throw std::domain_error("omega vanishes at positive separation (degenerate modulus)");
        scan_offset(s, m, denom, best);
    }

    Rng rng(seed);
    if (f.has_evaluator()) {
        for (int p = 0; p < pair_budget; ++p) {
            const Complex z = rng.uniform01() < 0.5 ? circle_point(rng.angle()) : rng.disk_point();
            const Complex v = rng.uniform01() < 0.5 ? circle_point(rng.angle()) : rng.disk_point();
            scan.feed(f.eval(z), f.eval(v), std::abs(z - v));
        }
    } else {
        for (int p = 0; p < pair_budget; ++p) {
            const int i = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
            const int j = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
            if (i == j) continue;
            int m = std::abs(i - j);
            m = std::min(m, n - m);
            scan.feed(s[i], s[j], offset_chord(n, m));
        }
    }

    OmegaNorm out;
    out.sup = f.sup_norm_grid();
    out.seminorm = std::max(best, scan.best());
    out.total = out.sup + out.seminorm;
    return out;
}

OmegaNorm omega_norm_brute(const BoundaryFunction& f, const Modulus& w) {
    const int n = f.grid_size();
    const ComplexGridFunction& s = f.samples();
    double best = 0.0;
    for (int m = 1; m <= n / 2; ++m) {
        const double denom = w(offset_chord(n, m));
        if (denom == 0.0)
            throw std::domain_error("omega vanishes at positive separation (degenerate modulus)");
        scan_offset(s, m, denom, best);
    }
    OmegaNorm out;
    out.sup = f.sup_norm_grid();
    out.seminorm = best;
    out.total = out.sup + out.seminorm;
    return out;
}

std::vector<double> default_bands(int n) {
    std::vector<double> bands;
    const double floor = 4.0 * 3.14159265358979323846 / n;
    for (double b = 2.0; b >= floor; b *= 0.5) bands.push_back(b);
    return bands;
}

LipProfile lip_profile(const BoundaryFunction& f, const Modulus& w, std::vector<double> bands,
                       std::uint64_t seed, int pair_budget) {
    const int n = f.grid_size();
    if (bands.empty()) throw std::invalid_argument("lip_profile: need at least one band");
    for (std::size_t j = 0; j + 1 < bands.size(); ++j)
        if (!(bands[j] > bands[j + 1]))
            throw std::invalid_argument("lip_profile: bands must be strictly decreasing");
    const double resolution = 4.0 * 3.14159265358979323846 / n;
    if (bands.back() < resolution * (1.0 - 1e-12))
        throw std::invalid_argument("lip_profile: smallest band is below grid resolution");

    const ComplexGridFunction& s = f.samples();
    const std::size_t nb = bands.size();

    // offset pool: small offsets, dyadics, and the edge offset of every band
    std::set<int> offsets;
    for (int m = 1; m <= std::min(16, n / 2); ++m) offsets.insert(m);
    for (int m = 2; m <= n / 2; m *= 2) offsets.insert(m);
    auto max_offset_for = [n](double delta) {
        const double half = std::min(1.0, 0.5 * delta);
        int m = static_cast<int>(std::floor(std::asin(half) * n / 3.14159265358979323846));
        return std::clamp(m, 1, n / 2);
    };
    for (double b : bands) {
        const int m = max_offset_for(b);
        offsets.insert(m);
        if (m > 1) offsets.insert(m - 1);
    }

    std::vector<double> band_best(nb, 0.0);
    QuotientScan probe(w);
    auto feed_banded = [&](const Complex& a, const Complex& b, double sep) {
        if (sep < 1e-15) return;
        const double denom = w(sep);
        if (denom == 0.0)
            throw std::domain_error("omega vanishes at positive separation (degenerate modulus)");
        const double q = std::abs(a - b) / denom;
        for (std::size_t j = 0; j < nb; ++j)
            if (sep <= bands[j] * (1.0 + 1e-12) && q > band_best[j]) band_best[j] = q;
    };

    for (int m : offsets) {
        const double sep = offset_chord(n, m);
        for (int k = 0; k < n; ++k) feed_banded(s[k], s[(k + m) % n], sep);
    }

    Rng rng(seed);
    const int per_band = std::max(1, pair_budget / static_cast<int>(nb));
    for (std::size_t j = 0; j < nb; ++j) {
        const int m_max = max_offset_for(bands[j]);
        for (int p = 0; p < per_band; ++p) {
            const int k = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
            const int m = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(m_max)));
            feed_banded(s[k], s[(k + m) % n], offset_chord(n, m));
        }
    }

    LipProfile out;
    out.bands = std::move(bands);
    out.values = std::move(band_best);
    const double initial = out.values.front();
    const double final_v = out.values.back();
    out.membership = (initial <= 1e-14) || (final_v < 0.1 * initial);
    return out;
}

TamrazovResult tamrazov_ratio(const BoundaryFunction& f, const Modulus& w, std::uint64_t seed,
                              int pair_budget) {
    if (!f.has_evaluator())
        throw std::invalid_argument("tamrazov_ratio: interior sampling requires an evaluator");
    const int n = f.grid_size();
    const ComplexGridFunction& s = f.samples();

    double boundary_best = 0.0;
    for (int m : structured_offsets(n)) {
        const double denom = w(offset_chord(n, m));
        if (denom == 0.0)
            throw std::domain_error("omega vanishes at positive separation (degenerate modulus)");
        scan_offset(s, m, denom, boundary_best);
    }
    QuotientScan bscan(w);
    Rng rng(seed);
    for (int p = 0; p < pair_budget; ++p) {
        const Complex z = circle_point(rng.angle());
        const Complex v = circle_point(rng.angle());
        bscan.feed(f.eval(z), f.eval(v), std::abs(z - v));
    }
    boundary_best = std::max(boundary_best, bscan.best());

    QuotientScan mscan(w);
    Rng rng2(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int p = 0; p < pair_budget; ++p) {
        const Complex z = rng2.disk_point();
        const Complex v = rng2.uniform01() < 0.5 ? circle_point(rng2.angle()) : rng2.disk_point();
        mscan.feed(f.eval(z), f.eval(v), std::abs(z - v));
    }
    const double mixed_best = std::max(boundary_best, mscan.best());

    TamrazovResult out;
    out.boundary_seminorm = boundary_best;
    out.disk_seminorm = mixed_best;
    if (boundary_best < 1e-14) {
        if (mixed_best < 1e-14) {
            out.degenerate = true;
            out.ratio = 1.0;
        } else {
            out.inconsistent = true;
            out.ratio = std::numeric_limits<double>::infinity();
        }
    } else {
        out.ratio = mixed_best / boundary_best;
    }
    return out;
}

ZeroSetEstimate zero_set_estimate(const BoundaryFunction& f, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("zero_set_estimate: tol must be positive");
    const int n = f.grid_size();
    const ComplexGridFunction& s = f.samples();
    std::vector<bool> below(static_cast<std::size_t>(n));
    int below_count = 0;
    for (int k = 0; k < n; ++k) {
        below[static_cast<std::size_t>(k)] = std::abs(s[k]) <= tol;
        below_count += below[static_cast<std::size_t>(k)] ? 1 : 0;
    }

    ZeroSetEstimate out;
    if (below_count == n) {
        out.set = ClosedBoundarySet::full_circle();
        out.all_below_tol = true;
        return out;
    }
    if (below_count == 0) {
        out.set = ClosedBoundarySet::empty_set();
        return out;
    }

    // maximal circular runs of sub-tol samples; each run [first, last]
    std::vector<std::pair<int, int>> runs;
    int k0 = 0;
    while (below[static_cast<std::size_t>(k0)]) ++k0;  // start scanning on an above-tol sample
    bool prev_below = false;
    for (int off = 0; off < n; ++off) {
        const int k = (k0 + off) % n;
        if (below[static_cast<std::size_t>(k)]) {
            if (prev_below)
                runs.back().second = k;
            else
                runs.emplace_back(k, k);
            prev_below = true;
        } else {
            prev_below = false;
        }
    }

    std::vector<Arc> complement;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const auto& cur = runs[r];
        const auto& nxt = runs[(r + 1) % runs.size()];
        complement.emplace_back(CirclePoint(kTwoPi * cur.second / n),
                                CirclePoint(kTwoPi * nxt.first / n));
        const int span = (cur.second - cur.first + n) % n;
        out.cluster_angles.push_back(CirclePoint(kTwoPi * (cur.first + 0.5 * span) / n).theta());
    }
    out.set = ClosedBoundarySet(ArcUnion(std::move(complement)));
    return out;
}

}  // namespace diskfactor
