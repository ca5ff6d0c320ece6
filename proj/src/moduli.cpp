#include "diskfactor/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace diskfactor {

double Modulus::operator()(double t) const {
    if (!(t >= -1e-12 && t <= 2.0 + 1e-9))
        throw std::domain_error("Modulus: argument outside [0, 2]");
    t = std::clamp(t, 0.0, 2.0);
    const double v = eval_(t);
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error("Modulus '" + name_ + "': evaluator returned invalid value");
    return v;
}

Modulus holder_modulus(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("holder modulus: alpha must be in (0, 1]");
    return Modulus(Modulus::Family::holder, alpha, "holder:" + std::to_string(alpha),
                   [alpha](double t) { return std::pow(t, alpha); });
}

Modulus log_modulus(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("log modulus: alpha must be positive");
    return Modulus(Modulus::Family::log_family, alpha, "log:" + std::to_string(alpha),
                   [alpha](double t) {
                       if (t == 0.0) return 0.0;
                       return std::pow(std::fabs(std::log(t)) + 1.0, -alpha);
                   });
}

Modulus tabulated_modulus(std::vector<double> t, std::vector<double> w, std::string name) {
    if (t.size() != w.size() || t.size() < 2)
        throw std::invalid_argument("tabulated modulus: need matching knot vectors, >= 2 knots");
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (!(t[i] < t[i + 1])) throw std::invalid_argument("tabulated modulus: knots must increase");
    if (!(t.front() > 0.0 && t.back() <= 2.0))
        throw std::invalid_argument("tabulated modulus: knots must lie in (0, 2]");
    auto eval = [t = std::move(t), w = std::move(w)](double x) {
        if (x == 0.0) return 0.0;
        if (x <= t.front())  // linear through the origin below the first knot
            return w.front() * x / t.front();
        if (x >= t.back()) return w.back();
        const auto it = std::upper_bound(t.begin(), t.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
        const double s = (x - t[i]) / (t[i + 1] - t[i]);
        return w[i] + s * (w[i + 1] - w[i]);
    };
    return Modulus(Modulus::Family::custom, 0.0, std::move(name), std::move(eval));
}

Modulus parse_modulus(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("modulus spec must be holder:<alpha>, log:<alpha> or csv:<path>");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "holder") return holder_modulus(std::stod(arg));
    if (kind == "log") return log_modulus(std::stod(arg));
    if (kind == "csv") {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("modulus csv: cannot open " + arg);
        std::vector<double> t, w;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream row(line);
            double a, b;
            if (row >> a >> b) {
                t.push_back(a);
                w.push_back(b);
            }
        }
        return tabulated_modulus(std::move(t), std::move(w), spec);
    }
    throw std::invalid_argument("unknown modulus family '" + kind + "'");
}

std::vector<std::string> ModulusReport::warnings() const {
    std::vector<std::string> out;
    if (!data_ok) out.push_back("data error: " + data_error);
    if (!zero_at_zero.pass) out.push_back("omega(0) != 0");
    if (!nondecreasing.pass) out.push_back("omega not nondecreasing on the grid");
    if (!ratio_nonincreasing.pass) out.push_back("omega(t)/t not nonincreasing on the grid");
    if (!ratio_unbounded.pass) out.push_back("omega(t)/t does not diverge at the grid floor");
    return out;
}

ModulusReport validate_modulus(const Modulus& w, const std::vector<double>& grid) {
    if (grid.size() < 2) throw std::invalid_argument("validate_modulus: grid too small");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument("validate_modulus: grid must be strictly increasing");
    if (!(grid.front() > 0.0 && grid.back() <= 2.0))
        throw std::invalid_argument("validate_modulus: grid must lie in (0, 2]");

    ModulusReport rep;
    std::vector<double> vals(grid.size());
    try {
        for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = w(grid[i]);
        rep.zero_at_zero.pass = (w(0.0) == 0.0);
        rep.zero_at_zero.violation = w(0.0);
    } catch (const std::domain_error& e) {
        rep.data_ok = false;
        rep.data_error = e.what();
        return rep;
    }

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double drop = vals[i] - vals[i + 1];
        if (drop > rep.nondecreasing.violation) {
            rep.nondecreasing = {false, grid[i], grid[i + 1], drop};
        }
        const double rise = vals[i + 1] / grid[i + 1] - vals[i] / grid[i];
        if (rise > 1e-14 && rise > rep.ratio_nonincreasing.violation) {
            rep.ratio_nonincreasing = {false, grid[i], grid[i + 1], rise};
        }
    }

    // divergence diagnosis across the lowest decade of the grid
    const double t_min = grid.front();
    const double ratio_floor = vals.front() / t_min;
    double ratio_decade = ratio_floor;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] >= 10.0 * t_min) {
            ratio_decade = vals[i] / grid[i];
            break;
        }
    }
    const bool diverges = ratio_floor > 10.0 && ratio_floor > 1.5 * ratio_decade;
    if (!diverges)
        rep.ratio_unbounded = {false, t_min, 10.0 * t_min, ratio_decade / ratio_floor};
    return rep;
}

EtaEstimate eta_estimate(const Modulus& w, double rho, const std::vector<double>& grid) {
    if (!(rho >= 1.0 && rho <= 2.0)) throw std::invalid_argument("eta_estimate: rho must be in [1, 2]");
    if (grid.empty()) throw std::invalid_argument("eta_estimate: empty grid");
    EtaEstimate est{std::numeric_limits<double>::infinity(), 0.0};
    for (double t : grid) {
        if (!(t > 0.0)) throw std::invalid_argument("eta_estimate: grid points must be positive");
        const double tp = std::pow(t, rho);
        if (tp > 2.0 + 1e-9)
            throw std::invalid_argument("eta_estimate: t^rho leaves the modulus domain [0, 2]");
        const double wt = w(t);
        if (wt == 0.0) throw std::domain_error("eta_estimate: omega vanishes at positive t (degenerate)");
        const double ratio = w(tp) / std::pow(wt, rho);
        if (ratio < est.eta) est = {ratio, t};
    }
    return est;
}

Condition3Report condition3_estimate(const Modulus& w, const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("condition3_estimate: empty grid");
    Condition3Report rep;
    rep.eta = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> ratios;  // (t, ratio)
    for (double t : grid) {
        if (!(t > 0.0 && t * t <= 2.0 + 1e-9))
            throw std::invalid_argument("condition3_estimate: grid must lie in (0, sqrt(2)]");
        const double wt = w(t);
        if (wt == 0.0)
            throw std::domain_error("condition3_estimate: omega vanishes at positive t (degenerate)");
        const double ratio = w(t * t) / wt;
        ratios.emplace_back(t, ratio);
        if (ratio < rep.eta) {
            rep.eta = ratio;
            rep.argmin_t = t;
        }
    }
    // trend of the estimate as the grid floor decreases
    const double t_min = *std::min_element(grid.begin(), grid.end());
    for (double floor : {1e-3, 1e-6, 1e-9, t_min}) {
        if (floor < t_min) continue;
        double m = std::numeric_limits<double>::infinity();
        for (const auto& [t, r] : ratios)
            if (t >= floor) m = std::min(m, r);
        rep.trend.emplace_back(floor, m);
    }
    return rep;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0 && hi > lo && points >= 2)) throw std::invalid_argument("log_grid: bad range");
    std::vector<double> g(static_cast<std::size_t>(points));
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (points - 1));
    g.front() = lo;
    g.back() = hi;
    if (lo < 1.0 && hi > 1.0) g.push_back(1.0);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<double> default_condition_grid(double rho) {
    return log_grid(1e-12, std::pow(2.0, 1.0 / rho), 2000);
}

}  // namespace diskfactor
