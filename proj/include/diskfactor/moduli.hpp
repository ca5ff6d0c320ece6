#ifndef DISKFACTOR_MODULI_HPP
#define DISKFACTOR_MODULI_HPP

#include <functional>
#include <string>
#include <vector>

namespace diskfactor {

// Modulus of continuity on [0, 2]: nondecreasing, w(0) = 0, w(t)/t
// nonincreasing and unbounded near 0. Families: holder(alpha) t^alpha and
// log(alpha) 1/(|log t|+1)^alpha, plus tabulated custom moduli.
class Modulus {
  public:
    enum class Family { holder, log_family, custom };

    Modulus(Family family, double alpha, std::string name, std::function<double(double)> eval)
        : family_(family), alpha_(alpha), name_(std::move(name)), eval_(std::move(eval)) {}

    double operator()(double t) const;

    Family family() const { return family_; }
    double alpha() const { return alpha_; }
    const std::string& name() const { return name_; }

  private:
    Family family_;
    double alpha_;
    std::string name_;
    std::function<double(double)> eval_;
};

Modulus holder_modulus(double alpha);
Modulus log_modulus(double alpha);
// linear interpolation through (t, w) knots; t strictly increasing in (0, 2]
Modulus tabulated_modulus(std::vector<double> t, std::vector<double> w, std::string name);
// "holder:<alpha>" | "log:<alpha>" | "csv:<path>" (columns t,omega)
Modulus parse_modulus(const std::string& spec);

struct AxiomCheck {
    bool pass = true;
    double worst_t1 = 0.0;  // violating pair (worst_t1 < worst_t2)
    double worst_t2 = 0.0;
    double violation = 0.0;  // magnitude of the worst violation
};

struct ModulusReport {
    bool data_ok = true;
    std::string data_error;
    AxiomCheck zero_at_zero;
    AxiomCheck nondecreasing;
    AxiomCheck ratio_nonincreasing;  // w(t)/t
    // diagnosed, not proven: w(t)/t large at the grid floor and growing as t
    // decreases across the bottom decade
    AxiomCheck ratio_unbounded;

    bool all_pass() const {
        return data_ok && zero_at_zero.pass && nondecreasing.pass && ratio_nonincreasing.pass &&
               ratio_unbounded.pass;
    }
    std::vector<std::string> warnings() const;
};

ModulusReport validate_modulus(const Modulus& w, const std::vector<double>& grid);

struct EtaEstimate {
    double eta = 0.0;       // min over the grid of w(t^rho)/w(t)^rho
    double argmin_t = 0.0;
};

// Evidence for condition w(t^rho) >= eta_rho * w(t)^rho, 1 <= rho <= 2.
EtaEstimate eta_estimate(const Modulus& w, double rho, const std::vector<double>& grid);

struct Condition3Report {
    double eta = 0.0;  // min over the grid of w(t^2)/w(t)
    double argmin_t = 0.0;
    // (floor, min ratio over grid points >= floor), floors decreasing
    std::vector<std::pair<double, double>> trend;
};

// Evidence for condition w(t^2) >= eta * w(t); grid must lie in (0, sqrt(2)].
Condition3Report condition3_estimate(const Modulus& w, const std::vector<double>& grid);

// Log-spaced grid including both endpoints; 1.0 is inserted when in range.
std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> default_condition_grid(double rho);

}  // namespace diskfactor

#endif
